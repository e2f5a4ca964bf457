#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace badred::kernels {

enum class Backend { Auto, Scalar, AVX2, NEON };

std::string_view backend_name(Backend b);

// Vector paths work in double precision, so they need (p-1)^2 + p < 2^53.
inline constexpr std::uint32_t kSimdMaxPrime = 1u << 26;

// Test hook: force a backend (Auto restores runtime detection). A forced
// backend the CPU lacks falls back to Scalar.
void set_backend_override(Backend b);
Backend detected_backend();
Backend backend_for(std::uint32_t p);

// dst[i] = (dst[i] + f * src[i]) mod p; entries and f already reduced, p < 2^31.
void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p);
// row[i] = f * row[i] mod p
void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p);

namespace scalar {
void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p);
void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p);
void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p);
void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p);
}  // namespace neon
#endif

// Rank of a rows x cols matrix (row-major) over F_p; entries are reduced first.
// Uses the dispatched row kernels for p < 2^31, a scalar 64-bit path above.
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols, std::uint64_t p);

}  // namespace badred::kernels
