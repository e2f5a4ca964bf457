#include <atomic>
#include <utility>

#include "badred/error.hpp"
#include "badred/exactmath/primes.hpp"
#include "badred/kernels/rowops.hpp"

namespace badred::kernels {

namespace {

std::atomic<Backend> g_override{Backend::Auto};

bool cpu_has(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
#if defined(__x86_64__) || defined(__i386__)
    case Backend::AVX2: return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
#if defined(__aarch64__)
    case Backend::NEON: return true;
#endif
    default: return false;
  }
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::AVX2: return "avx2";
    case Backend::NEON: return "neon";
  }
  return "?";
}

void set_backend_override(Backend b) { g_override.store(b); }

Backend detected_backend() {
  static const Backend best = [] {
    if (cpu_has(Backend::AVX2)) return Backend::AVX2;
    if (cpu_has(Backend::NEON)) return Backend::NEON;
    return Backend::Scalar;
  }();
  return best;
}

Backend backend_for(std::uint32_t p) {
  Backend b = g_override.load();
  if (b == Backend::Auto) b = detected_backend();
  if (!cpu_has(b) || p >= kSimdMaxPrime) return Backend::Scalar;
  return b;
}

void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p) {
  switch (backend_for(p)) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::AVX2: return avx2::row_axpy_mod(dst, src, f, n, p);
#endif
#if defined(__aarch64__)
    case Backend::NEON: return neon::row_axpy_mod(dst, src, f, n, p);
#endif
    default: return scalar::row_axpy_mod(dst, src, f, n, p);
  }
}

void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p) {
  switch (backend_for(p)) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::AVX2: return avx2::row_scale_mod(row, f, n, p);
#endif
#if defined(__aarch64__)
    case Backend::NEON: return neon::row_scale_mod(row, f, n, p);
#endif
    default: return scalar::row_scale_mod(row, f, n, p);
  }
}

namespace {

std::size_t rank_u32(std::vector<std::uint32_t> m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    std::uint32_t* prow = &m[rank * cols];
    std::uint32_t inv = static_cast<std::uint32_t>(invmod_u64(prow[c], p));
    row_scale_mod(prow + c, inv, cols - c, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t e = m[r * cols + c];
      if (e) row_axpy_mod(&m[r * cols + c], prow + c, p - e, cols - c, p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_u64(std::vector<std::uint64_t> m, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    std::uint64_t inv = invmod_u64(m[rank * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) m[rank * cols + j] = mulmod_u64(m[rank * cols + j], inv, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t e = m[r * cols + c];
      if (!e) continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t t = mulmod_u64(e, m[rank * cols + j], p);
        std::uint64_t& x = m[r * cols + j];
        x = x >= t ? x - t : x + (p - t);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols, std::uint64_t p) {
  if (entries.size() != rows * cols) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
  for (auto& x : entries) x %= p;
  if (p < (1ULL << 31)) {
    std::vector<std::uint32_t> m(entries.begin(), entries.end());
    return rank_u32(std::move(m), rows, cols, static_cast<std::uint32_t>(p));
  }
  return rank_u64(std::move(entries), rows, cols, p);
}

}  // namespace badred::kernels
