#include "badred/kernels/rowops.hpp"

namespace badred::kernels::scalar {

void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p) {
  if (f == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(f) * src[i]) % p);
}

void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f) * row[i] % p);
}

}  // namespace badred::kernels::scalar
