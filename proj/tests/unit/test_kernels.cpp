#include <random>

#include "badred/kernels/rowops.hpp"
#include "doctest.h"

using namespace badred::kernels;

namespace {

struct BackendGuard {
  ~BackendGuard() { set_backend_override(Backend::Auto); }
};

std::vector<Backend> available() {
  std::vector<Backend> out{Backend::Scalar};
  set_backend_override(Backend::AVX2);
  if (backend_for(3) == Backend::AVX2) out.push_back(Backend::AVX2);
  set_backend_override(Backend::NEON);
  if (backend_for(3) == Backend::NEON) out.push_back(Backend::NEON);
  set_backend_override(Backend::Auto);
  return out;
}

}  // namespace

TEST_CASE("vector kernels match the scalar reference") {
  BackendGuard guard;
  std::mt19937_64 gen(42);
  const std::uint32_t primes[] = {2, 3, 5, 101, 46337, 65521, 1000003, (1u << 26) - 5, 2147483647u};
  for (Backend b : available()) {
    for (std::uint32_t p : primes) {
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
        std::vector<std::uint32_t> dst(n), src(n);
        for (auto& x : dst) x = gen() % p;
        for (auto& x : src) x = gen() % p;
        std::uint32_t f = gen() % p;
        auto ref = dst;
        scalar::row_axpy_mod(ref.data(), src.data(), f, n, p);
        set_backend_override(b);
        row_axpy_mod(dst.data(), src.data(), f, n, p);
        CHECK(dst == ref);
        auto sref = src;
        scalar::row_scale_mod(sref.data(), f, n, p);
        row_scale_mod(src.data(), f, n, p);
        CHECK(src == sref);
        set_backend_override(Backend::Auto);
      }
    }
  }
}

TEST_CASE("edge values reduce exactly") {
  BackendGuard guard;
  for (Backend b : available()) {
    set_backend_override(b);
    const std::uint32_t p = (1u << 26) - 5;
    std::vector<std::uint32_t> dst(16, p - 1), src(16, p - 1);
    row_axpy_mod(dst.data(), src.data(), p - 1, dst.size(), p);
    // (p-1) + (p-1)^2 = p*(p-1) = 0
    for (auto x : dst) CHECK(x == 0);
  }
}

TEST_CASE("rank mod p") {
  // [[1,2],[2,4]] has rank 1 over every field; [[2,3],[5,7]] has det -1
  CHECK(rank_mod_p({1, 2, 2, 4}, 2, 2, 7) == 1);
  CHECK(rank_mod_p({2, 3, 5, 7}, 2, 2, 2) == 2);
  CHECK(rank_mod_p({0, 0, 0, 0, 0, 0}, 2, 3, 5) == 0);
  const std::uint64_t big = 4611686018427387847ULL;  // prime below 2^62
  CHECK(rank_mod_p({1, 2, 2, 4}, 2, 2, big) == 1);
}

TEST_CASE("rank agrees across backends") {
  BackendGuard guard;
  std::mt19937_64 gen(9);
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL, 65537ULL}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t rows = 5 + gen() % 30, cols = 3 + gen() % 20;
      std::vector<std::uint64_t> m(rows * cols);
      for (auto& x : m) x = (gen() % 4 == 0) ? gen() % p : 0;
      set_backend_override(Backend::Scalar);
      std::size_t ref = rank_mod_p(m, rows, cols, p);
      for (Backend b : available()) {
        set_backend_override(b);
        CHECK(rank_mod_p(m, rows, cols, p) == ref);
      }
    }
  }
}
