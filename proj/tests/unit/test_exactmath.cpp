#include <random>

#include "badred/error.hpp"
#include "badred/exactmath/ff_upoly.hpp"
#include "badred/exactmath/finite_field.hpp"
#include "badred/exactmath/primes.hpp"
#include "badred/exactmath/zpoly.hpp"
#include "doctest.h"

using namespace badred;

TEST_CASE("factor_integer examples") {
  auto f6 = factor_integer(Integer(6));
  REQUIRE(f6.size() == 2);
  CHECK(f6[0] == PrimePower{2, 1});
  CHECK(f6[1] == PrimePower{3, 1});
  CHECK(factor_integer(Integer(-1)).empty());
  auto f = factor_integer(Integer(1008));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == PrimePower{2, 4});
  CHECK(f[1] == PrimePower{3, 2});
  CHECK(f[2] == PrimePower{7, 1});
  CHECK_THROWS_AS(factor_integer(Integer(0)), Error);
}

TEST_CASE("factor_integer reconstructs random 64-bit inputs") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    Integer n = from_u64(gen() | 1);
    if (i % 3 == 0) n = -n;
    Integer prod = 1;
    for (auto& [p, e] : factor_integer(n)) {
      CHECK(is_prime(p));
      for (unsigned k = 0; k < e; ++k) prod *= p;
    }
    CHECK(prod == abs(n));
  }
}

TEST_CASE("factor_integer with large prime factors") {
  Integer p("1000000007"), q("999999999989");
  auto f = factor_integer(p * q * 12);
  REQUIRE(f.size() == 4);
  CHECK(f[2].prime == p);
  CHECK(f[3].prime == q);
}

TEST_CASE("factor budget degrades loudly") {
  Integer p("1000000000000000003"), q("1000000000000000009");
  FactorBudget tiny;
  tiny.rho_iterations = 10;
  auto partial = factor_integer_partial(p * q, tiny);
  CHECK(partial.cofactor == p * q);
  try {
    factor_integer(p * q, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(97)));
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(Integer("3317044064679887385961981")));
}

TEST_CASE("find_irreducible determinism") {
  CHECK(find_irreducible(2, 1) == std::vector<std::uint64_t>{0, 1});
  CHECK(find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(find_irreducible(5, 2) == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(find_irreducible(3, 3) == find_irreducible(3, 3));
  CHECK_THROWS_AS(FiniteField::make(5, {1, 0, 1}), Error);
}

TEST_CASE("F4 arithmetic") {
  auto F = FiniteField::make(2, {1, 1, 1});
  FFElem x = F->generator();
  CHECK(x * (x + F->one()) == F->one());
  CHECK(F->inverse(F->one()) == F->one());
  CHECK_THROWS_AS(F->inverse(F->zero()), Error);
}

TEST_CASE("Frobenius fixes the prime field") {
  auto F = FiniteField::extension(7, 3);
  for (long v = 0; v < 7; ++v) CHECK(F->frobenius(F->from_int(v)) == F->from_int(v));
}

TEST_CASE("finite field group and automorphism properties") {
  std::mt19937_64 gen(3);
  for (auto [p, k] : {std::pair{2ULL, 5}, {3ULL, 4}, {101ULL, 2}, {1000003ULL, 1}, {5ULL, 6}}) {
    auto F = FiniteField::extension(p, k);
    Integer qm1 = F->size() - 1;
    for (int i = 0; i < 20; ++i) {
      FFElem a = F->zero(), b = F->zero();
      for (int j = 0; j < k; ++j) {
        a.c[j] = gen() % p;
        b.c[j] = gen() % p;
      }
      if (!a.is_zero()) {
        CHECK(F->pow(a, qm1) == F->one());
        CHECK(F->mul(a, F->inverse(a)) == F->one());
      }
      CHECK(F->frobenius(a * b) == F->frobenius(a) * F->frobenius(b));
      CHECK(F->frobenius(a + b) == F->frobenius(a) + F->frobenius(b));
    }
  }
}

TEST_CASE("index bijection") {
  auto F = FiniteField::extension(3, 2);
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(F->to_index(F->from_index(i)) == i);
}

TEST_CASE("univariate factorization over finite fields") {
  auto F = FiniteField::prime_field(5);
  // x^2 + 1 = (x + 2)(x + 3) mod 5
  auto fac = factor_ff(*F, ff_poly_from_integers(*F, {1, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].factor == ff_poly_from_integers(*F, {2, 1}));
  CHECK(fac[1].factor == ff_poly_from_integers(*F, {3, 1}));
  auto roots = roots_ff(*F, ff_poly_from_integers(*F, {1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == F->from_int(2));

  auto F2 = FiniteField::prime_field(2);
  auto sq = factor_ff(*F2, ff_poly_from_integers(*F2, {1, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].multiplicity == 2);

  // random products reconstruct
  std::mt19937_64 gen(5);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 10007ULL}) {
    auto G = FiniteField::extension(p, p < 10 ? 2 : 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FFElem> c(8);
      for (auto& x : c) x = G->from_index(gen() % (p < 10 ? p * p : p));
      c.back() = G->one();
      FFPoly f(c);
      FFPoly prod = FFPoly::constant(G->one());
      for (auto& [g, m] : factor_ff(*G, f)) {
        CHECK(is_irreducible_ff(*G, g) == true);
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("field embedding") {
  auto F = FiniteField::extension(2, 2);
  auto E = FiniteField::extension(2, 4);
  FieldEmbedding emb(*F, *E);
  FFElem z = F->generator();
  CHECK(emb(z * z + z + F->one()).is_zero());
  CHECK(emb(z * (z + F->one())) == E->mul(emb(z), emb(z + F->one())));
}

TEST_CASE("integer polynomial tools") {
  CHECK(count_real_roots(ZPoly({Integer(1), 0, 1})) == 0);
  CHECK(count_real_roots(ZPoly({Integer(-2), 0, 1})) == 2);
  CHECK(count_real_roots(ZPoly({Integer(-2), 0, 0, 1})) == 1);
  CHECK(is_irreducible_over_Q(ZPoly({Integer(1), 0, 1})));
  CHECK_FALSE(is_irreducible_over_Q(ZPoly({Integer(-1), 0, 1})));
  // x^4 + 1 is irreducible over Q but splits mod every prime
  CHECK(is_irreducible_over_Q(ZPoly({Integer(1), 0, 0, 0, 1})));
  // (x^2 - 2)(x^2 - 3)
  auto fac = factor_monic_squarefree(ZPoly({Integer(6), 0, -5, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0] == ZPoly({Integer(-3), 0, 1}));
  CHECK(fac[1] == ZPoly({Integer(-2), 0, 1}));
  CHECK_FALSE(is_irreducible_over_Q(ZPoly({Integer(1), 2, 1})));
  CHECK(is_irreducible_over_Q(ZPoly({Integer(1), 0, 2})));
}
