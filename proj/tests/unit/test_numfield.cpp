#include <doctest.h>

#include <cmath>
#include <random>

#include "badred/exactmath/primes.hpp"
#include "badred/numfield/nf_poly.hpp"
#include "badred/numfield/number_field.hpp"

using namespace badred;

namespace {

NumberFieldPtr field(const char* s) { return NumberField::parse(s); }

NFElem elem(const NumberField& K, std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return K.from_coefficients(q);
}

NFElem random_elem(const NumberField& K, std::mt19937_64& rng, bool allow_den = true) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  std::vector<Rational> c(K.degree());
  do {
    for (auto& x : c) {
      x = Rational(num(rng), allow_den ? den(rng) : 1);
      x.canonicalize();
    }
  } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) == 0; }));
  return K.from_coefficients(c);
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact values") {
  Interval two = Interval::point(Integer(2), 128);
  Interval s = two.sqrt();
  CHECK((s * s).contains(Rational(2)));
  CHECK(s.width() < 1e-35);
  Interval third = Interval::point(Rational(1, 3), 64);
  CHECK(third.contains(Rational(1, 3)));
  CHECK(!third.contains(Rational(1, 3) + Rational(1, 1000000)));
  Interval l = Interval::log_of(Integer(6), 128) - Interval::log_of(Integer(2), 128) - Interval::log_of(Integer(3), 128);
  CHECK(l.contains(Rational(0)));
  CHECK(Interval::point(Integer(-3), 64).abs().contains(Rational(3)));
  CHECK_THROWS_AS(Interval::point(Integer(0), 64).log(), Error);
}

TEST_CASE("make_field signatures and errors") {
  auto Q = field("x");
  CHECK(Q->degree() == 1);
  CHECK(Q->r1() == 1);
  CHECK(Q->r2() == 0);
  auto Ki = field("x^2+1");
  CHECK(Ki->degree() == 2);
  CHECK(Ki->r1() == 0);
  CHECK(Ki->r2() == 1);
  auto K2 = field("x^2-2");
  CHECK(K2->r1() == 2);
  CHECK(K2->r2() == 0);
  auto K3 = field("t^3-2");
  CHECK(K3->generator_name() == "t");
  CHECK(K3->r1() == 1);
  CHECK(K3->r2() == 1);
  int ld = 0;
  for (auto& v : K3->places()) ld += v.local_degree;
  CHECK(ld == 3);

  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code([] { field("x^2-1"); }) == ErrorCode::ReducibleMinPoly);
  CHECK(code([] { field("2*x^2+1"); }) == ErrorCode::NonMonic);
  QPoly half(std::vector<Rational>{Rational(1, 2), 0, 1});
  CHECK(code([&] { NumberField::make(half); }) == ErrorCode::NonIntegral);
}

TEST_CASE("root enclosures for a degree 5 field") {
  auto K = field("x^5-x-1");
  CHECK(K->r1() == 1);
  CHECK(K->r2() == 2);
  for (int v = 0; v < 3; ++v) {
    ComplexBox th = K->root_enclosure(v, 256);
    ComplexBox val(256);
    for (int i = 5; i >= 0; --i) {
      val = val * th;
      val.re = val.re + Interval::point(K->minpoly().coeff(i), 256);
    }
    CHECK(val.re.contains(Rational(0)));
    CHECK(val.im.contains(Rational(0)));
    CHECK(th.re.width() < 1e-60);
  }
}

TEST_CASE("field arithmetic") {
  auto K = field("x^3-2");
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    NFElem a = random_elem(*K, rng), b = random_elem(*K, rng), c = random_elem(*K, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * inverse(a) == K->one());
    CHECK(K->norm(a * b) == K->norm(a) * K->norm(b));
  }
  NFElem th = K->generator();
  CHECK(th * th * th == K->from_rational(2));
  CHECK(K->norm(th) == 2);
  CHECK(K->trace(th) == 0);
  CHECK(coeff_to_string(elem(*K, {1, 1})) == "x + 1");
  CHECK(coeff_to_string(elem(*K, {0, -2})) == "-2*x");
  CHECK(coeff_is_negative(elem(*K, {0, -2})));
  CHECK(!coeff_is_atomic(elem(*K, {1, 1})));
  CHECK(NFElem{} + th == th);
  CHECK((NFElem{} * th).is_zero());
}

TEST_CASE("prime decomposition examples") {
  auto Ki = field("x^2+1");
  auto P5 = Ki->prime_decomposition(Integer(5));
  REQUIRE(P5.size() == 2);
  for (auto& P : P5) {
    CHECK(P.e() == 1);
    CHECK(P.f() == 1);
    CHECK(P.norm() == 5);
  }
  auto P2 = Ki->prime_decomposition(Integer(2));
  REQUIRE(P2.size() == 1);
  CHECK(P2[0].e() == 2);
  CHECK(P2[0].f() == 1);
  CHECK(P2[0].norm() == 2);
  auto P3 = Ki->prime_decomposition(Integer(3));
  REQUIRE(P3.size() == 1);
  CHECK(P3[0].f() == 2);
  CHECK(P3[0].norm() == 9);

  auto Q = NumberField::rationals();
  for (long p : {2L, 3L, 101L}) {
    auto d = Q->prime_decomposition(Integer(p));
    REQUIRE(d.size() == 1);
    CHECK(d[0].e() == 1);
    CHECK(d[0].f() == 1);
    CHECK(d[0].label() == "(" + std::to_string(p) + ")");
  }
  // sum e f = n over many primes and fields
  for (const char* s : {"x^2+1", "x^2-2", "x^3-2", "x^4+1", "x^3-x-1"}) {
    auto K = field(s);
    for (auto p : primes_up_to(60)) {
      if (K->divides_index(from_u64(p))) continue;
      int tot = 0;
      for (auto& P : K->prime_decomposition(from_u64(p))) tot += P.e() * P.f();
      CHECK(tot == K->degree());
    }
  }
}

TEST_CASE("index divisors are rejected") {
  // Z[sqrt(5)] has index 2 in the maximal order
  auto K = field("x^2-5");
  CHECK(K->divides_index(Integer(2)));
  CHECK(!K->divides_index(Integer(5)));
  try {
    K->prime_decomposition(Integer(2));
    FAIL("expected IndexDivisorUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexDivisorUnsupported);
  }
  // Z[i] is maximal
  CHECK(!field("x^2+1")->divides_index(Integer(2)));
}

TEST_CASE("valuations") {
  auto Q = NumberField::rationals();
  auto P2q = Q->prime_decomposition(Integer(2))[0];
  CHECK(P2q.valuation(Q->from_rational(12)) == 2);
  CHECK(P2q.valuation(Q->from_rational(Rational(3, 8))) == -3);

  auto Ki = field("x^2+1");
  auto P2 = Ki->prime_decomposition(Integer(2))[0];
  NFElem i = Ki->generator();
  NFElem one_plus_i = Ki->one() + i;
  CHECK(P2.valuation(one_plus_i) == 1);
  CHECK(P2.valuation(Ki->from_rational(2)) == 2);
  CHECK(P2.valuation(i) == 0);
  CHECK(P2.valuation(Ki->from_rational(Rational(1, 4))) == -4);
  CHECK_THROWS_AS(P2.valuation(Ki->zero()), Error);

  std::mt19937_64 rng(11);
  for (const char* s : {"x^2+1", "x^2-2", "x^3-2", "x^2+x+1"}) {
    auto K = field(s);
    for (long p : {2L, 3L, 5L, 7L}) {
      if (K->divides_index(Integer(p))) continue;
      for (auto& P : K->prime_decomposition(Integer(p))) {
        for (int it = 0; it < 25; ++it) {
          NFElem a = random_elem(*K, rng), b = random_elem(*K, rng);
          long va = P.valuation(a), vb = P.valuation(b);
          CHECK(va == P.valuation_by_helper(a));
          CHECK(P.valuation(a * b) == va + vb);
          if (!(a + b).is_zero()) CHECK(P.valuation(a + b) >= std::min(va, vb));
        }
        // sum over P|p of e_P^{-1}... v_P(p) = e
        CHECK(P.valuation(K->from_rational(p)) == P.e());
      }
    }
  }
}

TEST_CASE("high valuations use doubling and bisection") {
  auto Ki = field("x^2+1");
  auto P5 = Ki->prime_decomposition(Integer(5));
  NFElem x = Ki->one();
  NFElem pi = Ki->from_rational(2) + Ki->generator();  // norm 5
  for (int k = 0; k < 37; ++k) x = x * pi;
  long v0 = P5[0].valuation(x), v1 = P5[1].valuation(x);
  CHECK(v0 + v1 == 37);
  CHECK(std::max(v0, v1) == 37);
  CHECK(P5[0].valuation_by_helper(x) == v0);
}

TEST_CASE("residue reduction") {
  auto Q = NumberField::rationals();
  auto P5q = Q->prime_decomposition(Integer(5))[0];
  CHECK(P5q.residue_field().to_string(P5q.residue_reduce(Q->from_rational(7))) == "2");
  CHECK(P5q.residue_reduce(Q->from_rational(Rational(1, 2))) == P5q.residue_field().from_int(3));
  CHECK_THROWS_AS(P5q.residue_reduce(Q->from_rational(Rational(1, 5))), Error);

  auto Ki = field("x^2+1");
  auto P5 = Ki->prime_decomposition(Integer(5));
  // the prime (5, x - 2) = (5, x + 3) sends theta to 2
  const PrimeIdeal* Pm2 = nullptr;
  for (auto& P : P5)
    if (P.g().coeff(0) == 3) Pm2 = &P;
  REQUIRE(Pm2 != nullptr);
  CHECK(Pm2->label() == "(5, x + 3)");
  CHECK(Pm2->residue_reduce(Ki->generator()) == Pm2->residue_field().from_int(2));
  // elements of P map to 0
  NFElem gen2 = Ki->generator() - Ki->from_rational(2);
  CHECK(Pm2->residue_reduce(gen2).is_zero());
  CHECK(Pm2->residue_reduce(Ki->from_rational(5) * Ki->generator()).is_zero());

  // P-integral with p in the denominator: (2 - i)/5 = 1/(2 + i), a unit at (5, x - 2)
  NFElem u = (Ki->from_rational(2) - Ki->generator()) * Ki->from_rational(Rational(1, 5));
  CHECK(Pm2->valuation(u) == 0);
  const FiniteField& F = Pm2->residue_field();
  FFElem r = Pm2->residue_reduce(u);
  CHECK(F.mul(r, Pm2->residue_reduce(Ki->from_rational(2) + Ki->generator())) == F.one());
  CHECK_THROWS_AS(Pm2->residue_reduce(inverse(Ki->from_rational(2) - Ki->generator())), Error);

  // homomorphism on random P-integral pairs
  std::mt19937_64 rng(5);
  for (const char* s : {"x^2+1", "x^3-2", "x^2-2"}) {
    auto K = field(s);
    for (long p : {3L, 5L, 7L, 11L}) {
      if (K->divides_index(Integer(p))) continue;
      for (auto& P : K->prime_decomposition(Integer(p))) {
        const FiniteField& G = P.residue_field();
        int tested = 0;
        for (int it = 0; it < 200 && tested < 25; ++it) {
          NFElem a = random_elem(*K, rng), b = random_elem(*K, rng);
          if (P.valuation(a) < 0 || P.valuation(b) < 0) continue;
          ++tested;
          CHECK(P.residue_reduce(a * b) == G.mul(P.residue_reduce(a), P.residue_reduce(b)));
          CHECK(P.residue_reduce(a + b) == G.add(P.residue_reduce(a), P.residue_reduce(b)));
        }
        CHECK(tested > 0);
      }
    }
  }
}

TEST_CASE("residue reduction at a ramified prime with p in the denominator") {
  auto Ki = field("x^2+1");
  auto P2 = Ki->prime_decomposition(Integer(2))[0];
  // (1+i)^2 / 2 = i
  NFElem opi = Ki->one() + Ki->generator();
  NFElem q = opi * opi * Ki->from_rational(Rational(1, 2));
  CHECK(q == Ki->generator());
  CHECK(P2.residue_reduce(q) == P2.residue_reduce(Ki->generator()));
  CHECK(P2.residue_reduce(Ki->generator()) == P2.residue_field().one());
  CHECK_THROWS_AS(P2.residue_reduce(opi * Ki->from_rational(Rational(1, 2))), Error);
}

TEST_CASE("archimedean absolute values") {
  auto Q = NumberField::rationals();
  Interval a = Q->arch_abs(Q->from_rational(-3), 0);
  CHECK(a.contains(Rational(3)));
  CHECK(a.width() == 0);

  auto Ki = field("x^2+1");
  Interval s = Ki->arch_abs(Ki->one() + Ki->generator(), 0, 1e-15);
  CHECK(s.width() < 1e-15);
  CHECK(std::fabs(s.mid_double() - std::sqrt(2.0)) < 1e-15);
  CHECK(s.sqr().contains(Rational(2)));
}

TEST_CASE("product formula") {
  std::mt19937_64 rng(2024);
  for (const char* s : {"x^2+1", "x^2-2", "x^3-2"}) {
    auto K = field(s);
    for (int it = 0; it < 100; ++it) {
      NFElem x = random_elem(*K, rng);
      Interval arch = Interval::point(Integer(0), 256);
      for (auto& v : K->places()) {
        Interval l = K->arch_abs(x, v.index, 1e-20).log();
        arch = arch + l.scaled(Rational(v.local_degree));
      }
      // finite places: primes dividing the denominator or the norm
      auto [num, den] = x.split_denominator();
      Rational nrm = K->norm(x);
      Integer supp = abs(nrm.get_num()) * abs(nrm.get_den()) * den;
      Interval fin = Interval::point(Integer(0), 256);
      for (auto& pp : factor_integer(supp)) {
        for (auto& P : K->prime_decomposition(pp.prime)) {
          long v = P.valuation(x);
          if (v != 0) fin = fin + Interval::log_of(P.norm(), 256).scaled(Rational(v));
        }
      }
      CHECK((arch - fin).contains(Rational(0)));
    }
  }
}

TEST_CASE("polynomials over K from parsed text") {
  auto Ki = field("x^2+1");
  NFPoly f = parse_nf_poly("T0^2 + (1+x)*5*T1*T2", {"T0", "T1", "T2"}, *Ki);
  CHECK(f.nvars() == 3);
  CHECK(f.size() == 2);
  CHECK(to_string(f) == "T0^2 + (5*x + 5)*T1*T2");
  NFPoly g = parse_nf_poly("x^2*T0 + T1", {"T0", "T1"}, *Ki);
  CHECK(to_string(g) == "-T0 + T1");
  auto Q = NumberField::rationals();
  NFPoly h = parse_nf_poly("T0^2 + 6*T1*T2", {"T0", "T1", "T2"}, *Q);
  CHECK(to_string(h) == "T0^2 + 6*T1*T2");
}
