#include <doctest.h>

#include <algorithm>

#include "badred/ruppert/ruppert.hpp"

using namespace badred;

namespace {

const std::vector<std::string> kT = {"T0", "T1", "T2"};

NFPoly qp(const std::string& s, std::vector<std::string> vars = kT) {
  return parse_nf_poly(s, vars, *NumberField::rationals());
}

bool has(const std::vector<Integer>& v, long p) { return std::find(v.begin(), v.end(), Integer(p)) != v.end(); }

}  // namespace

TEST_CASE("Ruppert system shape and linearity") {
  NFPoly f = qp("1 + x^2*y^2 + 3*x - y^2", {"x", "y"});
  RuppertSystem s = build_ruppert(f);
  CHECK(s.m == 2);
  CHECK(s.n == 2);
  CHECK(s.M.rows() == 16);
  CHECK(s.M.cols() == 9);
  CHECK(std::count_if(s.cols.begin(), s.cols.end(), [](auto& c) { return c.block == 'g'; }) == 6);
  NFPoly f2 = qp("5*x*y + 7*x^2 - 2*y^2*x", {"x", "y"});
  RuppertSystem s2 = build_ruppert(f2), s12 = build_ruppert(f + f2);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 9; ++c) CHECK(s12.M(r, c) == s.M(r, c) + s2.M(r, c));
  // bidegree (3, 4): 2mn + n - 1 columns
  RuppertSystem s3 = build_ruppert(qp("x^3*y^4 + 1", {"x", "y"}));
  CHECK(s3.M.cols() == 2 * 3 * 4 + 4 - 1);
  CHECK(s3.M.rows() == 6 * 8);
  CHECK_THROWS_AS(build_ruppert(qp("x^2 - y", {"x", "y"})), Error);
  CHECK_THROWS_AS(build_ruppert(qp("x^2 + x*y + 1", {"x", "y"})), Error);
}

TEST_CASE("dehomogenize") {
  CHECK(to_string(dehomogenize(qp("T0^2 + 6*T1*T2"), 0)) == "6*T1*T2 + 1");
  CHECK(dehomogenize(qp("T0^2*T1", {"T0", "T1"}), 1).nvars() == 1);
  CHECK_THROWS_AS(dehomogenize(qp("x^2 + y^2 + 1", {"x", "y"}), 0), Error);
  Dehomogenization d = dehomogenize_generic(qp("T0^2 + 6*T1*T2"));
  CHECK(!d.change.is_identity());
  CHECK(d.affine.degree_in(0) == 2);
  CHECK(d.affine.degree_in(1) == 2);
  CHECK(d.affine.total_degree() == 2);
  Dehomogenization e = dehomogenize_generic(qp("T0^2 + T1^2 + T2^2"));
  CHECK(e.change.is_identity());
  for (int a = 1; a < 20; ++a) {
    auto U = unimodular_change(4, a);
    Matrix<Rational> A(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = U.a[i][j];
    CHECK(det_bareiss(A) == 1);
  }
}

TEST_CASE("char 0 test over Q") {
  CharZeroResult r = abs_irreducible_char0(qp("T0^2 + 6*T1*T2"));
  CHECK(r.absolutely_irreducible);
  REQUIRE(r.views.size() == 2);
  REQUIRE(r.views[0].minor);
  const MinorCertificate& mc = *r.views[0].minor;
  CHECK(mc.size == 9);
  CHECK(mc.norm % 6 == 0);
  CHECK(mc.norm % mc.divisor == 0);
  CHECK(has(r.candidate_primes, 2));
  CHECK(has(r.candidate_primes, 3));

  CharZeroResult q = abs_irreducible_char0(qp("T0^2 + T1^2"));
  CHECK(!q.absolutely_irreducible);
  REQUIRE(q.views.size() == 1);
  const RuppertView& v = q.views[0];
  CHECK(!(v.g.is_zero() && v.h.is_zero()));
  CHECK(ruppert_residual(v.system.f, v.g, v.h).is_zero());
  CHECK(v.g.degree_in(0) <= v.system.m - 1);
  CHECK(v.g.degree_in(1) <= v.system.n);
  CHECK(v.h.degree_in(0) <= v.system.m);
  CHECK(v.h.degree_in(1) <= v.system.n - 2);

  CHECK(abs_irreducible_char0(qp("T0 + T1")).absolutely_irreducible);
  CHECK(abs_irreducible_char0(qp("3*T0 - 5*T2")).reason == "hyperplane");
  CHECK(!abs_irreducible_char0(qp("T0^2 + T1^2", {"T0", "T1"})).absolutely_irreducible);
  // x^2 - y homogenized: a coordinate change reaches n >= 2
  CharZeroResult c = abs_irreducible_char0(qp("T1^2 - T0*T2"));
  CHECK(c.absolutely_irreducible);
  CHECK(!c.views[0].change.is_identity());
  CHECK(abs_irreducible_char0(qp("T0^3 + T1^3 + T2^3")).absolutely_irreducible);
  CHECK(!abs_irreducible_char0(qp("(T0 + T1)*(T0^2 + T1*T2 + 7*T2^2)")).absolutely_irreducible);
  CHECK(!abs_irreducible_char0(qp("(T0 + 2*T1 - T2)^2")).absolutely_irreducible);
  // T0^3 - 2 T1^3 is a product of three conjugate lines
  CHECK(!abs_irreducible_char0(qp("T0^3 - 2*T1^3")).absolutely_irreducible);
  CHECK_THROWS_AS(abs_irreducible_char0(qp("T0^2 + T1")), Error);
}

TEST_CASE("candidate primes and rank mod P") {
  auto Q = NumberField::rationals();
  CharZeroResult a1 = abs_irreducible_char0(qp("T0^2 + T1*T2"));
  CHECK(a1.absolutely_irreducible);
  MESSAGE("T0^2+T1T2 candidates: " << a1.divisor.get_str());
  CharZeroResult r = abs_irreducible_char0(qp("T0^2 + 6*T1*T2"));
  const RuppertSystem& sys = r.views[0].system;
  for (long p : {2L, 3L, 5L, 7L, 11L, 101L}) {
    PrimeIdeal P = Q->prime_decomposition(Integer(p))[0];
    bool deficient = rank_mod(sys, P) < sys.M.cols();
    CHECK(deficient == (r.views[0].minor->divisor % p == 0));
  }
  // scaling leaves the candidates alone
  CharZeroResult s = abs_irreducible_char0(qp("14*T0^2 + 84*T1*T2"));
  CHECK(s.candidate_primes == r.candidate_primes);
  // determinism
  CharZeroResult r2 = abs_irreducible_char0(qp("T0^2 + 6*T1*T2"));
  CHECK(r2.views[0].minor->rows == r.views[0].minor->rows);
  CHECK(r2.views[0].minor->value == r.views[0].minor->value);
  CHECK(r2.divisor == r.divisor);
}

TEST_CASE("char 0 test over Q(i)") {
  auto K = NumberField::parse("x^2+1");
  NFPoly f = parse_nf_poly("T0^2 + (1+x)*5*T1*T2", kT, *K);
  CharZeroResult r = abs_irreducible_char0(f);
  CHECK(r.absolutely_irreducible);
  CHECK(has(r.candidate_primes, 2));
  CHECK(has(r.candidate_primes, 5));
  const RuppertSystem& sys = r.views[0].system;
  for (auto& P : K->prime_decomposition(Integer(5))) CHECK(rank_mod(sys, P) < sys.M.cols());
  CHECK(!has(r.candidate_primes, 3));
  for (auto& P : K->prime_decomposition(Integer(3))) {
    bool some_full = false;
    for (auto& v : r.views) some_full = some_full || rank_mod(v.system, P) == v.system.M.cols();
    CHECK(some_full);
  }
  CharZeroResult u = abs_irreducible_char0(f.mul_scalar(K->generator()));
  CHECK(u.candidate_primes == r.candidate_primes);
  CHECK(!abs_irreducible_char0(parse_nf_poly("T0^2 + T1^2", kT, *K)).absolutely_irreducible);
  // x^2 - 2 T1^2 is irreducible over Q(i)... but splits over Qbar
  CHECK(!abs_irreducible_char0(parse_nf_poly("T0^2 - 2*T1^2", kT, *K)).absolutely_irreducible);
}

TEST_CASE("plane sections") {
  std::vector<std::string> v4 = {"T0", "T1", "T2", "T3"};
  NFPoly q = qp("T0^2 + T1*T3 - T2^2", v4);
  PlaneSection s = plane_section(q, 7);
  CHECK(s.ternary.nvars() == 3);
  CHECK(s.ternary.homogeneous_degree() == 2);
  PlaneSection s2 = plane_section(q, 7);
  CHECK(s2.map.a == s.map.a);
  CHECK(s2.ternary == s.ternary);
  CHECK(plane_section(qp("T0 + 2*T3", v4), 1).ternary.homogeneous_degree() == 1);
  CHECK_THROWS_AS(plane_section(qp("T0^2 + T1*T2"), 1), Error);
  CHECK(abs_irreducible_char0(q).absolutely_irreducible);
  CHECK(!abs_irreducible_char0(qp("(T0 + T1)*(T2 + T3)", v4)).absolutely_irreducible);
  CHECK(!abs_irreducible_char0(qp("T0^2 + T1^2", v4)).absolutely_irreducible);
  CHECK(abs_irreducible_char0(qp("T0^3 + T1^3 + T2^3 + 5*T3^3", v4)).absolutely_irreducible);
}
