#include <doctest.h>

#include <cmath>
#include <random>

#include "badred/heights/heights.hpp"

using namespace badred;

namespace {

NFPoly qpoly(const std::string& s, std::vector<std::string> vars = {"T0", "T1", "T2"}) {
  return parse_nf_poly(s, vars, *NumberField::rationals());
}

bool close(const Interval& e, double x, double tol = 1e-9) { return std::fabs(e.mid_double() - x) < tol; }

}  // namespace

TEST_CASE("LogLinear algebra and printing") {
  LogLinear a = LogLinear::log_int(2, 9) + LogLinear::log_int(3, 6) + LogLinear::log_int(6, 3);
  CHECK(a.to_string() == "9*log(2) + 6*log(3) + 3*log(6)");
  CHECK(a.prime_form().to_string() == "12*log(2) + 9*log(3)");
  CHECK((a - a).is_zero());
  CHECK(LogLinear::log_int(1).is_zero());
  LogLinear b = LogLinear::log_int(2) - LogLinear::rational(Rational(137, 120));
  CHECK(b.to_string() == "log(2) - 137/120");
  CHECK(compare(LogLinear::log_int(6), LogLinear::log_int(2) + LogLinear::log_int(3)) == Cmp::Equal);
  CHECK(compare(LogLinear::log_int(7), LogLinear::log_int(2) + LogLinear::log_int(3)) == Cmp::Greater);
  CHECK(compare(LogLinear::log_int(2, 10), LogLinear::log_int(1025)) == Cmp::Less);
  // 3^12 = 531441 > 2^19 = 524288
  CHECK(compare(LogLinear::log_int(3, 12), LogLinear::log_int(2, 19)) == Cmp::Greater);
  CHECK(compare(LogLinear::rational(1), LogLinear::rational(2)) == Cmp::Less);
  Interval e = LogLinear::log_int(2).enclose_to(1e-30);
  CHECK(e.relative_width() <= 1e-30);
  CHECK(close(e, std::log(2.0)));
}

TEST_CASE("naive height over Q") {
  HeightValue h = naive_height(qpoly("T0^2 + 6*T1*T2"));
  CHECK(h.value.to_string() == "log(6)");
  CHECK(close(h.enclosure, std::log(6.0)));
  CHECK(naive_height(qpoly("T0 + T1")).value.is_zero());
  // content and denominators are absorbed: 4 T0 + 6 T1 ~ 2 T0 + 3 T1
  CHECK(compare(naive_height(qpoly("4*T0 + 6*T1")).value, LogLinear::log_int(3)) == Cmp::Equal);
  NFPoly g = to_nf(MPoly<Rational>::from_terms(make_vars({"T0", "T1"}),
                                               {{Monomial::var(0), Rational(1, 2)}, {Monomial::var(1), Rational(1, 3)}}),
                   *NumberField::rationals());
  CHECK(compare(naive_height(g).value, LogLinear::log_int(3)) == Cmp::Equal);
  CHECK_THROWS_AS(naive_height(NFPoly(make_vars({"T0"}))), Error);
}

TEST_CASE("naive height over Q(i)") {
  auto K = NumberField::parse("x^2+1");
  NFPoly f = parse_nf_poly("T0^2 + (1+x)*5*T1*T2", {"T0", "T1", "T2"}, *K);
  HeightValue h = naive_height(f);
  // finite part 0 (coefficient 1 present), archimedean: log |5(1+i)| = log 5 + log(2)/2
  CHECK(close(h.enclosure, std::log(5.0) + 0.5 * std::log(2.0)));
  // the ramified prime above 2: local content of (1+i) T0 + 2 T1 is 1
  NFPoly g = parse_nf_poly("(1+x)*T0 + 2*T1", {"T0", "T1"}, *K);
  auto P2 = K->prime_decomposition(Integer(2))[0];
  CHECK(local_content(g, P2) == 1);
  NFElem u = K->generator();
  CHECK(local_content(g.mul_scalar(u), P2) == 1);
  // h(g) = (1/2)(-1*log 2 + 2*log|2|) = log(2)/2
  CHECK(close(naive_height(g).enclosure, 0.5 * std::log(2.0)));
}

TEST_CASE("scaling invariance") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (const char* field : {"x", "x^2+1", "x^2-2", "x^3-2"}) {
    auto K = NumberField::parse(field);
    std::vector<std::string> vars{"T0", "T1", "T2"};
    for (const char* s : {"T0^2 + 6*T1*T2", "3*T0^2 - 5*T1^2 + 7*T2^2 + T0*T1", "T0^3 + 2*T1^3 + 4*T2^3"}) {
      NFPoly f = parse_nf_poly(s, vars, *K);
      HeightValue h = naive_height(f);
      for (int it = 0; it < 20; ++it) {
        std::vector<Rational> c(K->degree());
        for (auto& x : c) {
          x = Rational(num(rng), den(rng));
          x.canonicalize();
        }
        NFElem s_ = K->from_coefficients(c);
        if (s_.is_zero()) continue;
        HeightValue hs = naive_height(f.mul_scalar(s_));
        Interval diff = hs.enclosure - h.enclosure;
        CHECK(std::fabs(diff.mid_double()) < 1e-9);
        if (K->is_rational()) CHECK(compare(hs.value, h.value) == Cmp::Equal);
      }
    }
  }
}

TEST_CASE("height is nonnegative with a unit coefficient") {
  for (const char* s : {"T0^2 + 6*T1*T2", "T0 + 1*T1", "T0^2 + T1*T2"}) {
    CHECK(naive_height(qpoly(s)).enclosure.lo().to_double() >= -1e-30);
  }
  auto K = NumberField::parse("x^3-x-1");
  NFPoly f = parse_nf_poly("T0 + x*T1 + (x^2-3)*T2", {"T0", "T1", "T2"}, *K);
  CHECK(!naive_height(f).enclosure.certainly_negative());
}

TEST_CASE("adelic height and primitivization") {
  auto K = NumberField::parse("x^2+1");
  NFPoly f = parse_nf_poly("(2+2*x)*T0 + 6*T1", {"T0", "T1"}, *K);
  AdelicData d = adelic_data(f);
  CHECK(!d.finite.empty());
  HeightValue h = adelic_height(d);
  HeightValue hn = naive_height(f);
  CHECK(compare(h.value, hn.value) == Cmp::Equal);
  AdelicData pd = primitivize(d);
  for (auto& e : pd.finite) CHECK(e.content == 0);
  HeightValue hp = adelic_height(pd);
  CHECK(std::fabs((hp.enclosure - h.enclosure).mid_double()) < 1e-9);
  AdelicData bad = d;
  bad.cofinite_content = 1;
  CHECK_THROWS_AS(adelic_height(bad), Error);

  NFPoly q = qpoly("T0^2 + 6*T1*T2");
  CHECK(compare(adelic_height(adelic_data(q)).value, LogLinear::log_int(6)) == Cmp::Equal);
  NFPoly q2 = qpoly("10*T0^2 + 60*T1*T2");
  AdelicData d2 = adelic_data(q2);
  CHECK(d2.finite.size() == 2);
  CHECK(compare(adelic_height(primitivize(d2)).value, adelic_height(d2).value) == Cmp::Equal);
}

TEST_CASE("bound constants") {
  CHECK(constant_C_curve(2).value.to_string() == "9*log(2)");
  CHECK(constant_C_curve(1).value.is_zero());
  CHECK(constant_C_curve(3).value.to_string() == "24*log(3)");

  LogLinear c22 = (LogLinear::log_int(2, 3) + LogLinear::log_int(3, 2) + LogLinear::log_int(6)).scaled(3);
  CHECK(compare(constant_C_hypersurface(2, 2).value, c22) == Cmp::Equal);
  CHECK(constant_C_hypersurface(2, 1).value.is_zero());
  LogLinear c32 = (LogLinear::log_int(2, 3) + LogLinear::log_int(3, 2) + LogLinear::log_int(10)).scaled(3);
  CHECK(compare(constant_C_hypersurface(3, 2).value, c32) == Cmp::Equal);

  BoundConstants g = constant_C_general(3, 1, 2);
  CHECK(g.N == 5);
  CHECK(harmonic_number(5) == Rational(137, 60));
  LogLinear inner = LogLinear::log_int(2, 3) + LogLinear::log_int(binomial(7, 2)) +
                    (LogLinear::log_int(2, 6) + LogLinear::log_int(6, 4) + LogLinear::log_int(3) -
                     LogLinear::rational(Rational(137, 120)))
                        .scaled(2);
  CHECK(compare(g.value, inner.scaled(3)) == Cmp::Equal);
  CHECK(constant_C_general(3, 1, 1).value.is_zero());
  CHECK(constant_C_general(2, 1, 3).N == 2);
  CHECK_THROWS_AS(constant_C_general(3, 3, 2), Error);
  CHECK_THROWS_AS(constant_C_general(3, 0, 2), Error);

  // monotone in delta
  for (int delta = 1; delta < 10; ++delta) {
    CHECK(compare(constant_C_curve(delta).value, constant_C_curve(delta + 1).value) == Cmp::Less);
    for (int n = 1; n <= 4; ++n)
      CHECK(compare(constant_C_hypersurface(n, delta).value, constant_C_hypersurface(n, delta + 1).value) ==
            Cmp::Less);
    for (auto [n, d] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}})
      CHECK(compare(constant_C_general(n, d, delta).value, constant_C_general(n, d, delta + 1).value) == Cmp::Less);
  }
}

TEST_CASE("bound values for the running example") {
  HeightValue h = naive_height(qpoly("T0^2 + 6*T1*T2"));
  HeightValue b = bound_value(h, constant_C_hypersurface(2, 2), 2);
  LogLinear expect = LogLinear::log_int(6, 3) +
                     (LogLinear::log_int(2, 3) + LogLinear::log_int(3, 2) + LogLinear::log_int(6)).scaled(3);
  CHECK(compare(b.value, expect) == Cmp::Equal);
  HeightValue bc = bound_value(h, constant_C_curve(2), 2);
  CHECK(compare(bc.value, LogLinear::log_int(6, 3) + LogLinear::log_int(2, 9)) == Cmp::Equal);
  CHECK(close(bc.enclosure, 3 * std::log(6.0) + 9 * std::log(2.0)));
  CHECK_THROWS_AS(bound_value(h, constant_C_curve(3), 2), Error);
  HeightValue lin = naive_height(qpoly("T0 + 5*T1"));
  CHECK(bound_value(lin, constant_C_hypersurface(2, 1), 1).value.is_zero());
}
