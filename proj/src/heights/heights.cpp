#include "badred/heights/heights.hpp"

#include <algorithm>
#include <set>

#include "badred/exactmath/primes.hpp"

namespace badred {

namespace {

const NumberField& field_of(const NFPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "height of the zero polynomial");
  const NFElem& a = f.lead().second;
  if (!a.field) throw Error(ErrorCode::InvalidInput, "coefficient without a field");
  return *a.field;
}

NumberFieldPtr field_ptr(const NFPoly& f) { return field_of(f).shared_from_this(); }

// gcd of numerators and lcm of denominators of rational coefficients.
std::pair<Integer, Integer> rational_gcd_lcm(const NFPoly& f) {
  Integer g = 0, l = 1;
  for (auto& [m, a] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.c[0].get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.c[0].get_den_mpz_t());
  }
  return {g, l};
}

LogLinear log_abs_rational(const Rational& q) {
  return LogLinear::log_int(abs(q.get_num())) - LogLinear::log_int(q.get_den());
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  if (abs(n) <= 1) return out;
  for (auto& pp : factor_integer(abs(n))) out.push_back(pp.prime);
  return out;
}

}  // namespace

long local_content(const NFPoly& f, const PrimeIdeal& P) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "local content of the zero polynomial");
  long best = 0;
  bool first = true;
  for (auto& [m, a] : f.terms()) {
    long v = P.valuation(a);
    best = first ? v : std::min(best, v);
    first = false;
  }
  return best;
}

std::vector<Integer> support_primes(const NFPoly& f) {
  const NumberField& K = field_of(f);
  std::set<Integer> ps;
  if (K.is_rational()) {
    auto [g, l] = rational_gcd_lcm(f);
    for (auto& p : prime_divisors(g)) ps.insert(p);
    for (auto& p : prime_divisors(l)) ps.insert(p);
  } else {
    Integer den = 1, normgcd = 0;
    for (auto& [m, a] : f.terms()) {
      auto [num, d] = a.split_denominator();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      NFElem numel = K.zero();
      for (std::size_t i = 0; i < num.size(); ++i) numel.c[i] = num[i];
      Rational nrm = K.norm(numel);
      mpz_gcd(normgcd.get_mpz_t(), normgcd.get_mpz_t(), nrm.get_num_mpz_t());
    }
    for (auto& p : prime_divisors(den)) ps.insert(p);
    for (auto& p : prime_divisors(normgcd)) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

LogLinear arch_log_max(const NFPoly& f, int place) {
  const NumberField& K = field_of(f);
  if (K.is_rational()) {
    Rational best = 0;
    for (auto& [m, a] : f.terms()) best = std::max(best, Rational(abs(a.c[0])));
    return log_abs_rational(best);
  }
  std::vector<NFElem> cand;
  for (auto& [m, a] : f.terms()) cand.push_back(a);
  // drop coefficients certainly dominated by another one
  for (mpfr_prec_t p = NumberField::kStartPrec; p <= 1024 && cand.size() > 1; p *= 2) {
    std::vector<Interval> enc;
    for (auto& a : cand) {
      ComplexBox b = K.embed(a, place, p);
      enc.push_back(K.places()[place].real ? b.re.abs() : b.abs());
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < enc.size(); ++i)
      if (mpfr_greater_p(enc[i].lo().get(), enc[arg].lo().get())) arg = i;
    std::vector<NFElem> keep;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (!enc[i].certainly_less(enc[arg])) keep.push_back(cand[i]);
    cand = std::move(keep);
  }
  for (auto& a : cand)
    if (a.is_rational()) return log_abs_rational(a.c[0]);
  auto atom = std::make_shared<ArchLogMax>();
  atom->K = K.shared_from_this();
  atom->place = place;
  atom->elems = cand;
  std::string inner;
  for (std::size_t i = 0; i < cand.size(); ++i) inner += (i ? "|, |" : "") + K.to_string(cand[i]);
  atom->label = cand.size() == 1 ? "log|" + inner + "|_v" + std::to_string(place)
                                 : "log max(|" + inner + "|)_v" + std::to_string(place);
  return LogLinear::log_arch(atom);
}

AdelicData adelic_data(const NFPoly& f) {
  NumberFieldPtr K = field_ptr(f);
  AdelicData d;
  d.degree = K->degree();
  for (auto& p : support_primes(f)) {
    for (auto& P : K->prime_decomposition(p)) {
      long c = local_content(f, P);
      if (c != 0) d.finite.push_back({P.label(), P.p(), P.f(), c});
    }
  }
  for (auto& v : K->places()) d.arch.push_back({v.index, v.local_degree, arch_log_max(f, v.index)});
  return d;
}

AdelicData primitivize(const AdelicData& d) {
  AdelicData out = d;
  LogLinear shift;
  for (auto& e : out.finite) {
    shift += LogLinear::log_int(e.p, Rational(-e.content * e.f));
    e.content = 0;
  }
  if (!out.arch.empty()) out.arch[0].log_max += shift.scaled(Rational(1, out.arch[0].local_degree));
  return out;
}

HeightValue adelic_height(const AdelicData& d) {
  if (d.cofinite_content != 0)
    throw Error(ErrorCode::InfiniteSupport, "local contents are nonzero at infinitely many primes");
  LogLinear total;
  for (auto& e : d.finite) total += LogLinear::log_int(e.p, Rational(-e.content * e.f));
  for (auto& a : d.arch) total += a.log_max.scaled(a.local_degree);
  return HeightValue::of(total.scaled(Rational(1, d.degree)));
}

HeightValue naive_height(const NFPoly& f) {
  const NumberField& K = field_of(f);
  if (K.is_rational()) {
    auto [g, l] = rational_gcd_lcm(f);
    LogLinear h = LogLinear::log_int(l) - LogLinear::log_int(g) + arch_log_max(f, 0);
    return HeightValue::of(h);
  }
  return adelic_height(adelic_data(f));
}

// ---- constants ----

Rational harmonic_number(unsigned long m) {
  Rational h = 0;
  for (unsigned long k = 1; k <= m; ++k) h += Rational(1, k);
  return h;
}

namespace {

BoundConstants finish(BoundConstants c, const LogLinear& inner, long factor, const std::string& inner_text) {
  c.value = inner.scaled(factor);
  c.formula = std::to_string(factor) + "*(" + inner_text + ")";
  c.enclosure = c.value.enclose_to();
  return c;
}

}  // namespace

BoundConstants constant_C_curve(int delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidInput, "delta must be >= 1");
  BoundConstants c;
  c.kind = ConstantKind::Curve;
  c.delta = delta;
  c.n = 2;
  const long factor = 3L * delta * delta - 3;
  return finish(c, LogLinear::log_int(delta), factor, "log(" + std::to_string(delta) + ")");
}

BoundConstants constant_C_hypersurface(int n, int delta) {
  if (n < 1 || delta < 1) throw Error(ErrorCode::InvalidInput, "need n >= 1 and delta >= 1");
  BoundConstants c;
  c.kind = ConstantKind::Hypersurface;
  c.n = n;
  c.delta = delta;
  Integer b = binomial(n + delta, delta);
  LogLinear inner = LogLinear::log_int(delta, 3) + LogLinear::log_int(3, delta) + LogLinear::log_int(b);
  std::string text = "3*log(" + std::to_string(delta) + ") + " + std::to_string(delta) + "*log(3) + log(" +
                     b.get_str() + ")";
  return finish(c, inner, static_cast<long>(delta) * delta - 1, text);
}

BoundConstants constant_C_general(int n, int d, int delta) {
  if (d < 1 || d > n - 1) throw Error(ErrorCode::DimensionOutOfRange, "need 1 <= d <= n - 1");
  if (delta < 1) throw Error(ErrorCode::InvalidInput, "delta must be >= 1");
  BoundConstants c;
  c.kind = ConstantKind::General;
  c.n = n;
  c.d = d;
  c.delta = delta;
  c.N = binomial(n + 1, d + 1) - 1;
  const unsigned long N = c.N.get_ui();
  Integer b = binomial(N + delta, delta);
  Rational hn = harmonic_number(N);
  LogLinear par = LogLinear::log_int(2, N + 1) + LogLinear::log_int(Integer(N + 1), 4) + LogLinear::log_int(3) -
                  LogLinear::rational(hn / 2);
  LogLinear inner = LogLinear::log_int(delta, 3) + LogLinear::log_int(b) + par.scaled(delta);
  std::string text = "3*log(" + std::to_string(delta) + ") + log(" + b.get_str() + ") + " + std::to_string(delta) +
                     "*(" + std::to_string(N + 1) + "*log(2) + 4*log(" + std::to_string(N + 1) + ") + log(3) - " +
                     Rational(hn / 2).get_str() + ")";
  return finish(c, inner, static_cast<long>(delta) * delta - 1, text);
}

HeightValue bound_value(const HeightValue& h, const BoundConstants& c, int delta) {
  if (delta != c.delta)
    throw Error(ErrorCode::DegreeMismatch,
                "degree " + std::to_string(delta) + " does not match constants for " + std::to_string(c.delta));
  return HeightValue::of(h.value.scaled(static_cast<long>(delta) * delta - 1) + c.value);
}

}  // namespace badred
