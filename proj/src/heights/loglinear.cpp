#include "badred/heights/loglinear.hpp"

#include <algorithm>

#include "badred/exactmath/primes.hpp"

namespace badred {

Interval ArchLogMax::enclose(mpfr_prec_t prec) const {
  Interval best(prec);
  bool first = true;
  for (auto& a : elems) {
    ComplexBox b = K->embed(a, place, prec);
    Interval v = K->places()[place].real ? b.re.abs() : b.abs();
    best = first ? v : best.max_with(v);
    first = false;
  }
  return best.log();
}

std::string LogAtom::label() const { return arch ? arch->label : "log(" + n.get_str() + ")"; }

Interval LogAtom::enclose(mpfr_prec_t prec) const {
  return arch ? arch->enclose(prec) : Interval::log_of(n, prec);
}

bool operator<(const LogAtom& a, const LogAtom& b) {
  if (a.is_integer() != b.is_integer()) return a.is_integer();
  if (a.is_integer()) return a.n < b.n;
  return a.arch->label < b.arch->label;
}

bool operator==(const LogAtom& a, const LogAtom& b) {
  if (a.is_integer() != b.is_integer()) return false;
  return a.is_integer() ? a.n == b.n : a.arch->label == b.arch->label;
}

LogLinear LogLinear::rational(const Rational& r) {
  LogLinear x;
  x.r_ = r;
  return x;
}

LogLinear LogLinear::log_int(const Integer& n, const Rational& q) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "log of " + n.get_str());
  LogLinear x;
  if (n > 1) x.add_term(q, LogAtom{n, nullptr});
  return x;
}

LogLinear LogLinear::log_arch(std::shared_ptr<const ArchLogMax> a, const Rational& q) {
  LogLinear x;
  x.add_term(q, LogAtom{Integer(0), std::move(a)});
  return x;
}

bool LogLinear::has_arch() const {
  return std::any_of(terms_.begin(), terms_.end(), [](auto& t) { return !t.second.is_integer(); });
}

void LogLinear::add_term(const Rational& q, const LogAtom& a) {
  if (sgn(q) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a, [](auto& t, const LogAtom& x) { return t.second < x; });
  if (it != terms_.end() && it->second == a) {
    it->first += q;
    if (sgn(it->first) == 0) terms_.erase(it);
    return;
  }
  terms_.insert(it, {q, a});
}

LogLinear LogLinear::operator+(const LogLinear& b) const {
  LogLinear x = *this;
  x.r_ += b.r_;
  for (auto& [q, a] : b.terms_) x.add_term(q, a);
  return x;
}

LogLinear LogLinear::operator-(const LogLinear& b) const { return *this + b.scaled(-1); }

LogLinear LogLinear::scaled(const Rational& q) const {
  LogLinear x;
  if (sgn(q) == 0) return x;
  x.r_ = r_ * q;
  x.terms_ = terms_;
  for (auto& t : x.terms_) t.first *= q;
  return x;
}

LogLinear LogLinear::prime_form() const {
  LogLinear x = rational(r_);
  FactorBudget budget;
  for (auto& [q, a] : terms_) {
    if (!a.is_integer()) {
      x.add_term(q, a);
      continue;
    }
    auto part = factor_integer_partial(a.n, budget);
    for (auto& pp : part.factors) x.add_term(q * pp.exponent, LogAtom{pp.prime, nullptr});
    if (part.cofactor > 1) x.add_term(q, LogAtom{part.cofactor, nullptr});
  }
  return x;
}

Interval LogLinear::enclose(mpfr_prec_t prec) const {
  Interval acc = Interval::point(r_, prec);
  for (auto& [q, a] : terms_) acc = acc + a.enclose(prec).scaled(q);
  return acc;
}

Interval LogLinear::enclose_to(double rel_tol) const {
  for (mpfr_prec_t p = NumberField::kStartPrec; p <= NumberField::kMaxPrec; p *= 2) {
    Interval e = enclose(p);
    if (e.relative_width() <= rel_tol) return e;
  }
  throw Error(ErrorCode::PrecisionExhausted, "enclosure of " + to_string() + " stays too wide");
}

std::string LogLinear::to_string() const {
  std::string out;
  auto emit = [&](const Rational& q, const std::string& atom) {
    Rational a = abs(q);
    if (out.empty()) out += sgn(q) < 0 ? "-" : "";
    else out += sgn(q) < 0 ? " - " : " + ";
    if (atom.empty()) out += a.get_str();
    else if (a == 1) out += atom;
    else out += a.get_str() + "*" + atom;
  };
  for (auto& [q, a] : terms_) emit(q, a.label());
  if (sgn(r_) != 0) emit(r_, "");
  return out.empty() ? "0" : out;
}

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Greater: return "greater";
    case Cmp::Undecided: return "undecided";
  }
  return "?";
}

Cmp compare(const LogLinear& a, const LogLinear& b) {
  LogLinear d = (a - b).prime_form();
  if (d.is_zero()) return Cmp::Equal;
  if (d.terms().empty()) return sgn(d.constant()) < 0 ? Cmp::Less : Cmp::Greater;
  // A nonzero rational combination of logs of integers is transcendental, so
  // for integer-only d the loop below terminates unless precision runs out.
  for (mpfr_prec_t p = NumberField::kStartPrec; p <= NumberField::kMaxPrec; p *= 2) {
    Interval e = d.enclose(p);
    if (e.certainly_negative()) return Cmp::Less;
    if (e.certainly_positive()) return Cmp::Greater;
  }
  return Cmp::Undecided;
}

HeightValue HeightValue::of(LogLinear v, double rel_tol) {
  Interval e = v.enclose_to(rel_tol);
  return {std::move(v), std::move(e)};
}

}  // namespace badred
