#pragma once

#include <map>
#include <string>
#include <vector>

#include "badred/heights/loglinear.hpp"
#include "badred/numfield/nf_poly.hpp"

namespace badred {

// min over the coefficients of v_P. Throws ZeroPolynomial.
long local_content(const NFPoly& f, const PrimeIdeal& P);

// Rational primes p such that some coefficient has nonzero valuation at a
// prime above p (a superset for K != Q: primes dividing norms or denominators).
std::vector<Integer> support_primes(const NFPoly& f);

// log max_a |a|_v over the coefficients of f.
LogLinear arch_log_max(const NFPoly& f, int place);

struct LocalContentEntry {
  std::string label;    // prime ideal label
  Integer p;
  int f = 1;            // residue degree, N(P) = p^f
  long content = 0;     // min v_P over coefficients
};

struct ArchEntry {
  int place = 0;
  int local_degree = 1;
  LogLinear log_max;    // log max_a |a|_v
};

// Per-place data of Def.-style adelic heights; `cofinite_content` is the
// local content assumed at every prime not listed and must be 0.
struct AdelicData {
  int degree = 1;  // [K:Q]
  std::vector<LocalContentEntry> finite;
  std::vector<ArchEntry> arch;
  long cofinite_content = 0;
};

AdelicData adelic_data(const NFPoly& f);
// Scale by an idele of norm 1 making every local content 0; the archimedean
// maxima absorb the compensating factor at the first place.
AdelicData primitivize(const AdelicData& d);
// Throws InfiniteSupport when cofinite_content != 0.
HeightValue adelic_height(const AdelicData& d);

// (1/[K:Q]) (sum_P -min v_P(a) log N(P) + sum_v [K_v:R] log max |a|_v).
// Throws ZeroPolynomial; IndexDivisorUnsupported propagates.
HeightValue naive_height(const NFPoly& f);

enum class ConstantKind { Curve, Hypersurface, General };

struct BoundConstants {
  ConstantKind kind = ConstantKind::Curve;
  int n = 0, d = 0, delta = 0;
  Integer N;          // binomial(n+1, d+1) - 1 for General, else 0
  LogLinear value;
  std::string formula;  // the defining expression with the parameters plugged in
  Interval enclosure;
};

// (3 delta^2 - 3) log delta
BoundConstants constant_C_curve(int delta);
// (delta^2 - 1)(3 log delta + delta log 3 + log binom(n + delta, delta))
BoundConstants constant_C_hypersurface(int n, int delta);
// (delta^2 - 1)(3 log delta + log binom(N + delta, delta)
//   + delta((N+1) log 2 + 4 log(N+1) + log 3 - H_N / 2)); throws DimensionOutOfRange.
BoundConstants constant_C_general(int n, int d, int delta);

Rational harmonic_number(unsigned long m);

// (delta^2 - 1) h + C; throws DegreeMismatch when delta != constants.delta.
HeightValue bound_value(const HeightValue& h, const BoundConstants& c, int delta);

}  // namespace badred
