#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "badred/exactmath/finite_field.hpp"
#include "badred/exactmath/integer.hpp"
#include "badred/exactmath/zpoly.hpp"
#include "badred/numfield/interval.hpp"

namespace badred {

class NumberField;
class PrimeIdeal;

// Element of K in the power basis 1, theta, ..., theta^{n-1}. A
// value-initialized NFElem (no field) is the zero of every field.
struct NFElem {
  const NumberField* field = nullptr;
  std::vector<Rational> c;  // length [K:Q] when field is set

  bool is_zero() const;
  bool is_rational() const;
  // Integer coordinates and a positive denominator with x = num / den.
  std::pair<std::vector<Integer>, Integer> split_denominator() const;
};

bool operator==(const NFElem& a, const NFElem& b);
NFElem operator+(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a);
NFElem operator*(const NFElem& a, const NFElem& b);
inline NFElem& operator+=(NFElem& a, const NFElem& b) { return a = a + b; }
inline NFElem& operator-=(NFElem& a, const NFElem& b) { return a = a - b; }
inline NFElem& operator*=(NFElem& a, const NFElem& b) { return a = a * b; }

bool is_zero(const NFElem& a);
NFElem one_like(const NFElem& a);
NFElem scale(const NFElem& a, long k);
NFElem inverse(const NFElem& a);
NFElem divexact(const NFElem& a, const NFElem& b);
inline bool coeff_divides(const NFElem& b, const NFElem&) { return !b.is_zero(); }
std::string coeff_to_string(const NFElem& a);
bool coeff_is_negative(const NFElem& a);
bool coeff_is_atomic(const NFElem& a);

struct ArchPlace {
  int index = 0;
  bool real = true;
  int local_degree = 1;  // [K_v : R]
};

// K = Q(theta), theta a root of a monic irreducible integer polynomial.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Throws NonMonic, ReducibleMinPoly, InvalidInput (degree 0).
  static std::shared_ptr<const NumberField> make(const ZPoly& minpoly, std::string generator = "x");
  // Throws NonIntegral if some coefficient is not an integer.
  static std::shared_ptr<const NumberField> make(const QPoly& minpoly, std::string generator = "x");
  // Parses e.g. "x^2+1"; the single variable becomes the generator name.
  static std::shared_ptr<const NumberField> parse(const std::string& text);
  static std::shared_ptr<const NumberField> rationals();

  int degree() const { return n_; }
  bool is_rational() const { return n_ == 1; }
  const ZPoly& minpoly() const { return m_; }
  const std::string& generator_name() const { return gen_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  const std::vector<ArchPlace>& places() const { return places_; }
  std::string describe() const;

  NFElem zero() const;
  NFElem one() const;
  NFElem from_rational(const Rational& q) const;
  NFElem from_coefficients(std::vector<Rational> c) const;  // reduced mod minpoly
  NFElem generator() const;

  NFElem add(const NFElem& a, const NFElem& b) const;
  NFElem sub(const NFElem& a, const NFElem& b) const;
  NFElem mul(const NFElem& a, const NFElem& b) const;
  NFElem inverse(const NFElem& a) const;
  Rational norm(const NFElem& a) const;
  Rational trace(const NFElem& a) const;
  // Product in Z[theta] on integer coordinates.
  std::vector<Integer> mul_integral(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  std::string to_string(const NFElem& a) const;

  // Certified enclosure of theta under the embedding of place v; for a real
  // place the imaginary part is exactly 0.
  ComplexBox root_enclosure(int v, mpfr_prec_t prec) const;
  // |a|_v (ordinary absolute value) with relative width <= rel_tol.
  Interval arch_abs(const NFElem& a, int v, double rel_tol = 1e-12) const;
  // Enclosure of a at place v at fixed precision.
  ComplexBox embed(const NFElem& a, int v, mpfr_prec_t prec) const;

  // Prime ideals above p in deterministic order. Throws
  // IndexDivisorUnsupported when p divides [O_K : Z[theta]].
  std::vector<PrimeIdeal> prime_decomposition(const Integer& p) const;
  bool divides_index(const Integer& p) const;

  // Precision escalation limits for archimedean enclosures.
  static constexpr mpfr_prec_t kStartPrec = 128;
  static constexpr mpfr_prec_t kMaxPrec = 1 << 15;

 private:
  NumberField(ZPoly m, std::string gen);
  void reduce_in_place(std::vector<Rational>& c) const;
  const std::vector<ComplexBox>& roots_at(mpfr_prec_t prec) const;

  ZPoly m_;
  std::string gen_;
  int n_;
  int r1_ = 0, r2_ = 0;
  std::vector<ArchPlace> places_;
  // theta^{n+j} in the power basis, j = 0..n-2
  std::vector<std::vector<Integer>> high_powers_;

  mutable std::mutex root_mu_;
  mutable std::map<mpfr_prec_t, std::vector<ComplexBox>> roots_;
  mutable std::vector<std::pair<MpReal, MpReal>> approx_;  // latest root approximations
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Integer HNF: rows upper triangular with positive pivots, entries above a
// pivot reduced into [0, pivot). Input rows span a full-rank lattice
// containing D * Z^n.
std::vector<std::vector<Integer>> hnf_modular(std::vector<std::vector<Integer>> gens, const Integer& D, int n);
bool hnf_contains(const std::vector<std::vector<Integer>>& H, std::vector<Integer> v);

// Finite place P = (p, g(theta)) of K with p not dividing the index.
class PrimeIdeal {
 public:
  PrimeIdeal(NumberFieldPtr K, Integer p, ZPoly g, int e, ZPoly helper);

  const NumberField& field() const { return *K_; }
  const Integer& p() const { return p_; }
  int e() const { return e_; }
  int f() const { return f_; }
  const ZPoly& g() const { return g_; }
  Integer norm() const;
  std::string label() const;
  const std::vector<std::vector<Integer>>& hnf_basis() const { return hnf_; }
  // F_p when f = 1, else F_p[z]/(g mod p); throws InvalidInput when p >= 2^63.
  const FiniteField& residue_field() const;
  // Image of theta in the residue field.
  const FFElem& theta_image() const;
  std::shared_ptr<const FiniteField> residue_field_ptr() const;

  // Throws ZeroElement.
  long valuation(const NFElem& x) const;
  // Same value through the helper element a with v_P(a/p) = -1; for checks.
  long valuation_by_helper(const NFElem& x) const;
  // Throws NotPIntegral.
  FFElem residue_reduce(const NFElem& x) const;
  // (a/p)^c with v_P(a/p) = -1 and a/p integral at the other primes above p.
  NFElem inverse_uniformizer_power(long c) const;

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.K_ == b.K_ && a.p_ == b.p_ && a.g_ == b.g_;
  }

 private:
  long valuation_integral(const std::vector<Integer>& beta) const;
  const std::vector<std::vector<Integer>>& power(long k) const;
  FFElem reduce_integral(const std::vector<Integer>& beta) const;
  std::vector<Integer> helper_power(long k) const;

  NumberFieldPtr K_;
  Integer p_;
  ZPoly g_;
  int e_, f_;
  ZPoly helper_;
  std::vector<std::vector<Integer>> hnf_;
  std::shared_ptr<const FiniteField> residue_;
  FFElem theta_image_;

  struct PowerCache {
    std::mutex mu;
    std::map<long, std::vector<std::vector<Integer>>> powers;
  };
  std::shared_ptr<PowerCache> cache_;
};

}  // namespace badred
