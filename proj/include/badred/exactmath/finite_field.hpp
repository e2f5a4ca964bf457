#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "badred/exactmath/integer.hpp"

namespace badred {

inline constexpr int kMaxExtDegree = 12;

class FiniteField;

// Element of F_{p^k} = F_p[z]/(modulus): coefficients c[0..k-1] of a
// polynomial in z of degree < k. The parent field must outlive the element.
// A value-initialized FFElem (no parent) is the zero of every field.
struct FFElem {
  const FiniteField* field = nullptr;
  std::array<std::uint64_t, kMaxExtDegree> c{};

  bool is_zero() const;
  std::vector<std::uint64_t> coefficients() const;
};

class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  // modulus: monic coefficients low-to-high, degree k = modulus.size() - 1.
  // Throws InvalidInput unless p is prime and the modulus irreducible.
  static std::shared_ptr<const FiniteField> make(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static std::shared_ptr<const FiniteField> prime_field(std::uint64_t p);
  // F_{p^k} with the lexicographically smallest irreducible modulus.
  static std::shared_ptr<const FiniteField> extension(std::uint64_t p, int k);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  Integer size() const;

  FFElem zero() const;
  FFElem one() const;
  FFElem from_int(long v) const;
  FFElem from_integer(const Integer& v) const;
  FFElem from_coefficients(const std::vector<std::uint64_t>& coeffs) const;
  // The class of z, which generates the field over F_p.
  FFElem generator() const;

  // Bijection {0, ..., q-1} <-> F_q via base-p digits; used by enumeration.
  FFElem from_index(std::uint64_t index) const;
  std::uint64_t to_index(const FFElem& a) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inverse(const FFElem& a) const;
  FFElem pow(const FFElem& a, const Integer& e) const;
  FFElem frobenius(const FFElem& a) const;
  FFElem mul_int(const FFElem& a, long k) const;
  bool equal(const FFElem& a, const FFElem& b) const;

  std::string to_string(const FFElem& a) const;
  std::string describe() const;

 private:
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);
  std::uint64_t addp(std::uint64_t a, std::uint64_t b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  std::uint64_t subp(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t mulp(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  int k_;
  std::vector<std::uint64_t> modulus_;
};

bool operator==(const FFElem& a, const FFElem& b);
FFElem operator+(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a);
FFElem operator*(const FFElem& a, const FFElem& b);
FFElem& operator+=(FFElem& a, const FFElem& b);
FFElem& operator-=(FFElem& a, const FFElem& b);
FFElem& operator*=(FFElem& a, const FFElem& b);

inline bool is_zero(const FFElem& a) { return a.is_zero(); }
FFElem one_like(const FFElem& a);
FFElem scale(const FFElem& a, long k);
FFElem inverse(const FFElem& a);
FFElem divexact(const FFElem& a, const FFElem& b);
inline bool coeff_divides(const FFElem& b, const FFElem&) { return !b.is_zero(); }
std::string coeff_to_string(const FFElem& a);
inline bool coeff_is_negative(const FFElem&) { return false; }
bool coeff_is_atomic(const FFElem& a);

// Lexicographically smallest monic irreducible of degree k over F_p, ordered
// by the coefficient vector from z^{k-1} down to z^0.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k);

}  // namespace badred
