#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "badred/exactmath/primes.hpp"
#include "badred/mpoly/matrix.hpp"
#include "badred/numfield/nf_poly.hpp"

namespace badred {

// T_i -> sum_j a[i][j] U_j. Square and unimodular for coordinate changes,
// (n+1) x 3 of rank 3 for plane sections.
struct LinearSubstitution {
  std::vector<std::vector<long>> a;
  int attempt = 0;

  bool is_identity() const;
  std::string to_string() const;  // "[[1,0,0],[0,1,0],[0,0,1]]"
};

// Deterministic sequence of unimodular changes; attempt 0 is the identity.
LinearSubstitution unimodular_change(int nvars, int attempt);
NFPoly substitute(const NFPoly& f, const LinearSubstitution& s, VarNames target);

// Sets variable `direction` to 1. Throws NonHomogeneous, ZeroPolynomial.
NFPoly dehomogenize(const NFPoly& f, int direction);

struct Dehomogenization {
  NFPoly affine;  // f(A T) with T0 = 1, in the remaining variables
  LinearSubstitution change;
};
// First change A (from start_attempt on) such that every pure power T_i^d has
// a nonzero coefficient in f(A T), so the affine part keeps degree d in each
// variable. Throws DegenerateDirectionExhausted after 100 attempts.
Dehomogenization dehomogenize_generic(const NFPoly& f, int start_attempt = 0);

// Scales f by a rational so the coordinates are coprime integers.
NFPoly integral_primitive(const NFPoly& f);

struct RuppertColumn {
  char block;  // 'g' or 'h'
  int i, j;    // unknown coefficient of x^i y^j
};

// Columns of f g_y - g f_y - (f h_x - h f_x) over the monomials x^a y^b,
// a <= 2m-1, b <= 2n-1; deg g <= (m-1, n), deg h <= (m, n-2).
struct RuppertSystem {
  NFPoly f;  // bivariate, variable 0 is x
  int m = 0, n = 0;
  Matrix<NFElem> M;
  std::vector<std::pair<int, int>> rows;
  std::vector<RuppertColumn> cols;
};

// Throws DegenerateShape unless m >= 1 and n >= 2.
RuppertSystem build_ruppert(const NFPoly& f);

// Entry blocks replaced by their multiplication matrices on the power basis;
// needs Z[theta]-integral entries (NonIntegral otherwise).
Matrix<Integer> integer_expansion(const RuppertSystem& sys);

// Rank of M mod P; entries must be P-integral.
std::size_t rank_mod(const RuppertSystem& sys, const PrimeIdeal& P);

struct MinorCertificate {
  std::vector<std::size_t> rows;  // ascending original row indices
  std::size_t size = 0;
  NFElem value;                   // det of those rows, all columns
  Integer norm;                   // |N(value)|
  std::vector<PrimePower> norm_factors;
  Integer norm_cofactor = 1;      // left unfactored within budget
  // gcd of all maximal minors of the integer expansion; p divides it iff
  // M mod P loses rank at some P above p
  Integer divisor;
  std::vector<PrimePower> divisor_factors;
};

// Fraction-free elimination, pivot of maximal |norm|, ties to the lowest row.
// Throws AllMinorsZero when M has deficient column rank.
MinorCertificate minor_certificate(const RuppertSystem& sys);

struct PlaneSection {
  LinearSubstitution map;
  NFPoly ternary;  // in U, V, W
  std::uint64_t seed = 0;
};
// Needs at least 4 variables; throws DegenerateSection after 100 attempts.
PlaneSection plane_section(const NFPoly& f, std::uint64_t seed, int first_attempt = 0);

struct RuppertView {
  std::optional<PlaneSection> section;
  LinearSubstitution change;
  RuppertSystem system;
  bool full_rank = false;
  std::optional<MinorCertificate> minor;  // when full rank
  NFPoly g, h;                            // kernel witness otherwise
};

struct CharZeroResult {
  bool absolutely_irreducible = false;
  int degree = 0;
  std::string reason;
  std::vector<RuppertView> views;
  // gcd of the view divisors and its prime factors
  Integer divisor;
  std::vector<Integer> candidate_primes;
};

// Ruppert rank test over K. Ternary forms are decided exactly; in four or
// more variables f is irreducible once one plane section is, and reported
// reducible when every tried section is. With candidates requested, two
// independent full-rank views are intersected.
CharZeroResult abs_irreducible_char0(const NFPoly& f, std::uint64_t seed = 0, bool want_candidates = true);

// f g_y - g f_y - f h_x + h f_x
NFPoly ruppert_residual(const NFPoly& f, const NFPoly& g, const NFPoly& h);

}  // namespace badred
