#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "badred/exactmath/ff_upoly.hpp"
#include "badred/mpoly/mpoly.hpp"
#include "badred/numfield/nf_poly.hpp"

namespace badred {

using FFMPoly = MPoly<FFElem>;
using FieldPtr = std::shared_ptr<const FiniteField>;

inline constexpr std::uint64_t kDefaultOracleBudget = 20'000'000;

// Image of a P-integral polynomial in the residue field; throws NotPIntegral.
FFMPoly reduce_mod(const NFPoly& f, const PrimeIdeal& P);
// f scaled to local content 0 at P, then reduced (the P-part of f mod P).
FFMPoly p_part_reduction(const NFPoly& f, const PrimeIdeal& P);

// Coefficients pushed through a field embedding.
FFMPoly lift(const FFMPoly& f, const FieldEmbedding& emb);
// Scaled so the leading (grlex) coefficient is 1.
FFMPoly monic(const FFMPoly& f);

struct FFFactor {
  FFMPoly factor;  // leading coefficient 1
  int multiplicity = 1;
};

struct FFFactorization {
  FFElem unit;
  std::vector<FFFactor> factors;  // by degree, then discovery order
  std::uint64_t divisions = 0;    // trial divisions spent
};

// Factorization of a nonzero homogeneous f over F. Linear factors come from
// the root engine below (or plain enumeration when |F| <= deg f + 1); higher
// degree divisors are enumerated exhaustively in grlex candidate order.
// Throws BudgetExceeded naming the search-space size.
FFFactorization factor_exhaustive(const FFMPoly& f, const FiniteField& F,
                                  std::uint64_t budget = kDefaultOracleBudget);

struct LinearFactors {
  FieldPtr field;               // F_{q^k}, or a larger field when |F_{q^k}| is tiny
  int degree_over_base = 1;     // [field : F]
  std::vector<FFMPoly> forms;   // distinct, first nonzero coefficient 1
};

// Every linear factor of f whose coefficients lie in F_{q^k}, found over a
// field containing F_{q^k}. Throws BudgetExceeded beyond 12-fold extensions.
LinearFactors linear_factors(const FFMPoly& f, const FiniteField& F, int k);

struct AbsIrreducibleFF {
  bool absolutely_irreducible = true;
  FFMPoly witness;            // a proper factor, over witness_field
  FieldPtr witness_field;
  int extension_degree = 0;   // smallest e with the witness defined over F_{q^e}
};

// Irreducible over F_{q^e} for every e dividing deg f.
AbsIrreducibleFF abs_irreducible_ff(const FFMPoly& f, const FiniteField& F,
                                    std::uint64_t budget = kDefaultOracleBudget);

struct ReductionType {
  bool is_reduced = false;
  bool is_irreducible = false;
  bool is_geometrically_integral = false;
  std::string witness_kind;  // "square factor", "proper factor", "geometric factor", "none"
  std::string witness;
  int witness_extension = 0;
  FFFactorization factorization;
};

ReductionType classify_reduction(const FFMPoly& f, const FiniteField& F,
                                 std::uint64_t budget = kDefaultOracleBudget);

}  // namespace badred
