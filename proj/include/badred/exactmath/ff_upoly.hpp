#pragma once

#include <cstdint>
#include <vector>

#include "badred/exactmath/finite_field.hpp"
#include "badred/exactmath/upoly.hpp"

namespace badred {

using FFPoly = UPoly<FFElem>;

struct FFPolyFactor {
  FFPoly factor;  // monic irreducible
  int multiplicity = 1;
};

// Complete factorization of a nonzero polynomial over F_q into monic
// irreducibles; order is deterministic (by degree, then coefficient indices).
// The leading coefficient is dropped.
std::vector<FFPolyFactor> factor_ff(const FiniteField& F, const FFPoly& f);

// Distinct roots in F_q, sorted by FiniteField::to_index order of coefficients.
std::vector<FFElem> roots_ff(const FiniteField& F, const FFPoly& f);

bool is_irreducible_ff(const FiniteField& F, const FFPoly& f);

// Lift integer coefficients into F.
FFPoly ff_poly_from_integers(const FiniteField& F, const std::vector<Integer>& coeffs);
FFPoly ff_poly_from_u64(const FiniteField& F, const std::vector<std::uint64_t>& coeffs);

// Image of a in the extension E, where E contains F: the generator of F maps to
// the smallest root of F's modulus in E. Requires deg F | deg E and equal p.
class FieldEmbedding {
 public:
  FieldEmbedding(const FiniteField& from, const FiniteField& to);
  FFElem operator()(const FFElem& a) const;
  const FFElem& generator_image() const { return image_; }

 private:
  const FiniteField* from_;
  const FiniteField* to_;
  std::vector<FFElem> powers_;
  FFElem image_;
};

}  // namespace badred
