#pragma once

#include <string>

#include "badred/mpoly/mpoly.hpp"
#include "badred/numfield/number_field.hpp"

namespace badred {

using NFPoly = MPoly<NFElem>;

// f over Z whose last variable is the generator of K; the result drops that
// variable and reduces coefficients modulo the minimal polynomial.
NFPoly absorb_generator(const MPoly<Integer>& f, const NumberField& K);
NFPoly to_nf(const MPoly<Integer>& f, const NumberField& K);
NFPoly to_nf(const MPoly<Rational>& f, const NumberField& K);

// Parse a polynomial over K in the given variables; the generator name of K
// may appear in coefficients.
NFPoly parse_nf_poly(const std::string& text, const std::vector<std::string>& vars, const NumberField& K);

}  // namespace badred
