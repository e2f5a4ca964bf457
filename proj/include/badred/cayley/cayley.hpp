#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "badred/ffalg/ffalg.hpp"
#include "badred/numfield/nf_poly.hpp"

namespace badred {

// phi_0..phi_n, binary forms of common degree e in (s, t) with integral
// coefficients; no common factor.
struct CurveParam {
  int n = 0;
  int e = 0;
  std::vector<NFPoly> phi;
  std::string to_string() const;
};

// Clears denominators by one common integer; throws InconsistentDegrees,
// CommonFactor, InvalidInput.
CurveParam make_curve_param(std::vector<NFPoly> forms);
// "s^3, s^2*t, s*t^2, t^3"
CurveParam parse_curve_param(const std::string& text, const NumberField& K);

// u_{kl}, 0 <= k < l <= n, lexicographic: u01, u02, ...
VarNames cayley_vars(int n);

struct CayleyForm {
  NFPoly form;
  int n = 0;  // ambient P^n of the curve
  int e = 0;
};

// det of the Bezout matrix of A = sum L1_i phi_i, B = sum L2_j phi_j written in
// u_{kl} = L1_k L2_l - L1_l L2_k. For e <= 3 also checks det = +-Sylvester
// resultant by full expansion in the L's.
CayleyForm cayley_form(const CurveParam& c);
// Same construction over a finite field; forms in (s, t).
FFMPoly cayley_form_ff(const std::vector<FFMPoly>& phi, const FiniteField& F);

// Throws DegenerateReduction when phi mod P vanishes or acquires a common factor.
bool cayley_specialization_check(const CurveParam& c, const PrimeIdeal& P);
bool good_parametrization_reduction(const CurveParam& c, const PrimeIdeal& P);

// Pencils through sampled curve points must annihilate the form; random
// pencils must give +-Res(A, B) with one fixed sign.
bool incidence_probe(const CayleyForm& form, const CurveParam& c, int trials, std::uint64_t seed);

// Number of parameters over a random curve point, modulo a large prime of
// degree 1 (min over a few samples).
int mapping_degree_estimate(const CurveParam& c, std::uint64_t seed = 0);

// Throws NonBirationalSuspected.
void check_birational(const CayleyForm& form, const CurveParam& c, std::uint64_t seed = 0);

}  // namespace badred
