#pragma once

#include <vector>

#include "badred/exactmath/integer.hpp"
#include "badred/exactmath/upoly.hpp"

namespace badred {

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

QPoly to_qpoly(const ZPoly& f);

// Number of distinct real roots (Sturm sequence over Q).
int count_real_roots(const ZPoly& f);

bool is_squarefree_over_Q(const ZPoly& f);

// Irreducible monic factors of a monic squarefree f in Z[x] (Zassenhaus:
// factor mod p, Hensel lift, recombine). Sorted by degree then coefficients.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f);

bool is_irreducible_over_Q(const ZPoly& f);

// Division by a monic divisor over Z; the remainder is returned too.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b);

}  // namespace badred
