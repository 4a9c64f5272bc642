#pragma once

#include <utility>
#include <vector>

#include "partible/densepoly.hpp"

namespace partible {

// Polynomial in the parameter z with exact rational coefficients.
using ZPoly = DensePoly<Rational>;

// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b);

// Monic greatest common divisor over Q; gcd(0, 0) = 0.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// p scaled to leading coefficient 1; if lead_out is given it receives the
// original leading coefficient. The zero polynomial stays zero.
ZPoly zpoly_monic(const ZPoly& p, Rational* lead_out = nullptr);

bool zpoly_integer_coeffs(const ZPoly& p);

// p scaled by the lcm of coefficient denominators (integer coefficients,
// content untouched otherwise).
ZPoly zpoly_clear_denominators(const ZPoly& p);

// Horner evaluation mod m for a polynomial with integer coefficients.
BigInt zpoly_eval_mod(const ZPoly& p, const BigInt& x, const BigInt& m);

// All rational roots, ascending; uses the rational root theorem after
// clearing denominators. Intended for the small polynomials arising in
// symmetry-center and degeneracy analysis.
std::vector<Rational> zpoly_rational_roots(const ZPoly& p);

}  // namespace partible
