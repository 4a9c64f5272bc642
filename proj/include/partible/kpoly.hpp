#pragma once

#include <vector>

#include "partible/ratfunc.hpp"

namespace partible {

// Polynomial in the summation index k whose coefficients are rational
// functions of z. Numeric instances are the same type with constant
// coefficients.
using KPoly = DensePoly<RatFunc>;

// p(k + delta) for a rational shift delta.
KPoly kpoly_shift(const KPoly& p, const Rational& delta);

// p evaluated at a rational k with z left symbolic.
RatFunc kpoly_eval_k(const KPoly& p, const Rational& k0);

// Coefficients of p with z specialized to z0 (ascending in k).
std::vector<Rational> kpoly_specialize_z(const KPoly& p, const Rational& z0);

// p evaluated at numeric (k0, z0).
Rational kpoly_eval(const KPoly& p, const Rational& k0, const Rational& z0);

Rational horner(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace partible
