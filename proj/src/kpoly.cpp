#include "partible/kpoly.hpp"

namespace partible {

KPoly kpoly_shift(const KPoly& p, const Rational& delta) {
  return p.substitute(KPoly::affine(RatFunc(1), RatFunc(delta)));
}

RatFunc kpoly_eval_k(const KPoly& p, const Rational& k0) {
  return p.eval(RatFunc(k0));
}

std::vector<Rational> kpoly_specialize_z(const KPoly& p, const Rational& z0) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const RatFunc& c : p.coeffs()) v.push_back(c.eval(z0));
  return v;
}

Rational kpoly_eval(const KPoly& p, const Rational& k0, const Rational& z0) {
  return horner(kpoly_specialize_z(p, z0), k0);
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

}  // namespace partible
