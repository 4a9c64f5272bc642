#include "partible/zpoly.hpp"

#include <algorithm>

namespace partible {

std::string coeff_str(const Rational& c) { return c.get_str(); }

std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("zpoly_divmod: division by zero");
  ZPoly q;
  ZPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    unsigned shift = static_cast<unsigned>(r.degree() - db);
    Rational f = r.leading() / b.leading();
    ZPoly t = ZPoly::monomial(shift, f);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  while (!b.is_zero()) {
    ZPoly r = zpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zpoly_monic(a);
}

ZPoly zpoly_monic(const ZPoly& p, Rational* lead_out) {
  if (p.is_zero()) {
    if (lead_out) *lead_out = 0;
    return p;
  }
  Rational lead = p.leading();
  if (lead_out) *lead_out = lead;
  return p * (Rational(1) / lead);
}

bool zpoly_integer_coeffs(const ZPoly& p) {
  for (const Rational& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

ZPoly zpoly_clear_denominators(const ZPoly& p) {
  BigInt l = 1;
  for (const Rational& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return p * Rational(l);
}

BigInt zpoly_eval_mod(const ZPoly& p, const BigInt& x, const BigInt& m) {
  if (!zpoly_integer_coeffs(p))
    throw std::domain_error("zpoly_eval_mod: non-integer coefficients");
  BigInt r = 0;
  BigInt xr = mod_reduce(x, m);
  for (size_t i = p.coeffs().size(); i-- > 0;)
    r = mod_reduce(r * xr + p.coeffs()[i].get_num(), m);
  return r;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> divs;
  for (BigInt i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      divs.push_back(i);
      if (i * i != n) divs.push_back(n / i);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> zpoly_rational_roots(const ZPoly& p) {
  if (p.is_zero())
    throw std::domain_error("zpoly_rational_roots: zero polynomial");
  std::vector<Rational> roots;
  ZPoly q = zpoly_clear_denominators(p);
  // pull out the power of the variable: root 0
  unsigned low = 0;
  while (q.coeff(low) == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (q.degree() == static_cast<int>(low)) {
    return roots;  // monomial
  }
  BigInt trailing = q.coeff(low).get_num();
  BigInt lead = q.leading().get_num();
  for (const BigInt& num : positive_divisors(trailing)) {
    for (const BigInt& den : positive_divisors(lead)) {
      for (int sign : {1, -1}) {
        Rational cand = make_rational(sign * num, den);
        if (q.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace partible
