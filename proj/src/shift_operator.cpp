#include "partible/shift_operator.hpp"

#include <algorithm>

#include "partible/sequences.hpp"

namespace partible {

ShiftOperator::ShiftOperator(std::vector<KPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw std::invalid_argument("ShiftOperator: order must be >= 1");
  if (coeffs_.back().is_zero())
    throw std::invalid_argument("ShiftOperator: leading coefficient is zero");
}

ShiftOperator ShiftOperator::specialize_z(const Rational& z0) const {
  std::vector<KPoly> out;
  out.reserve(coeffs_.size());
  for (const KPoly& a : coeffs_) {
    std::vector<RatFunc> c;
    for (const RatFunc& f : a.coeffs()) c.emplace_back(f.eval(z0));
    out.emplace_back(std::move(c));
  }
  return ShiftOperator(std::move(out));
}

ShiftOperator delannoy_operator(int eps) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("delannoy_operator: eps must be +1 or -1");
  RatFunc weight = RatFunc(2) * RatFunc::z() + RatFunc(1);  // 2z+1
  KPoly a0 = KPoly::affine(RatFunc(1), RatFunc(1));         // k+1
  KPoly a1 = KPoly::affine(RatFunc(2), RatFunc(3)) * (weight * RatFunc(-eps));
  KPoly a2 = KPoly::affine(RatFunc(1), RatFunc(2));         // k+2
  return ShiftOperator({a0, a1, a2});
}

KPoly adjoint_apply(const ShiftOperator& L, const KPoly& x) {
  KPoly out;
  for (unsigned i = 0; i <= L.order(); ++i) {
    Rational shift(-static_cast<long>(i));
    out += kpoly_shift(L.a(i), shift) * kpoly_shift(x, shift);
  }
  return out;
}

std::vector<KPoly> telescoping_u(const ShiftOperator& L, const KPoly& x) {
  const unsigned J = L.order();
  std::vector<KPoly> u(J);
  for (unsigned i = 0; i < J; ++i) {
    for (unsigned j = 1; j <= J - i; ++j) {
      Rational shift(-static_cast<long>(j));
      u[i] += kpoly_shift(L.a(i + j), shift) * kpoly_shift(x, shift);
    }
  }
  return u;
}

OperatorDegree operator_degree(const ShiftOperator& L) {
  const unsigned J = L.order();
  OperatorDegree result;
  result.b.resize(J + 1);
  for (unsigned l = 0; l <= J; ++l) {
    for (unsigned j = l; j <= J; ++j) {
      Rational shift(static_cast<long>(j) - static_cast<long>(J));
      result.b[l] +=
          kpoly_shift(L.a(J - j), shift) * RatFunc(Rational(binomial(j, l)));
    }
    if (!result.b[l].is_zero()) {
      int cand = result.b[l].degree() - static_cast<int>(l);
      if (result.degree == KPoly::kDegNegInf || cand > result.degree)
        result.degree = cand;
    }
  }
  return result;
}

Nondegeneracy nondegeneracy(const ShiftOperator& L) {
  Nondegeneracy out;
  OperatorDegree od = operator_degree(L);
  if (od.degree == KPoly::kDegNegInf) {
    out.identically_zero = true;
    return out;
  }
  const unsigned J = L.order();
  // indicial(s) = sum_l [k^(d+l)](b_l) * s(s-1)...(s-l+1)
  KPoly falling(RatFunc(1));
  KPoly s_var = KPoly::variable();
  for (unsigned l = 0; l <= J; ++l) {
    if (l > 0)
      falling = falling * (s_var - KPoly(RatFunc(static_cast<long>(l) - 1)));
    long idx = od.degree + static_cast<long>(l);
    if (idx < 0) continue;
    RatFunc c = od.b[l].coeff(static_cast<unsigned>(idx));
    if (!c.is_zero()) out.indicial += falling * c;
  }
  if (out.indicial.is_zero()) {
    out.identically_zero = true;
    return out;
  }

  // Exceptional z: common roots of all indicial coefficients.
  ZPoly common;
  for (const RatFunc& c : out.indicial.coeffs())
    if (!c.is_zero()) common = zpoly_gcd(common, c.num());
  if (common.degree() >= 1) out.exceptional_z = zpoly_rational_roots(common);

  // Nonnegative integer roots. Clear rational-function denominators; any
  // root of the full indicial polynomial is a root of each z-slice, so the
  // rational roots of one nonzero slice are the only candidates. Confirm
  // each against the full polynomial.
  ZPoly denom_prod(Rational(1));
  for (const RatFunc& c : out.indicial.coeffs()) denom_prod *= c.den();
  std::vector<ZPoly> cleared;
  for (const RatFunc& c : out.indicial.coeffs())
    cleared.push_back(c.num() * zpoly_divmod(denom_prod, c.den()).first);
  int max_zdeg = 0;
  for (const ZPoly& p : cleared)
    max_zdeg = std::max(max_zdeg, std::max(p.degree(), 0));
  for (int t = 0; t <= max_zdeg; ++t) {
    std::vector<Rational> cs;
    for (const ZPoly& p : cleared)
      cs.push_back(p.coeff(static_cast<unsigned>(t)));
    ZPoly witness(std::move(cs));  // polynomial in s
    if (witness.is_zero()) continue;
    for (const Rational& cand : zpoly_rational_roots(witness)) {
      if (cand < 0 || cand.get_den() != 1) continue;
      if (out.indicial.eval(RatFunc(cand)).is_zero())
        out.roots.push_back(cand.get_num().get_ui());
    }
    break;
  }
  out.nondegenerate = out.roots.empty();
  return out;
}

namespace {

int degree_sign(const ShiftOperator& L) {
  int d = operator_degree(L).degree;
  if (d == KPoly::kDegNegInf)
    throw std::domain_error("partibility: operator degree undefined");
  return (d % 2 == 0) ? 1 : -1;
}

}  // namespace

bool partibility_check(const ShiftOperator& L, const Rational& gamma) {
  const unsigned J = L.order();
  const int sign = degree_sign(L);
  for (unsigned i = 0; i <= J / 2; ++i) {
    KPoly lhs = kpoly_shift(L.a(i), gamma);
    KPoly reflected = L.a(J - i).substitute(KPoly::affine(
        RatFunc(-1), RatFunc(gamma - Rational(static_cast<long>(J)))));
    if (lhs != reflected * RatFunc(sign)) return false;
  }
  return true;
}

std::optional<Rational> find_gamma(const ShiftOperator& L) {
  const unsigned J = L.order();
  int d = operator_degree(L).degree;
  if (d == KPoly::kDegNegInf) return std::nullopt;
  const int sign = (d % 2 == 0) ? 1 : -1;

  // Coefficient of k^t gamma^u in a(k + gamma).
  auto direct_coeff = [](const KPoly& a, unsigned t, unsigned u) -> RatFunc {
    unsigned m = t + u;
    if (static_cast<int>(m) > a.degree()) return RatFunc(0);
    return a.coeff(m) * RatFunc(Rational(binomial(m, t)));
  };
  // Coefficient of k^t gamma^u in a(-k + gamma - J).
  auto reflected_coeff = [J](const KPoly& a, unsigned t, unsigned u) -> RatFunc {
    RatFunc sum(0);
    for (unsigned m = t + u; static_cast<int>(m) <= a.degree(); ++m) {
      BigInt base = -static_cast<long>(J);
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), m - t - u);
      Rational f = Rational(binomial(m, t)) * Rational(binomial(m - t, u)) *
                   Rational(pw);
      if (t % 2 == 1) f = -f;
      sum += a.coeff(m) * RatFunc(f);
    }
    return sum;
  };

  // Collect, over all i and powers of k and z, univariate polynomial
  // equations in gamma with rational coefficients.
  std::vector<ZPoly> equations;
  for (unsigned i = 0; i <= J / 2; ++i) {
    const KPoly& ai = L.a(i);
    const KPoly& aj = L.a(J - i);
    int maxdeg = std::max(ai.degree(), aj.degree());
    for (int t = 0; t <= maxdeg; ++t) {
      // gamma-polynomial with RatFunc coefficients
      std::vector<RatFunc> gpoly;
      for (int u = 0; t + u <= maxdeg; ++u) {
        RatFunc c = direct_coeff(ai, t, u) -
                    reflected_coeff(aj, t, u) * RatFunc(sign);
        gpoly.push_back(c);
      }
      ZPoly denom_prod(Rational(1));
      for (const RatFunc& c : gpoly) denom_prod *= c.den();
      std::vector<ZPoly> cleared;
      for (const RatFunc& c : gpoly)
        cleared.push_back(c.num() * zpoly_divmod(denom_prod, c.den()).first);
      int max_zdeg = 0;
      for (const ZPoly& p : cleared)
        max_zdeg = std::max(max_zdeg, std::max(p.degree(), 0));
      for (int zt = 0; zt <= max_zdeg; ++zt) {
        std::vector<Rational> cs;
        for (const ZPoly& p : cleared)
          cs.push_back(p.coeff(static_cast<unsigned>(zt)));
        ZPoly eq(std::move(cs));
        if (!eq.is_zero()) equations.push_back(eq);
      }
    }
  }

  if (equations.empty()) {
    // Condition holds identically; any center works.
    Rational zero(0);
    if (partibility_check(L, zero)) return zero;
    return std::nullopt;
  }
  ZPoly g = equations[0];
  for (size_t i = 1; i < equations.size() && g.degree() != 0; ++i)
    g = zpoly_gcd(g, equations[i]);
  if (g.degree() <= 0) return std::nullopt;
  for (const Rational& root : zpoly_rational_roots(g))
    if (partibility_check(L, root)) return root;
  return std::nullopt;
}

PartibilityReport inspect_operator(const ShiftOperator& L) {
  PartibilityReport r;
  r.order = L.order();
  r.a = L.coeffs();
  r.deg = operator_degree(L);
  r.nondeg = nondegeneracy(L);
  r.gamma = find_gamma(L);
  r.condition_holds = r.gamma.has_value();
  return r;
}

std::pair<Rational, Rational> boundary_sum_identity(const KPoly& x,
                                                    unsigned long n,
                                                    const Rational& z,
                                                    int eps) {
  if (n < 1)
    throw std::invalid_argument("boundary_sum_identity: n must be >= 1");
  ShiftOperator L = delannoy_operator(eps);
  std::vector<Rational> lx = kpoly_specialize_z(adjoint_apply(L, x), z);
  std::vector<Rational> xc = kpoly_specialize_z(x, z);

  DelannoyStream<Rational> s(z);
  Rational lhs = 0;
  Rational f_nm1 = 0, f_n = 0;
  int sign = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational f = s.value() * sign;
    if (k < n) lhs += horner(lx, Rational(static_cast<long>(k))) * f;
    if (k == n - 1) f_nm1 = f;
    if (k == n) f_n = f;
    s.advance();
    if (eps == -1) sign = -sign;
  }
  Rational rhs = Rational(static_cast<long>(n)) *
                 (horner(xc, Rational(static_cast<long>(n) - 1)) * f_nm1 -
                  horner(xc, Rational(static_cast<long>(n) - 2)) * f_n);
  return {lhs, rhs};
}

}  // namespace partible
