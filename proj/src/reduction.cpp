#include "partible/reduction.hpp"

#include <mutex>

namespace partible {

void PowerCombo::add_term(unsigned e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PowerCombo& PowerCombo::operator+=(const PowerCombo& o) {
  if (offset != o.offset)
    throw std::invalid_argument("PowerCombo: mismatched basis offsets");
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

PowerCombo PowerCombo::scaled(const RatFunc& f) const {
  PowerCombo r;
  r.offset = offset;
  if (f.is_zero()) return r;
  for (const auto& [e, c] : terms) r.terms.emplace(e, c * f);
  return r;
}

PowerCombo PowerCombo::shifted_k(long delta) const {
  PowerCombo r;
  r.offset = offset + 2 * static_cast<int>(delta);
  r.terms = terms;
  return r;
}

PowerCombo PowerCombo::derivative() const {
  PowerCombo r;
  r.offset = offset;
  for (const auto& [e, c] : terms) {
    if (e == 0) continue;
    r.add_term(e - 1, c * RatFunc(Rational(2 * static_cast<long>(e))));
  }
  return r;
}

RatFunc PowerCombo::eval_k(const Rational& k0) const {
  Rational base = 2 * k0 + offset;
  RatFunc sum(0);
  for (const auto& [e, c] : terms)
    sum += c * RatFunc(rational_pow(base, e));
  return sum;
}

KPoly PowerCombo::to_kpoly() const {
  KPoly base = KPoly::affine(RatFunc(2), RatFunc(static_cast<long>(offset)));
  KPoly out;
  for (const auto& [e, c] : terms) out += base.pow(e) * c;
  return out;
}

bool PowerCombo::single_parity() const {
  int parity = -1;
  for (const auto& [e, c] : terms) {
    (void)c;
    if (parity < 0)
      parity = static_cast<int>(e % 2);
    else if (static_cast<int>(e % 2) != parity)
      return false;
  }
  return true;
}

BigInt e_coeff(unsigned s, unsigned j) {
  if (j < 1 || j > (s + 1) / 2)
    throw std::domain_error("e_coeff: j out of range");
  static std::map<std::pair<unsigned, unsigned>, BigInt> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({s, j});
  if (it != cache.end()) return it->second;
  BigInt pw1, pw2;
  mpz_ui_pow_ui(pw1.get_mpz_t(), 2, 2 * j - 1);
  mpz_ui_pow_ui(pw2.get_mpz_t(), 2, 2 * j - 2);
  BigInt val = binomial(s, 2 * j) * pw1 + binomial(s, 2 * j - 1) * pw2;
  cache.emplace(std::make_pair(s, j), val);
  return val;
}

PowerCombo adjoint_closed_form(unsigned s, int eps) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("adjoint_closed_form: eps must be +1 or -1");
  PowerCombo combo;
  combo.offset = 1;
  // -2 eps z - eps + 1
  RatFunc lead = RatFunc::z() * RatFunc(-2 * eps) + RatFunc(1 - eps);
  combo.add_term(s + 1, lead);
  for (unsigned j = 1; j <= (s + 1) / 2; ++j)
    combo.add_term(s + 1 - 2 * j, RatFunc(Rational(2 * e_coeff(s, j))));
  return combo;
}

CPair c_constants(unsigned vmax) {
  CPair out;
  out.c.assign(vmax + 1, RatFunc(0));
  out.ct.assign(vmax + 1, RatFunc(0));
  out.c[0] = RatFunc(1);
  out.ct[0] = RatFunc(1);
  RatFunc inv_z = RatFunc(1) / RatFunc::z();
  RatFunc neg_inv_zp1 = RatFunc(-1) / (RatFunc::z() + RatFunc(1));
  for (unsigned v = 1; v <= vmax; ++v) {
    RatFunc acc(0), acct(0);
    for (unsigned j = 1; j <= v; ++j) {
      RatFunc e(Rational(e_coeff(2 * v - 1, j)));
      acc += e * out.c[v - j];
      acct += e * out.ct[v - j];
    }
    out.c[v] = inv_z * acc;
    out.ct[v] = neg_inv_zp1 * acct;
  }
  return out;
}

YPair y_polys(unsigned vmax) {
  YPair out;
  out.y.resize(vmax + 1);
  out.yt.resize(vmax + 1);
  out.y[0].offset = 3;
  out.y[0].add_term(0, RatFunc(make_rational(-1, 2)));
  out.yt[0].offset = 3;
  out.yt[0].add_term(0, RatFunc(make_rational(1, 4)));
  for (unsigned v = 1; v <= vmax; ++v) {
    out.y[v].offset = 3;
    out.y[v].add_term(2 * v, RatFunc(make_rational(-1, 2)));
    out.yt[v].offset = 3;
    out.yt[v].add_term(2 * v, RatFunc(make_rational(1, 4)));
    for (unsigned j = 1; j <= v; ++j) {
      Rational e(e_coeff(2 * v, j));
      out.y[v] += out.y[v - j].scaled(RatFunc(e));
      out.yt[v] += out.yt[v - j].scaled(RatFunc(-e / 2));
    }
  }
  return out;
}

namespace {

BigInt require_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1)
    throw std::logic_error(std::string(what) + ": expected an integer, got " +
                           q.get_str());
  return q.get_num();
}

Rational constant_of(const RatFunc& f, const char* what) {
  if (!f.is_constant())
    throw std::logic_error(std::string(what) + ": expected a constant");
  return f.constant_value();
}

}  // namespace

RhoPair rho_constants(unsigned vmax) {
  YPair yp = y_polys(vmax);
  RhoPair out;
  for (unsigned v = 0; v <= vmax; ++v) {
    // Formula path.
    Rational acc = 0;
    for (unsigned j = 1; j <= v; ++j)
      acc += Rational(e_coeff(2 * v, j)) *
             constant_of(yp.y[v - j].eval_k(-1), "y(-1)");
    BigInt rho_v = require_integer(-2 * acc + 1, "rho");
    Rational acct = 0;
    for (unsigned j = 1; j <= v; ++j)
      acct += Rational(e_coeff(2 * v, j)) *
              constant_of(yp.yt[v - j].derivative().eval_k(-1), "yt'(-1)");
    BigInt rhot_v = require_integer(2 * static_cast<long>(v) - acct, "rhot");

    // Expansion path: coefficients of y_v(k-1) in powers of k.
    KPoly yk = yp.y[v].shifted_k(-1).to_kpoly();
    for (unsigned j = 1; 2 * j <= 2 * v; ++j)
      require_integer(constant_of(yk.coeff(j), "s_j"), "s_j");
    BigInt s0_v =
        require_integer(constant_of(yk.coeff(0), "s_0") * 2, "2 s_0");
    if (mpz_even_p(s0_v.get_mpz_t()))
      throw std::logic_error("rho_constants: s_0 is not odd");

    KPoly ytk = yp.yt[v].shifted_k(-1).to_kpoly();
    for (unsigned j = 1; 2 * j <= 2 * v; ++j)
      require_integer(constant_of(ytk.coeff(j), "st_j"), "st_j");
    require_integer(constant_of(ytk.coeff(0), "st_0") * 4, "4 st_0");
    BigInt st1_v = require_integer(constant_of(ytk.coeff(1), "st_1"), "st_1");

    if (rho_v != -s0_v)
      throw std::logic_error("rho_constants: paths disagree for rho");
    if (rhot_v != 2 * st1_v)
      throw std::logic_error("rho_constants: paths disagree for rhot");

    out.rho.push_back(rho_v);
    out.rhot.push_back(rhot_v);
    out.s0.push_back(s0_v);
    out.st1.push_back(st1_v);
  }
  return out;
}

ConstantTable ConstantTable::build(unsigned vmax) {
  ConstantTable t;
  t.vmax = vmax;
  CPair cp = c_constants(vmax);
  t.c = std::move(cp.c);
  t.ct = std::move(cp.ct);
  RhoPair rp = rho_constants(vmax);
  t.rho = std::move(rp.rho);
  t.rhot = std::move(rp.rhot);
  t.s0 = std::move(rp.s0);
  t.st1 = std::move(rp.st1);
  RatFunc z = RatFunc::z();
  RatFunc zp1 = z + RatFunc(1);
  for (unsigned v = 0; v <= vmax; ++v) {
    RatFunc pc = t.c[v] * z.pow(v);
    RatFunc pct = t.ct[v] * zp1.pow(v);
    if (!pc.is_polynomial() || !pct.is_polynomial())
      throw std::logic_error("ConstantTable: cleared constant not polynomial");
    t.c_cleared.push_back(pc.num());
    t.ct_cleared.push_back(pct.num());
  }
  return t;
}

bool ReductionCertificate::verify(const ShiftOperator& L) const {
  KPoly beta =
      KPoly::affine(RatFunc(2), RatFunc(Rational(-2) * gamma));  // 2(k-gamma)
  KPoly rhs = adjoint_apply(L, witness);
  for (const auto& [i, lambda] : remainder) rhs += beta.pow(i) * lambda;
  return rhs == beta.pow(power);
}

ReductionCertificate general_reduce(const ShiftOperator& L,
                                    const Rational& gamma, unsigned m) {
  Nondegeneracy nd = nondegeneracy(L);
  if (nd.identically_zero || !nd.nondegenerate)
    throw std::domain_error("general_reduce: operator is degenerated");
  if (!partibility_check(L, gamma))
    throw std::domain_error("general_reduce: symmetry condition fails");
  int d = operator_degree(L).degree;
  if (d < 0)
    throw std::domain_error("general_reduce: requires deg L >= 0");

  // Work in the basis t = 2(k - gamma): to_basis(p)(t) = p((t + 2 gamma)/2).
  KPoly to_basis_arg =
      KPoly::affine(RatFunc(make_rational(1, 2)), RatFunc(gamma));
  auto to_basis = [&](const KPoly& p) { return p.substitute(to_basis_arg); };

  ReductionCertificate cert;
  cert.gamma = gamma;
  cert.power = m;
  KPoly rem = KPoly::monomial(m, RatFunc(1));  // in the t basis
  while (!rem.is_zero() && rem.degree() >= d) {
    unsigned t_deg = static_cast<unsigned>(rem.degree());
    unsigned s = t_deg - static_cast<unsigned>(d);
    // witness basis element (2(k-gamma)+2)^s
    KPoly w = KPoly::affine(RatFunc(2), RatFunc(Rational(-2) * gamma +
                                                Rational(2)))
                  .pow(s);
    KPoly g = to_basis(adjoint_apply(L, w));
    if (g.degree() != static_cast<int>(t_deg))
      throw std::domain_error(
          "general_reduce: reducer degree mismatch (degenerated case)");
    RatFunc f = rem.coeff(t_deg) / g.leading();
    rem -= g * f;
    cert.witness += w * f;
  }
  for (unsigned i = 0; i < static_cast<unsigned>(std::max(d, 0)); ++i) {
    RatFunc lambda = rem.coeff(i);
    if (lambda.is_zero()) continue;
    if (i % 2 != m % 2)
      throw std::logic_error("general_reduce: remainder parity violated");
    cert.remainder.emplace(i, lambda);
  }
  return cert;
}

}  // namespace partible
