#pragma once

#include <map>

#include "partible/shift_operator.hpp"

namespace partible {

// Finitely supported combination sum_e coef[e] * (2k + offset)^e. The
// combos arising here keep all exponents of one parity; formal
// differentiation flips the parity.
struct PowerCombo {
  int offset = 3;                     // basis polynomial 2k + offset
  std::map<unsigned, RatFunc> terms;  // exponent -> nonzero coefficient

  void add_term(unsigned e, const RatFunc& c);
  PowerCombo& operator+=(const PowerCombo& o);
  PowerCombo scaled(const RatFunc& f) const;
  // k -> k + delta; the basis offset absorbs the shift.
  PowerCombo shifted_k(long delta) const;
  PowerCombo derivative() const;  // d/dk
  RatFunc eval_k(const Rational& k0) const;
  KPoly to_kpoly() const;
  bool single_parity() const;
};

// e_j^(s) = C(s,2j) 2^(2j-1) + C(s,2j-1) 2^(2j-2), for 1 <= j <= (s+1)/2.
BigInt e_coeff(unsigned s, unsigned j);

// Closed form of L*((2k+3)^s) for the Delannoy operator, in the (2k+1)
// basis: (-2 eps z - eps + 1)(2k+1)^(s+1) + 2 sum_j e_j^(s) (2k+1)^(s+1-2j).
PowerCombo adjoint_closed_form(unsigned s, int eps);

struct CPair {
  std::vector<RatFunc> c, ct;
};

// c_0 = ct_0 = 1; c_v = (1/z) sum_j e_j^(2v-1) c_{v-j},
// ct_v = -(1/(z+1)) sum_j e_j^(2v-1) ct_{v-j}.
CPair c_constants(unsigned vmax);

struct YPair {
  std::vector<PowerCombo> y, yt;  // basis 2k+3, even exponents
};

// y_0 = -1/2; y_v = -(2k+3)^(2v)/2 + sum_j e_j^(2v) y_{v-j}.
// yt_0 = 1/4; yt_v = (2k+3)^(2v)/4 - sum_j (e_j^(2v)/2) yt_{v-j}.
YPair y_polys(unsigned vmax);

struct RhoPair {
  std::vector<BigInt> rho, rhot;
  // Cross-check path: expansion of y_v(k-1) = sum_j s_j k^j + s_0/2 and
  // yt_v(k-1) = sum_j st_j k^j + st_0/4, with rho_v = -s_0, rhot_v = 2 st_1.
  std::vector<BigInt> s0, st1;
};

// rho_v = 1 - 2 sum_j e_j^(2v) y_{v-j}(-1);
// rhot_v = 2v - sum_j e_j^(2v) yt'_{v-j}(-1).
// Both paths are computed and must agree; integrality is verified, not
// assumed.
RhoPair rho_constants(unsigned vmax);

struct ConstantTable {
  unsigned vmax = 0;
  std::vector<RatFunc> c, ct;
  std::vector<ZPoly> c_cleared, ct_cleared;  // z^v c_v and (z+1)^v ct_v
  std::vector<BigInt> rho, rhot, s0, st1;

  static ConstantTable build(unsigned vmax);
};

// Witness that (2(k-gamma))^m = L*(x) + sum_i lambda_i (2(k-gamma))^i with
// every remainder exponent i < deg L and i = m (mod 2).
struct ReductionCertificate {
  Rational gamma;
  unsigned power = 0;  // m
  KPoly witness;       // x(k)
  std::map<unsigned, RatFunc> remainder;

  bool verify(const ShiftOperator& L) const;
};

// Greedy degree elimination against the reducers L*((2(k-gamma)+2)^s).
// Requires L nondegenerate and partible with respect to gamma.
ReductionCertificate general_reduce(const ShiftOperator& L,
                                    const Rational& gamma, unsigned m);

}  // namespace partible
