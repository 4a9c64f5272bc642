#pragma once

#include <optional>
#include <vector>

#include "partible/kpoly.hpp"

namespace partible {

// L = sum_{i=0}^{J} a_i(k) sigma^i with a_J != 0, sigma the shift k -> k+1.
class ShiftOperator {
 public:
  explicit ShiftOperator(std::vector<KPoly> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const KPoly& a(unsigned i) const { return coeffs_.at(i); }
  const std::vector<KPoly>& coeffs() const { return coeffs_; }

  // Coefficients with z evaluated at z0 (still KPoly, now constant in z).
  ShiftOperator specialize_z(const Rational& z0) const;

 private:
  std::vector<KPoly> coeffs_;
};

// The order-2 annihilator of eps^k D_k(z):
//   (k+2) sigma^2 - eps (2k+3)(2z+1) sigma + (k+1),
// with z symbolic. eps must be +1 or -1.
ShiftOperator delannoy_operator(int eps);

// L*(x)(k) = sum_i a_i(k-i) x(k-i).
KPoly adjoint_apply(const ShiftOperator& L, const KPoly& x);

// The u_i with L*(x)(k) F(k) = Delta(-sum_i u_i(k) F(k+i)):
//   u_i(k) = sum_{j=1}^{J-i} a_{i+j}(k-j) x(k-j), for i = 0..J-1.
std::vector<KPoly> telescoping_u(const ShiftOperator& L, const KPoly& x);

struct OperatorDegree {
  // max over l of deg b_l - l, or KPoly::kDegNegInf when every b_l vanishes
  int degree = KPoly::kDegNegInf;
  std::vector<KPoly> b;  // b_0..b_J
};

// deg L together with b_l(k) = sum_{j=l}^{J} C(j,l) a_{J-j}(k+j-J).
OperatorDegree operator_degree(const ShiftOperator& L);

struct Nondegeneracy {
  // indicial polynomial sum_l [k^(d+l)](b_l) s^(falling l), variable s
  KPoly indicial;
  bool identically_zero = false;       // degenerate for every s
  std::vector<unsigned long> roots;    // R_L: nonnegative integer roots
  bool nondegenerate = false;
  // z values at which the generic (symbolic-z) verdict can change: the
  // common roots of the indicial coefficients. Empty for numeric operators.
  std::vector<Rational> exceptional_z;
};

Nondegeneracy nondegeneracy(const ShiftOperator& L);

// Checks a_i(gamma+k) = (-1)^{deg L} a_{J-i}(gamma-k-J) for i = 0..J/2.
bool partibility_check(const ShiftOperator& L, const Rational& gamma);

// Solves the symmetry condition coefficient-wise for a rational gamma.
// Returns the smallest solution passing partibility_check, if any.
std::optional<Rational> find_gamma(const ShiftOperator& L);

struct PartibilityReport {
  unsigned order = 0;
  std::vector<KPoly> a;
  OperatorDegree deg;
  Nondegeneracy nondeg;
  std::optional<Rational> gamma;
  bool condition_holds = false;
};

PartibilityReport inspect_operator(const ShiftOperator& L);

// Both sides of the Delannoy boundary identity
//   sum_{k<n} L*(x)(k) F_k(z) = n (x(n-1) F_{n-1}(z) - x(n-2) F_n(z)),
// F_k(z) = eps^k D_k(z), computed independently. n >= 1.
std::pair<Rational, Rational> boundary_sum_identity(const KPoly& x,
                                                    unsigned long n,
                                                    const Rational& z,
                                                    int eps);

}  // namespace partible
