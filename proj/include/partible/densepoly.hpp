#pragma once

#include <limits>
#include <string>
#include <vector>

#include "partible/exactarith.hpp"

namespace partible {

std::string coeff_str(const Rational& c);

// Dense univariate polynomial over a field F, stored by ascending degree.
// The zero polynomial has an empty coefficient vector; its degree is the
// sentinel kDegNegInf (standing in for -infinity).
template <class F>
class DensePoly {
 public:
  static constexpr int kDegNegInf = std::numeric_limits<int>::min();

  DensePoly() = default;
  DensePoly(long c) : DensePoly(F(c)) {}
  DensePoly(const F& c) {
    if (!(c == F(0))) coeffs_.push_back(c);
  }
  explicit DensePoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static DensePoly variable() { return monomial(1, F(1)); }

  static DensePoly monomial(unsigned deg, const F& c) {
    if (c == F(0)) return DensePoly();
    std::vector<F> v(deg + 1, F(0));
    v[deg] = c;
    return DensePoly(std::move(v));
  }

  // a*x + b
  static DensePoly affine(const F& a, const F& b) {
    return monomial(1, a) + DensePoly(b);
  }

  int degree() const {
    return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }

  F coeff(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : F(0);
  }
  const std::vector<F>& coeffs() const { return coeffs_; }

  const F& leading() const {
    if (coeffs_.empty())
      throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  DensePoly operator-() const {
    DensePoly r(*this);
    for (F& c : r.coeffs_) c = -c;
    return r;
  }

  DensePoly operator+(const DensePoly& o) const {
    std::vector<F> v(std::max(coeffs_.size(), o.coeffs_.size()), F(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return DensePoly(std::move(v));
  }
  DensePoly operator-(const DensePoly& o) const { return *this + (-o); }

  DensePoly operator*(const DensePoly& o) const {
    if (is_zero() || o.is_zero()) return DensePoly();
    std::vector<F> v(coeffs_.size() + o.coeffs_.size() - 1, F(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      for (size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    return DensePoly(std::move(v));
  }

  DensePoly operator*(const F& s) const {
    if (s == F(0)) return DensePoly();
    DensePoly r(*this);
    for (F& c : r.coeffs_) c = c * s;
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly pow(unsigned e) const {
    DensePoly r(F(1));
    DensePoly base(*this);
    while (e > 0) {
      if (e & 1u) r = r * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return r;
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return DensePoly();
    std::vector<F> v(coeffs_.size() - 1, F(0));
    for (size_t i = 1; i < coeffs_.size(); ++i)
      v[i - 1] = coeffs_[i] * F(static_cast<long>(i));
    return DensePoly(std::move(v));
  }

  F eval(const F& x) const {
    F r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  // Composition p(inner(x)) by Horner.
  DensePoly substitute(const DensePoly& inner) const {
    DensePoly r;
    for (size_t i = coeffs_.size(); i-- > 0;)
      r = r * inner + DensePoly(coeffs_[i]);
    return r;
  }

  bool operator==(const DensePoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "z") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == F(0)) continue;
      std::string c = coeff_str(coeffs_[i]);
      // a lone value, possibly with a leading minus, needs no parentheses
      bool atomic = c.find_first_of("+-*/^ ", 1) == std::string::npos;
      bool negative = atomic && !c.empty() && c[0] == '-';
      bool bare = i == 0 && out.empty();  // whole output is this constant
      std::string body =
          negative ? c.substr(1) : (atomic || bare ? c : "(" + c + ")");
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0) {
        out += body;
      } else {
        std::string power = (i == 1) ? var : var + "^" + std::to_string(i);
        out += (body == "1") ? power : body + "*" + power;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<F> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
  }
};

}  // namespace partible
