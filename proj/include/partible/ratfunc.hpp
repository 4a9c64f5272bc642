#pragma once

#include <string>

#include "partible/zpoly.hpp"

namespace partible {

// Rational function in z over Q, kept normalized: gcd(num, den) = 1 and the
// denominator monic, so equality is a structural comparison. The canonical
// zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFunc(const ZPoly& num) : num_(num), den_(Rational(1)) {}
  RatFunc(ZPoly num, ZPoly den);

  static RatFunc z() { return RatFunc(ZPoly::variable()); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc pow(unsigned e) const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Throws pole_error when z0 is a root of the denominator.
  Rational eval(const Rational& z0) const;

  std::string str(const std::string& var = "z") const;

 private:
  ZPoly num_, den_;

  void normalize();
};

std::string coeff_str(const RatFunc& c);

}  // namespace partible
