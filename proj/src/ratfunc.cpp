#include "partible/ratfunc.hpp"

namespace partible {

RatFunc::RatFunc(ZPoly num, ZPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(Rational(1));
    return;
  }
  ZPoly g = zpoly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = zpoly_divmod(num_, g).first;
    den_ = zpoly_divmod(den_, g).first;
  }
  Rational lead;
  den_ = zpoly_monic(den_, &lead);
  num_ = num_ * (Rational(1) / lead);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r(1);
  RatFunc base(*this);
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Rational RatFunc::eval(const Rational& z0) const {
  Rational d = den_.eval(z0);
  if (d == 0)
    throw pole_error("RatFunc: pole at z = " + z0.get_str());
  return num_.eval(z0) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  std::string n = num_.str(var);
  std::string d = den_.str(var);
  if (n.find_first_of("+-*/", 1) != std::string::npos) n = "(" + n + ")";
  if (d.find_first_of("+-*/", 1) != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string coeff_str(const RatFunc& c) { return c.str(); }

}  // namespace partible
