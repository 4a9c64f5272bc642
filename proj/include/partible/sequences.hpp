#pragma once

#include "partible/ratfunc.hpp"

namespace partible {

// Streams D_0(z), D_1(z), ... over any exact field ring R (Rational for
// numeric z, RatFunc for symbolic z), holding only the last two terms:
//   (n+1) D_{n+1}(z) = (2n+1)(2z+1) D_n(z) - n D_{n-1}(z).
template <class R>
class DelannoyStream {
 public:
  explicit DelannoyStream(const R& z)
      : weight_(R(2) * z + R(1)), prev_(0), cur_(1) {}

  unsigned long index() const { return n_; }
  const R& value() const { return cur_; }

  void advance() {
    R next = (R(static_cast<long>(2 * n_ + 1)) * weight_ * cur_ -
              R(static_cast<long>(n_)) * prev_) /
             R(static_cast<long>(n_ + 1));
    prev_ = cur_;
    cur_ = next;
    ++n_;
  }

 private:
  R weight_, prev_, cur_;
  unsigned long n_ = 0;
};

// Integer stream for the generalized central trinomial coefficients
// T_n(b, c), using exact division:
//   (n+1) T_{n+1} = (2n+1) b T_n - n (b^2 - 4c) T_{n-1}.
// D_k(z) for integer z is the case b = 2z+1, c = z^2+z (discriminant 1).
class TrinomialStream {
 public:
  TrinomialStream(const BigInt& b, const BigInt& c);

  unsigned long index() const { return n_; }
  const BigInt& value() const { return cur_; }
  void advance();

 private:
  BigInt b_, disc_, prev_, cur_;
  unsigned long n_ = 0;
};

TrinomialStream delannoy_int_stream(const BigInt& z);

// Recurrence path (default).
Rational delannoy_poly_at(unsigned long n, const Rational& z);
// Independent binomial-sum path: sum_k C(n,k) C(n+k,k) z^k.
Rational delannoy_poly_direct(unsigned long n, const Rational& z);
// D_n(z) with z symbolic, via the recurrence over RatFunc.
RatFunc delannoy_poly_symbolic(unsigned long n);
// D_n(z) as an explicit polynomial, straight from the binomial sum.
ZPoly delannoy_poly_coeffs(unsigned long n);

BigInt delannoy_number(unsigned long n);
BigInt delannoy_number_direct(unsigned long n);
// The alternative identity D_n = sum_k C(n,k)^2 2^k.
BigInt delannoy_number_pow2sum(unsigned long n);

// T_n(b,c) = sum_{k<=n/2} C(n,2k) C(2k,k) b^(n-2k) c^k, term by term.
BigInt trinomial(unsigned long n, const BigInt& b, const BigInt& c);

// Schmidt polynomial S_n^(r)(z) = sum_k C(n,k)^r C(n+k,k)^r z^k, r >= 1.
Rational schmidt_poly(unsigned r, unsigned long n, const Rational& z);

// Large Schroder polynomial S_n(z) = sum_k C(n,k) C(n+k,k) z^k / (k+1).
Rational schroder_poly_at(unsigned long n, const Rational& z);
// Same value via D_{n+1}(z) - D_{n-1}(z) = 2z(2n+1) S_n(z); needs z != 0.
Rational schroder_via_delannoy(unsigned long n, const Rational& z);

}  // namespace partible
