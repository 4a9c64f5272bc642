#include "partible/sequences.hpp"

namespace partible {

TrinomialStream::TrinomialStream(const BigInt& b, const BigInt& c)
    : b_(b), disc_(b * b - 4 * c), prev_(0), cur_(1) {}

void TrinomialStream::advance() {
  BigInt next = (2 * n_ + 1) * b_ * cur_ - BigInt(n_) * disc_ * prev_;
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), next.get_mpz_t(), n_ + 1);
  prev_ = cur_;
  cur_ = q;
  ++n_;
}

TrinomialStream delannoy_int_stream(const BigInt& z) {
  return TrinomialStream(2 * z + 1, z * z + z);
}

Rational delannoy_poly_at(unsigned long n, const Rational& z) {
  DelannoyStream<Rational> s(z);
  while (s.index() < n) s.advance();
  return s.value();
}

Rational delannoy_poly_direct(unsigned long n, const Rational& z) {
  // term_{k+1}/term_k = (n-k)(n+k+1) z / (k+1)^2
  Rational term = 1, sum = 1;
  for (unsigned long k = 0; k < n; ++k) {
    term *= make_rational(BigInt(n - k) * BigInt(n + k + 1),
                          BigInt(k + 1) * BigInt(k + 1));
    term *= z;
    sum += term;
  }
  return sum;
}

RatFunc delannoy_poly_symbolic(unsigned long n) {
  DelannoyStream<RatFunc> s(RatFunc::z());
  while (s.index() < n) s.advance();
  return s.value();
}

ZPoly delannoy_poly_coeffs(unsigned long n) {
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (unsigned long k = 0; k <= n; ++k)
    c.push_back(Rational(binomial(n, k) * binomial(n + k, k)));
  return ZPoly(std::move(c));
}

BigInt delannoy_number(unsigned long n) {
  TrinomialStream s = delannoy_int_stream(1);
  while (s.index() < n) s.advance();
  return s.value();
}

BigInt delannoy_number_direct(unsigned long n) {
  BigInt sum = 0;
  for (unsigned long k = 0; k <= n; ++k)
    sum += binomial(n, k) * binomial(n + k, k);
  return sum;
}

BigInt delannoy_number_pow2sum(unsigned long n) {
  BigInt sum = 0, pw = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt b = binomial(n, k);
    sum += b * b * pw;
    pw <<= 1;
  }
  return sum;
}

BigInt trinomial(unsigned long n, const BigInt& b, const BigInt& c) {
  BigInt sum = 0;
  for (unsigned long k = 0; 2 * k <= n; ++k) {
    BigInt bp, cp;
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), n - 2 * k);
    mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), k);
    sum += binomial(n, 2 * k) * binomial(2 * k, k) * bp * cp;
  }
  return sum;
}

Rational schmidt_poly(unsigned r, unsigned long n, const Rational& z) {
  if (r < 1) throw std::domain_error("schmidt_poly: r must be >= 1");
  Rational term = 1, sum = 1;
  for (unsigned long k = 0; k < n; ++k) {
    Rational ratio = make_rational(BigInt(n - k) * BigInt(n + k + 1),
                                   BigInt(k + 1) * BigInt(k + 1));
    term *= rational_pow(ratio, r);
    term *= z;
    sum += term;
  }
  return sum;
}

Rational schroder_poly_at(unsigned long n, const Rational& z) {
  // C(n,k) C(n+k,k) z^k / (k+1); ratio carries the 1/(k+1) weight
  Rational term = 1, sum = 1;
  for (unsigned long k = 0; k < n; ++k) {
    term *= make_rational(BigInt(n - k) * BigInt(n + k + 1),
                          BigInt(k + 1) * BigInt(k + 2));
    term *= z;
    sum += term;
  }
  return sum;
}

Rational schroder_via_delannoy(unsigned long n, const Rational& z) {
  if (z == 0) throw std::domain_error("schroder_via_delannoy: needs z != 0");
  if (n == 0) return 1;
  DelannoyStream<Rational> s(z);
  Rational dn_minus_1 = 1;
  while (s.index() < n + 1) {
    if (s.index() == n - 1) dn_minus_1 = s.value();
    s.advance();
  }
  return (s.value() - dn_minus_1) /
         (Rational(2) * z * Rational(static_cast<long>(2 * n + 1)));
}

}  // namespace partible
