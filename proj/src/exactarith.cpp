#include "partible/exactarith.hpp"

namespace partible {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
  if (m < 1) throw std::domain_error("mod_reduce: modulus must be >= 1");
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
  if (modulus < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
  BigInt result = mod_reduce(1, modulus);
  BigInt acc = mod_reduce(base, modulus);
  BigInt e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mod_reduce(result * acc, modulus);
    e >>= 1;
    if (e > 0) acc = mod_reduce(acc * acc, modulus);
  }
  return result;
}

int legendre(const BigInt& a, const BigInt& p) {
  if (p <= 0 || mpz_even_p(p.get_mpz_t()))
    throw std::domain_error("legendre: p must be an odd prime");
  BigInt r = mod_pow(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw std::domain_error("legendre: Euler criterion failed, p is not prime");
}

namespace {

constexpr long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// true iff a certifies n composite
bool composite_witness(const BigInt& n, long a, const BigInt& d,
                       unsigned long r) {
  BigInt x = mod_pow(BigInt(a), d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = mod_reduce(x * x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (long p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned long r = v2(d);
  d >>= r;
  for (long a : kWitnesses)
    if (composite_witness(n, a, d, r)) return false;
  return true;
}

unsigned long v2(const BigInt& n) {
  if (n == 0) throw std::domain_error("v2: undefined for 0");
  BigInt m = abs(n);
  return mpz_scan1(m.get_mpz_t(), 0);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

}  // namespace partible
