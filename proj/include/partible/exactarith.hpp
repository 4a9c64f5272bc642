#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace partible {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a rational function is evaluated at a root of its denominator.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// num/den in canonical form: reduced, positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

// Least nonnegative residue of a modulo m, m >= 1.
BigInt mod_reduce(const BigInt& a, const BigInt& m);

// base^exp mod m by binary exponentiation. Requires exp >= 0 and m >= 1.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Legendre symbol (a/p) for an odd prime p, computed by Euler's criterion:
// a^((p-1)/2) mod p mapped to {-1, 0, +1}. Rejects even or nonpositive p;
// a residue outside {0, 1, p-1} (possible only for composite p) is reported
// as a domain error rather than silently mapped.
int legendre(const BigInt& a, const BigInt& p);

// Deterministic Miller-Rabin with the first twelve prime witnesses;
// exact for all n below 3.3e24.
bool is_prime(const BigInt& n);

// 2-adic valuation: the largest t with 2^t | n. Rejects n = 0.
unsigned long v2(const BigInt& n);

BigInt binomial(unsigned long n, unsigned long k);

Rational rational_pow(const Rational& q, unsigned long e);

}  // namespace partible
