#pragma once

#include <cstdint>

#include "partible/kpoly.hpp"

namespace partible::testutil {

// deterministic xorshift generator for reproducible property tests
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  long pick(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

// random polynomial in k with small rational constant coefficients
inline KPoly random_kpoly(Rng& rng, int max_degree, bool integer_coeffs) {
  int deg = static_cast<int>(rng.pick(0, max_degree));
  KPoly p;
  for (int i = 0; i <= deg; ++i) {
    long num = rng.pick(-9, 9);
    long den = integer_coeffs ? 1 : rng.pick(1, 4);
    if (num == 0) continue;
    p += KPoly::monomial(i, RatFunc(make_rational(num, den)));
  }
  if (p.is_zero()) p = KPoly(RatFunc(1));
  return p;
}

}  // namespace partible::testutil
