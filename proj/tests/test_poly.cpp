#include "doctest.h"
#include "partible/kpoly.hpp"

using namespace partible;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

}  // namespace

TEST_CASE("zpoly degree sentinel and arithmetic") {
  ZPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == ZPoly::kDegNegInf);
  CHECK(zp({0}).is_zero());

  ZPoly p = zp({1, 2});      // 2z + 1
  ZPoly q = zp({-1, 0, 3});  // 3z^2 - 1
  CHECK((p + q).degree() == 2);
  CHECK(p * q == zp({-1, -2, 3, 6}));
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == zp({1, 4, 4}));
  CHECK(p.eval(make_rational(1, 2)) == 2);
  CHECK(q.derivative() == zp({0, 6}));
  CHECK(zp({0, 0, 5}).degree() == 2);
}

TEST_CASE("zpoly divmod and gcd") {
  ZPoly a = zp({-1, 0, 0, 1});  // z^3 - 1
  ZPoly b = zp({-1, 1});        // z - 1
  auto [q, r] = zpoly_divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == zp({1, 1, 1}));
  CHECK(q * b + r == a);
  CHECK_THROWS_AS(zpoly_divmod(a, ZPoly()), std::domain_error);

  // gcd((z-1)(z+2), (z-1)(z-3)) = z - 1, monic
  ZPoly g = zpoly_gcd(zp({-2, 1}) * zp({2, 1}) * Rational(6),
                      zp({-2, 1}) * zp({-3, 1}));
  CHECK(g == zp({-2, 1}));
  CHECK(zpoly_gcd(ZPoly(), zp({0, 4})) == zp({0, 1}));
}

TEST_CASE("zpoly rational roots") {
  // 2z^3 + z^2 - 2z - 1 = (z-1)(z+1)(2z+1)
  ZPoly p = zp({-1, -2, 1, 2});
  auto roots = zpoly_rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == make_rational(-1, 2));
  CHECK(roots[2] == 1);
  CHECK(zpoly_rational_roots(zp({0, 2})) == std::vector<Rational>{Rational(0)});
  CHECK(zpoly_rational_roots(zp({1, 0, 1})).empty());
}

TEST_CASE("zpoly integer coefficients and modular evaluation") {
  CHECK(zpoly_integer_coeffs(zp({4, 0, 9})));
  ZPoly half(make_rational(1, 2));
  CHECK_FALSE(zpoly_integer_coeffs(half));
  CHECK_THROWS_AS(zpoly_eval_mod(half, 2, 7), std::domain_error);
  CHECK(zpoly_eval_mod(zp({9, 4}), 5, 7) == mod_reduce(29, 7));
  CHECK(zpoly_eval_mod(zp({9, 4}), -5, 7) == mod_reduce(-11, 7));
  CHECK(zpoly_clear_denominators(ZPoly(make_rational(3, 4)) +
                                 ZPoly::monomial(1, make_rational(1, 6))) ==
        zp({9, 2}));
}

TEST_CASE("ratfunc normalization is canonical") {
  RatFunc f(zp({0, 1}), zp({0, 1}));  // z/z
  CHECK(f.is_one());

  // (2z^2 + 2z)/(4z) reduces to (z+1)/2 with monic denominator 1
  RatFunc g(zp({0, 2, 2}), zp({0, 4}));
  CHECK(g == RatFunc(zp({1, 1}) * make_rational(1, 2)));
  CHECK(g.is_polynomial());

  // denominator made monic, content pushed into the numerator
  RatFunc h(zp({1}), zp({0, 2}));
  CHECK(h.den() == zp({0, 1}));
  CHECK(h.num() == ZPoly(make_rational(1, 2)));

  RatFunc z = RatFunc::z();
  CHECK((z - z).is_zero());
  CHECK((z - z) == RatFunc());
  CHECK_THROWS_AS(RatFunc(zp({1}), ZPoly()), std::domain_error);
}

TEST_CASE("ratfunc arithmetic and evaluation") {
  RatFunc z = RatFunc::z();
  RatFunc one_over_z = RatFunc(1) / z;
  RatFunc f = one_over_z + RatFunc(zp({9, 4}), zp({0, 0, 1}));
  CHECK(f.eval(1) == 14);  // 1/z + (4z+9)/z^2 at z = 1
  CHECK(f == RatFunc(zp({9, 5}), zp({0, 0, 1})));

  RatFunc ct1 = RatFunc(-1) / (z + RatFunc(1));
  CHECK_THROWS_AS(ct1.eval(-1), pole_error);
  CHECK(ct1.eval(1) == make_rational(-1, 2));

  CHECK_THROWS_AS(z / RatFunc(0), std::domain_error);
  CHECK((one_over_z * z).is_one());
  CHECK(one_over_z.pow(3) == RatFunc(zp({1}), zp({0, 0, 0, 1})));

  // f/f == 1 and f - f == 0 for a messy f
  RatFunc messy = (z + RatFunc(3)) / (z.pow(2) - RatFunc(2));
  CHECK((messy / messy).is_one());
  CHECK((messy - messy).is_zero());
}

TEST_CASE("kpoly substitution and two-variable evaluation") {
  // p(k) = (2z+1) k^2 - k
  KPoly p = KPoly::monomial(2, RatFunc(zp({1, 2}))) -
            KPoly::monomial(1, RatFunc(1));
  KPoly shifted = kpoly_shift(p, -1);
  CHECK(kpoly_eval(shifted, 3, 2) == kpoly_eval(p, 2, 2));
  CHECK(kpoly_eval_k(p, 1) == RatFunc(zp({0, 2})));  // 2z+1-1

  // reflection k -> -k-2 twice is the identity
  KPoly reflected = p.substitute(KPoly::affine(RatFunc(-1), RatFunc(-2)));
  CHECK(reflected.substitute(KPoly::affine(RatFunc(-1), RatFunc(-2))) == p);

  CHECK(kpoly_specialize_z(p, 1) ==
        std::vector<Rational>{Rational(0), Rational(-1), Rational(3)});
}

TEST_CASE("poly printing") {
  CHECK(zp({9, 4}).str() == "4*z + 9");
  CHECK(zp({5, -4}).str() == "-4*z + 5");
  CHECK(ZPoly().str() == "0");
  CHECK(RatFunc(zp({1}), zp({0, 1})).str() == "1/z");
  CHECK(RatFunc(zp({9, 4}), zp({0, 0, 1})).str() == "(4*z + 9)/z^2");
  CHECK(RatFunc(zp({-1}), zp({1, 1})).str() == "-1/(z + 1)");
}
