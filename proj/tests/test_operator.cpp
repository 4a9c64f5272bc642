#include "doctest.h"
#include "partible/sequences.hpp"
#include "partible/shift_operator.hpp"
#include "test_util.hpp"

using namespace partible;
using testutil::Rng;
using testutil::random_kpoly;

namespace {

KPoly kvar() { return KPoly::variable(); }

RatFunc zvar() { return RatFunc::z(); }

// (2k+3)^s
KPoly x_power(unsigned s) {
  return KPoly::affine(RatFunc(2), RatFunc(3)).pow(s);
}

}  // namespace

TEST_CASE("delannoy operator coefficients") {
  ShiftOperator L = delannoy_operator(1);
  CHECK(L.order() == 2);
  CHECK(L.a(0) == kvar() + KPoly(RatFunc(1)));
  CHECK(L.a(2) == kvar() + KPoly(RatFunc(2)));
  KPoly expected_a1 =
      KPoly::affine(RatFunc(2), RatFunc(3)) *
      (RatFunc(2) * zvar() + RatFunc(1)) * RatFunc(-1);
  CHECK(L.a(1) == expected_a1);

  // eps = -1, z = 1: middle coefficient flips to +3(2k+3)
  ShiftOperator Lm = delannoy_operator(-1).specialize_z(1);
  CHECK(Lm.a(1) == KPoly::affine(RatFunc(2), RatFunc(3)) * RatFunc(3));

  CHECK_THROWS_AS(delannoy_operator(2), std::invalid_argument);
}

TEST_CASE("delannoy operator annihilates eps^k D_k(z)") {
  for (int eps : {1, -1}) {
    for (long z = -3; z <= 3; ++z) {
      ShiftOperator L = delannoy_operator(eps).specialize_z(z);
      DelannoyStream<Rational> s((Rational(z)));
      Rational d0 = s.value();
      s.advance();
      Rational d1 = s.value();
      int sign = 1;
      for (unsigned long k = 0; k <= 100; ++k) {
        s.advance();
        Rational d2 = s.value();
        Rational f0 = d0 * sign;
        Rational f1 = d1 * sign * eps;
        Rational f2 = d2 * sign;  // eps^2 = 1
        Rational lk(static_cast<long>(k));
        Rational acc = kpoly_eval(L.a(0), lk, z) * f0 +
                       kpoly_eval(L.a(1), lk, z) * f1 +
                       kpoly_eval(L.a(2), lk, z) * f2;
        CHECK(acc == 0);
        d0 = d1;
        d1 = d2;
        if (eps == -1) sign = -sign;
      }
    }
  }
}

TEST_CASE("adjoint on simple inputs") {
  ShiftOperator L = delannoy_operator(1);
  // L*(1) = (k+1) - (2k+1)(2z+1) + k = -2z(2k+1)
  KPoly expect = KPoly::affine(RatFunc(2), RatFunc(1)) *
                 (RatFunc(-2) * zvar());
  CHECK(adjoint_apply(L, KPoly(RatFunc(1))) == expect);
  CHECK(adjoint_apply(L, KPoly()).is_zero());

  // x = 2k+3, eps = 1, z = 1: -2(2k+1)^2 + 2
  ShiftOperator L1 = L.specialize_z(1);
  KPoly img = adjoint_apply(L1, x_power(1));
  KPoly want = KPoly::affine(RatFunc(2), RatFunc(1)).pow(2) * RatFunc(-2) +
               KPoly(RatFunc(2));
  CHECK(img == want);
}

TEST_CASE("adjoint is linear") {
  Rng rng(11);
  ShiftOperator L = delannoy_operator(-1);
  for (int trial = 0; trial < 30; ++trial) {
    KPoly x = random_kpoly(rng, 6, false);
    KPoly y = random_kpoly(rng, 6, false);
    RatFunc alpha(make_rational(rng.pick(-5, 5), rng.pick(1, 3)));
    RatFunc beta(make_rational(rng.pick(-5, 5), rng.pick(1, 3)));
    CHECK(adjoint_apply(L, x * alpha + y * beta) ==
          adjoint_apply(L, x) * alpha + adjoint_apply(L, y) * beta);
  }
}

TEST_CASE("telescoping certificate closed forms") {
  Rng rng(23);
  for (int eps : {1, -1}) {
    ShiftOperator L = delannoy_operator(eps);
    for (int trial = 0; trial < 20; ++trial) {
      KPoly x = random_kpoly(rng, 6, false);
      auto u = telescoping_u(L, x);
      REQUIRE(u.size() == 2);
      // u_1(k) = (k+1) x(k-1)
      CHECK(u[1] == (kvar() + KPoly(RatFunc(1))) * kpoly_shift(x, -1));
      // u_0(k) = k x(k-2) - eps (2k+1)(2z+1) x(k-1)
      KPoly expect_u0 =
          kvar() * kpoly_shift(x, -2) +
          KPoly::affine(RatFunc(2), RatFunc(1)) *
              (RatFunc(2) * zvar() + RatFunc(1)) * RatFunc(-eps) *
              kpoly_shift(x, -1);
      CHECK(u[0] == expect_u0);
    }
    for (const KPoly& ui : telescoping_u(L, KPoly())) CHECK(ui.is_zero());
  }
}

TEST_CASE("telescoping identity pointwise") {
  // L*(x)(k) F(k) = Delta(-sum_i u_i(k) F(k+i))
  Rng rng(37);
  for (int eps : {1, -1}) {
    for (long z : {-3L, -1L, 2L, 3L}) {
      ShiftOperator L = delannoy_operator(eps);
      KPoly x = random_kpoly(rng, 5, false);
      KPoly lstar = adjoint_apply(L, x);
      auto u = telescoping_u(L, x);
      std::vector<Rational> dvals;
      DelannoyStream<Rational> s((Rational(z)));
      for (unsigned long k = 0; k <= 62; ++k) {
        dvals.push_back(s.value());
        s.advance();
      }
      auto F = [&](unsigned long k) {
        Rational f = dvals[k];
        return (eps == -1 && k % 2 == 1) ? -f : f;
      };
      auto g = [&](unsigned long k) {
        Rational acc = 0;
        for (size_t i = 0; i < u.size(); ++i)
          acc -= kpoly_eval(u[i], static_cast<long>(k), z) * F(k + i);
        return acc;
      };
      for (unsigned long k = 0; k <= 59; ++k)
        CHECK(kpoly_eval(lstar, static_cast<long>(k), z) * F(k) ==
              g(k + 1) - g(k));
    }
  }
}

TEST_CASE("summed telescoping identity over 0..n-1") {
  Rng rng(53);
  for (int eps : {1, -1}) {
    ShiftOperator L = delannoy_operator(eps);
    KPoly x = random_kpoly(rng, 6, false);
    KPoly lstar = adjoint_apply(L, x);
    auto u = telescoping_u(L, x);
    long z = 2;
    std::vector<Rational> dvals;
    DelannoyStream<Rational> s((Rational(z)));
    for (unsigned long k = 0; k <= 55; ++k) {
      dvals.push_back(s.value());
      s.advance();
    }
    auto F = [&](unsigned long k) {
      Rational f = dvals[k];
      return (eps == -1 && k % 2 == 1) ? -f : f;
    };
    for (unsigned long n = 1; n <= 50; ++n) {
      Rational brute = 0;
      for (unsigned long k = 0; k < n; ++k)
        brute += kpoly_eval(lstar, static_cast<long>(k), z) * F(k);
      Rational boundary = 0;
      for (size_t i = 0; i < u.size(); ++i)
        boundary += kpoly_eval(u[i], 0, z) * F(i) -
                    kpoly_eval(u[i], static_cast<long>(n), z) * F(n + i);
      CHECK(brute == boundary);
    }
  }
}

TEST_CASE("vanishing initial boundary term, symbolic z") {
  // u_0(0) F_0 + u_1(0) F_1 = 0 with F_0 = 1, F_1 = eps (2z+1)
  Rng rng(71);
  for (int eps : {1, -1}) {
    ShiftOperator L = delannoy_operator(eps);
    for (int trial = 0; trial < 25; ++trial) {
      KPoly x = random_kpoly(rng, 8, false);
      auto u = telescoping_u(L, x);
      RatFunc f1 = (RatFunc(2) * zvar() + RatFunc(1)) * RatFunc(eps);
      RatFunc acc = kpoly_eval_k(u[0], 0) + kpoly_eval_k(u[1], 0) * f1;
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("boundary sum identity examples") {
  auto [l0, r0] = boundary_sum_identity(KPoly(), 5, 2, 1);
  CHECK(l0 == 0);
  CHECK(r0 == 0);

  // x = 1, n = 3, z = 1: both sides -2(1 + 9 + 65) = -150
  auto [l1, r1] = boundary_sum_identity(KPoly(RatFunc(1)), 3, 1, 1);
  CHECK(l1 == -150);
  CHECK(r1 == -150);

  CHECK_THROWS_AS(boundary_sum_identity(KPoly(RatFunc(1)), 0, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("boundary sum identity holds on random instances") {
  Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    KPoly x = random_kpoly(rng, 6, false);
    unsigned long n = static_cast<unsigned long>(rng.pick(1, 50));
    long z = rng.pick(-3, 3);
    int eps = rng.pick(0, 1) ? 1 : -1;
    auto [lhs, rhs] = boundary_sum_identity(x, n, z, eps);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("boundary sum identity with z-dependent witness coefficients") {
  // x(k) = (2z+1) k^2 - (1/(z^2+1)) k + 3
  KPoly x = KPoly::monomial(2, RatFunc(2) * zvar() + RatFunc(1)) -
            KPoly::monomial(1, RatFunc(1) / (zvar() * zvar() + RatFunc(1))) +
            KPoly(RatFunc(3));
  for (int eps : {1, -1})
    for (long z = -3; z <= 3; ++z)
      for (unsigned long n : {1UL, 2UL, 5UL, 23UL}) {
        auto [lhs, rhs] = boundary_sum_identity(x, n, z, eps);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("divisibility of adjoint sums for integer x") {
  Rng rng(113);
  for (int eps : {1, -1}) {
    for (long z = -4; z <= 4; ++z) {
      if (z == 0 || z == -1) continue;
      KPoly x = random_kpoly(rng, 5, true);
      for (unsigned long n = 1; n <= 64; ++n) {
        auto [lhs, rhs] = boundary_sum_identity(x, n, z, eps);
        CHECK(lhs == rhs);
        REQUIRE(lhs.get_den() == 1);
        CHECK(mod_reduce(lhs.get_num(), n) == 0);
      }
    }
  }
}

TEST_CASE("operator degree of the Delannoy operator") {
  ShiftOperator L = delannoy_operator(1);
  OperatorDegree od = operator_degree(L);
  CHECK(od.degree == 1);
  // b_0(k) = -2z(2k+1)
  CHECK(od.b[0] == KPoly::affine(RatFunc(2), RatFunc(1)) *
                       (RatFunc(-2) * zvar()));
  CHECK(od.b[2] == kvar() + KPoly(RatFunc(1)));  // b_J = a_0
  CHECK(operator_degree(delannoy_operator(-1)).degree == 1);
}

TEST_CASE("operator degree of sigma - 1") {
  ShiftOperator L({KPoly(RatFunc(-1)), KPoly(RatFunc(1))});
  OperatorDegree od = operator_degree(L);
  // b_0 = a_1(k-1) + a_0(k) = 0, b_1 = a_0 = -1, so d = -1
  CHECK(od.b[0].is_zero());
  CHECK(od.degree == -1);
  Nondegeneracy nd = nondegeneracy(L);
  CHECK_FALSE(nd.identically_zero);
  CHECK(nd.roots == std::vector<unsigned long>{0});
  CHECK_FALSE(nd.nondegenerate);
}

TEST_CASE("nondegeneracy of the Delannoy operator") {
  Nondegeneracy nd = nondegeneracy(delannoy_operator(1));
  CHECK(nd.nondegenerate);
  CHECK(nd.roots.empty());
  CHECK_FALSE(nd.identically_zero);
  // indicial polynomial is the constant -4z
  CHECK(nd.indicial == KPoly(RatFunc(-4) * zvar()));
  REQUIRE(nd.exceptional_z.size() == 1);
  CHECK(nd.exceptional_z[0] == 0);

  Nondegeneracy ndm = nondegeneracy(delannoy_operator(-1));
  CHECK(ndm.nondegenerate);
  REQUIRE(ndm.exceptional_z.size() == 1);
  CHECK(ndm.exceptional_z[0] == -1);

  // at the excluded z the top coefficient form vanishes: the degree drops
  // to -1, the indicial polynomial becomes s^2, and s = 0 lands in R_L
  Nondegeneracy at0 = nondegeneracy(delannoy_operator(1).specialize_z(0));
  CHECK_FALSE(at0.nondegenerate);
  CHECK(at0.roots == std::vector<unsigned long>{0});
  CHECK(at0.indicial == KPoly::monomial(2, RatFunc(1)));
  Nondegeneracy atm1 = nondegeneracy(delannoy_operator(-1).specialize_z(-1));
  CHECK_FALSE(atm1.nondegenerate);
  CHECK(atm1.roots == std::vector<unsigned long>{0});
  // degenerate exactly at z = 0 (eps = 1) and z = -1 (eps = -1)
  for (long z = -5; z <= 5; ++z) {
    CHECK(nondegeneracy(delannoy_operator(1).specialize_z(z)).nondegenerate ==
          (z != 0));
    CHECK(nondegeneracy(delannoy_operator(-1).specialize_z(z)).nondegenerate ==
          (z != -1));
  }
}

TEST_CASE("partibility condition") {
  Rational half = make_rational(-1, 2);
  CHECK(partibility_check(delannoy_operator(1), half));
  CHECK(partibility_check(delannoy_operator(-1), half));
  CHECK_FALSE(partibility_check(delannoy_operator(1), 0));
  CHECK_FALSE(partibility_check(delannoy_operator(1), 1));

  // sigma^2 - 1 is symmetric around every center
  ShiftOperator sq({KPoly(RatFunc(-1)), KPoly(), KPoly(RatFunc(1))});
  for (long g = -3; g <= 3; ++g) CHECK(partibility_check(sq, g));
  CHECK(partibility_check(sq, make_rational(1, 2)));
}

TEST_CASE("find_gamma") {
  auto g1 = find_gamma(delannoy_operator(1));
  REQUIRE(g1.has_value());
  CHECK(*g1 == make_rational(-1, 2));
  auto g2 = find_gamma(delannoy_operator(-1));
  REQUIRE(g2.has_value());
  CHECK(*g2 == make_rational(-1, 2));

  // mismatched degrees admit no symmetry center
  ShiftOperator bad({KPoly(RatFunc(1)), KPoly(RatFunc(1)),
                     KPoly::monomial(2, RatFunc(1)) + KPoly(RatFunc(1))});
  CHECK_FALSE(find_gamma(bad).has_value());

  // shifting the operator moves the center accordingly
  ShiftOperator L = delannoy_operator(1);
  std::vector<KPoly> shifted;
  for (const KPoly& a : L.coeffs()) shifted.push_back(kpoly_shift(a, 1));
  auto g3 = find_gamma(ShiftOperator(shifted));
  REQUIRE(g3.has_value());
  CHECK(*g3 == make_rational(-3, 2));

  // returned centers satisfy the condition
  for (const auto& g : {g1, g2, g3}) CHECK(g.has_value());
  CHECK(partibility_check(L, *g1));
}

TEST_CASE("operator construction validation") {
  CHECK_THROWS_AS(ShiftOperator({KPoly(RatFunc(1))}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftOperator({KPoly(RatFunc(1)), KPoly()}),
                  std::invalid_argument);
}
