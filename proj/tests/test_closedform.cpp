// Copyright 2026 The xsep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xsep/closedform.hpp"
#include "xsep/quadrature.hpp"

#include <cmath>

using namespace xsep;
using namespace xsep::closedform;

TEST_CASE("normalization constants") {
  CHECK(norm_const(HalfInt::of(1)) == ExactReal(Rational(5040)));
  CHECK(norm_const(HalfInt::of(2)) == ExactReal(Rational(9979200)));
  CHECK(norm_const(HalfInt::of(3)) == ExactReal(Rational(9081072000LL)));
  CHECK(norm_const(HalfInt::halves(1)) == ExactReal(Rational(480), -4));
  CHECK_THROWS_AS(norm_const(HalfInt::halves(0)), std::domain_error);

  CHECK(norm_const_f(1.0) == doctest::Approx(5040.0).epsilon(1e-12));
  CHECK(norm_const_f(0.5) == doctest::Approx(norm_const(HalfInt::halves(1)).to_double())
                                 .epsilon(1e-12));

  CHECK(norm_const_induced(1, 0) == Rational(5040));
  CHECK(norm_const_induced(1, 1) == Rational(9979200));
  CHECK(norm_const_induced(2, 1) == Rational(36324288000LL));
  CHECK_THROWS_AS(norm_const_induced(0, 1), std::domain_error);
  CHECK_THROWS_AS(norm_const_induced(1, -1), std::domain_error);
}

TEST_CASE("separability probability, exact") {
  CHECK(sep_prob_exact(HalfInt::of(1)) == ExactReal(Rational(2, 5)));
  CHECK(sep_prob_exact(HalfInt::of(2)) == ExactReal(Rational(2, 7)));
  CHECK(sep_prob_exact(HalfInt::of(3)) == ExactReal(Rational(100, 429)));
  CHECK(sep_prob_exact(HalfInt::halves(1)) == ExactReal(Rational(16, 3), -4));
  CHECK(sep_prob_exact(HalfInt::halves(3)) == ExactReal(Rational(1024, 315), -4));

  // both printed lines agree after duplication rewriting
  for (int t = 1; t <= 8; ++t)
    CHECK(sep_prob_exact(HalfInt::halves(t)) == sep_prob_gamma_ratio_exact(HalfInt::halves(t)));
}

TEST_CASE("separability probability, float path") {
  CHECK(std::abs(sep_prob(1.0) - 0.4) < 1e-14);
  CHECK(std::abs(sep_prob(10.0) - 0.12683) <= 5e-6);
  CHECK(std::abs(sep_prob_asymptotic(10.0) - 0.12616) <= 5e-6);
  for (int t = 1; t <= 10; ++t) {
    double exact = sep_prob_exact(HalfInt::halves(t)).to_double();
    CHECK(std::abs(sep_prob(0.5 * t) - exact) <= 1e-13 * exact);
  }
  CHECK_THROWS_AS(sep_prob(0.0), std::domain_error);
  CHECK_THROWS_AS(sep_prob(-1.0), std::domain_error);
}

TEST_CASE("integer reciprocal of I_alpha") {
  CHECK(i_alpha_reciprocal(HalfInt::halves(1)) == BigInt(90));
  CHECK(i_alpha_reciprocal(HalfInt::of(1)) == BigInt(12600));
  CHECK(i_alpha_reciprocal(HalfInt::of(2)) == BigInt(34927200));
  // c_alpha * I_alpha = p(alpha)
  Rational i1(BigInt(1), i_alpha_reciprocal(HalfInt::of(1)));
  CHECK(Rational(5040) * i1 == Rational(2, 5));
}

TEST_CASE("I family closed forms") {
  CHECK(integral_I(IntegralSpec::mn(0, 0)) == ExactReal(Rational(1, 24)));
  CHECK(integral_I(IntegralSpec::mn(1, 0)) == ExactReal(Rational(1, 1440)));
  CHECK(integral_I(IntegralSpec::mn(2, 0)) == ExactReal(Rational(1, 50400)));
  CHECK(integral_I(IntegralSpec::mn(1, 1)) == ExactReal(Rational(1, 22400)));
  CHECK(integral_I(IntegralSpec::mn(4, 0)) == ExactReal(Rational(1, 34927200)));
  CHECK(integral_I(IntegralSpec::mn(3, 1)) == ExactReal(Rational(1, 37255680)));
  CHECK(integral_I(IntegralSpec::mn(2, 2)) == ExactReal(Rational(1, 14902272)));

  SUBCASE("the two propositions agree on integer orders") {
    for (int q = 1; q <= 10; ++q)
      CHECK(integral_I(IntegralSpec::two_alpha(0.5 * q)) ==
            integral_I(IntegralSpec::mn(static_cast<unsigned>(q), 0)));
  }

  SUBCASE("no exact path for fractional order") {
    CHECK_THROWS_AS(integral_I(IntegralSpec::two_alpha(0.75)), std::domain_error);
    double f = integral_I_f(IntegralSpec::two_alpha(0.75));
    CHECK(f == doctest::Approx(1.1294865876490813e-4).epsilon(1e-12));
  }

  SUBCASE("float path tracks the exact one") {
    double exact = integral_I(IntegralSpec::mn(5, 3)).to_double();
    CHECK(integral_I_f(IntegralSpec::mn(5, 3)) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("auxiliary sum S") {
  CHECK(aux_sum_S(0, 0) == Rational(2));
  CHECK(aux_sum_S(1, 1) == Rational(32, 15));
  CHECK(aux_sum_S(0, 1) == Rational(8, 3));
  CHECK(aux_sum_S_direct(0, 0) == Rational(2));
  CHECK(aux_sum_S_direct(1, 1) == Rational(32, 15));
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n) CHECK(aux_sum_S(m, n) == aux_sum_S_direct(m, n));

  // I(m,n) = 2^(-4m-4n-5) B(m+1, n+2) S(m, n+1)
  for (unsigned m = 0; m <= 5; ++m) {
    for (unsigned n = 0; n <= 5; ++n) {
      Rational beta = Rational(factorial(m)) * Rational(factorial(n + 1)) /
                      Rational(factorial(m + n + 2));
      Rational via_s = two_pow(-4L * m - 4L * n - 5) * beta * aux_sum_S(m, n + 1);
      CHECK(integral_I(IntegralSpec::mn(m, n)).rational() == via_s);
    }
  }
}

TEST_CASE("very-well-poised series") {
  CHECK(vwp_series_exact(2) == Rational(128, 175));
  CHECK(vwp_series_exact(1) == Rational(4, 5));
  CHECK(vwp_series(1.0, 1e-12) == doctest::Approx(128.0 / 175).epsilon(1e-14));
  CHECK(vwp_series(0.5, 1e-12) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK_THROWS_AS(vwp_series(0.0, 1e-8), std::domain_error);

  SUBCASE("exact prefactor identity") {
    for (int q = 1; q <= 6; ++q) {
      Rational pre = two_pow(-4L * q - 2) / (Rational(3) * Rational(q + 1) * Rational(q + 2));
      CHECK(integral_I(IntegralSpec::two_alpha(0.5 * q)).rational() ==
            pre * vwp_series_exact(q));
    }
  }

  SUBCASE("non-terminating case against the closed form") {
    for (double alpha : {0.75, 0.3, 1.25, 2.5}) {
      double q = 2 * alpha;
      double pre = std::exp2(-4 * q - 2) / (3 * (q + 1) * (q + 2));
      double series = pre * vwp_series(alpha, 1e-10);
      double closed = integral_I_f(IntegralSpec::two_alpha(alpha));
      CHECK(std::abs(series - closed) <= 1e-8 * closed);
    }
  }
}

TEST_CASE("induced-measure nonseparability") {
  const Rational expected[] = {Rational(3, 5),    Rational(5, 14),    Rational(7, 33),
                               Rational(18, 143), Rational(33, 442),  Rational(143, 3230),
                               Rational(195, 7429)};
  for (int k = 0; k <= 6; ++k) {
    CHECK(nonsep_prob_induced(1, k) == expected[k]);
    CHECK(nonsep_prob_alpha1_alt(k) == expected[k]);
  }
  CHECK(nonsep_prob_induced(2, 0) == Rational(5, 7));
  CHECK(nonsep_prob_induced(2, 1) == Rational(49, 99));
  CHECK(nonsep_prob_induced(2, 2) == Rational(48, 143));
  for (int a = 1; a <= 5; ++a)
    CHECK(nonsep_prob_induced(a, 0) == Rational(1) - sep_prob_exact(HalfInt::of(a)).rational());

  SUBCASE("alpha = 2 closed display: (2/3)(k+6) G(2k+6)^2 / (G(k+3) G(3k+9))") {
    for (int k = 0; k <= 5; ++k) {
      Rational g26 = Rational(factorial(static_cast<unsigned>(2 * k + 5)));
      Rational gk3 = Rational(factorial(static_cast<unsigned>(k + 2)));
      Rational g3k9 = Rational(factorial(static_cast<unsigned>(3 * k + 8)));
      CHECK(nonsep_prob_induced(2, k) ==
            Rational(2, 3) * Rational(k + 6) * g26 * g26 / (gk3 * g3k9));
    }
  }

  SUBCASE("float continuation in k") {
    CHECK(nonsep_prob_induced_f(1, 0.0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(nonsep_prob_induced_f(2, 1.0) == doctest::Approx(49.0 / 99).epsilon(1e-12));
    double mid = nonsep_prob_induced_f(1, 0.5);
    CHECK(mid < 0.6);
    CHECK(mid > 5.0 / 14);
    CHECK_THROWS_AS(nonsep_prob_induced_f(1, -0.5), std::domain_error);
  }

  CHECK_THROWS_AS(nonsep_prob_induced(0, 0), std::domain_error);
}

TEST_CASE("incomplete beta polynomial") {
  CHECK(incomplete_beta_poly(1, 3, 0.3) == doctest::Approx(std::pow(0.7, 4) / 4).epsilon(1e-15));
  // d0 = 0 gives the complete beta integral
  CHECK(incomplete_beta_poly(4, 2, 0.0) ==
        doctest::Approx(Rational(factorial(3) * factorial(2), factorial(6)).to_double())
            .epsilon(1e-15));
  CHECK(incomplete_beta_poly(3, 2, 0.5) == doctest::Approx(1.0 / 60).epsilon(1e-13));
  CHECK(incomplete_beta_poly(2, 0, 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(incomplete_beta_poly(3, 2, 1.5), std::domain_error);
  CHECK_THROWS_AS(incomplete_beta_poly(3, 2, -0.1), std::domain_error);

  SUBCASE("matches adaptive quadrature of v^(a-1)(1-v)^k") {
    quad::QuadConfig cfg;
    for (int a : {1, 2, 3, 5}) {
      for (int k : {0, 2, 4}) {
        for (double d0 : {0.1, 0.5, 0.9}) {
          auto r = quad::integrate(
              [a, k](double v) { return std::pow(v, a - 1) * std::pow(1 - v, k); }, d0, 1.0, cfg);
          CHECK(incomplete_beta_poly(a, k, d0) == doctest::Approx(r.value).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("sigma coefficients") {
  CHECK(sigma(0, 1, 0) == Rational(1, 2));
  // direct terms 1/120 + 1/180
  CHECK(sigma(1, 2, 0) == Rational(1, 72));
  CHECK(sigma(0, 2, 0) == Rational(1, 8));
  CHECK(sigma(0, 2, 1) == Rational(1, 2));
  CHECK(sigma(0, 2, 2) == Rational(1, 4));
  for (int k = 0; k <= 5; ++k)
    CHECK(sigma(k, 1, k + 1) == Rational(1, (k + 1) * (k + 1)));
  CHECK_THROWS_AS(sigma(0, 1, 2), std::domain_error);
  CHECK_THROWS_AS(sigma(0, 1, -1), std::domain_error);
  CHECK_THROWS_AS(sigma(0, 0, 0), std::domain_error);

  SUBCASE("split closed form reproduces the direct sum") {
    for (int a : {1, 2, 3}) {
      for (int k = 0; k <= 4; ++k) {
        for (int i = 0; i <= k + a; ++i) CHECK(sigma_split(k, a, i) == sigma(k, a, i));
      }
    }
  }

  SUBCASE("alternate low branch differs except at i = 1") {
    CHECK(sigma_branch_printed(0, 1, 0) == Rational(1));
    CHECK(sigma_branch_printed(0, 1, 0) != sigma(0, 1, 0));
    CHECK(sigma_branch_printed(1, 2, 0) == Rational(1, 12));
    CHECK(sigma_branch_printed(1, 2, 1) == sigma(1, 2, 1));
    // the high branch is shared and correct
    CHECK(sigma_branch_printed(0, 2, 1) == sigma(0, 2, 1));
  }
}

TEST_CASE("relative nonseparability") {
  CHECK(rel_nonsep_prob(1, 0) == Rational(4, 5));
  CHECK(rel_nonsep_prob(2, 0) == Rational(6, 7));
  CHECK(rel_nonsep_prob(3, 0) == Rational(379, 429));
  for (int a = 1; a <= 3; ++a) {
    Rational p = sep_prob_exact(HalfInt::of(a)).rational();
    CHECK(rel_nonsep_prob(a, 0) == Rational(1) - p / Rational(2));
  }

  const Rational alpha1[] = {Rational(4, 5),         Rational(31, 42),
                             Rational(302, 429),     Rational(3313, 4862),
                             Rational(5585, 8398),   Rational(242353, 371450),
                             Rational(138394, 215441)};
  for (int k = 0; k <= 6; ++k) {
    CHECK(rel_nonsep_prob(1, k) == alpha1[k]);
    CHECK(rel_nonsep_prob_alpha1(k) == alpha1[k]);
    CHECK(rel_nonsep_prob_alpha1_poch(k) == alpha1[k]);
  }

  // values confirmed by the Monte Carlo oracle
  CHECK(rel_nonsep_prob(2, 1) == Rational(344, 429));
  CHECK(rel_nonsep_prob(2, 2) == Rational(3733, 4862));
  CHECK(rel_nonsep_prob(3, 1) == Rational(4057, 4862));
}

TEST_CASE("minimally degenerate boundary") {
  CHECK(min_degenerate_sep_prob_exact(HalfInt::of(1)) == ExactReal(Rational(1, 5)));
  CHECK(min_degenerate_sep_prob_exact(HalfInt::of(2)) == ExactReal(Rational(1, 7)));
  CHECK(min_degenerate_sep_prob_exact(HalfInt::halves(1)) == ExactReal(Rational(8, 3), -4));
  CHECK(min_degenerate_sep_prob(1.0) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(min_degenerate_sep_prob(0.5) == doctest::Approx(0.27018982304623405).epsilon(1e-13));
}

TEST_CASE("induced probability polynomial factor at alpha = 2") {
  // Pr * 2 G(a+k+2) G(4a+3k+2) / G(2a+2k+3)^2 = k + 6
  for (int k = 0; k <= 6; ++k) {
    Rational scale = Rational(2) * Rational(factorial(static_cast<unsigned>(k + 3))) *
                     Rational(factorial(static_cast<unsigned>(3 * k + 9))) /
                     Rational(factorial(static_cast<unsigned>(2 * k + 6))).pow(2);
    CHECK(nonsep_prob_induced(2, k) * scale == Rational(k + 6));
  }
}
