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

#include "xsep/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xsep::closedform {

namespace {

constexpr double kPi = std::numbers::pi;

Rational int_gamma(long n) {
  if (n < 1) throw std::domain_error("gamma at nonpositive integer");
  return Rational(factorial(static_cast<unsigned>(n - 1)));
}

Rational half_poch(unsigned n) { return pochhammer(Rational(1, 2), n); }

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x); }

}  // namespace

IntegralSpec IntegralSpec::two_alpha(double alpha) {
  if (!(alpha > 0)) throw std::domain_error("IntegralSpec: alpha must be positive");
  IntegralSpec s;
  s.kind = Kind::two_alpha;
  s.alpha = alpha;
  return s;
}

Rational two_pow(long e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << -e);
}

ExactReal norm_const(HalfInt alpha) {
  require(alpha.twice >= 1, "norm_const: alpha must be positive");
  ExactReal num = gamma_half(HalfInt::halves(4 * alpha.twice + 8));
  ExactReal ga1 = gamma_half(HalfInt::halves(alpha.twice + 2));
  ExactReal ga = gamma_half(HalfInt::halves(alpha.twice));
  return num / (ga1 * ga1 * ga * ga);
}

double norm_const_f(double alpha) {
  require(alpha > 0, "norm_const: alpha must be positive");
  return std::exp(log_gamma(4 * alpha + 4) - 2 * log_gamma(alpha + 1) - 2 * log_gamma(alpha));
}

Rational norm_const_induced(int alpha, int k) {
  require(alpha >= 1 && k >= 0, "norm_const_induced: need integer alpha >= 1, k >= 0");
  Rational num = int_gamma(4L * alpha + 4L * k + 4);
  Rational d1 = int_gamma(k + alpha + 1);
  Rational d2 = int_gamma(k + 1);
  Rational d3 = int_gamma(alpha);
  return num / (d1 * d1 * d2 * d2 * d3 * d3);
}

ExactReal integral_I(const IntegralSpec& spec) {
  if (spec.kind == IntegralSpec::Kind::int_mn) {
    unsigned m = spec.m, n = spec.n;
    Rational v = two_pow(-2L * m - 2L * n - 3);
    Rational mf(factorial(m));
    v *= mf * mf * Rational(factorial(m + n + 1)) * half_poch(n + 1);
    v /= Rational(factorial(2 * m + n + 2)) * half_poch(m + n + 2);
    return ExactReal(v);
  }
  double q = 2 * spec.alpha;
  require(is_integral(q) && q >= 1, "integral_I: exact path needs 2*alpha integral");
  long iq = static_cast<long>(q);
  ExactReal gq1(int_gamma(iq + 1));
  return ExactReal::pi_pow_half(2) * ExactReal(two_pow(-6 - 4 * iq)) * gq1 * gq1 /
         (gamma_half(HalfInt::halves(static_cast<int>(2 * iq + 3))) *
          gamma_half(HalfInt::halves(static_cast<int>(2 * iq + 5))));
}

double integral_I_f(const IntegralSpec& spec) {
  if (spec.kind == IntegralSpec::Kind::int_mn) return integral_I(spec).to_double();
  double q = 2 * spec.alpha;
  return kPi * std::exp(-(6 + 4 * q) * std::numbers::ln2 + 2 * log_gamma(q + 1) -
                        log_gamma(q + 1.5) - log_gamma(q + 2.5));
}

ExactReal sep_prob_exact(HalfInt alpha) {
  require(alpha.twice >= 1, "sep_prob: alpha must be positive");
  Rational a = alpha.rational();
  ExactReal i2a = integral_I(IntegralSpec::two_alpha(alpha.value()));
  return norm_const(alpha) * ExactReal(Rational(4) / (a * a)) * i2a;
}

ExactReal sep_prob_gamma_ratio_exact(HalfInt alpha) {
  require(alpha.twice >= 1, "sep_prob: alpha must be positive");
  int t = alpha.twice;
  ExactReal g_half = gamma_half(HalfInt::halves(t + 1));
  ExactReal g_3half = gamma_half(HalfInt::halves(t + 3));
  ExactReal g_1 = gamma_half(HalfInt::halves(t + 2));
  ExactReal g_dup = gamma_half(HalfInt::halves(2 * t + 3));
  return ExactReal(two_pow(t), -2) * g_half * g_half * g_3half / (g_1 * g_dup);
}

double sep_prob(double alpha) {
  require(alpha > 0, "sep_prob: alpha must be positive");
  double lg = 2 * log_gamma(alpha + 0.5) + log_gamma(alpha + 1.5) - log_gamma(alpha + 0.75) -
              log_gamma(alpha + 1) - log_gamma(alpha + 1.25);
  return std::exp(lg) / std::sqrt(2 * kPi);
}

double sep_prob_asymptotic(double alpha) { return 1.0 / std::sqrt(2 * kPi * alpha); }

BigInt i_alpha_reciprocal(HalfInt alpha) {
  require(alpha.twice >= 1, "i_alpha_reciprocal: alpha must be positive");
  unsigned t = static_cast<unsigned>(alpha.twice);  // t = 2 alpha
  Rational r = Rational(2) * Rational(2L * t + 3) * binomial(t + 2, 2).pow(2) *
               binomial(2 * t + 1, t + 2).pow(2);
  return r.num();
}

Rational aux_sum_S(unsigned m, unsigned n) {
  Rational v = two_pow(2L * m + 2L * n);
  v *= Rational(factorial(m)) * Rational(factorial(m + n)) * Rational(factorial(m + n + 1)) *
       half_poch(n);
  v /= Rational(factorial(n)) * Rational(factorial(n + 2 * m + 1)) * half_poch(m + n + 1);
  return v;
}

Rational aux_sum_S_direct(unsigned m, unsigned n) {
  Rational total(0);
  for (unsigned i = 0; i <= m; ++i) {
    Rational outer = pochhammer(Rational(-static_cast<long long>(m)), i) *
                     pochhammer(Rational(n + 1), i) /
                     (Rational(factorial(i)) * pochhammer(Rational(m + n + 2), i));
    for (unsigned j = 0; j <= n; ++j) {
      Rational inner = pochhammer(Rational(-static_cast<long long>(n)), j) *
                       pochhammer(Rational(1 - 2LL * n, 2), j) /
                       (Rational(factorial(j)) * half_poch(j));
      total += outer * inner / Rational(2LL * i + 2LL * j + 1, 2);
    }
  }
  return total;
}

Rational vwp_series_exact(int two_alpha) {
  require(two_alpha >= 1, "vwp_series: 2*alpha must be a positive integer");
  Rational total(0);
  for (int i = 0; i <= two_alpha; ++i) {
    Rational t = pochhammer(Rational(-two_alpha), i) * pochhammer(Rational(2), i).pow(2) *
                 half_poch(i);
    t /= Rational(factorial(static_cast<unsigned>(i))) * pochhammer(Rational(two_alpha + 3), i) *
         Rational(factorial(static_cast<unsigned>(i))) * pochhammer(Rational(5, 2), i);
    total += t;
  }
  return total;
}

double vwp_series(double alpha, double tol) {
  require(alpha > 0, "vwp_series: alpha must be positive");
  double q = 2 * alpha;
  if (is_integral(q)) return vwp_series_exact(static_cast<int>(q)).to_double();

  double sum = 1.0;  // i = 0 term
  double term = 1.0;
  const long max_terms = 20'000'000;
  for (long i = 0;; ++i) {
    term *= (i - q) * (2.0 + i) * (2.0 + i) * (0.5 + i) /
            ((i + 1.0) * (q + 3.0 + i) * (1.0 + i) * (2.5 + i));
    sum += term;
    // Terms eventually decay at least like n^(-2a-1); bound the tail by the
    // integral comparison sum_{n>N} n^(-2a-1) <= N^(-2a)/(2a). Valid once the
    // (i - q) factor has settled to one sign.
    if (i >= q + 8) {
      double tail = std::abs(term) * (i + 1.0) / q;
      if (tail <= tol * std::abs(sum)) break;
    }
    if (i > max_terms) throw std::runtime_error("vwp_series: did not converge");
  }
  return sum;
}

Rational nonsep_prob_induced(int alpha, int k) {
  require(alpha >= 1, "nonsep_prob_induced: integer alpha >= 1 required");
  require(k >= 0, "nonsep_prob_induced: k >= 0 required");
  Rational total(0);
  for (int j = 0; j < alpha; ++j) {
    Rational g1 = int_gamma(2L * alpha + 2L * k + 2);
    Rational g2 = int_gamma(2L * alpha + k - j);
    Rational d1 = int_gamma(alpha + k + 1);
    Rational d2 = int_gamma(alpha - j);
    Rational d3 = int_gamma(4L * alpha + 3L * k - j + 2);
    total += Rational(2) * g1 * g1 * g2 * g2 / (d1.pow(3) * d2 * d3);
  }
  return total;
}

double nonsep_prob_induced_f(int alpha, double k) {
  require(alpha >= 1, "nonsep_prob_induced: integer alpha >= 1 required");
  require(k >= 0, "nonsep_prob_induced: k >= 0 required");
  double total = 0;
  for (int j = 0; j < alpha; ++j) {
    double lg = std::numbers::ln2 + 2 * log_gamma(2 * alpha + 2 * k + 2) +
                2 * log_gamma(2 * alpha + k - j) - 3 * log_gamma(alpha + k + 1) -
                log_gamma(alpha - j) - log_gamma(4 * alpha + 3 * k - j + 2);
    total += std::exp(lg);
  }
  return total;
}

Rational nonsep_prob_alpha1_alt(int k) {
  require(k >= 0, "nonsep_prob_alpha1_alt: k >= 0 required");
  Rational num = two_pow(4L * k + 7) * half_poch(static_cast<unsigned>(k) + 2).pow(2);
  Rational den = Rational(BigInt(3)).pow(3L * k + 5) *
                 pochhammer(Rational(1, 3), static_cast<unsigned>(k) + 2) *
                 pochhammer(Rational(2, 3), static_cast<unsigned>(k) + 2);
  return num / den;
}

double incomplete_beta_poly(int alpha, int k, double d0) {
  require(alpha >= 1 && k >= 0, "incomplete_beta_poly: integer alpha >= 1, k >= 0");
  require(d0 >= 0.0 && d0 <= 1.0, "incomplete_beta_poly: d0 must lie in [0,1]");
  double total = 0;
  for (int j = 0; j < alpha; ++j) {
    Rational c = pochhammer(Rational(1 - alpha), static_cast<unsigned>(j)) /
                 pochhammer(Rational(k + 1), static_cast<unsigned>(j) + 1);
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    total += sign * c.to_double() * std::pow(d0, alpha - 1 - j) * std::pow(1 - d0, k + j + 1);
  }
  return total;
}

namespace {

void check_sigma_args(int k, int alpha, int i) {
  require(alpha >= 1 && k >= 0, "sigma: integer alpha >= 1, k >= 0 required");
  require(i >= 0 && i <= k + alpha, "sigma: i out of [0, k+alpha]");
}

// Shared hypergeometric-style sum of the split closed form.
Rational sigma_low_sum(int k, int alpha, int i) {
  Rational s(0);
  for (int j = 0; j < alpha; ++j) {
    s += pochhammer(Rational(1 - alpha), j) * pochhammer(Rational(2 * k + 2 - i), j) /
         (pochhammer(Rational(2 - 2 * alpha), j) * pochhammer(Rational(k + 2 - i), j));
  }
  return s;
}

Rational sigma_high(int k, int alpha, int i) {
  Rational denom = Rational(alpha) * binomial(static_cast<unsigned>(k + alpha), alpha);
  return binomial(static_cast<unsigned>(k + alpha), i) / denom.pow(2);
}

}  // namespace

Rational sigma(int k, int alpha, int i) {
  check_sigma_args(k, alpha, i);
  Rational total(0);
  for (int j = std::max(0, i - k - 1); j < alpha; ++j) {
    Rational num = Rational(factorial(static_cast<unsigned>(k))) *
                   Rational(factorial(static_cast<unsigned>(alpha - 1))) *
                   int_gamma(2L * alpha - 1 - j) * int_gamma(2L * k + j - i + 2);
    Rational den = Rational(factorial(static_cast<unsigned>(i))) *
                   Rational(factorial(static_cast<unsigned>(alpha - 1 - j))) *
                   int_gamma(k + 2L + j - i) * int_gamma(2L * k + 2L * alpha - i + 1);
    total += num / den;
  }
  return total;
}

Rational sigma_split(int k, int alpha, int i) {
  check_sigma_args(k, alpha, i);
  if (i >= k + 1) return sigma_high(k, alpha, i);
  Rational pre = Rational(factorial(static_cast<unsigned>(k))) *
                 int_gamma(2L * k + 2 - i) * int_gamma(2L * alpha - 1) /
                 (Rational(factorial(static_cast<unsigned>(i))) * int_gamma(k + 2L - i) *
                  int_gamma(2L * k + 2L * alpha - i + 1));
  return pre * sigma_low_sum(k, alpha, i);
}

Rational sigma_branch_printed(int k, int alpha, int i) {
  check_sigma_args(k, alpha, i);
  if (i >= k + 1) return sigma_high(k, alpha, i);
  Rational pre = Rational(factorial(static_cast<unsigned>(k))) *
                 int_gamma(2L * k + 2 - i) * int_gamma(2L * alpha - 1) /
                 (Rational(factorial(static_cast<unsigned>(i))) * int_gamma(k + 2L - i) *
                  int_gamma(2L * k + 2L * alpha));
  return pre * sigma_low_sum(k, alpha, i);
}

Rational rel_nonsep_prob(int alpha, int k) {
  require(alpha >= 1 && k >= 0, "rel_nonsep_prob: integer alpha >= 1, k >= 0 required");
  Rational total(0);
  for (int i = 0; i <= k + alpha; ++i) {
    Rational weight = Rational(factorial(static_cast<unsigned>(i))) /
                      half_poch(static_cast<unsigned>(i) + 1);
    Rational iv = integral_I(IntegralSpec::mn(static_cast<unsigned>(2 * k + 2 * alpha - i),
                                              static_cast<unsigned>(i)))
                      .rational();
    total += sigma(k, alpha, i) * weight * iv;
  }
  return Rational(2) * norm_const_induced(alpha, k) * total;
}

Rational rel_nonsep_prob_alpha1(int k) {
  require(k >= 0, "rel_nonsep_prob_alpha1: k >= 0 required");
  Rational total(0);
  for (int j = 0; j <= k + 1; ++j) {
    Rational coeff = binomial(static_cast<unsigned>(k + 1), j) *
                     Rational(factorial(static_cast<unsigned>(j))) /
                     (Rational(k + 1) * Rational(2L * k + 2 - j) *
                      half_poch(static_cast<unsigned>(j) + 1));
    Rational iv = integral_I(IntegralSpec::mn(static_cast<unsigned>(2 * k + 2 - j),
                                              static_cast<unsigned>(j)))
                      .rational();
    total += coeff * iv;
  }
  return Rational(2) * norm_const_induced(1, k) * total;
}

Rational rel_nonsep_prob_alpha1_poch(int k) {
  require(k >= 0, "rel_nonsep_prob_alpha1_poch: k >= 0 required");
  unsigned ku = static_cast<unsigned>(k);
  Rational pre = two_pow(2L * k - 1) * pochhammer(Rational(3, 2), ku).pow(2) *
                 pochhammer(Rational(5, 2), ku) /
                 (Rational(factorial(ku + 1)) * pochhammer(Rational(5, 2), 2 * ku + 1));
  Rational s(0);
  for (int j = 0; j <= k + 1; ++j) {
    s += pochhammer(Rational(-k - 1), j) * pochhammer(Rational(-4L * k - 6), j) /
         (pochhammer(Rational(-2L * k - 2), j) * pochhammer(Rational(-2L * k - 1), j));
  }
  return pre * s;
}

ExactReal min_degenerate_sep_prob_exact(HalfInt alpha) {
  return sep_prob_exact(alpha) * ExactReal(Rational(1, 2));
}

double min_degenerate_sep_prob(double alpha) { return 0.5 * sep_prob(alpha); }

}  // namespace xsep::closedform
