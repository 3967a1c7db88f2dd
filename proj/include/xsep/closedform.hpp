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

#ifndef XSEP_CLOSEDFORM_HPP
#define XSEP_CLOSEDFORM_HPP

#include "xsep/exact_real.hpp"
#include "xsep/rational.hpp"

namespace xsep::closedform {

/// Selects a member of the I-family: integer orders (m, n), or the real
/// exponent pair (2*alpha, 0).
struct IntegralSpec {
  enum class Kind { int_mn, two_alpha };

  Kind kind = Kind::int_mn;
  unsigned m = 0, n = 0;
  double alpha = 0;

  static IntegralSpec mn(unsigned m, unsigned n) { return {Kind::int_mn, m, n, 0}; }
  static IntegralSpec two_alpha(double alpha);
};

/// Parameters of the weighted measure: weight exponent alpha and determinant
/// power k.
struct MeasureSpec {
  double alpha = 1;
  double k = 0;
};

/// Rational power of two (e may be negative).
Rational two_pow(long e);

// --- normalization constants ---

/// c_alpha = Gamma(4a+4) / (Gamma(a+1)^2 Gamma(a)^2), exact for half-integer a.
ExactReal norm_const(HalfInt alpha);
double norm_const_f(double alpha);

/// c_{alpha,k} = Gamma(4a+4k+4) / (Gamma(k+a+1)^2 Gamma(k+1)^2 Gamma(a)^2)
/// for integer a >= 1, k >= 0.
Rational norm_const_induced(int alpha, int k);

// --- separability probability p(alpha) ---

/// Exact p(alpha) = c_alpha * (4/alpha^2) * I(2 alpha, 0), half-integer alpha.
ExactReal sep_prob_exact(HalfInt alpha);
/// The gamma-ratio form of p(alpha) with quarter-integer arguments removed by
/// the duplication identity: 2^(2a)/pi * G(a+1/2)^2 G(a+3/2) / (G(a+1) G(2a+3/2)).
ExactReal sep_prob_gamma_ratio_exact(HalfInt alpha);
/// Float p(alpha) for any alpha > 0 via log-gamma.
double sep_prob(double alpha);
/// Large-alpha comparator 1/sqrt(2 pi alpha).
double sep_prob_asymptotic(double alpha);
/// 1/I_alpha = 2(4a+3) C(2a+2,2)^2 C(4a+1,2a+2)^2, an integer for 2a in Z+.
BigInt i_alpha_reciprocal(HalfInt alpha);

// --- the I(m,n) integral family ---

/// Closed form of I(m,n); exact for integer orders and for 2*alpha integral.
/// Throws std::domain_error when no exact path exists.
ExactReal integral_I(const IntegralSpec& spec);
double integral_I_f(const IntegralSpec& spec);

/// S(m,n): closed form, and the defining double sum as its in-module oracle.
Rational aux_sum_S(unsigned m, unsigned n);
Rational aux_sum_S_direct(unsigned m, unsigned n);

/// The very-well-poised series behind I(2 alpha, 0). Terminates for
/// 2 alpha in Z+; otherwise truncated with a power-decay tail bound reaching
/// relative error <= tol.
double vwp_series(double alpha, double tol);
Rational vwp_series_exact(int two_alpha);

// --- induced-measure probabilities ---

/// Pr{det xi^PT <= 0} under the (det xi)^k-weighted measure, integer a >= 1.
Rational nonsep_prob_induced(int alpha, int k);
/// Float continuation in real k >= 0 (integer alpha), for exploration only.
double nonsep_prob_induced_f(int alpha, double k);
/// Pochhammer alternate of the alpha = 1 case.
Rational nonsep_prob_alpha1_alt(int k);

/// Sum_j (-1)^j (1-a)_j / (k+1)_{j+1} d0^(a-1-j) (1-d0)^(k+j+1)
///   = int_{d0}^1 v^(a-1) (1-v)^k dv.
double incomplete_beta_poly(int alpha, int k, double d0);

// --- relative probability Pr{det xi^PT <= det xi} ---

/// sigma(k, alpha, i): the direct j-sum (normative).
Rational sigma(int k, int alpha, int i);
/// Split closed forms: binomial form for k+1 <= i <= k+alpha, and the low
/// branch with denominator (2k+2a-i)!, under which both branches reproduce
/// the direct sum.
Rational sigma_split(int k, int alpha, int i);
/// Variant with (2k+2a-1)! in the low-branch prefactor. It matches the direct
/// sum only at i = 1; the value 1 it takes at (k=0, a=1, i=0) against the
/// direct 1/2 is pinned by tests as a regression guard.
Rational sigma_branch_printed(int k, int alpha, int i);

Rational rel_nonsep_prob(int alpha, int k);
/// alpha = 1 specializations: the binomial j-sum and the terminating
/// 3F2-style product form.
Rational rel_nonsep_prob_alpha1(int k);
Rational rel_nonsep_prob_alpha1_poch(int k);

// --- minimally degenerate boundary ---

ExactReal min_degenerate_sep_prob_exact(HalfInt alpha);
double min_degenerate_sep_prob(double alpha);

}  // namespace xsep::closedform

#endif  // XSEP_CLOSEDFORM_HPP
