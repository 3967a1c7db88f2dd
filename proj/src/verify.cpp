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

#include "xsep/verify.hpp"

#include "xsep/closedform.hpp"
#include "xsep/montecarlo.hpp"
#include "xsep/quadrature.hpp"
#include "xsep/records.hpp"
#include "xsep/xstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xsep::verify {

namespace cf = xsep::closedform;

namespace {

Check exact_check(const std::string& name, const Rational& got, const Rational& want) {
  return {name, got == want, want.str(), got.str(), "exact"};
}

Check exact_check(const std::string& name, const ExactReal& got, const ExactReal& want) {
  return {name, got == want, want.str(), got.str(), "exact"};
}

Check close_check(const std::string& name, double got, double want, double tol,
                  const char* kind = "abs") {
  double err = std::abs(got - want);
  bool pass = std::string(kind) == "rel" ? err <= tol * std::abs(want) : err <= tol;
  return {name, pass, cli::fmt17(want), cli::fmt17(got), std::string(kind) + " " + cli::fmt17(tol)};
}

Check bool_check(const std::string& name, bool pass, const std::string& detail) {
  return {name, pass, "true", detail, "-"};
}

Check sigma_band_check(const std::string& name, const mc::Estimate& est, double target) {
  double band = 4 * est.std_error;
  bool pass = std::abs(est.mean - target) <= band;
  std::ostringstream obs;
  obs << cli::fmt17(est.mean) << " +- " << cli::fmt17(est.std_error);
  return {name, pass, cli::fmt17(target), obs.str(), "4 sigma (" + cli::fmt17(band) + ")"};
}

Rational int_gamma(long n) { return Rational(factorial(static_cast<unsigned>(n - 1))); }

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// --- small exact-polynomial helpers for the degree-structure check ---

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly lagrange_fit(const std::vector<std::pair<Rational, Rational>>& pts) {
  Poly acc(pts.size(), Rational(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Poly basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, Poly{-pts[j].first, Rational(1)});
      denom *= pts[i].first - pts[j].first;
    }
    Rational scale = pts[i].second / denom;
    for (std::size_t c = 0; c < basis.size(); ++c) acc[c] += basis[c] * scale;
  }
  return acc;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

}  // namespace

std::vector<Check> checks_headline_exact() {
  std::vector<Check> out;
  out.push_back(exact_check("p(1)", cf::sep_prob_exact(HalfInt::of(1)),
                            ExactReal(Rational(2, 5))));
  out.push_back(exact_check("p(2)", cf::sep_prob_exact(HalfInt::of(2)),
                            ExactReal(Rational(2, 7))));
  out.push_back(exact_check("p(1/2)", cf::sep_prob_exact(HalfInt::halves(1)),
                            ExactReal(Rational(16, 3), -4)));
  return out;
}

std::vector<Check> checks_float_large_alpha() {
  std::vector<Check> out;
  out.push_back(close_check("p(10)", cf::sep_prob(10.0), 0.12683, 5e-6));
  out.push_back(close_check("asymptotic 1/sqrt(20 pi)", cf::sep_prob_asymptotic(10.0), 0.12616, 5e-6));
  return out;
}

std::vector<Check> checks_integral_grid(unsigned max_order) {
  std::vector<Check> out;
  quad::QuadConfig cfg;
  for (unsigned m = 0; m <= max_order; ++m) {
    for (unsigned n = 0; n <= max_order; ++n) {
      auto spec = cf::IntegralSpec::mn(m, n);
      double closed = cf::integral_I(spec).to_double();
      double qt = quad::quad_I_transformed(spec, cfg).value;
      double qd = quad::quad_I_direct(spec, cfg).value;
      std::string tag = "I(" + std::to_string(m) + "," + std::to_string(n) + ")";
      double worst = std::max({rel_err(qt, closed), rel_err(qd, closed), rel_err(qd, qt)});
      Check c{tag + " closed/transformed/direct", worst <= 1e-9, cli::fmt17(closed),
              cli::fmt17(qt) + " / " + cli::fmt17(qd), "rel 1e-09"};
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Check> checks_real_alpha_bridge() {
  std::vector<Check> out;
  quad::QuadConfig cfg;
  for (double alpha : {0.3, 0.75, 1.25, 2.5}) {
    auto spec = cf::IntegralSpec::two_alpha(alpha);
    double closed = cf::integral_I_f(spec);
    double q = 2 * alpha;
    double prefactor = std::exp2(-4 * q - 2) / (3 * (q + 1) * (q + 2));
    double series = prefactor * cf::vwp_series(alpha, 1e-10);
    double quad_v = quad::quad_I_transformed(spec, cfg).value;
    std::string tag = "I(2a,0) a=" + cli::fmt17(alpha);
    double worst = std::max({rel_err(series, closed), rel_err(quad_v, closed)});
    out.push_back(Check{tag + " closed/series/quad", worst <= 1e-8, cli::fmt17(closed),
                        cli::fmt17(series) + " / " + cli::fmt17(quad_v), "rel 1e-08"});
  }
  for (int q = 1; q <= 10; ++q) {
    ExactReal via_sum = cf::integral_I(cf::IntegralSpec::two_alpha(q / 2.0));
    ExactReal via_mn = cf::integral_I(cf::IntegralSpec::mn(static_cast<unsigned>(q), 0));
    out.push_back(exact_check("I(2a,0)==I(m,0) at 2a=" + std::to_string(q), via_sum, via_mn));
  }
  return out;
}

std::vector<Check> checks_induced_consistency() {
  std::vector<Check> out;
  const std::array<Rational, 7> alpha1{Rational(3, 5),    Rational(5, 14),
                                       Rational(7, 33),   Rational(18, 143),
                                       Rational(33, 442), Rational(143, 3230),
                                       Rational(195, 7429)};
  for (int k = 0; k <= 6; ++k) {
    Rational gamma_form = cf::nonsep_prob_induced(1, k);
    Rational poch_form = cf::nonsep_prob_alpha1_alt(k);
    out.push_back(exact_check("nonsep(1," + std::to_string(k) + ") gamma form", gamma_form,
                              alpha1[static_cast<std::size_t>(k)]));
    out.push_back(exact_check("nonsep(1," + std::to_string(k) + ") poch form", poch_form,
                              gamma_form));
  }
  Rational one_minus_p2 = Rational(1) - cf::sep_prob_exact(HalfInt::of(2)).rational();
  out.push_back(exact_check("nonsep(2,0)", cf::nonsep_prob_induced(2, 0), Rational(5, 7)));
  out.push_back(exact_check("nonsep(2,0)==1-p(2)", cf::nonsep_prob_induced(2, 0), one_minus_p2));
  out.push_back(exact_check("nonsep(2,1)", cf::nonsep_prob_induced(2, 1), Rational(49, 99)));
  return out;
}

std::vector<Check> checks_half_relations() {
  std::vector<Check> out;
  for (int a = 1; a <= 3; ++a) {
    Rational p = cf::sep_prob_exact(HalfInt::of(a)).rational();
    Rational want = Rational(1) - p / Rational(2);
    out.push_back(exact_check("rel_nonsep(" + std::to_string(a) + ",0)==1-p/2",
                              cf::rel_nonsep_prob(a, 0), want));
    out.push_back(exact_check("min_degenerate(" + std::to_string(a) + ")==p/2",
                              cf::min_degenerate_sep_prob_exact(HalfInt::of(a)),
                              ExactReal(p / Rational(2))));
  }
  return out;
}

std::vector<Check> checks_mc_cross(const Options& opt) {
  std::vector<Check> out;
  const double p_half = cf::sep_prob_exact(HalfInt::halves(1)).to_double();
  std::uint64_t run = 0;
  auto spec = [&](double a, double k) {
    mc::SamplerSpec s;
    s.alpha = a;
    s.k = k;
    s.seed = opt.seed + 1000 * ++run;
    s.n_samples = opt.mc_samples;
    return s;
  };

  struct Target {
    double alpha, k, value;
  };
  // Pr{det xi^PT >= 0}
  for (const Target& t : {Target{1, 0, 0.4}, Target{2, 0, 2.0 / 7}, Target{1, 1, 9.0 / 14},
                          Target{0.5, 0, p_half}}) {
    auto est = mc::estimate_sep_prob(spec(t.alpha, t.k));
    out.push_back(sigma_band_check(
        "mc sep(" + cli::fmt17(t.alpha) + "," + cli::fmt17(t.k) + ")", est, t.value));
  }
  // Pr{det xi^PT >= det xi} = half-relation at k = 0; 1 - rel_nonsep generally
  for (const Target& t : {Target{1, 0, 0.2}, Target{2, 0, 1.0 / 7}, Target{1, 1, 11.0 / 42},
                          Target{0.5, 0, p_half / 2}}) {
    auto est = mc::estimate_rel_prob(spec(t.alpha, t.k));
    out.push_back(sigma_band_check(
        "mc rel(" + cli::fmt17(t.alpha) + "," + cli::fmt17(t.k) + ")", est, t.value));
  }
  for (const Target& t : {Target{1, 0, 0.2}, Target{2, 0, 1.0 / 7}, Target{0.5, 0, p_half / 2}}) {
    auto est = mc::estimate_min_degenerate(spec(t.alpha, 0));
    out.push_back(sigma_band_check("mc mindeg(" + cli::fmt17(t.alpha) + ")", est, t.value));
  }
  out.push_back(sigma_band_check("mc E[det] alpha=1",
                                 mc::estimate_det_moment(spec(1, 0), 1), 1.0 / 1980));
  // Full integer table alpha in {1,2}, k in {0,1,2} against the exact forms.
  for (int a = 1; a <= 2; ++a) {
    for (int k = 0; k <= 2; ++k) {
      double sep = 1.0 - cf::nonsep_prob_induced(a, k).to_double();
      double rel = 1.0 - cf::rel_nonsep_prob(a, k).to_double();
      auto tag = "(" + std::to_string(a) + "," + std::to_string(k) + ")";
      out.push_back(sigma_band_check("mc sep table " + tag,
                                     mc::estimate_sep_prob(spec(a, k)), sep));
      out.push_back(sigma_band_check("mc rel table " + tag,
                                     mc::estimate_rel_prob(spec(a, k)), rel));
    }
  }
  return out;
}

std::vector<Check> checks_sigma_structure() {
  std::vector<Check> out;
  out.push_back(exact_check("sigma(0,1,0) direct", cf::sigma(0, 1, 0), Rational(1, 2)));
  out.push_back(exact_check("sigma printed-branch(0,1,0) stays 1 (documented mismatch)",
                            cf::sigma_branch_printed(0, 1, 0), Rational(1)));
  bool direct_vs_printed_differ = cf::sigma(0, 1, 0) != cf::sigma_branch_printed(0, 1, 0);
  out.push_back(bool_check("sigma direct 1/2 != printed branch 1 at (k=0,a=1,i=0)",
                           direct_vs_printed_differ,
                           cf::sigma(0, 1, 0).str() + " vs " + cf::sigma_branch_printed(0, 1, 0).str()));
  for (int a : {2, 3}) {
    bool all_match = true;
    std::string first_bad;
    for (int k = 0; k <= 4; ++k) {
      for (int i = 0; i <= k + a; ++i) {
        if (cf::sigma(k, a, i) != cf::sigma_split(k, a, i)) {
          all_match = false;
          if (first_bad.empty())
            first_bad = "(k=" + std::to_string(k) + ",i=" + std::to_string(i) + ")";
        }
      }
    }
    out.push_back(bool_check("sigma direct == split closed form, alpha=" + std::to_string(a) +
                                 ", k<=4, all i",
                             all_match, all_match ? "all match" : "mismatch at " + first_bad));
  }
  // alpha = 1: the sigma assembly must equal both published alpha=1 routes.
  for (int k = 0; k <= 6; ++k) {
    Rational general = cf::rel_nonsep_prob(1, k);
    out.push_back(exact_check("rel_nonsep(1," + std::to_string(k) + ") sigma==binomial",
                              general, cf::rel_nonsep_prob_alpha1(k)));
    out.push_back(exact_check("rel_nonsep(1," + std::to_string(k) + ") sigma==poch",
                              general, cf::rel_nonsep_prob_alpha1_poch(k)));
  }
  return out;
}

namespace {

struct SearchResult {
  double best = 0;
  xstate::DeltaCoords arg;
};

xstate::DeltaCoords from_unit_cube(const std::array<double, 5>& x) {
  xstate::DeltaCoords d;
  d.s1 = x[0];
  d.delta1 = 0.25 * (1 - x[0]) * (1 - x[0]) * x[1];
  d.delta2 = 0.25 * x[0] * x[0] * x[2];
  d.s4 = x[3];
  d.s5 = x[4];
  return d;
}

template <typename F>
SearchResult pattern_search_max(F objective) {
  const int grid = 9;
  std::array<double, 5> best_x{};
  double best = -1e300;
  std::array<int, 5> idx{};
  for (idx[0] = 0; idx[0] < grid; ++idx[0])
    for (idx[1] = 0; idx[1] < grid; ++idx[1])
      for (idx[2] = 0; idx[2] < grid; ++idx[2])
        for (idx[3] = 0; idx[3] < grid; ++idx[3])
          for (idx[4] = 0; idx[4] < grid; ++idx[4]) {
            std::array<double, 5> x;
            for (int i = 0; i < 5; ++i) x[i] = idx[i] / (grid - 1.0);
            double v = objective(from_unit_cube(x));
            if (v > best) {
              best = v;
              best_x = x;
            }
          }
  for (double step = 0.125; step > 1e-10; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int i = 0; i < 5; ++i) {
        for (double dir : {-1.0, 1.0}) {
          std::array<double, 5> x = best_x;
          x[i] = std::clamp(x[i] + dir * step, 0.0, 1.0);
          double v = objective(from_unit_cube(x));
          if (v > best) {
            best = v;
            best_x = x;
            improved = true;
          }
        }
      }
    }
  }
  return {best, from_unit_cube(best_x)};
}

}  // namespace

std::vector<Check> checks_extreme_search() {
  std::vector<Check> out;
  auto det = [](const xstate::DeltaCoords& d) { return xstate::det_xi(d); };
  auto neg_pt = [](const xstate::DeltaCoords& d) { return -xstate::det_xi_pt(d); };
  auto diff = [](const xstate::DeltaCoords& d) { return xstate::det_diff(d); };

  SearchResult r1 = pattern_search_max(det);
  SearchResult r2 = pattern_search_max(neg_pt);
  SearchResult r3 = pattern_search_max(diff);
  out.push_back(close_check("search max det_xi", r1.best, 1.0 / 256, 1e-6));
  out.push_back(close_check("search min det_xi_pt", -r2.best, -1.0 / 16, 1e-6));
  out.push_back(close_check("search max det_xi_pt-det_xi", r3.best, 1.0 / 432, 1e-6));
  out.push_back(close_check("max diff attained near s1=1/3", r3.arg.s1, 1.0 / 3, 1e-3));

  bool no_overshoot = r1.best <= 1.0 / 256 + 1e-9 && r2.best <= 1.0 / 16 + 1e-9 &&
                      r3.best <= 1.0 / 432 + 1e-9;
  // Random probe: no sampled state may beat the extremes either.
  mc::Rng rng(99);
  for (int i = 0; i < 200000 && no_overshoot; ++i) {
    std::array<double, 5> x;
    for (double& xi : x) xi = rng.uniform();
    xstate::DeltaCoords d = from_unit_cube(x);
    no_overshoot = xstate::det_xi(d) <= 1.0 / 256 + 1e-9 &&
                   -xstate::det_xi_pt(d) <= 1.0 / 16 + 1e-9 &&
                   xstate::det_diff(d) <= 1.0 / 432 + 1e-9;
  }
  out.push_back(bool_check("extremes never exceeded by more than 1e-9", no_overshoot,
                           no_overshoot ? "bounded" : "exceeded"));

  // The published witnesses themselves.
  for (const auto& e : xstate::extreme_points()) {
    double v = e.label == "max det_xi"             ? xstate::det_xi(e.point)
               : e.label == "min det_xi_pt"        ? xstate::det_xi_pt(e.point)
                                                   : xstate::det_diff(e.point);
    out.push_back(close_check("witness " + e.label, v, e.value, 1e-15));
  }
  return out;
}

std::vector<Check> checks_matrix_invariants(const Options& opt) {
  std::vector<Check> out;
  const std::int64_t n = 10000;
  mc::SamplerSpec spec;
  spec.alpha = 1;
  spec.k = 0;
  spec.seed = opt.seed;
  spec.n_samples = n;

  mc::Rng phase_rng(opt.seed ^ 0xabcdef12345ULL);
  std::int64_t det_fail = 0, pt_fail = 0, block_fail = 0;
  auto within = [](double got, double want) {
    return std::abs(got - want) <= std::max(1e-12 * std::max(std::abs(got), std::abs(want)), 1e-15);
  };
  for (std::int64_t i = 0; i < n; ++i) {
    xstate::DeltaCoords d = mc::sample_state(spec, static_cast<std::uint64_t>(i));
    xstate::TCoords t = xstate::s_to_t(xstate::delta_to_s(d));
    t.theta5 = (2 * phase_rng.uniform() - 1) * std::numbers::pi;
    t.theta6 = (2 * phase_rng.uniform() - 1) * std::numbers::pi;
    xstate::XDensity x = xstate::build_matrix(t);
    if (!within(xstate::det_dense(x), t.t1 * t.t2 * t.t3 * t.t4)) ++det_fail;
    xstate::XDensity pt = xstate::partial_transpose(x);
    if (!within(xstate::det_dense(pt), xstate::det_xi_pt(d))) ++pt_fail;
    double block = (x.e11 * x.e44 - std::norm(x.e23)) * (x.e22 * x.e33 - std::norm(x.e14));
    if (!within(xstate::det_dense(pt), block)) ++block_fail;
  }
  out.push_back(bool_check("dense det == t1 t2 t3 t4 on 1e4 states", det_fail == 0,
                           std::to_string(det_fail) + " failures"));
  out.push_back(bool_check("dense det(PT) == (d1-s5 d2)(d2-s4 d1) on 1e4 states", pt_fail == 0,
                           std::to_string(pt_fail) + " failures"));
  out.push_back(bool_check("dense det(PT) == block product on 1e4 states", block_fail == 0,
                           std::to_string(block_fail) + " failures"));

  bool neg_ok = true;
  int max_count = 0;
  try {
    auto report = mc::negativity_count_check(spec);
    max_count = report.max_negative_count;
  } catch (const std::runtime_error&) {
    neg_ok = false;
  }
  out.push_back(bool_check("PT has at most one negative eigenvalue on 1e4 states", neg_ok,
                           "max count " + std::to_string(max_count)));
  return out;
}

std::vector<Check> checks_identities_extra() {
  std::vector<Check> out;

  bool dup_ok = true;
  for (int t = 1; t <= 20; ++t) {
    ExactReal lhs = gamma_half(HalfInt::halves(2 * t));
    ExactReal rhs = ExactReal(cf::two_pow(t - 1), -1) * gamma_half(HalfInt::halves(t)) *
                    gamma_half(HalfInt::halves(t + 1));
    if (lhs != rhs) dup_ok = false;
  }
  out.push_back(bool_check("duplication identity, u = 1/2 .. 10", dup_ok, "exact"));

  double worst_lg = 0;
  for (int t = 1; t <= 80; ++t) {
    double exact = gamma_half(HalfInt::halves(t)).to_double();
    worst_lg = std::max(worst_lg, rel_err(std::exp(log_gamma(0.5 * t)), exact));
  }
  out.push_back(Check{"exp(log_gamma) vs exact gamma on half-integers [1/2,40]", worst_lg <= 1e-12,
                      "<= 1e-12", cli::fmt17(worst_lg), "rel 1e-12"});

  bool s_ok = true;
  for (unsigned m = 0; m <= 8 && s_ok; ++m)
    for (unsigned n = 0; n <= 8 && s_ok; ++n)
      if (cf::aux_sum_S(m, n) != cf::aux_sum_S_direct(m, n)) s_ok = false;
  out.push_back(bool_check("S(m,n) double sum == closed form, m,n <= 8", s_ok, "exact"));
  out.push_back(exact_check("S(0,0)", cf::aux_sum_S(0, 0), Rational(2)));
  out.push_back(exact_check("S(1,1)", cf::aux_sum_S(1, 1), Rational(32, 15)));

  bool chain_ok = true;
  for (int t = 1; t <= 8; ++t)
    if (cf::sep_prob_exact(HalfInt::halves(t)) != cf::sep_prob_gamma_ratio_exact(HalfInt::halves(t)))
      chain_ok = false;
  out.push_back(bool_check("p(a): product form == duplication-reduced ratio form, 2a = 1..8",
                           chain_ok, "exact"));

  out.push_back(exact_check("vwp series alpha=1", cf::vwp_series_exact(2), Rational(128, 175)));
  bool vwp_ok = true;
  for (int q = 1; q <= 6; ++q) {
    Rational pre = cf::two_pow(-4L * q - 2) / (Rational(3) * Rational(q + 1) * Rational(q + 2));
    Rational lhs = cf::integral_I(cf::IntegralSpec::two_alpha(q / 2.0)).rational();
    if (lhs != pre * cf::vwp_series_exact(q)) vwp_ok = false;
  }
  out.push_back(bool_check("I(2a,0) == prefactor * vwp sum, 2a = 1..6", vwp_ok, "exact"));

  out.push_back(exact_check("1/I_a at a=1/2", Rational(cf::i_alpha_reciprocal(HalfInt::halves(1))),
                            Rational(90)));
  out.push_back(exact_check("1/I_a at a=1", Rational(cf::i_alpha_reciprocal(HalfInt::of(1))),
                            Rational(12600)));
  out.push_back(exact_check("1/I_a at a=2", Rational(cf::i_alpha_reciprocal(HalfInt::of(2))),
                            Rational(34927200)));
  bool rec_ok = true;
  for (int t = 1; t <= 8; ++t) {
    Rational a = HalfInt::halves(t).rational();
    Rational i_alpha = (Rational(4) / (a * a)) *
                       cf::integral_I(cf::IntegralSpec::two_alpha(0.5 * t)).rational();
    if (i_alpha * Rational(cf::i_alpha_reciprocal(HalfInt::halves(t))) != Rational(1))
      rec_ok = false;
  }
  out.push_back(bool_check("I_a * (integer reciprocal) == 1, 2a = 1..8", rec_ok, "exact"));

  out.push_back(exact_check("c_1", cf::norm_const(HalfInt::of(1)), ExactReal(Rational(5040))));
  out.push_back(exact_check("c_2", cf::norm_const(HalfInt::of(2)), ExactReal(Rational(9979200))));
  out.push_back(exact_check("c_1/2", cf::norm_const(HalfInt::halves(1)),
                            ExactReal(Rational(480), -4)));
  out.push_back(exact_check("c_{1,1}", cf::norm_const_induced(1, 1), Rational(9979200)));
  out.push_back(exact_check("c_{2,1}", cf::norm_const_induced(2, 1), Rational(36324288000LL)));

  // Degree/positivity structure of the induced nonseparability probability.
  for (int a : {2, 3, 4}) {
    auto q_of = [a](int k) {
      Rational pr = cf::nonsep_prob_induced(a, k);
      Rational scale = Rational(2) * int_gamma(a + k + 2) * int_gamma(4L * a + 3L * k + 2) /
                       int_gamma(2L * a + 2L * k + 3).pow(2);
      return pr * scale;
    };
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= 2 * a - 3; ++k) pts.emplace_back(Rational(k), q_of(k));
    Poly poly = lagrange_fit(pts);
    bool degree_ok = poly.size() == static_cast<std::size_t>(2 * a - 2) &&
                     !poly.back().is_zero();
    bool coeff_ok = true;
    for (const Rational& c : poly)
      if (!(c > Rational(0))) coeff_ok = false;
    bool predict_ok = true;
    for (int k = 2 * a - 2; k <= 2 * a + 1; ++k)
      if (poly_eval(poly, Rational(k)) != q_of(k)) predict_ok = false;
    out.push_back(bool_check("nonsep polynomial factor, alpha=" + std::to_string(a) +
                                 ": degree 2a-3, positive coefficients, extrapolates",
                             degree_ok && coeff_ok && predict_ok,
                             degree_ok ? (coeff_ok ? "structure holds" : "nonpositive coefficient")
                                       : "wrong degree"));
  }

  bool mono = true;
  double prev = cf::sep_prob(0.25);
  for (double a = 0.5; a <= 12.0 + 1e-9; a += 0.25) {
    double cur = cf::sep_prob(a);
    if (!(cur < prev)) mono = false;
    prev = cur;
  }
  out.push_back(bool_check("p(a) strictly decreasing on 0.25..12", mono, "monotone"));
  double asym = 2 * std::numbers::pi * 200.0 * std::pow(cf::sep_prob(200.0), 2);
  out.push_back(close_check("2 pi a p(a)^2 -> 1 at a=200", asym, 1.0, 0.02));
  return out;
}

std::vector<Check> checks_quad_extra() {
  std::vector<Check> out;
  quad::QuadConfig cfg;

  auto qn1 = quad::quad_normalization(1.0, cfg);
  auto qn2 = quad::quad_normalization(2.0, cfg);
  auto qnh = quad::quad_normalization(0.5, cfg);
  out.push_back(close_check("normalization integral, alpha=1", qn1.value, 1.0 / 5040, 1e-12));
  out.push_back(close_check("normalization integral, alpha=2", qn2.value, 1.0 / 9979200, 1e-12));
  out.push_back(close_check("normalization integral, alpha=1/2", qnh.value,
                            std::pow(std::numbers::pi, 2) / 480, 1e-10));

  auto direct_1 = quad::quad_I_direct(cf::IntegralSpec::two_alpha(1.0), cfg);
  out.push_back(close_check("direct scheme at 2a=2 vs 1/50400", direct_1.value, 1.0 / 50400,
                            1e-9, "rel"));

  double beta_poly = cf::incomplete_beta_poly(3, 2, 0.5);
  auto beta_quad = quad::integrate([](double v) { return v * v * (1 - v) * (1 - v); }, 0.5, 1.0,
                                   cfg);
  out.push_back(close_check("incomplete beta (a=3,k=2,d0=1/2) vs quadrature", beta_poly,
                            beta_quad.value, 1e-12));
  out.push_back(close_check("incomplete beta (a=3,k=2,d0=1/2) vs 1/60", beta_poly, 1.0 / 60,
                            1e-12));
  out.push_back(close_check("incomplete beta single-term case (a=1,k=3,d0=0.3)",
                            cf::incomplete_beta_poly(1, 3, 0.3), std::pow(0.7, 4) / 4, 1e-15));
  out.push_back(close_check("incomplete beta complete case (d0=0)",
                            cf::incomplete_beta_poly(4, 2, 0.0),
                            Rational(factorial(3) * factorial(2), factorial(6)).to_double(),
                            1e-15));

  // Error estimates must bound the truth on nearly all of the grid.
  int covered = 0, total = 0;
  for (unsigned m = 0; m <= 6; ++m) {
    for (unsigned n = 0; n <= 6; ++n) {
      auto spec = cf::IntegralSpec::mn(m, n);
      double exact = cf::integral_I(spec).to_double();
      for (auto* scheme : {&quad::quad_I_transformed, &quad::quad_I_direct}) {
        auto r = (*scheme)(spec, cfg);
        ++total;
        if (r.est_error >= std::abs(r.value - exact)) ++covered;
      }
    }
  }
  out.push_back(bool_check("est_error bounds true error on >= 99% of grid",
                           covered * 100 >= total * 99,
                           std::to_string(covered) + "/" + std::to_string(total)));
  return out;
}

std::vector<Check> checks_sampler(const Options& opt) {
  std::vector<Check> out;

  mc::SamplerSpec spec;
  spec.alpha = 1;
  spec.k = 0;
  spec.seed = opt.seed;
  spec.n_samples = 200000;
  auto e1 = mc::estimate_sep_prob(spec);
  auto e2 = mc::estimate_sep_prob(spec);
  out.push_back(bool_check("identical spec gives bit-identical estimate",
                           e1.mean == e2.mean && e1.std_error == e2.std_error,
                           cli::fmt17(e1.mean)));
  auto d1 = mc::sample_state(spec, 42);
  auto d2 = mc::sample_state(spec, 42);
  out.push_back(bool_check("sample_state is a pure function of (spec, index)",
                           d1.s1 == d2.s1 && d1.delta1 == d2.delta1 && d1.delta2 == d2.delta2 &&
                               d1.s4 == d2.s4 && d1.s5 == d2.s5,
                           "index 42 reproduces"));

  // Kolmogorov-Smirnov on the s1 marginal; the shapes are integers so the
  // beta CDF is the exact binomial tail sum.
  auto beta_cdf_int = [](int a, int b, double x) {
    double total = 0;
    int n = a + b - 1;
    for (int j = a; j <= n; ++j)
      total += binomial(static_cast<unsigned>(n), j).to_double() * std::pow(x, j) *
               std::pow(1 - x, n - j);
    return total;
  };
  struct KsCase {
    double alpha, k;
    int shape;
  };
  for (const KsCase& c : {KsCase{1, 0, 4}, KsCase{2, 1, 8}, KsCase{0.5, 0, 3}}) {
    mc::SamplerSpec s;
    s.alpha = c.alpha;
    s.k = c.k;
    s.seed = opt.seed + 31;
    s.n_samples = 100000;
    std::vector<double> xs(static_cast<std::size_t>(s.n_samples));
    for (std::size_t i = 0; i < xs.size(); ++i)
      xs[i] = mc::sample_state(s, static_cast<std::uint64_t>(i)).s1;
    std::sort(xs.begin(), xs.end());
    double dmax = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double f = beta_cdf_int(c.shape, c.shape, xs[i]);
      dmax = std::max({dmax, f - static_cast<double>(i) / n,
                       static_cast<double>(i + 1) / n - f});
    }
    const double crit = 1.9495 / std::sqrt(n);  // Kolmogorov critical value at 1e-3
    out.push_back(Check{"KS s1 ~ Beta(" + std::to_string(c.shape) + "," + std::to_string(c.shape) +
                            ") at (a=" + cli::fmt17(c.alpha) + ",k=" + cli::fmt17(c.k) + ")",
                        dmax < crit, "< " + cli::fmt17(crit), cli::fmt17(dmax), "KS 1e-3"});
  }

  // Beta-factor moments.
  {
    mc::SamplerSpec s;
    s.alpha = 1;
    s.k = 0;
    s.seed = opt.seed + 77;
    s.n_samples = 1000000;
    double sum_s1 = 0, sum_s1sq = 0, sum_s4 = 0;
    for (std::int64_t i = 0; i < s.n_samples; ++i) {
      auto d = mc::sample_state(s, static_cast<std::uint64_t>(i));
      sum_s1 += d.s1;
      sum_s1sq += d.s1 * d.s1;
      sum_s4 += d.s4;
    }
    double n = static_cast<double>(s.n_samples);
    double mean_s1 = sum_s1 / n;
    double var_s1 = sum_s1sq / n - mean_s1 * mean_s1;
    out.push_back(close_check("E[s1]=1/2 at (1,0)", mean_s1, 0.5,
                              4 * std::sqrt((1.0 / 36) / n)));
    out.push_back(close_check("Var[s1]=1/36 at (1,0)", var_s1, 1.0 / 36, 0.05 / 36, "abs"));
    out.push_back(close_check("E[s4]=1/2 at (1,0)", sum_s4 / n, 0.5,
                              4 * std::sqrt((1.0 / 12) / n)));
  }
  {
    mc::SamplerSpec s;
    s.alpha = 2;
    s.k = 1;
    s.seed = opt.seed + 78;
    s.n_samples = 1000000;
    double sum_u1 = 0, sum_u1sq = 0;
    for (std::int64_t i = 0; i < s.n_samples; ++i) {
      auto d = mc::sample_state(s, static_cast<std::uint64_t>(i));
      double bound = 0.25 * (1 - d.s1) * (1 - d.s1);
      double u1 = bound > 0 ? d.delta1 / bound : 0;
      sum_u1 += u1;
      sum_u1sq += u1 * u1;
    }
    double n = static_cast<double>(s.n_samples);
    double mean = sum_u1 / n;
    double se = std::sqrt(std::max(0.0, sum_u1sq / n - mean * mean) / n);
    out.push_back(close_check("E[u1]=8/9 at (2,1)", mean, 8.0 / 9, 4 * se));
  }

  // std_error must scale like n^(-1/2).
  std::vector<double> scaled;
  for (std::int64_t n : {10000, 100000, 1000000}) {
    mc::SamplerSpec s;
    s.alpha = 1;
    s.k = 0;
    s.seed = opt.seed + 5;
    s.n_samples = n;
    scaled.push_back(mc::estimate_sep_prob(s).std_error * std::sqrt(static_cast<double>(n)));
  }
  double ratio = *std::max_element(scaled.begin(), scaled.end()) /
                 *std::min_element(scaled.begin(), scaled.end());
  out.push_back(Check{"std_error * sqrt(n) constant within 20% over n = 1e4..1e6", ratio <= 1.2,
                      "<= 1.2", cli::fmt17(ratio), "ratio"});

  // Negativity property at a second alpha.
  mc::SamplerSpec shalf;
  shalf.alpha = 0.5;
  shalf.k = 0;
  shalf.seed = opt.seed + 9;
  shalf.n_samples = 10000;
  bool ok = true;
  int max_count = 0;
  try {
    max_count = mc::negativity_count_check(shalf).max_negative_count;
  } catch (const std::runtime_error&) {
    ok = false;
  }
  out.push_back(bool_check("negativity check alpha=1/2, 1e4 states", ok,
                           "max count " + std::to_string(max_count)));
  return out;
}

std::vector<Check> run_suite(const std::string& suite, const Options& opt) {
  auto append = [](std::vector<Check>& dst, std::vector<Check> src) {
    for (auto& c : src) dst.push_back(std::move(c));
  };
  std::vector<Check> out;
  if (suite == "identities") {
    append(out, checks_headline_exact());
    append(out, checks_float_large_alpha());
    append(out, checks_induced_consistency());
    append(out, checks_half_relations());
    append(out, checks_sigma_structure());
    append(out, checks_identities_extra());
  } else if (suite == "closed-vs-quad") {
    append(out, checks_integral_grid());
    append(out, checks_real_alpha_bridge());
    append(out, checks_quad_extra());
  } else if (suite == "closed-vs-mc") {
    append(out, checks_mc_cross(opt));
  } else if (suite == "sampler") {
    append(out, checks_sampler(opt));
  } else if (suite == "extremes") {
    append(out, checks_extreme_search());
    append(out, checks_matrix_invariants(opt));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string format_report(const std::vector<Check>& checks) {
  std::ostringstream os;
  int failures = 0;
  for (const Check& c : checks) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name << "  expected " << c.expected << "  observed "
       << c.observed << "  tol " << c.tolerance << "\n";
    if (!c.pass) ++failures;
  }
  os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
     << " (" << checks.size() << " total)\n";
  return os.str();
}

}  // namespace xsep::verify
