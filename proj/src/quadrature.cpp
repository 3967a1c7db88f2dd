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

#include "xsep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace xsep::quad {

namespace {

// Kronrod-15 abscissae on [0,1] (positive half; even nodes are the Gauss-7
// points) and the matching weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double err;
  int depth;
};

// One G7/K15 pass over a panel; the error estimate is the raw |K - G|.
Panel gk15(const std::function<double(double)>& f, double lo, double hi, int depth,
           long& evaluations) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double v = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
    kron += kWgk[i] * v;
    if (i % 2 == 1) gauss += kWg[i / 2] * v;
  }
  evaluations += 15;
  return Panel{lo, hi, kron * h, std::abs(kron - gauss) * h, depth};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadConfig& cfg) {
  QuadResult out;
  std::vector<Panel> panels{gk15(f, lo, hi, 0, out.evaluations)};
  const std::size_t max_panels = 200'000;

  auto totals = [&panels] {
    double v = 0, e = 0;
    for (const Panel& p : panels) {
      v += p.value;
      e += p.err;
    }
    return std::pair{v, e};
  };

  while (true) {
    auto [value, err] = totals();
    if (err <= std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol)) break;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].err > panels[worst].err) worst = i;
    const Panel p = panels[worst];
    if (p.depth >= cfg.max_depth || panels.size() >= max_panels) {
      out.value = value;
      out.est_error = err;
      throw ConvergenceError("integrate: tolerance not reached", out);
    }
    const double mid = 0.5 * (p.lo + p.hi);
    panels[worst] = gk15(f, p.lo, mid, p.depth + 1, out.evaluations);
    panels.push_back(gk15(f, mid, p.hi, p.depth + 1, out.evaluations));
  }

  // Deterministic final reduction in interval order.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  out.value = 0;
  out.est_error = 0;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.est_error += p.err;
  }
  return out;
}

namespace {

struct Orders {
  double m;
  unsigned n;
};

Orders orders_of(const closedform::IntegralSpec& spec) {
  if (spec.kind == closedform::IntegralSpec::Kind::int_mn)
    return {static_cast<double>(spec.m), spec.n};
  return {2 * spec.alpha, 0};
}

// Inner integrals are driven on relative error only: the family is strictly
// positive and spans absolute scales down to ~1e-19, where a fixed abs_tol
// would end refinement long before the relative target.
QuadConfig inner_config(const QuadConfig& cfg) {
  return QuadConfig{cfg.rel_tol / 50, 0.0, cfg.max_depth};
}

QuadResult nested_2d(const std::function<double(double, double)>& f, double lo_outer,
                     double hi_outer, const QuadConfig& cfg) {
  const QuadConfig inner_cfg = inner_config(cfg);
  const QuadConfig outer_cfg{cfg.rel_tol, 0.0, cfg.max_depth};
  long inner_evals = 0;
  double max_inner_err = 0;
  auto outer_f = [&](double x) {
    QuadResult in = integrate([&](double y) { return f(x, y); }, 0.0, 1.0, inner_cfg);
    inner_evals += in.evaluations;
    max_inner_err = std::max(max_inner_err, in.est_error);
    return in.value;
  };
  QuadResult out = integrate(outer_f, lo_outer, hi_outer, outer_cfg);
  out.evaluations += inner_evals;
  out.est_error += max_inner_err * (hi_outer - lo_outer);
  return out;
}

}  // namespace

QuadResult quad_I_transformed(const closedform::IntegralSpec& spec, const QuadConfig& cfg) {
  const auto [m, n] = orders_of(spec);
  const double scale = std::exp2(-4 * m - 2 * n - 2);
  auto f = [m, n](double u, double y) {
    const double w = (1 - u) / (1 + u);
    const double upow = std::pow(u, 2.0 * n + 2) + 1.0;
    const double uden = std::pow(1 + u, 2.0 * n + 4);
    return upow / uden * std::pow(y, n + 1.0) * std::pow((1 - y) * (1 - w * w * y), m);
  };
  QuadResult r = nested_2d(f, 0.0, 1.0, cfg);
  r.value *= scale;
  r.est_error *= scale;
  return r;
}

QuadResult quad_I_direct(const closedform::IntegralSpec& spec, const QuadConfig& cfg) {
  const auto [m, n] = orders_of(spec);
  // v = b(1 - w^2) removes the (b - v)^(-1/2) factor; a - v = (1-2s)/4 + b w^2
  // is computed from (1-2s) directly so the s -> 1/2 corner stays exact.
  auto f = [m, n](double s, double w) {
    const double b = 0.25 * s * s;
    const double v = b * (1 - w * w);
    const double amv = 0.25 * (1 - 2 * s) + b * w * w;
    const double vm = std::pow(v, m);
    const double t1 = 2 * std::sqrt(b) * vm * std::pow(amv, n + 0.5);
    if (amv <= 0) return t1;  // limit point s = 1/2, w = 0
    const double t2 =
        2 * std::pow(b, n + 1.5) * std::pow(w, 2.0 * n + 2) * vm / std::sqrt(amv);
    return t1 + t2;
  };
  return nested_2d(f, 0.0, 0.5, cfg);
}

QuadResult quad_normalization(double alpha, const QuadConfig& cfg) {
  if (!(alpha > 0)) throw std::domain_error("quad_normalization: alpha must be positive");
  const double log_beta =
      log_gamma(alpha + 1) + 0.5 * std::log(std::numbers::pi) - log_gamma(alpha + 1.5);
  const double prefactor =
      std::exp2(-2 - 4 * alpha) / (alpha * alpha) * std::exp(2 * log_beta);
  QuadConfig one_d{cfg.rel_tol, 0.0, cfg.max_depth};
  QuadResult r = integrate(
      [alpha](double s) { return std::pow((1 - s) * s, 2 * alpha + 1); }, 0.0, 1.0, one_d);
  r.value *= prefactor;
  r.est_error *= prefactor;
  return r;
}

}  // namespace xsep::quad
