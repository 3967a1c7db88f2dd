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

#include "xsep/montecarlo.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace xsep::mc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void check_spec(const SamplerSpec& spec) {
  if (!(spec.alpha > 0)) throw std::domain_error("SamplerSpec: alpha must be positive");
  if (!(spec.k >= 0)) throw std::domain_error("SamplerSpec: k must be nonnegative");
  if (spec.n_samples < 1) throw std::domain_error("SamplerSpec: n_samples must be >= 1");
  if (spec.chunks < 1) throw std::domain_error("SamplerSpec: chunks must be >= 1");
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
}

Rng Rng::for_index(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t sm = seed;
  std::uint64_t base = splitmix64(sm);
  return Rng(base ^ (index * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

double Rng::normal() {
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  return r * std::cos(2.0 * std::numbers::pi * uniform());
}

double Rng::gamma(double shape) {
  if (shape < 1.0) {
    // Boost to shape + 1, then scale back by a uniform power.
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_open(), 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

xstate::DeltaCoords sample_state(const SamplerSpec& spec, std::uint64_t index) {
  check_spec(spec);
  Rng rng = Rng::for_index(spec.seed, index);
  const double a = spec.alpha, k = spec.k;
  xstate::DeltaCoords d;
  d.s1 = rng.beta(2 * a + 2 * k + 2, 2 * a + 2 * k + 2);
  const double u1 = rng.beta(a + k + 1, 0.5);
  const double u2 = rng.beta(a + k + 1, 0.5);
  d.delta1 = 0.25 * (1 - d.s1) * (1 - d.s1) * u1;
  d.delta2 = 0.25 * d.s1 * d.s1 * u2;
  d.s4 = rng.beta(a, k + 1);
  d.s5 = rng.beta(a, k + 1);
  return d;
}

namespace {

struct ChunkSums {
  double sum = 0;
  double sumsq = 0;
};

// Evaluates `stat` on every sample index, chunk by chunk; chunks run
// concurrently and are reduced in chunk order, so results depend only on
// (seed, n_samples, parameters, chunk count).
template <typename Stat>
Estimate reduce_over_samples(const SamplerSpec& spec, const std::string& name, Stat stat) {
  check_spec(spec);
  const std::int64_t n = spec.n_samples;
  const int chunks = spec.chunks;
  std::vector<std::future<ChunkSums>> futures;
  futures.reserve(chunks);
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t lo = n * c / chunks;
    const std::int64_t hi = n * (c + 1) / chunks;
    futures.push_back(std::async(std::launch::async, [&spec, &stat, lo, hi] {
      ChunkSums s;
      for (std::int64_t i = lo; i < hi; ++i) {
        const double v = stat(static_cast<std::uint64_t>(i));
        s.sum += v;
        s.sumsq += v * v;
      }
      return s;
    }));
  }
  ChunkSums total;
  for (auto& f : futures) {
    const ChunkSums s = f.get();
    total.sum += s.sum;
    total.sumsq += s.sumsq;
  }
  Estimate e;
  e.n = n;
  e.seed = spec.seed;
  e.statistic = name;
  e.mean = total.sum / static_cast<double>(n);
  const double var = std::max(0.0, total.sumsq / static_cast<double>(n) - e.mean * e.mean);
  e.std_error = std::sqrt(var / static_cast<double>(n));
  return e;
}

}  // namespace

Estimate estimate_sep_prob(const SamplerSpec& spec) {
  return reduce_over_samples(spec, "sep", [&spec](std::uint64_t i) {
    return xstate::det_xi_pt(sample_state(spec, i)) >= 0 ? 1.0 : 0.0;
  });
}

Estimate estimate_rel_prob(const SamplerSpec& spec) {
  return reduce_over_samples(spec, "rel", [&spec](std::uint64_t i) {
    const xstate::DeltaCoords d = sample_state(spec, i);
    return xstate::det_xi_pt(d) >= xstate::det_xi(d) ? 1.0 : 0.0;
  });
}

Estimate estimate_det_moment(const SamplerSpec& spec, int power) {
  if (spec.k != 0) throw std::domain_error("estimate_det_moment: sampling measure must have k = 0");
  if (power < 0) throw std::domain_error("estimate_det_moment: power must be nonnegative");
  Estimate e = reduce_over_samples(spec, "moment", [&spec, power](std::uint64_t i) {
    return std::pow(xstate::det_xi(sample_state(spec, i)), power);
  });
  e.statistic = "moment^" + std::to_string(power);
  return e;
}

Estimate estimate_min_degenerate(const SamplerSpec& spec) {
  if (spec.k != 0)
    throw std::domain_error("estimate_min_degenerate: boundary measure requires k = 0");
  return reduce_over_samples(spec, "mindeg", [&spec](std::uint64_t i) {
    // s5 = 1 boundary: the s5 factor drops from the density, the rest is the
    // k = 0 factorization.
    Rng rng = Rng::for_index(spec.seed, i);
    const double a = spec.alpha;
    xstate::DeltaCoords d;
    d.s1 = rng.beta(2 * a + 2, 2 * a + 2);
    d.delta1 = 0.25 * (1 - d.s1) * (1 - d.s1) * rng.beta(a + 1, 0.5);
    d.delta2 = 0.25 * d.s1 * d.s1 * rng.beta(a + 1, 0.5);
    d.s4 = rng.beta(a, 1);
    d.s5 = 1.0;
    return xstate::det_xi_pt(d) >= 0 ? 1.0 : 0.0;
  });
}

NegativityReport negativity_count_check(const SamplerSpec& spec) {
  check_spec(spec);
  NegativityReport report;
  report.n = spec.n_samples;
  for (std::int64_t i = 0; i < spec.n_samples; ++i) {
    const xstate::DeltaCoords d = sample_state(spec, static_cast<std::uint64_t>(i));
    xstate::TCoords t = xstate::s_to_t(xstate::delta_to_s(d));
    Rng rng = Rng::for_index(spec.seed ^ 0x5bf0'3635'dcf9'8dd1ULL, static_cast<std::uint64_t>(i));
    t.theta5 = (2 * rng.uniform() - 1) * std::numbers::pi;
    t.theta6 = (2 * rng.uniform() - 1) * std::numbers::pi;
    const xstate::XDensity pt = xstate::partial_transpose(xstate::build_matrix(t));
    const int count = xstate::negative_eigenvalue_count(pt);
    report.max_negative_count = std::max(report.max_negative_count, count);
    if (count > 1) {
      ++report.violations;
      throw std::runtime_error("negativity_count_check: sample with more than one negative eigenvalue");
    }
  }
  return report;
}

}  // namespace xsep::mc
