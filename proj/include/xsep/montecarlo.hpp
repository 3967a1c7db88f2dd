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

#ifndef XSEP_MONTECARLO_HPP
#define XSEP_MONTECARLO_HPP

#include "xsep/xstate.hpp"

#include <cstdint>
#include <string>

namespace xsep::mc {

/// Parameters of a sampling run. Identical specs (including chunk count)
/// produce bit-identical estimates.
struct SamplerSpec {
  double alpha = 1;
  double k = 0;
  std::uint64_t seed = 0;
  std::int64_t n_samples = 1;
  int chunks = 64;
};

struct Estimate {
  double mean = 0;
  double std_error = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string statistic;
};

/// xoshiro256++ stream, seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Stream for one sample index: sample_state(spec, i) is a pure function.
  static Rng for_index(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  double uniform();       // [0, 1)
  double uniform_open();  // (0, 1]
  double normal();
  double gamma(double shape);
  double beta(double a, double b);

 private:
  std::uint64_t s_[4];
};

/// One draw from the normalized weighted measure on the quarter region, by
/// the exact factorization into beta variables:
///   s1 ~ Beta(2a+2k+2, 2a+2k+2), delta_i = (bound_i) * u_i with
///   u_i ~ Beta(a+k+1, 1/2), s4, s5 ~ Beta(a, k+1).
xstate::DeltaCoords sample_state(const SamplerSpec& spec, std::uint64_t index);

Estimate estimate_sep_prob(const SamplerSpec& spec);
/// Pr{det xi^PT >= det xi}.
Estimate estimate_rel_prob(const SamplerSpec& spec);
/// Mean of (det xi)^power under the k = 0 measure.
Estimate estimate_det_moment(const SamplerSpec& spec, int power);
/// Pr{det xi^PT >= 0} on the s5 = 1 boundary component (k = 0 only).
Estimate estimate_min_degenerate(const SamplerSpec& spec);

struct NegativityReport {
  std::int64_t n = 0;
  int max_negative_count = 0;
  std::int64_t violations = 0;
};

/// Builds the explicit matrix for each sample (uniform random phases),
/// eigen-solves the partial transpose and counts negative eigenvalues.
/// Throws std::runtime_error if any sample shows more than one.
NegativityReport negativity_count_check(const SamplerSpec& spec);

}  // namespace xsep::mc

#endif  // XSEP_MONTECARLO_HPP
