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

#ifndef XSEP_VERIFY_HPP
#define XSEP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace xsep::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
  std::string tolerance;
};

struct Options {
  std::int64_t mc_samples = 2'000'000;
  std::uint64_t seed = 7;
};

// Cross-check groups. Names follow what they exercise; together they cover
// every closed form against at least one independent route.
std::vector<Check> checks_headline_exact();
std::vector<Check> checks_float_large_alpha();
std::vector<Check> checks_integral_grid(unsigned max_order = 6);
std::vector<Check> checks_real_alpha_bridge();
std::vector<Check> checks_induced_consistency();
std::vector<Check> checks_half_relations();
std::vector<Check> checks_mc_cross(const Options& opt);
std::vector<Check> checks_sigma_structure();
std::vector<Check> checks_extreme_search();
std::vector<Check> checks_matrix_invariants(const Options& opt);
std::vector<Check> checks_identities_extra();
std::vector<Check> checks_quad_extra();
std::vector<Check> checks_sampler(const Options& opt);

/// Named suites exposed by the command line: identities, closed-vs-quad,
/// closed-vs-mc, sampler, extremes. Throws std::invalid_argument otherwise.
std::vector<Check> run_suite(const std::string& suite, const Options& opt);

bool all_passed(const std::vector<Check>& checks);
/// One line per check: status, name, expected, observed, tolerance.
std::string format_report(const std::vector<Check>& checks);

}  // namespace xsep::verify

#endif  // XSEP_VERIFY_HPP
