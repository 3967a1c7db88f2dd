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

#include "xsep/montecarlo.hpp"
#include "xsep/xstate.hpp"

#include <cmath>
#include <numbers>

using namespace xsep::xstate;

namespace {

// Random valid coordinates drawn through the sampler plus sign flips.
SCoords random_s(xsep::mc::Rng& rng) {
  SCoords s;
  s.s1 = rng.uniform();
  s.s2 = (2 * rng.uniform() - 1) * (1 - s.s1);
  s.s3 = (2 * rng.uniform() - 1) * s.s1;
  s.s4 = rng.uniform();
  s.s5 = rng.uniform();
  return s;
}

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("s_to_t at the fully mixed point") {
  TCoords t = s_to_t({0.5, 0, 0, 0, 0});
  CHECK(t.t1 == doctest::Approx(0.25));
  CHECK(t.t2 == doctest::Approx(0.25));
  CHECK(t.t3 + t.t6 == doctest::Approx(0.25));
  CHECK(t.t4 + t.t5 == doctest::Approx(0.25));
  CHECK(t.t5 == 0.0);
  CHECK(t.t6 == 0.0);
}

TEST_CASE("s_to_t by direct substitution") {
  TCoords t = s_to_t({1.0 / 3, 2.0 / 3, 1.0 / 3, 0, 1});
  CHECK(t.t1 == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(t.t2 == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(close(t.t3, 0));
  CHECK(close(t.t4, 0));
  CHECK(close(t.t5, 0));
  CHECK(close(t.t6, 0));

  // s4 = s5 = 1 empties the diagonal tails
  TCoords t2 = s_to_t({0.4, 0.1, 0.2, 1, 1});
  CHECK(close(t2.t4, 0));
  CHECK(close(t2.t3, 0));
}

TEST_CASE("s_to_t rejects out-of-range input") {
  CHECK_THROWS_AS(s_to_t({1.5, 0, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(s_to_t({0.5, 0.9, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(s_to_t({0.5, 0, 0.9, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(s_to_t({0.5, 0, 0, -0.2, 0}), std::domain_error);
}

TEST_CASE("coordinate round trips") {
  xsep::mc::Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    SCoords s = random_s(rng);
    SCoords back = t_to_s(s_to_t(s));
    CHECK(close(back.s1, s.s1));
    CHECK(close(back.s2, s.s2));
    CHECK(close(back.s3, s.s3));
    CHECK(close(back.s4, s.s4));
    CHECK(close(back.s5, s.s5));

    SCoords q = s;  // quarter region for the delta trip
    q.s2 = std::abs(q.s2);
    q.s3 = std::abs(q.s3);
    SCoords back2 = delta_to_s(s_to_delta(q));
    CHECK(close(back2.s2, q.s2, 1e-10));
    CHECK(close(back2.s3, q.s3, 1e-10));
  }
}

TEST_CASE("s_to_delta") {
  SCoords boundary{0.3, 0.7, 0.3, 0, 0};
  DeltaCoords d = s_to_delta(boundary);
  CHECK(d.delta1 == 0.0);
  CHECK(d.delta2 == 0.0);

  DeltaCoords mid = s_to_delta({0.3, 0, 0, 0, 0});
  CHECK(mid.delta1 == doctest::Approx(0.1225).epsilon(1e-15));  // ((1-s1)/2)^2
  CHECK(mid.delta2 == doctest::Approx(0.0225).epsilon(1e-15));  // (s1/2)^2

  DeltaCoords ex = s_to_delta({1.0 / 3, 1.0 / 3, 1.0 / 6, 0, 0});
  CHECK(ex.delta1 == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(ex.delta2 == doctest::Approx(1.0 / 48).epsilon(1e-15));

  CHECK_THROWS_AS(s_to_delta({0.5, -0.2, 0, 0, 0}), std::domain_error);
}

TEST_CASE("degenerate s1 collapses the delta ranges") {
  DeltaCoords d0 = s_to_delta({0.0, 0.6, 0.0, 0.2, 0.9});
  CHECK(d0.delta2 == 0.0);
  SCoords s0 = delta_to_s(DeltaCoords{0.0, 0.09, 0.0, 0.2, 0.9});
  CHECK(s0.s3 == 0.0);
  DeltaCoords d1 = s_to_delta({1.0, 0.0, 0.3, 0.2, 0.9});
  CHECK(d1.delta1 == 0.0);
}

TEST_CASE("determinants in delta coordinates") {
  CHECK(det_xi({0.5, 1.0 / 16, 1.0 / 16, 0, 0}) == doctest::Approx(1.0 / 256).epsilon(1e-15));
  CHECK(det_xi({0.5, 1.0 / 16, 1.0 / 16, 1, 0}) == 0.0);
  CHECK(det_xi({1.0 / 3, 1.0 / 12, 1.0 / 48, 0.5, 0.5}) ==
        doctest::Approx(1.0 / 2304).epsilon(1e-15));

  CHECK(det_xi_pt({0.0, 0.25, 0.0, 1, 0}) == doctest::Approx(-1.0 / 16).epsilon(1e-15));
  CHECK(det_xi_pt({1.0 / 3, 1.0 / 12, 1.0 / 48, 1, 0}) ==
        doctest::Approx(-1.0 / 192).epsilon(1e-15));
  CHECK(det_xi_pt({0.4, 0.05, 0.03, 0, 0}) >= 0.0);
}

TEST_CASE("detdet identity and sign symmetry") {
  xsep::mc::Rng rng(77);
  for (int i = 0; i < 2000; ++i) {
    SCoords s = random_s(rng);
    SCoords q = s;
    q.s2 = std::abs(q.s2);
    q.s3 = std::abs(q.s3);
    DeltaCoords d = s_to_delta(q);
    CHECK(close(det_diff(d), det_xi_pt(d) - det_xi(d)));
    // det xi^PT is even in s2 and s3
    double base = det_xi_pt_s(s);
    SCoords f1 = s;
    f1.s2 = -f1.s2;
    SCoords f2 = s;
    f2.s3 = -f2.s3;
    CHECK(close(det_xi_pt_s(f1), base));
    CHECK(close(det_xi_pt_s(f2), base));
    CHECK(close(det_xi_pt_s(q), det_xi_pt(d)));
  }
}

TEST_CASE("build_matrix") {
  TCoords mixed{0.25, 0.25, 0.25, 0.25, 0, 0, 0.3, -1.2};
  XDensity x = build_matrix(mixed);
  CHECK(x.e11 == 0.25);
  CHECK(x.e44 == 0.25);
  CHECK(std::abs(x.e14) == 0.0);
  CHECK(std::abs(x.e23) == 0.0);
  CHECK(det_dense(x) == doctest::Approx(1.0 / 256).epsilon(1e-12));

  TCoords t{0.3, 0.2, 0.1, 0.15, 0.15, 0.1, 0.5, 1.0};
  XDensity y = build_matrix(t);
  CHECK(std::abs(y.e14) == doctest::Approx(std::sqrt(0.3 * 0.15)).epsilon(1e-15));
  CHECK(std::arg(y.e23) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(y.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(build_matrix(TCoords{0.5, 0.5, 0.5, 0, 0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("dense determinants match the coordinate formulas") {
  xsep::mc::Rng rng(123);
  for (int i = 0; i < 1000; ++i) {
    SCoords q = random_s(rng);
    q.s2 = std::abs(q.s2);
    q.s3 = std::abs(q.s3);
    DeltaCoords d = s_to_delta(q);
    TCoords t = s_to_t(q);
    t.theta5 = (2 * rng.uniform() - 1) * std::numbers::pi;
    t.theta6 = (2 * rng.uniform() - 1) * std::numbers::pi;
    XDensity x = build_matrix(t);
    double expect_det = t.t1 * t.t2 * t.t3 * t.t4;
    CHECK(std::abs(det_dense(x) - expect_det) <=
          std::max(1e-12 * std::abs(expect_det), 1e-15));

    XDensity pt = partial_transpose(x);
    double expect_pt = det_xi_pt(d);
    CHECK(std::abs(det_dense(pt) - expect_pt) <= std::max(1e-12 * std::abs(expect_pt), 1e-15));
    double block = (x.e11 * x.e44 - std::norm(x.e23)) * (x.e22 * x.e33 - std::norm(x.e14));
    CHECK(std::abs(det_dense(pt) - block) <= std::max(1e-12 * std::abs(block), 1e-15));
  }
}

TEST_CASE("partial transpose swaps the anti-diagonal only") {
  TCoords t{0.3, 0.2, 0.1, 0.15, 0.15, 0.1, 0.5, 1.0};
  XDensity x = build_matrix(t);
  XDensity pt = partial_transpose(x);
  CHECK(pt.e14 == x.e23);
  CHECK(pt.e23 == x.e14);
  CHECK(pt.e11 == x.e11);

  // diagonal states are fixed points
  XDensity diag = build_matrix(TCoords{0.4, 0.3, 0.2, 0.1, 0, 0, 0, 0});
  XDensity ptd = partial_transpose(diag);
  CHECK(ptd.e14 == diag.e14);
  CHECK(negative_eigenvalue_count(ptd) == 0);
}

TEST_CASE("entangled state has exactly one negative eigenvalue") {
  // det xi^PT = -1/192 < 0 here
  DeltaCoords d{1.0 / 3, 1.0 / 12, 1.0 / 48, 1, 0};
  TCoords t = s_to_t(delta_to_s(d));
  t.theta5 = 0.7;
  t.theta6 = -0.2;
  XDensity pt = partial_transpose(build_matrix(t));
  CHECK(negative_eigenvalue_count(pt) == 1);
}

TEST_CASE("extreme points") {
  auto extremes = extreme_points();
  REQUIRE(extremes.size() == 3);
  for (const auto& e : extremes) validate(e.point);
  CHECK(det_xi(extremes[0].point) == doctest::Approx(1.0 / 256).epsilon(1e-15));
  CHECK(det_xi_pt(extremes[1].point) == doctest::Approx(-1.0 / 16).epsilon(1e-15));
  CHECK(det_diff(extremes[2].point) == doctest::Approx(1.0 / 432).epsilon(1e-15));
  CHECK(extremes[2].point.s1 == doctest::Approx(1.0 / 3).epsilon(1e-15));
}
