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

#include "xsep/xstate.hpp"

#include <cmath>
#include <stdexcept>

namespace xsep::xstate {

namespace {

constexpr double kSlack = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

double clamp_nonneg(double v) { return v < 0 ? 0.0 : v; }

}  // namespace

void validate(const TCoords& t) {
  for (double v : {t.t1, t.t2, t.t3, t.t4, t.t5, t.t6})
    require(v >= -kSlack, "TCoords: negative weight");
  double tr = t.t1 + t.t2 + t.t3 + t.t4 + t.t5 + t.t6;
  require(std::abs(tr - 1.0) <= kSlack, "TCoords: trace must be one");
}

void validate(const SCoords& s) {
  require(s.s1 >= -kSlack && s.s1 <= 1 + kSlack, "SCoords: s1 out of [0,1]");
  require(s.s4 >= -kSlack && s.s4 <= 1 + kSlack, "SCoords: s4 out of [0,1]");
  require(s.s5 >= -kSlack && s.s5 <= 1 + kSlack, "SCoords: s5 out of [0,1]");
  require(std::abs(s.s2) <= 1 - s.s1 + kSlack, "SCoords: |s2| exceeds 1-s1");
  require(std::abs(s.s3) <= s.s1 + kSlack, "SCoords: |s3| exceeds s1");
}

void validate(const DeltaCoords& d) {
  require(d.s1 >= -kSlack && d.s1 <= 1 + kSlack, "DeltaCoords: s1 out of [0,1]");
  require(d.s4 >= -kSlack && d.s4 <= 1 + kSlack, "DeltaCoords: s4 out of [0,1]");
  require(d.s5 >= -kSlack && d.s5 <= 1 + kSlack, "DeltaCoords: s5 out of [0,1]");
  double b1 = 0.25 * (1 - d.s1) * (1 - d.s1);
  double b2 = 0.25 * d.s1 * d.s1;
  require(d.delta1 >= -kSlack && d.delta1 <= b1 + kSlack, "DeltaCoords: delta1 out of range");
  require(d.delta2 >= -kSlack && d.delta2 <= b2 + kSlack, "DeltaCoords: delta2 out of range");
}

TCoords s_to_t(const SCoords& s) {
  validate(s);
  TCoords t;
  t.t1 = 0.5 * (1 - s.s1 + s.s2);
  t.t2 = 0.5 * (s.s1 + s.s3);
  double e33 = 0.5 * (s.s1 - s.s3);
  double e44 = 0.5 * (1 - s.s1 - s.s2);
  t.t5 = s.s4 * e44;
  t.t6 = s.s5 * e33;
  t.t3 = (1 - s.s5) * e33;
  t.t4 = (1 - s.s4) * e44;
  return t;
}

SCoords t_to_s(const TCoords& t) {
  validate(t);
  SCoords s;
  double e33 = t.t3 + t.t6;
  double e44 = t.t4 + t.t5;
  s.s1 = t.t2 + e33;
  s.s2 = t.t1 - e44;
  s.s3 = t.t2 - e33;
  s.s4 = e44 > 0 ? t.t5 / e44 : 0.0;
  s.s5 = e33 > 0 ? t.t6 / e33 : 0.0;
  return s;
}

DeltaCoords s_to_delta(const SCoords& s) {
  validate(s);
  require(s.s2 >= -kSlack && s.s3 >= -kSlack, "s_to_delta: s2, s3 must be nonnegative");
  DeltaCoords d;
  d.s1 = s.s1;
  d.delta1 = clamp_nonneg(((1 - s.s1) * (1 - s.s1) - s.s2 * s.s2) * 0.25);
  d.delta2 = clamp_nonneg((s.s1 * s.s1 - s.s3 * s.s3) * 0.25);
  d.s4 = s.s4;
  d.s5 = s.s5;
  return d;
}

SCoords delta_to_s(const DeltaCoords& d) {
  validate(d);
  SCoords s;
  s.s1 = d.s1;
  s.s2 = std::sqrt(clamp_nonneg((1 - d.s1) * (1 - d.s1) - 4 * d.delta1));
  s.s3 = std::sqrt(clamp_nonneg(d.s1 * d.s1 - 4 * d.delta2));
  s.s4 = d.s4;
  s.s5 = d.s5;
  return s;
}

double det_xi(const DeltaCoords& d) {
  return d.delta1 * d.delta2 * (1 - d.s4) * (1 - d.s5);
}

double det_xi_pt(const DeltaCoords& d) {
  return (d.delta1 - d.s5 * d.delta2) * (d.delta2 - d.s4 * d.delta1);
}

double det_diff(const DeltaCoords& d) {
  return (d.delta1 - d.delta2) * (d.s5 * d.delta2 - d.s4 * d.delta1);
}

double det_xi_pt_s(const SCoords& s) {
  double q1 = (1 - s.s1) * (1 - s.s1) - s.s2 * s.s2;
  double q2 = s.s1 * s.s1 - s.s3 * s.s3;
  return (q1 - s.s5 * q2) * (q2 - s.s4 * q1) / 16.0;
}

Eigen::Matrix4cd XDensity::matrix() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = e11;
  m(1, 1) = e22;
  m(2, 2) = e33;
  m(3, 3) = e44;
  m(0, 3) = e14;
  m(3, 0) = std::conj(e14);
  m(1, 2) = e23;
  m(2, 1) = std::conj(e23);
  return m;
}

XDensity build_matrix(const TCoords& t) {
  validate(t);
  XDensity x;
  x.e11 = t.t1;
  x.e22 = t.t2;
  x.e33 = t.t3 + t.t6;
  x.e44 = t.t4 + t.t5;
  x.e14 = std::sqrt(t.t1 * t.t5) * std::exp(std::complex<double>(0, t.theta5));
  x.e23 = std::sqrt(t.t2 * t.t6) * std::exp(std::complex<double>(0, t.theta6));
  return x;
}

XDensity partial_transpose(const XDensity& x) {
  XDensity p = x;
  std::swap(p.e14, p.e23);
  return p;
}

double det_dense(const XDensity& x) {
  return x.matrix().determinant().real();
}

int negative_eigenvalue_count(const XDensity& x, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(x.matrix(), Eigen::EigenvaluesOnly);
  int count = 0;
  for (int i = 0; i < 4; ++i)
    if (solver.eigenvalues()(i) < -tol) ++count;
  return count;
}

std::vector<Extremum> extreme_points() {
  // Fully mixed state: delta1 = delta2 = 1/16 at s1 = 1/2.
  DeltaCoords mixed{0.5, 1.0 / 16, 1.0 / 16, 0, 0};
  DeltaCoords min_pt{0.0, 0.25, 0.0, 1.0, 0.0};
  double s1 = 1.0 / 3;
  DeltaCoords max_diff{s1, 0.25 * (1 - s1) * (1 - s1), 0.25 * s1 * s1, 0.0, 1.0};
  return {
      {"max det_xi", mixed, 1.0 / 256},
      {"min det_xi_pt", min_pt, -1.0 / 16},
      {"max det_xi_pt - det_xi", max_diff, 1.0 / 432},
  };
}

}  // namespace xsep::xstate
