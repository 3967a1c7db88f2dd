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

#ifndef XSEP_XSTATE_HPP
#define XSEP_XSTATE_HPP

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace xsep::xstate {

/// Weights of the diagonal/anti-diagonal blocks plus the two off-diagonal
/// phases. t1..t6 are nonnegative and sum to one.
struct TCoords {
  double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0, t6 = 0;
  double theta5 = 0, theta6 = 0;
};

/// Intermediate coordinates: 0 <= s1,s4,s5 <= 1, |s2| <= 1-s1, |s3| <= s1.
struct SCoords {
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
};

/// Final coordinates where both determinants factor:
/// 0 <= delta1 <= ((1-s1)/2)^2, 0 <= delta2 <= (s1/2)^2.
struct DeltaCoords {
  double s1 = 0, delta1 = 0, delta2 = 0, s4 = 0, s5 = 0;
};

/// Explicit entries of the 4x4 X-shaped density matrix.
struct XDensity {
  double e11 = 0, e22 = 0, e33 = 0, e44 = 0;
  std::complex<double> e14, e23;

  Eigen::Matrix4cd matrix() const;
};

void validate(const TCoords& t);
void validate(const SCoords& s);
void validate(const DeltaCoords& d);

TCoords s_to_t(const SCoords& s);
SCoords t_to_s(const TCoords& t);

/// Requires s2, s3 >= 0 (the quarter region); callers fold signs first.
DeltaCoords s_to_delta(const SCoords& s);
SCoords delta_to_s(const DeltaCoords& d);

double det_xi(const DeltaCoords& d);
double det_xi_pt(const DeltaCoords& d);
/// det xi^PT - det xi evaluated in factored form.
double det_diff(const DeltaCoords& d);
/// det xi^PT straight from s-coordinates (valid for signed s2, s3).
double det_xi_pt_s(const SCoords& s);

XDensity build_matrix(const TCoords& t);
/// Swaps the two anti-diagonal entries.
XDensity partial_transpose(const XDensity& x);
/// Determinant of the dense 4x4 (imaginary part is discarded; it vanishes for
/// Hermitian input).
double det_dense(const XDensity& x);
int negative_eigenvalue_count(const XDensity& x, double tol = 1e-12);

struct Extremum {
  std::string label;
  DeltaCoords point;
  double value = 0;
};

/// Witnesses for max det xi = 1/256, min det xi^PT = -1/16 and
/// max(det xi^PT - det xi) = 1/432.
std::vector<Extremum> extreme_points();

}  // namespace xsep::xstate

#endif  // XSEP_XSTATE_HPP
