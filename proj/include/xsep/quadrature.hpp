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

#ifndef XSEP_QUADRATURE_HPP
#define XSEP_QUADRATURE_HPP

#include "xsep/closedform.hpp"

#include <functional>
#include <stdexcept>

namespace xsep::quad {

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 40;
};

struct QuadResult {
  double value = 0;
  double est_error = 0;
  long evaluations = 0;
};

/// Thrown when the tolerance is not met within the refinement budget; carries
/// the best estimate reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi]. Deterministic: panels are
/// refined worst-first with index tie-breaks and summed in interval order.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadConfig& cfg);

/// I(m,n) (or I(2a,0)) through the smooth (u,y) form on the unit square.
QuadResult quad_I_transformed(const closedform::IntegralSpec& spec, const QuadConfig& cfg);

/// I(m,n) through the original (s,v) form with the endpoint singularity
/// removed by the substitution b - v = b w^2.
QuadResult quad_I_direct(const closedform::IntegralSpec& spec, const QuadConfig& cfg);

/// Numeric value of the measure normalization integral; matches 1/c_alpha.
QuadResult quad_normalization(double alpha, const QuadConfig& cfg);

}  // namespace xsep::quad

#endif  // XSEP_QUADRATURE_HPP
