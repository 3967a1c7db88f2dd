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

#include "xsep/exact_real.hpp"

#include <cmath>
#include <numbers>

namespace xsep {

const Rational& ExactReal::rational() const {
  if (pi_half_ != 0) throw std::domain_error("ExactReal: value carries a pi power");
  return coeff_;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
  coeff_ *= o.coeff_;
  pi_half_ = coeff_.is_zero() ? 0 : pi_half_ + o.pi_half_;
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& o) {
  coeff_ /= o.coeff_;
  pi_half_ = coeff_.is_zero() ? 0 : pi_half_ - o.pi_half_;
  return *this;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (pi_half_ != o.pi_half_)
    throw std::domain_error("ExactReal: sum of values with different pi powers");
  coeff_ += o.coeff_;
  if (coeff_.is_zero()) pi_half_ = 0;
  return *this;
}

double ExactReal::to_double() const {
  if (coeff_.is_zero()) return 0.0;
  return coeff_.to_double() * std::pow(std::numbers::pi, 0.5 * pi_half_);
}

std::string ExactReal::str() const {
  std::string s = coeff_.str();
  if (pi_half_ != 0) {
    s += " * pi^";
    if (pi_half_ % 2 == 0) {
      s += std::to_string(pi_half_ / 2);
    } else {
      s += std::to_string(pi_half_);
      s += "/2";
    }
  }
  return s;
}

ExactReal gamma_half(HalfInt x) {
  if (x.twice < 1) throw std::domain_error("gamma_half: argument must be positive");
  if (x.twice % 2 == 0) return ExactReal(Rational(factorial(x.twice / 2 - 1)));
  // Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
  int m = (x.twice - 1) / 2;
  Rational c(factorial(2 * static_cast<unsigned>(m)), BigInt(1) << (2 * m));
  c /= Rational(factorial(static_cast<unsigned>(m)));
  return ExactReal(c, 1);
}

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (x - 1.0 + i);
  double t = x + kLanczosG - 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) {
    // Reflection keeps the Lanczos core on x >= 0.5.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

}  // namespace xsep
