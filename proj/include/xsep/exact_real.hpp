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

#ifndef XSEP_EXACT_REAL_HPP
#define XSEP_EXACT_REAL_HPP

#include "xsep/rational.hpp"

namespace xsep {

/// A half-integer, stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt of(int whole) { return HalfInt{2 * whole}; }
  static constexpr HalfInt halves(int twice_value) { return HalfInt{twice_value}; }

  bool is_integer() const { return twice % 2 == 0; }
  double value() const { return 0.5 * twice; }
  Rational rational() const { return Rational(BigInt(twice), BigInt(2)); }

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
};

/// Exact value of the form coeff * pi^(pi_half/2). The pi exponent is tracked
/// in half-powers so products of half-integer gamma values stay closed.
/// Canonical zero has exponent 0.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(Rational coeff, int pi_half_exponent = 0)  // NOLINT: implicit by design
      : coeff_(std::move(coeff)), pi_half_(coeff_.is_zero() ? 0 : pi_half_exponent) {}
  ExactReal(long long n) : coeff_(n) {}  // NOLINT

  static ExactReal pi_pow_half(int pi_half_exponent) {
    return ExactReal(Rational(1), pi_half_exponent);
  }

  const Rational& coeff() const { return coeff_; }
  int pi_half_exponent() const { return pi_half_; }
  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return pi_half_ == 0; }

  /// Rational value; throws if a pi power remains.
  const Rational& rational() const;

  ExactReal operator-() const { return ExactReal(-coeff_, pi_half_); }
  ExactReal& operator*=(const ExactReal& o);
  ExactReal& operator/=(const ExactReal& o);
  /// Addition requires matching pi exponents (or a zero operand).
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o) { return *this += -o; }

  friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
  friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }
  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.coeff_ == b.coeff_ && a.pi_half_ == b.pi_half_;
  }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }

  double to_double() const;
  /// Canonical rendering: "<num>/<den>" plus " * pi^<e>" when a pi power is
  /// present, with e a (half-)integer, e.g. "16/3 * pi^-2", "1 * pi^1/2".
  std::string str() const;

 private:
  Rational coeff_;
  int pi_half_ = 0;
};

/// Exact gamma at a positive half-integer: rational for integer arguments,
/// rational * sqrt(pi) for odd half-integers. Throws std::domain_error for
/// arguments <= 0.
ExactReal gamma_half(HalfInt x);

/// Natural log of gamma for x > 0, relative error below 1e-13 on [0.5, 200].
double log_gamma(double x);

}  // namespace xsep

#endif  // XSEP_EXACT_REAL_HPP
