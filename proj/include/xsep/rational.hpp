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

#ifndef XSEP_RATIONAL_HPP
#define XSEP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace xsep {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator on every construction, so equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;
  /// Integer power; negative exponents invert (throws on zero base).
  Rational pow(long e) const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const;
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  void normalize();
  BigInt num_, den_;
};

/// n! as a big integer.
BigInt factorial(unsigned n);

/// Rising factorial (t)_n = t (t+1) ... (t+n-1); (t)_0 = 1.
Rational pochhammer(const Rational& t, unsigned n);

/// Binomial coefficient; 0 when k < 0 or k > n.
Rational binomial(unsigned n, long long k);

}  // namespace xsep

#endif  // XSEP_RATIONAL_HPP
