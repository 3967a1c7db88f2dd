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

#include "xsep/rational.hpp"

#include <cmath>

namespace xsep {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n != 0) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  BigInt n = mp::abs(num_);
  const BigInt& d = den_;
  // Keep the top ~128 bits of each side and restore the dropped scale with
  // ldexp, so arbitrarily large numerators/denominators never overflow.
  long sn = std::max(0L, static_cast<long>(mp::msb(n)) - 128);
  long sd = std::max(0L, static_cast<long>(mp::msb(d)) - 128);
  double r = (n >> sn).convert_to<double>() / BigInt(d >> sd).convert_to<double>();
  r = std::ldexp(r, static_cast<int>(sn - sd));
  return num_ < 0 ? -r : r;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational pochhammer(const Rational& t, unsigned n) {
  Rational r(1);
  Rational f = t;
  for (unsigned i = 0; i < n; ++i) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

Rational binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return Rational(0);
  auto kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt r = 1;
  for (unsigned i = 0; i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact: prefix products of binomial rows divide evenly
  }
  return Rational(r);
}

}  // namespace xsep
