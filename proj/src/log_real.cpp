// Copyright 2026 The matchstat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchstat/log_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "matchstat/errors.hpp"

namespace matchstat {

LogReal LogReal::FromLog(double log_magnitude, int sign) {
  Require(sign == 1 || sign == -1, "LogReal sign must be +1 or -1");
  Require(!std::isnan(log_magnitude), "LogReal from NaN");
  LogReal r;
  if (log_magnitude == -std::numeric_limits<double>::infinity()) return r;
  r.sign_ = sign;
  r.log_ = log_magnitude;
  return r;
}

LogReal LogReal::FromDouble(double x) {
  Require(std::isfinite(x), "LogReal from a non-finite double");
  if (x == 0.0) return LogReal();
  return FromLog(std::log(std::fabs(x)), x < 0 ? -1 : 1);
}

LogReal LogReal::FromInt(const BigInt& x) {
  if (x == 0) return LogReal();
  return FromLog(LogOf(x < 0 ? BigInt(-x) : x), x < 0 ? -1 : 1);
}

LogReal LogReal::FromRational(const Rational& x) {
  if (x == 0) return LogReal();
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return FromInt(num) / FromInt(den);
}

double LogReal::log_abs() const {
  return sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_;
}

double LogReal::value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_); }

LogReal LogReal::operator-() const {
  LogReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogReal& LogReal::operator*=(const LogReal& o) {
  if (sign_ == 0 || o.sign_ == 0) return *this = LogReal();
  sign_ *= o.sign_;
  log_ += o.log_;
  return *this;
}

LogReal& LogReal::operator/=(const LogReal& o) {
  Require(o.sign_ != 0, "LogReal division by zero");
  if (sign_ == 0) return *this;
  sign_ *= o.sign_;
  log_ -= o.log_;
  return *this;
}

LogReal& LogReal::operator+=(const LogReal& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  const bool this_larger = log_ >= o.log_;
  const LogReal& big = this_larger ? *this : o;
  const LogReal& small = this_larger ? o : *this;
  const double gap = small.log_ - big.log_;
  LogReal r;
  if (big.sign_ == small.sign_) {
    r.sign_ = big.sign_;
    r.log_ = big.log_ + std::log1p(std::exp(gap));
  } else {
    if (gap == 0.0) return *this = LogReal();
    r.sign_ = big.sign_;
    r.log_ = big.log_ + std::log1p(-std::exp(gap));
  }
  return *this = r;
}

LogReal& LogReal::operator-=(const LogReal& o) { return *this += -o; }

LogReal LogReal::pow(double exponent) const {
  if (sign_ == 0) {
    Require(exponent > 0, "0 raised to a non-positive power");
    return LogReal();
  }
  int sign = 1;
  if (sign_ < 0) {
    Require(std::floor(exponent) == exponent, "negative base needs an integer exponent");
    sign = std::fmod(std::fabs(exponent), 2.0) == 1.0 ? -1 : 1;
  }
  return FromLog(log_ * exponent, sign);
}

double LogReal::RelativeDifference(const LogReal& a, const LogReal& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const LogReal diff = a - b;
  if (diff.is_zero()) return 0.0;
  const double scale = std::max(a.log_abs(), b.log_abs());
  return std::exp(diff.log_abs() - scale);
}

std::string ToScientific(const LogReal& x) {
  if (x.is_zero()) return "0";
  char buf[64];
  const double log10v = x.log_abs() / std::log(10.0);
  if (std::abs(log10v) < 300.0) {
    std::snprintf(buf, sizeof buf, "%.12g", x.value());
    return buf;
  }
  double exponent = std::floor(log10v);
  // Round the mantissa to 12 significant digits before deciding the exponent.
  double mantissa = std::round(std::pow(10.0, log10v - exponent) * 1e11) / 1e11;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  std::snprintf(buf, sizeof buf, "%s%.12ge%+.0f", x.sign() < 0 ? "-" : "", mantissa, exponent);
  return buf;
}

}  // namespace matchstat
