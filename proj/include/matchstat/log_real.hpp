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

#ifndef MATCHSTAT_LOG_REAL_HPP_
#define MATCHSTAT_LOG_REAL_HPP_

#include <string>

#include "matchstat/numeric.hpp"

namespace matchstat {

// A real number stored as sign and natural log of its magnitude, so that
// quantities such as 10^5000 stay representable.
class LogReal {
 public:
  LogReal() = default;

  static LogReal Zero() { return LogReal(); }
  static LogReal One() { return FromLog(0.0); }
  // exp(log_magnitude) with the given sign (+1 or -1).
  static LogReal FromLog(double log_magnitude, int sign = 1);
  static LogReal FromDouble(double x);
  static LogReal FromInt(const BigInt& x);
  static LogReal FromRational(const Rational& x);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  // ln|x|; -inf for zero.
  double log_abs() const;
  // The value as a double; may overflow to +-inf or underflow to 0.
  double value() const;

  LogReal operator-() const;
  LogReal& operator*=(const LogReal& o);
  LogReal& operator/=(const LogReal& o);
  LogReal& operator+=(const LogReal& o);
  LogReal& operator-=(const LogReal& o);
  friend LogReal operator*(LogReal a, const LogReal& b) { return a *= b; }
  friend LogReal operator/(LogReal a, const LogReal& b) { return a /= b; }
  friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
  friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }

  // |x|^e keeps the sign only for positive x; negative bases are rejected
  // unless e is an integer.
  LogReal pow(double exponent) const;
  LogReal sqrt() const { return pow(0.5); }

  // Relative difference |a - b| / max(|a|, |b|), computed without leaving log
  // space; zero when both are zero.
  static double RelativeDifference(const LogReal& a, const LogReal& b);

 private:
  int sign_ = 0;
  double log_ = 0.0;
};

// 12 significant digits; "%.12g" inside the double range, otherwise
// "1.23456789012e+4567", which stays valid far outside it.
std::string ToScientific(const LogReal& x);

}  // namespace matchstat

#endif  // MATCHSTAT_LOG_REAL_HPP_
