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

#ifndef MATCHSTAT_NUMERIC_HPP_
#define MATCHSTAT_NUMERIC_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; zero when k < 0 or k > n.
BigInt Binomial(long n, long k);
BigInt Factorial(long n);

// Natural log of a positive big integer, accurate for values far beyond the
// double range.
double LogOf(const BigInt& x);
double ToDouble(const Rational& x);

// Parses "3", "-2", "0.25", "1e-3" or "1/4" into an exact rational.
Rational ParseRational(const std::string& text);
std::string ToString(const BigInt& x);
// "a/b" in lowest terms, or "a" for integers.
std::string ToString(const Rational& x);

Rational Pow(const Rational& base, unsigned exponent);

}  // namespace matchstat

#endif  // MATCHSTAT_NUMERIC_HPP_
