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

#include "matchstat/numeric.hpp"

#include <cctype>
#include <cmath>

#include "matchstat/errors.hpp"

namespace matchstat {

namespace bmp = boost::multiprecision;

BigInt Binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt Factorial(long n) {
  Require(n >= 0, "factorial of a negative number");
  BigInt result = 1;
  for (long j = 2; j <= n; ++j) result *= j;
  return result;
}

double LogOf(const BigInt& x) {
  Require(x > 0, "log of a non-positive integer");
  const auto top = static_cast<long>(bmp::msb(x));
  if (top < 960) return std::log(x.convert_to<double>());
  const long shift = top - 62;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double ToDouble(const Rational& x) {
  if (x == 0) return 0.0;
  BigInt num = bmp::numerator(x);
  BigInt den = bmp::denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;
  const auto num_bits = static_cast<long>(bmp::msb(num));
  const auto den_bits = static_cast<long>(bmp::msb(den));
  const long num_shift = std::max(0L, num_bits - 62);
  const long den_shift = std::max(0L, den_bits - 62);
  const double head = (num >> num_shift).convert_to<double>() /
                      (den >> den_shift).convert_to<double>();
  const double value = std::ldexp(head, static_cast<int>(num_shift - den_shift));
  return negative ? -value : value;
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const Rational num = ParseRational(text.substr(0, slash));
    const Rational den = ParseRational(text.substr(slash + 1));
    Require(den != 0, "zero denominator in \"" + text + "\"");
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
  BigInt digits = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  Require(any_digit, "not a number: \"" + text + "\"");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    const std::string exponent = text.substr(pos + 1);
    Require(!exponent.empty(), "not a number: \"" + text + "\"");
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: \"" + text + "\"");
    }
    Require(used == exponent.size(), "not a number: \"" + text + "\"");
    scale += e;
    pos = text.size();
  }
  Require(pos == text.size(), "not a number: \"" + text + "\"");
  Rational value(digits);
  const BigInt ten_power = bmp::pow(BigInt(10), static_cast<unsigned>(std::labs(scale)));
  if (scale >= 0) value *= ten_power;
  else value /= ten_power;
  if (negative) value = -value;
  return value;
}

std::string ToString(const BigInt& x) { return x.str(); }

std::string ToString(const Rational& x) {
  if (bmp::denominator(x) == 1) return bmp::numerator(x).str();
  return bmp::numerator(x).str() + "/" + bmp::denominator(x).str();
}

Rational Pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace matchstat
