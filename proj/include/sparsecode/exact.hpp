// Copyright 2026 The sparsecode Authors.
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

// Exact integer/rational helpers. Every inequality the library reports is
// decided here, without floating point. Irrational quantities appear in two
// shapes only: a + b*sqrt(r) (Krawtchouk root bounds) and n^e for a rational
// exponent e (sparsity/bias thresholds such as n^{1-gamma}).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sparsecode {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer binomial(std::uint64_t n, std::uint64_t k);
Integer ipow(const Integer& base, std::uint64_t exponent);
// Negative exponents require a non-zero base.
Rational rpow(const Rational& base, std::int64_t exponent);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);
int sign(const Rational& x);
Rational abs(const Rational& x);

// floor(x^(1/r)) for x >= 0, r >= 1.
Integer floor_root(const Integer& x, unsigned r);

// Accepts "3", "-3", "3/4", "0.25", "-1.5e-2" is not accepted.
Rational parse_rational(std::string_view text);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
double to_double(const Rational& x);

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// a + b * sqrt(radicand), radicand >= 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a, Rational b, Integer radicand);
  static QuadraticSurd constant(Rational a) { return {std::move(a), 0, 0}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Integer& radicand() const { return radicand_; }

  int sign() const;
  // sign(*this - x)
  int compare(const Rational& x) const;
  Interval enclose(unsigned fractional_bits = 48) const;
  Integer floor() const;
  Integer ceil() const;

  QuadraticSurd operator+(const Rational& x) const;
  QuadraticSurd operator-(const Rational& x) const { return *this + (-x); }
  // Both operands must share the radicand (or have a zero surd part).
  QuadraticSurd operator*(const QuadraticSurd& other) const;
  QuadraticSurd operator*(const Rational& x) const;
  QuadraticSurd pow(unsigned exponent) const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Integer radicand_ = 0;
};

// base^exponent for an integer base >= 1 and a rational exponent.
class RationalPower {
 public:
  RationalPower(Integer base, Rational exponent);

  const Integer& base() const { return base_; }
  const Rational& exponent() const { return exponent_; }

  // sign(base^exponent - y)
  int compare(const Rational& y) const;
  Interval enclose(unsigned fractional_bits = 48) const;
  double approx() const;

  // Exact floor/ceil of offset + direction * base^exponent, direction = +1/-1.
  Integer floor_of(const Rational& offset, int direction) const;
  Integer ceil_of(const Rational& offset, int direction) const;

 private:
  // sign(offset + direction * value - m)
  int compare_affine(const Rational& offset, int direction,
                     const Integer& m) const;

  Integer base_;
  Rational exponent_;
};

}  // namespace sparsecode
