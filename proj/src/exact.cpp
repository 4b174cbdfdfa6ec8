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

#include "sparsecode/exact.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "sparsecode/errors.hpp"

namespace sparsecode {

namespace mp = boost::multiprecision;

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("rpow: zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

Integer floor(const Rational& x) {
  Integer num = mp::numerator(x);
  Integer den = mp::denominator(x);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }

int sign(const Rational& x) { return x.sign(); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Integer floor_root(const Integer& x, unsigned r) {
  if (x < 0) throw DomainError("floor_root of a negative number");
  if (r == 0) throw DomainError("floor_root with r = 0");
  if (x < 2 || r == 1) return x;
  if (r == 2) return mp::sqrt(x);
  // Newton iteration from above converges to the floor for integer roots.
  unsigned bits = mp::msb(x) + 1;
  Integer guess = Integer(1) << (bits / r + 1);
  while (true) {
    Integer next = ((r - 1) * guess + x / ipow(guess, r - 1)) / r;
    if (next >= guess) break;
    guess = std::move(next);
  }
  while (ipow(guess, r) > x) --guess;
  while (ipow(guess + 1, r) <= x) ++guess;
  return guess;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("not a decimal: '" + std::string(text) + "'");
    }
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    value = Rational(w) + Rational(f, ipow(10, frac.size()));
  } else {
    if (!all_digits(s)) throw ParseError("not a number: '" + std::string(text) + "'");
    value = Rational(Integer(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (is_integer(x)) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

// ---------------------------------------------------------------------------

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("negative radicand");
  Integer root = mp::sqrt(radicand_);
  if (root * root == radicand_) {
    a_ += b_ * Rational(root);
    b_ = 0;
    radicand_ = 0;
  }
  if (b_ == 0) radicand_ = 0;
}

int QuadraticSurd::sign() const {
  int sa = a_.sign();
  int sb = radicand_ == 0 ? 0 : b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 r.
  Rational diff = a_ * a_ - b_ * b_ * Rational(radicand_);
  return sa > 0 ? diff.sign() : -diff.sign();
}

int QuadraticSurd::compare(const Rational& x) const { return (*this - x).sign(); }

Interval QuadraticSurd::enclose(unsigned fractional_bits) const {
  if (radicand_ == 0 || b_ == 0) return {a_, a_};
  // Widen the precision with |b| so the width stays below 2^-fractional_bits.
  Integer magnitude = sparsecode::ceil(abs(b_));
  if (magnitude > 0) fractional_bits += static_cast<unsigned>(mp::msb(magnitude)) + 1;
  Integer scale = Integer(1) << fractional_bits;
  Integer s = mp::sqrt(Integer(radicand_ * scale * scale));
  Rational root_lo(s, scale);
  Rational root_hi(s + 1, scale);
  if (b_ > 0) return {a_ + b_ * root_lo, a_ + b_ * root_hi};
  return {a_ + b_ * root_hi, a_ + b_ * root_lo};
}

Integer QuadraticSurd::floor() const {
  Integer m = sparsecode::floor(enclose().lo);
  while (compare(Rational(m + 1)) >= 0) ++m;
  while (compare(Rational(m)) < 0) --m;
  return m;
}

Integer QuadraticSurd::ceil() const {
  Integer m = floor();
  return compare(Rational(m)) == 0 ? m : Integer(m + 1);
}

QuadraticSurd QuadraticSurd::operator+(const Rational& x) const {
  return {a_ + x, b_, radicand_};
}

QuadraticSurd QuadraticSurd::operator*(const Rational& x) const {
  return {a_ * x, b_ * x, radicand_};
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& other) const {
  if (b_ == 0) return other * a_;
  if (other.b_ == 0) return *this * other.a_;
  if (radicand_ != other.radicand_) throw DomainError("surd radicands differ");
  return {a_ * other.a_ + b_ * other.b_ * Rational(radicand_),
          a_ * other.b_ + b_ * other.a_, radicand_};
}

QuadraticSurd QuadraticSurd::pow(unsigned exponent) const {
  QuadraticSurd result = constant(1);
  for (unsigned j = 0; j < exponent; ++j) result = result * *this;
  return result;
}

// ---------------------------------------------------------------------------

RationalPower::RationalPower(Integer base, Rational exponent)
    : base_(std::move(base)), exponent_(std::move(exponent)) {
  if (base_ < 1) throw DomainError("RationalPower needs a base >= 1");
}

int RationalPower::compare(const Rational& y) const {
  if (y <= 0) return 1;
  // exponent = p/m with m > 0; t -> t^m is increasing on t > 0.
  Integer p = mp::numerator(exponent_);
  Integer m = mp::denominator(exponent_);
  Rational lhs = rpow(Rational(base_), p.convert_to<std::int64_t>());
  Rational rhs = rpow(y, m.convert_to<std::int64_t>());
  return sparsecode::sign(lhs - rhs);
}

Interval RationalPower::enclose(unsigned fractional_bits) const {
  auto p = mp::numerator(exponent_).convert_to<std::int64_t>();
  auto m = mp::denominator(exponent_).convert_to<unsigned>();
  Rational x = rpow(Rational(base_), p);
  Integer scaled = floor(x * Rational(Integer(1) << (fractional_bits * m)));
  Integer root = floor_root(scaled, m);
  Integer scale = Integer(1) << fractional_bits;
  Rational lo(root, scale);
  if (rpow(lo, m) == x) return {lo, lo};
  return {lo, Rational(root + 1, scale)};
}

double RationalPower::approx() const {
  return std::pow(base_.convert_to<double>(), to_double(exponent_));
}

int RationalPower::compare_affine(const Rational& offset, int direction,
                                  const Integer& m) const {
  // offset + d*P - m >= 0  <=>  d*P >= m - offset
  Rational gap = Rational(m) - offset;
  if (direction > 0) return compare(gap);
  return -compare(-gap);
}

Integer RationalPower::floor_of(const Rational& offset, int direction) const {
  Interval v = enclose();
  Integer m = floor(offset + (direction > 0 ? v.lo : Rational(-v.hi)));
  while (compare_affine(offset, direction, m + 1) >= 0) ++m;
  while (compare_affine(offset, direction, m) < 0) --m;
  return m;
}

Integer RationalPower::ceil_of(const Rational& offset, int direction) const {
  Integer m = floor_of(offset, direction);
  if (compare_affine(offset, direction, m) == 0) return m;
  return m + 1;
}

}  // namespace sparsecode
