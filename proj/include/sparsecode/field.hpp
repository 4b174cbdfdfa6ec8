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

// Prime field F_q. Elements are canonical residues in [0, q), so equality
// is structural. Prime powers are rejected: GF(p^m) needs a polynomial
// representation that this module does not provide.

#pragma once

#include <compare>
#include <cstdint>

namespace sparsecode {

using Symbol = std::uint32_t;

class FieldElement {
 public:
  constexpr FieldElement() = default;

  constexpr Symbol value() const { return value_; }
  constexpr Symbol order() const { return order_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FieldSpec;
  constexpr FieldElement(Symbol value, Symbol order) : value_(value), order_(order) {}

  Symbol value_ = 0;
  Symbol order_ = 0;
};

class FieldSpec {
 public:
  // Throws CompositeOrder unless q is prime (q >= 2).
  static FieldSpec make(std::uint64_t q);

  Symbol order() const { return q_; }

  // Throws DomainError if value >= q.
  FieldElement element(std::uint64_t value) const;
  FieldElement zero() const { return {0, q_}; }
  FieldElement one() const { return {1, q_}; }

  // Throw FieldMismatch when an operand belongs to another field.
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  // Throws ZeroInverse for a = 0.
  FieldElement inv(FieldElement a) const;

  // Unchecked residue arithmetic for inner loops; inputs must be < q.
  Symbol add(Symbol a, Symbol b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Symbol>(s >= q_ ? s - q_ : s);
  }
  Symbol sub(Symbol a, Symbol b) const { return a >= b ? a - b : a + (q_ - b); }
  Symbol neg(Symbol a) const { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const {
    return static_cast<Symbol>((std::uint64_t{a} * b) % q_);
  }
  Symbol inv(Symbol a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(Symbol q) : q_(q) {}
  void check(FieldElement a) const;

  Symbol q_;
};

bool is_prime(std::uint64_t q);

}  // namespace sparsecode
