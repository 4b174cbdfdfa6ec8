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

#include "sparsecode/field.hpp"

#include <limits>
#include <string>

#include "sparsecode/errors.hpp"

namespace sparsecode {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q < 4) return true;
  if (q % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= q / d; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint64_t q) {
  if (q > std::numeric_limits<Symbol>::max() || !is_prime(q)) {
    throw CompositeOrder("field order " + std::to_string(q) + " is not a prime");
  }
  return FieldSpec(static_cast<Symbol>(q));
}

FieldElement FieldSpec::element(std::uint64_t value) const {
  if (value >= q_) {
    throw DomainError("residue " + std::to_string(value) + " out of range for q=" +
                      std::to_string(q_));
  }
  return {static_cast<Symbol>(value), q_};
}

void FieldSpec::check(FieldElement a) const {
  if (a.order() != q_) {
    throw FieldMismatch("element of F_" + std::to_string(a.order()) +
                        " used with F_" + std::to_string(q_));
  }
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add(a.value(), b.value()), q_};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {sub(a.value(), b.value()), q_};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  check(a);
  return {neg(a.value()), q_};
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul(a.value(), b.value()), q_};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  check(a);
  return {inv(a.value()), q_};
}

Symbol FieldSpec::inv(Symbol a) const {
  if (a % q_ == 0) throw ZeroInverse("zero has no inverse in F_" + std::to_string(q_));
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += q_;
  return static_cast<Symbol>(t0);
}

}  // namespace sparsecode
