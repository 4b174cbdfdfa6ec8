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

#include "sparsecode/krawtchouk.hpp"

#include <optional>
#include <string>

#include "sparsecode/errors.hpp"

namespace sparsecode {

namespace {

void check_args(std::size_t k, std::size_t i, std::size_t n) {
  if (k > n || i > n) {
    throw DomainError("Krawtchouk arguments out of range: k=" + std::to_string(k) +
                      " i=" + std::to_string(i) + " n=" + std::to_string(n));
  }
}

std::string idx(std::size_t k) { return "[k=" + std::to_string(k) + "]"; }
std::string idx(std::size_t k, std::size_t i) {
  return "[k=" + std::to_string(k) + ",i=" + std::to_string(i) + "]";
}

Integer factorial(std::size_t k) {
  Integer f = 1;
  for (std::size_t j = 2; j <= k; ++j) f *= j;
  return f;
}

}  // namespace

Integer krawtchouk(std::size_t k, std::size_t i, std::uint64_t q, std::size_t n) {
  check_args(k, i, n);
  if (q < 2) throw DomainError("Krawtchouk needs q >= 2");
  Integer sum = 0;
  for (std::size_t l = 0; l <= k; ++l) {
    Integer term = binomial(i, l) * binomial(n - i, k - l) * ipow(Integer(q - 1), k - l);
    if (l % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Rational krawtchouk(std::size_t k, std::size_t i, const Rational& s, std::size_t n) {
  check_args(k, i, n);
  if (s <= 1) throw DomainError("rational Krawtchouk needs s > 1");
  Rational sum = 0;
  for (std::size_t l = 0; l <= k; ++l) {
    Rational term = Rational(binomial(i, l) * binomial(n - i, k - l)) *
                    rpow(s - 1, static_cast<std::int64_t>(k - l));
    if (l % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(std::uint64_t q, std::size_t n, std::size_t k_max)
    : q_(q), n_(n), k_max_(k_max), values_((k_max + 1) * (n + 1)) {
  if (q < 2) throw DomainError("Krawtchouk needs q >= 2");
  if (k_max > n) throw DomainError("k_max exceeds n");
  const Integer qm1 = q - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    values_[i] = 1;
    if (k_max >= 1) values_[(n + 1) + i] = qm1 * (n - i) - Integer(i);
  }
  for (std::size_t k = 1; k < k_max; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      Integer a = qm1 * (n - k) + k - Integer(q) * i;
      Integer b = qm1 * (n - k + 1);
      Integer num = a * (*this)(k, i) - b * (*this)(k - 1, i);
      values_[(k + 1) * (n + 1) + i] = num / (k + 1);
    }
  }
}

RootInterval root_interval(std::size_t k, std::uint64_t q, std::size_t n) {
  if (k < 1 || k > n) throw DomainError("root_interval needs 1 <= k <= n");
  const Rational qr(q);
  Rational center = (1 - 1 / qr) * Rational(n) - Rational(k) * (1 - 2 / qr);
  Integer radicand = Integer(q - 1) * k * (n - k);
  QuadraticSurd mu1(center, -2 / qr, radicand);
  QuadraticSurd mu2(center, 2 / qr, radicand);
  return {mu1, mu2, mu1.enclose(), mu2.enclose()};
}

WeightDistribution macwilliams_transform(const WeightDistribution& weights,
                                         const Integer& code_size, std::uint64_t q,
                                         std::size_t n) {
  if (weights.counts.size() != n + 1) {
    throw DomainError("weight distribution has " + std::to_string(weights.counts.size()) +
                      " entries, expected n+1 = " + std::to_string(n + 1));
  }
  if (code_size <= 0) throw DomainError("code size must be positive");
  Integer total = 0;
  for (const auto& b : weights.counts) total += b;
  if (total != code_size) {
    throw DomainError("code size " + code_size.str() + " differs from the weight total " +
                      total.str());
  }
  KrawtchoukTable table(q, n, n);
  std::vector<Integer> dual(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Integer sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (weights.counts[i] != 0) sum += weights.counts[i] * table(k, i);
    }
    Integer quotient = sum / code_size;
    if (quotient * code_size != sum) {
      throw MacWilliamsViolation("B_" + std::to_string(k) + " of the dual is " + sum.str() +
                                 "/" + code_size.str() + ", not an integer");
    }
    if (quotient < 0) {
      throw MacWilliamsViolation("B_" + std::to_string(k) + " of the dual is negative (" +
                                 quotient.str() + ")");
    }
    dual[k] = std::move(quotient);
  }
  WeightDistribution out = WeightDistribution::from_counts(std::move(dual));
  if (out.set_size * code_size != ipow(Integer(q), n)) {
    throw MacWilliamsViolation("|C| * |C^perp| != q^n");
  }
  return out;
}

VerificationReport verify_krawtchouk_properties(std::uint64_t q, std::size_t n,
                                                std::size_t k_max) {
  if (k_max > n) throw DomainError("k_max exceeds n");
  VerificationReport report;
  const KrawtchoukTable table(q, n, k_max);
  const Rational qr(q);
  const Rational mean = (1 - 1 / qr) * Rational(n);

  for (std::size_t k = 0; k <= k_max; ++k) {
    report.compare("krawtchouk.p1" + idx(k), Rational(table(k, 0)), Relation::kEq,
                   Rational(binomial(n, k) * ipow(Integer(q - 1), k)), RowKind::kHard);

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i <= n; ++i) mismatches += table(k, i) != krawtchouk(k, i, q, n);
    report.compare("krawtchouk.recurrence" + idx(k), Rational(mismatches), Relation::kEq, 0,
                   RowKind::kHard, "table entries differing from the defining sum");

    // P_k(i, q, n) = P_k(n - i, q/(q-1), n) (1 - q)^k
    for (std::size_t i = 0; i <= n; ++i) {
      Rational rhs = krawtchouk(k, n - i, qr / (qr - 1), n) *
                     rpow(1 - qr, static_cast<std::int64_t>(k));
      report.compare("krawtchouk.p2" + idx(k, i), Rational(table(k, i)), Relation::kEq, rhs,
                     RowKind::kHard);
    }
  }

  // Orthogonality under the measure C(n,i)(q-1)^i.
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t l = k; l <= k_max; ++l) {
      Integer sum = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        sum += binomial(n, i) * ipow(Integer(q - 1), i) * table(k, i) * table(l, i);
      }
      std::string name = "krawtchouk.orthogonality[k=" + std::to_string(k) +
                         ",l=" + std::to_string(l) + "]";
      if (k != l) {
        report.compare(name, Rational(sum), Relation::kEq, 0, RowKind::kHard);
      } else {
        Integer norm = ipow(Integer(q), n) * binomial(n, k) * ipow(Integer(q - 1), k);
        report.compare(name, Rational(sum), Relation::kEq, Rational(norm),
                       RowKind::kInformational, "diagonal vs q^n C(n,k) (q-1)^k");
      }
    }
  }

  for (std::size_t k = 1; k <= k_max; ++k) {
    const RootInterval roots = root_interval(k, q, n);
    const Integer kfact = factorial(k);
    const Rational lead = Rational(ipow(Integer(q), k), kfact);

    // 4a: P_k(i) <= (q^k/k!) ((1 - 1/q) n - i)^k, asserted where the base is >= 0.
    for (std::size_t i = 0; i <= n; ++i) {
      Rational base = mean - Rational(i);
      Rational rhs = lead * rpow(base, static_cast<std::int64_t>(k));
      bool in_range = base >= 0;
      report.compare("krawtchouk.4a" + idx(k, i), Rational(table(k, i)), Relation::kLe, rhs,
                     in_range ? RowKind::kHard : RowKind::kInformational,
                     in_range ? "" : "i beyond (1-1/q)n; informational");
    }

    // 4b: |P_k(i)| <= (q^k/k!) (k(1 - 2/q) + (2/q) sqrt((q-1)k(n-k)))^k on [mu1, mu2].
    const QuadraticSurd base_4b(Rational(k) * (1 - 2 / qr), 2 / qr,
                                Integer(q - 1) * k * (n - k));
    const QuadraticSurd bound_4b = base_4b.pow(static_cast<unsigned>(k)) * lead;
    const Interval bound_4b_enclosure = bound_4b.enclose();
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational x(i);
      if (roots.mu1.compare(x) > 0 || roots.mu2.compare(x) < 0) continue;
      Rational magnitude = abs(Rational(table(k, i)));
      bool pass = bound_4b.compare(magnitude) >= 0;
      report.add({"krawtchouk.4b" + idx(k, i), magnitude, bound_4b_enclosure.lo, Relation::kLe,
                  pass, RowKind::kHard,
                  bound_4b.surd_coefficient() == 0 ? ""
                                                   : "rhs irrational: lower enclosure shown, "
                                                     "verdict decided exactly"});
    }

    // Every real root exceeds mu1, so P_k is positive to the left of mu1.
    for (std::size_t i = 0; i <= n; ++i) {
      if (roots.mu1.compare(Rational(i)) <= 0) break;
      report.compare("krawtchouk.p3_positive" + idx(k, i), Rational(table(k, i)), Relation::kGt,
                     0, RowKind::kHard, "integer point below mu1");
    }

    // Sign changes between consecutive non-zero values must stay inside
    // [floor(mu1), ceil(mu2)].
    const Integer lo = roots.mu1.floor();
    const Integer hi = roots.mu2.ceil();
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i <= n; ++i) {
      int s = table(k, i).sign();
      if (s == 0) continue;
      if (last && table(k, *last).sign() != s) {
        const std::size_t a = *last;
        std::string name = "krawtchouk.p3_sign_change[k=" + std::to_string(k) +
                           ",i=" + std::to_string(a) + ".." + std::to_string(i) + "]";
        // The root lies in (a, i); it is provably outside only when the
        // whole bracket is.
        if (Integer(i) <= lo) {
          report.compare(name, Rational(i), Relation::kGt, Rational(lo), RowKind::kHard,
                         "bracket (a, i) vs floor(mu1)");
        } else {
          report.compare(name, Rational(a), Relation::kLt, Rational(hi), RowKind::kHard,
                         "bracket (a, i) vs ceil(mu2)");
        }
      }
      last = i;
    }

    // 4c: odd k, P_k(i) <= 0 beyond mu2.
    if (k % 2 == 1) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (roots.mu2.compare(Rational(i)) >= 0) continue;
        report.compare("krawtchouk.4c" + idx(k, i), Rational(table(k, i)), Relation::kLe, 0,
                       RowKind::kHard, "integer point above mu2, odd k");
      }
    }
  }
  return report;
}

}  // namespace sparsecode
