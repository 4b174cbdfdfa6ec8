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

#include "sparsecode/bounds.hpp"

#include <algorithm>
#include <string>

#include "sparsecode/errors.hpp"
#include "sparsecode/krawtchouk.hpp"

namespace sparsecode {

namespace {

std::string at_k(std::size_t k) { return "[k=" + std::to_string(k) + "]"; }

Rational mean_weight(std::uint64_t q, std::size_t n) {
  return (1 - Rational(1, q)) * Rational(n);
}

// delta(C) >= 1 - 1/q - n^{-gamma}; vacuous for the zero code.
bool distance_hypothesis(const Profile& prof, const Rational& gamma) {
  const CodeProfile* p = as_code_profile(prof);
  if (p == nullptr) return true;
  RationalPower decay(p->n, -gamma);
  return decay.compare(1 - Rational(1, p->q) - p->min_distance) >= 0;
}

std::string parity_note(std::size_t k) {
  return k % 2 == 1 ? "odd k" : "even k: theorem-level claim needs odd k";
}

}  // namespace

BoundsParams BoundsParams::make(Rational t, Rational gamma, Rational c, Rational delta,
                                Rational tau) {
  BoundsParams p;
  p.t = std::move(t);
  p.gamma = std::move(gamma);
  p.gamma_prime = p.gamma / 2;
  p.c = std::move(c);
  p.delta = std::move(delta);
  p.tau = std::move(tau);
  p.validate();
  return p;
}

void BoundsParams::validate() const {
  if (t <= 0 || gamma <= 0 || c <= 0) throw DomainError("t, gamma and c must be positive");
  if (gamma_prime <= 0 || gamma_prime > gamma / 2) {
    throw DomainError("gamma' must lie in (0, gamma/2]");
  }
  if (delta < 0 || delta > Rational(1, 2)) throw DomainError("delta must lie in [0, 1/2]");
  if (tau < 0 || tau >= Rational(1, 2)) throw DomainError("tau must lie in [0, 1/2)");
}

WeightWindow weight_window(std::uint64_t q, std::size_t n, const Rational& exponent) {
  RationalPower half_width(n, exponent);
  const Rational mean = mean_weight(q, n);
  Integer lo = std::max(Integer(0), half_width.ceil_of(mean, -1));
  Integer hi = std::min(Integer(n), half_width.floor_of(mean, +1));
  return {lo, hi};
}

VerificationReport verify_prop4(const LinearCode& code, const BoundsParams& params) {
  params.validate();
  VerificationReport report;
  const std::size_t n = code.length();
  const std::uint64_t q = code.q();
  const WeightDistribution wd = weight_distribution(code);
  const Profile prof = profile(code);
  const CodeProfile* p = as_code_profile(prof);
  const Rational mean = mean_weight(q, n);

  const bool sparse = RationalPower(n, params.t).compare(Rational(code.size())) >= 0;
  report.hypothesis("prop4.hyp_sparse", sparse,
                    sparse ? "|C| <= n^t" : "hypothesis not met: |C| > n^t");
  const bool distant = distance_hypothesis(prof, params.gamma);
  report.hypothesis("prop4.hyp_distance", distant,
                    distant ? "delta(C) >= 1 - 1/q - n^-gamma"
                            : "hypothesis not met: delta(C) < 1 - 1/q - n^-gamma");

  report.compare("prop4.b0", Rational(wd.counts[0]), Relation::kEq, 1, RowKind::kHard);

  report.add({"prop4.total", Rational(wd.set_size), RationalPower(n, params.t).enclose().lo,
              Relation::kLe, sparse, sparse ? RowKind::kHard : RowKind::kGated,
              "sum of B_i vs n^t (rhs lower enclosure)"});

  // Weights strictly below (1-1/q)n - n^{1-gamma} must be absent.
  {
    RationalPower width(n, 1 - params.gamma);
    Integer first_allowed = width.ceil_of(mean, -1);
    Integer low_mass = 0;
    for (std::size_t i = 1; i <= n && Integer(i) < first_allowed; ++i) low_mass += wd.counts[i];
    report.compare("prop4.low_weights", Rational(low_mass), Relation::kEq, 0,
                   distant ? RowKind::kHard : RowKind::kGated,
                   "B_i for 1 <= i < " + to_string(Rational(first_allowed)));
  }

  // With bias <= n^{-gamma}: weights above (1-1/q)n + n^{1-gamma} are absent.
  {
    const bool low_bias =
        p == nullptr || RationalPower(n, -params.gamma).compare(p->bias) >= 0;
    report.hypothesis("prop4.hyp_bias", low_bias,
                      low_bias ? "bias <= n^-gamma" : "hypothesis not met: bias > n^-gamma");
    RationalPower width(n, 1 - params.gamma);
    Integer last_allowed = width.floor_of(mean, +1);
    Integer high_mass = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (Integer(i) > last_allowed) high_mass += wd.counts[i];
    }
    report.compare("prop4.high_weights", Rational(high_mass), Relation::kEq, 0,
                   low_bias ? RowKind::kHard : RowKind::kGated,
                   "B_i for i > " + to_string(Rational(last_allowed)));
  }
  return report;
}

VerificationReport claim5_sum(const WeightDistribution& weights, std::size_t k,
                              const BoundsParams& params, std::uint64_t q, std::size_t n) {
  params.validate();
  if (k > n) throw DomainError("k exceeds n");
  if (weights.counts.size() != n + 1) throw DomainError("weight distribution length mismatch");
  const Rational threshold = (params.t + params.c + 1) / params.gamma;
  if (Rational(k) < threshold) {
    throw PreconditionError("k=" + std::to_string(k) + " is below (t+c+1)/gamma = " +
                            to_string(threshold));
  }
  const KrawtchoukTable table(q, n, k);
  const WeightWindow window = weight_window(q, n, 1 - params.gamma);
  Integer window_sum = 0;
  Integer tail_sum = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (Integer(i) < window.lo) continue;
    Integer term = weights.counts[i] * table(k, i);
    tail_sum += term;
    if (Integer(i) <= window.hi) window_sum += term;
  }
  const Rational p0(table(k, 0));
  const RationalPower target(n, -params.c);
  const std::string range = "i in [" + to_string(window.lo) + "," + to_string(window.hi) + "]";

  VerificationReport report;
  Rational window_ratio = abs(Rational(window_sum)) / p0;
  report.add({"claim5.window" + at_k(k), window_ratio, target.enclose().lo, Relation::kLe,
              target.compare(window_ratio) >= 0, RowKind::kInformational,
              "|sum B_i P_k(i)| / P_k(0) over " + range + ", sum = " + to_string(window_sum) +
                  "; rhs n^-c (lower enclosure)"});
  if (k % 2 == 1) {
    Rational tail_ratio = Rational(tail_sum) / p0;
    report.add({"claim5.tail" + at_k(k), tail_ratio, target.enclose().lo, Relation::kLe,
                target.compare(tail_ratio) >= 0, RowKind::kInformational,
                "sum_{i >= " + to_string(window.lo) + "} B_i P_k(i) / P_k(0), sum = " +
                    to_string(tail_sum) + "; rhs n^-c (lower enclosure)"});
    report.compare("claim5.tail_sign" + at_k(k), Rational(tail_sum), Relation::kLe, 0,
                   RowKind::kInformational, "odd-k tail direction");
  }
  return report;
}

Rational lemma6_deviation(const LinearCode& code, std::size_t k) {
  const std::size_t n = code.length();
  if (k < 1 || k > n) throw DomainError("lemma6_deviation needs 1 <= k <= n");
  const WeightDistribution dual =
      macwilliams_transform(weight_distribution(code), code.size(), code.q(), n);
  const Integer p0 = krawtchouk(k, 0, code.q(), n);
  return Rational(dual.counts[k] * code.size(), p0) - 1;
}

VerificationReport lemma6_report(const LinearCode& code, std::size_t k, const Rational& slack) {
  VerificationReport report;
  const Rational dev = lemma6_deviation(code, k);
  if (k % 2 == 1) {
    report.compare("lemma6.upper" + at_k(k), dev, Relation::kLe, slack, RowKind::kInformational,
                   "B_k(C^perp)|C|/P_k(0) - 1 vs slack; " + parity_note(k));
  }
  report.compare("lemma6.deviation" + at_k(k), abs(dev), Relation::kLe, slack,
                 RowKind::kInformational,
                 "|B_k(C^perp)|C|/P_k(0) - 1| vs slack; " + parity_note(k));
  return report;
}

VerificationReport lemma8_check(std::size_t k, const Rational& tau, std::uint64_t q,
                                std::size_t n) {
  if (tau < 0 || tau >= Rational(1, 2)) throw DomainError("tau must lie in [0, 1/2)");
  if (k > n) throw DomainError("k exceeds n");
  const Rational point = tau * Rational(n);
  std::vector<Integer> points{floor(point)};
  if (!is_integer(point)) points.push_back(ceil(point));
  const Integer p0 = krawtchouk(k, 0, q, n);
  const Rational rhs = rpow(1 - tau, static_cast<std::int64_t>(k)) * Rational(p0);
  VerificationReport report;
  for (const Integer& i : points) {
    auto idx = i.convert_to<std::size_t>();
    report.compare("lemma8[k=" + std::to_string(k) + ",i=" + std::to_string(idx) + "]",
                   Rational(krawtchouk(k, idx, q, n)), Relation::kLe, rhs,
                   RowKind::kInformational,
                   "P_k(i) vs (1-tau)^k P_k(0), tau=" + to_string(tau) +
                       (is_integer(point) ? "" : " (tau n fractional)"));
  }
  return report;
}

Rational johnson_count_bound(std::size_t i, std::uint64_t q, std::size_t n) {
  const Rational base = Rational(n) - Rational(q * i, q - 1);
  if (base <= 0) {
    throw DomainError("Johnson bound needs i < n(q-1)/q; got i=" + std::to_string(i));
  }
  return Rational(q * n * n) / (base * base);
}

VerificationReport lemma9_sum_check(const LinearCode& code, std::size_t k,
                                    const BoundsParams& params) {
  params.validate();
  const std::size_t n = code.length();
  const std::uint64_t q = code.q();
  if (k < 2 || k > n) throw DomainError("lemma9_sum_check needs 2 <= k <= n");
  VerificationReport report;
  const Profile prof = profile(code);
  const bool distant = distance_hypothesis(prof, params.gamma);
  report.hypothesis("lemma9.hyp_distance", distant,
                    distant ? "delta(C) >= 1 - 1/q - n^-gamma"
                            : "hypothesis not met: delta(C) < 1 - 1/q - n^-gamma");
  const RowKind kind_if_met = distant ? RowKind::kInformational : RowKind::kGated;

  const Rational mean = mean_weight(q, n);
  const RationalPower width(n, 1 - params.gamma_prime);
  const Rational delta_n = params.delta * Rational(n);
  Integer a = std::max(width.ceil_of(mean - delta_n, -1), ceil(delta_n));
  a = std::max(a, Integer(0));
  Integer b = std::min(width.floor_of(mean, -1), Integer(n));
  const std::string range = "[a,b]=[" + to_string(a) + "," + to_string(b) + "]";

  const WeightDistribution wd = weight_distribution(code);
  const KrawtchoukTable table(q, n, k);
  const Rational p0(table(k, 0));

  if (a > b) {
    report.compare("lemma9.sum" + at_k(k), 0, Relation::kLe, 0, kind_if_met,
                   "range empty " + range + ": vacuous");
  } else {
    Integer lhs = 0;
    for (auto i = a.convert_to<std::size_t>(); Integer(i) <= b; ++i) {
      lhs += table(k, i) * wd.counts[i];
    }
    const Rational coeff = 2 * Rational(q * q + q) * p0;
    const Rational qq(q, q - 1);
    const auto e = static_cast<std::int64_t>(k - 2);
    const Rational first = coeff * rpow(1 - qq * params.delta, e);
    const Rational second_fixed = coeff * rpow(2 * qq * params.delta, e);
    const Rational decay_coeff = coeff * rpow(2 * qq, e);
    // decay_coeff * n^{-gamma (k-2)}
    const RationalPower decay(n, -params.gamma * Rational(e));
    const Rational lhs_r(lhs);
    bool within_first = lhs_r <= first;
    bool within_second = decay_coeff == 0
                             ? lhs_r <= second_fixed
                             : decay.compare((lhs_r - second_fixed) / decay_coeff) >= 0;
    const Rational second_lo = second_fixed + decay_coeff * decay.enclose().lo;
    report.add({"lemma9.sum" + at_k(k), lhs_r, std::min(first, second_lo), Relation::kLe,
                within_first && within_second, kind_if_met,
                "sum_{i in " + range + "} P_k(i) B_i vs 2(q^2+q) P_k(0) min{...}" +
                    (decay_coeff == 0 ? "" : " (rhs lower enclosure)")});
  }

  // Ball-count premise: sum_{j <= i} B_j <= m_i for all i <= b.
  Integer running = 0;
  for (std::size_t i = 0; Integer(i) <= b; ++i) {
    running += wd.counts[i];
    report.compare("lemma9.ball_count[i=" + std::to_string(i) + "]", Rational(running),
                   Relation::kLe, johnson_count_bound(i, q, n),
                   distant ? RowKind::kHard : RowKind::kGated, "sum_{j<=i} B_j vs m_i");
  }
  return report;
}

VerificationReport lemma10_check(const LinearCode& code, const Word& v, std::size_t k) {
  const std::size_t n = code.length();
  if (k < 1 || k > n) throw DomainError("lemma10_check needs 1 <= k <= n");
  if (code.contains(v)) throw PreconditionError("lemma10_check needs v outside the code");
  VerificationReport report;
  const Rational delta = relative_distance(code, v);
  const LinearCode extended = span_with(code, v);
  const WeightDistribution ext_wd = weight_distribution(extended);

  // B^{C||v} is the sum over mu of the coset distributions B^{C + mu v}.
  std::vector<Integer> coset_sum(n + 1, 0);
  for (Symbol mu = 0; mu < code.q(); ++mu) {
    const WeightDistribution cw = coset_weight_distribution(code, scale(mu, v));
    for (std::size_t i = 0; i <= n; ++i) coset_sum[i] += cw.counts[i];
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i <= n; ++i) mismatches += coset_sum[i] != ext_wd.counts[i];
  report.compare("lemma10.coset_sum", Rational(mismatches), Relation::kEq, 0, RowKind::kHard,
                 "weights of C||v vs union of the q cosets C + mu v");

  const WeightDistribution dual =
      macwilliams_transform(ext_wd, extended.size(), code.q(), n);
  const Integer p0 = krawtchouk(k, 0, code.q(), n);
  report.compare("lemma10" + at_k(k), Rational(dual.counts[k], p0), Relation::kLe,
                 1 - delta / 2, RowKind::kInformational,
                 "B_k((C||v)^perp)/P_k(0) vs 1 - delta/2, delta(v,C)=" + to_string(delta) +
                     "; " + parity_note(k));
  return report;
}

std::uint64_t select_test_weight(const BoundsParams& params, std::uint64_t q) {
  params.validate();
  const Integer from_claim = ceil((params.t + params.c + 1) / params.gamma);
  const Integer from_lemma10 = Integer(16) * (q * q + q);
  const Integer from_small_delta = ceil(2 + Rational(2 * q, q - 1));
  Integer k = std::max({from_claim, from_lemma10, from_small_delta});
  if (k % 2 == 0) k += 1;
  return k.convert_to<std::uint64_t>();
}

}  // namespace sparsecode
