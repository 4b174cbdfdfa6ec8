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

#include "sparsecode/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "sparsecode/bounds.hpp"
#include "sparsecode/corrector.hpp"
#include "sparsecode/errors.hpp"
#include "sparsecode/krawtchouk.hpp"
#include "sparsecode/tester.hpp"

namespace sparsecode {

namespace {

constexpr int kGenRetries = 64;
constexpr int kRowRetries = 1000;

std::string idx(std::size_t i) { return std::to_string(i); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": not a non-negative integer: '" + text + "'");
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw ParseError(what + ": not a non-negative integer: '" + text + "'");
  }
  return v;
}

Rational parse_param(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
}

BoundsParams params_from(const CliOptions& o) {
  return BoundsParams::make(parse_param(o.t, "t"), parse_param(o.gamma, "gamma"),
                            parse_param(o.c, "c"), parse_param(o.delta, "delta"),
                            parse_param(o.tau, "tau"));
}

Json base_config(const CliOptions& o) {
  Json cfg;
  if (!o.in.empty()) cfg["in"] = o.in;
  if (o.q) cfg["q"] = *o.q;
  if (o.n) cfg["n"] = *o.n;
  cfg["t"] = o.t;
  cfg["gamma"] = o.gamma;
  cfg["c"] = o.c;
  cfg["delta"] = o.delta;
  cfg["tau"] = o.tau;
  cfg["seed"] = o.seed;
  return cfg;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

LinearCode require_code(const CliOptions& o) {
  if (o.in.empty()) throw ParseError("--in <code file> is required");
  return load_code(o.in);
}

// Throws ScanTooLarge when C(n,k)(q-1)^k exceeds the guard.
void guard(const CliOptions& o, std::size_t n, std::size_t k, std::uint64_t q,
           const std::string& row) {
  const Integer work = dual_candidate_count(n, k, static_cast<Symbol>(q));
  if (work > o.guard_limit) {
    throw ScanTooLarge(row + ": " + to_string(work) + " candidate dual words exceed the guard " +
                       std::to_string(o.guard_limit) + " (SPARSECODE_GUARD_LIMIT)");
  }
}

std::size_t resolve_k(const CliOptions& o, const LinearCode& code, Json& cfg) {
  const BoundsParams params = params_from(o);
  const std::uint64_t k0 = select_test_weight(params, code.q());
  std::uint64_t k = 0;
  if (o.k.empty() || o.k == "auto") {
    k = k0;
    cfg["k_source"] = "auto";
  } else {
    k = parse_unsigned(o.k, "--k");
    cfg["k_source"] = "explicit";
    if (k < k0) {
      cfg["warning"] = "k is below k0; theorem-level guarantees need k >= k0";
    }
  }
  cfg["k"] = k;
  cfg["k0"] = k0;
  if (k == 0 || k > code.length()) {
    throw DomainError("k=" + std::to_string(k) + " must satisfy 0 < k <= n=" +
                      idx(code.length()));
  }
  return static_cast<std::size_t>(k);
}

void add_distribution(ReportDocument& doc, const std::string& name,
                      const WeightDistribution& wd) {
  doc.tables.emplace_back(name, wd.counts);
}

}  // namespace

std::uint64_t guard_limit_from_env() {
  const char* env = std::getenv("SPARSECODE_GUARD_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultGuardLimit;
  return parse_unsigned(env, "SPARSECODE_GUARD_LIMIT");
}

Word parse_word(FieldSpec field, std::size_t n, const std::string& text) {
  std::vector<Symbol> symbols;
  for (const std::string& part : split(text, ',')) {
    const std::uint64_t v = parse_unsigned(part, "--word");
    if (v >= field.order()) throw ParseError("--word: " + part + " is not a residue mod q");
    symbols.push_back(static_cast<Symbol>(v));
  }
  if (symbols.size() != n) {
    throw ParseError("--word: expected " + idx(n) + " symbols, got " + idx(symbols.size()));
  }
  return Word(field, std::move(symbols));
}

Word random_codeword(const LinearCode& code, RandomSource& rng) {
  return code.codewords()[rng.uniform(code.size())];
}

Word corrupt(const Word& w, std::size_t count, RandomSource& rng) {
  Word out = w;
  const Symbol q = w.field().order();
  for (std::size_t pos : rng.distinct(w.length(), count)) {
    const auto shift = static_cast<Symbol>(1 + rng.uniform(q - 1));
    out.set(pos, w.field().add(w[pos], shift));
  }
  return out;
}

LinearCode generate_code(std::uint64_t q, std::size_t n, std::size_t dim, std::uint64_t seed,
                         const std::optional<Rational>& max_bias) {
  const FieldSpec field = FieldSpec::make(q);
  if (n == 0) throw EmptyBlock("n must be positive");
  if (dim == 0 || dim > n) throw DomainError("dimension must satisfy 1 <= d <= n");
  RandomSource rng(seed);
  std::optional<Rational> best;
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    std::vector<Word> rows;
    for (std::size_t r = 0; r < dim; ++r) {
      bool placed = false;
      for (int tries = 0; tries < kRowRetries && !placed; ++tries) {
        std::vector<Symbol> symbols(n);
        for (Symbol& s : symbols) s = static_cast<Symbol>(rng.uniform(q));
        rows.emplace_back(field, std::move(symbols));
        if (LinearCode::from_generators(field, n, rows).dimension() == rows.size()) {
          placed = true;
        } else {
          rows.pop_back();
        }
      }
      if (!placed) throw DomainError("could not draw an independent row");
    }
    LinearCode code = LinearCode::from_generators(field, n, rows);
    if (!max_bias) return code;
    const Profile prof = profile(code);
    const Rational bias = as_code_profile(prof)->bias;
    if (bias <= *max_bias) return code;
    if (!best || bias < *best) best = bias;
  }
  throw BiasUnreachable("no code with bias <= " + to_string(*max_bias) + " after " +
                        std::to_string(kGenRetries) + " attempts; best bias " +
                        to_string(*best));
}

void run_inspect(const CliOptions& o, ReportDocument& doc) {
  doc.command = "inspect";
  doc.config = base_config(o);
  const LinearCode code = require_code(o);
  const Profile prof = profile(code);
  doc.values.emplace_back("n", Rational(code.length()));
  doc.values.emplace_back("q", Rational(code.q()));
  doc.values.emplace_back("size", Rational(code.size()));
  doc.values.emplace_back("dimension", Rational(code.dimension()));
  if (const CodeProfile* p = as_code_profile(prof)) {
    doc.values.emplace_back("min_weight", Rational(p->min_weight));
    doc.values.emplace_back("max_weight", Rational(p->max_weight));
    doc.values.emplace_back("min_distance", p->min_distance);
    doc.values.emplace_back("bias", p->bias);
    if (p->sparsity_exponent) {
      // Exact binary value of the double estimate of ln|C| / ln n.
      doc.values.emplace_back("t_hat_approx", Rational(*p->sparsity_exponent));
    }
  } else {
    doc.values.emplace_back("all_zero", Rational(1));
  }
  for (std::size_t r : code.dropped_rows()) {
    doc.values.emplace_back("dropped_row", Rational(r));
  }
  add_distribution(doc, "weights", weight_distribution(code));
}

void run_macwilliams(const CliOptions& o, ReportDocument& doc) {
  doc.command = "macwilliams";
  doc.config = base_config(o);
  const LinearCode code = require_code(o);
  const std::size_t n = code.length();
  const std::size_t kmax = std::min(o.kmax.value_or(n), n);
  doc.config["kmax"] = kmax;

  WeightDistribution weights = weight_distribution(code);
  Integer size = code.size();
  if (!o.inject_weights.empty()) {
    std::vector<Integer> counts;
    for (const std::string& part : split(o.inject_weights, ',')) {
      counts.emplace_back(parse_unsigned(part, "--inject-weights"));
    }
    weights = WeightDistribution::from_counts(std::move(counts));
    size = weights.set_size;
    doc.config["inject_weights"] = o.inject_weights;
  }
  add_distribution(doc, "weights", weights);
  try {
    const WeightDistribution dual = macwilliams_transform(weights, size, code.q(), n);
    add_distribution(doc, "dual_weights", dual);
    for (std::size_t k = 0; k <= kmax; ++k) {
      const std::string row = "macwilliams.slice[k=" + idx(k) + "]";
      guard(o, n, k, code.q(), row);
      VerificationReport r;
      r.compare(row, Rational(dual.counts[k]), Relation::kEq,
                Rational(dual_slice_count(code, k)), RowKind::kHard,
                "transform vs enumerated weight-k dual words");
      doc.add_rows(r);
    }
  } catch (const MacWilliamsViolation& e) {
    doc.error = std::string("MacWilliamsViolation: ") + e.what();
  }
}

void run_test(const CliOptions& o, ReportDocument& doc) {
  doc.command = "test";
  doc.config = base_config(o);
  doc.config["trials"] = o.trials;
  const LinearCode code = require_code(o);
  const std::size_t n = code.length();
  const std::size_t k = resolve_k(o, code, doc.config);
  doc.config["parity"] = k % 2 == 1 ? "odd" : "even";

  RandomSource rng = RandomSource::derive(o.seed, 0);
  Word v = Word::zero(code.field(), n);
  if (!o.word.empty()) {
    v = parse_word(code.field(), n, o.word);
    doc.config["word_source"] = "explicit";
  } else {
    const std::size_t count =
        floor(parse_param(o.delta, "delta") * Rational(n)).convert_to<std::size_t>();
    v = corrupt(random_codeword(code, rng), count, rng);
    doc.config["word_source"] = "random at distance floor(delta n)";
  }
  doc.config["word"] = to_string(v);

  guard(o, n, k, code.q(), "tester[k=" + idx(k) + "]");
  const TesterInstance tester = TesterInstance::create(code, k);
  const Rational exact = rejection_probability_exact(code, k, v);
  doc.values.emplace_back("rej_exact", exact);
  doc.values.emplace_back("delta_v", relative_distance(code, v));
  doc.values.emplace_back("slice_size", Rational(tester.slice().size()));

  VerificationReport rep;
  rep.compare("tester.slice_count", rejection_probability(tester, v), Relation::kEq, exact,
              RowKind::kHard, "fraction of slice members with <y,v> != 0 vs exact value");

  const MonteCarloEstimate mc =
      rejection_probability_mc(tester, v, o.trials, RandomSource::derive(o.seed, 1).next());
  doc.montecarlo.emplace_back("rej_mc", mc);
  const Rational gap = abs(mc.estimate - exact);
  rep.add({"tester.mc_within_3se", gap, Rational(3 * mc.standard_error), Relation::kLe,
           gap <= Rational(3 * mc.standard_error), RowKind::kInformational,
           "|estimate - exact| vs 3 standard errors"});

  const Integer space = ipow(Integer(code.q()), n);
  if (space <= kMaxSoundnessScan && space * tester.slice().size() <= o.guard_limit) {
    const SoundnessResult s = soundness_profile(code, k);
    if (s.empty_domain) {
      rep.hypothesis("tester.soundness", false, "empty domain: every word is a codeword");
    } else {
      rep.compare("tester.soundness", s.min_ratio, Relation::kGt, 0, RowKind::kInformational,
                  "min Rej_k(v)/delta(v,C) over all v outside C; witness " +
                      to_string(*s.witness));
    }
  } else {
    rep.hypothesis("tester.soundness", false, "skipped: exhaustive scan exceeds the guard");
  }
  doc.add_rows(rep);
}

void run_correct(const CliOptions& o, ReportDocument& doc) {
  doc.command = "correct";
  doc.config = base_config(o);
  doc.config["trials"] = o.trials;
  doc.config["slack"] = o.slack;
  const LinearCode code = require_code(o);
  const std::size_t n = code.length();
  const std::size_t k = resolve_k(o, code, doc.config);
  const Rational slack = parse_param(o.slack, "slack");

  RandomSource rng = RandomSource::derive(o.seed, 0);
  Word truth = Word::zero(code.field(), n);
  if (!o.word.empty()) {
    truth = parse_word(code.field(), n, o.word);
    if (!code.contains(truth)) throw PreconditionError("--word must be a codeword");
  } else {
    truth = random_codeword(code, rng);
  }
  Word v = truth;
  if (o.errors == "none") {
    doc.config["errors"] = "none";
  } else if (!o.errors.empty()) {
    for (const std::string& part : split(o.errors, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos) throw ParseError("--errors: expected pos:value");
      const std::uint64_t pos = parse_unsigned(part.substr(0, colon), "--errors position");
      const std::uint64_t val = parse_unsigned(part.substr(colon + 1), "--errors value");
      if (pos >= n) throw IndexError("--errors: position " + std::to_string(pos));
      if (val == 0 || val >= code.q()) throw ParseError("--errors: value must lie in [1, q)");
      v.set(pos, code.field().add(v[pos], static_cast<Symbol>(val)));
    }
    doc.config["errors"] = o.errors;
  } else {
    const std::size_t count =
        floor(parse_param(o.tau, "tau") * Rational(n)).convert_to<std::size_t>();
    v = corrupt(truth, count, rng);
    doc.config["errors"] = "random floor(tau n)";
  }
  doc.config["truth"] = to_string(truth);
  doc.config["word"] = to_string(v);

  std::vector<std::size_t> indices;
  if (o.index) {
    if (*o.index >= n) throw IndexError("--i " + idx(*o.index) + " out of range");
    indices.push_back(*o.index);
  } else {
    for (std::size_t i = 0; i < n; ++i) indices.push_back(i);
  }

  guard(o, n, k, code.q(), "corrector[k=" + idx(k) + "]");
  const CorrectorInstance corrector(code, k);
  VerificationReport rep;
  for (std::size_t i : indices) {
    if (corrector.slice(i).empty()) {
      if (o.index) {
        throw NoCorrectionVectors("no dual word of weight " + idx(k) +
                                  " is non-zero at index " + idx(i));
      }
      rep.hypothesis("corrector.vectors[i=" + idx(i) + "]", false,
                     "no dual word of weight k is non-zero at i");
      continue;
    }
    doc.values.emplace_back("error[i=" + idx(i) + "]",
                            correction_error_exact(corrector, v, truth, i));
    doc.montecarlo.emplace_back(
        "error_mc[i=" + idx(i) + "]",
        correction_error_mc(corrector, v, truth, i, o.trials,
                            RandomSource::derive(o.seed, 1 + i).next()));
    rep.append(lemma14_bound_check(corrector, v, truth, i, slack));
    if (n >= 2) {
      if (o.index) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) rep.append(lemma13_report(code, k, i, j));
        }
      } else {
        rep.append(lemma13_report(code, k, i, (i + 1) % n));
      }
    }
  }
  doc.add_rows(rep);
}

void run_verify(const CliOptions& o, ReportDocument& doc) {
  doc.command = "verify";
  doc.config = base_config(o);
  const BoundsParams params = params_from(o);
  const Rational slack = parse_param(o.slack, "slack");
  doc.config["slack"] = o.slack;

  std::optional<LinearCode> code;
  std::uint64_t q = 0;
  std::size_t n = 0;
  if (!o.in.empty()) {
    code = load_code(o.in);
    q = code->q();
    n = code->length();
  } else {
    if (!o.q || !o.n) throw ParseError("verify needs --in or both --q and --n");
    q = FieldSpec::make(*o.q).order();
    n = *o.n;
    if (n == 0) throw EmptyBlock("n must be positive");
  }
  const std::size_t kmax =
      std::min(o.kmax.value_or(std::max<std::size_t>(1, std::min<std::size_t>(3, n - 1))), n);
  doc.config["kmax"] = kmax;

  VerificationReport rep;
  rep.append(verify_krawtchouk_properties(q, n, kmax));
  if (!code) {
    doc.add_rows(rep);
    return;
  }

  const WeightDistribution wd = weight_distribution(*code);
  add_distribution(doc, "weights", wd);
  const WeightDistribution dual = macwilliams_transform(wd, code->size(), q, n);
  add_distribution(doc, "dual_weights", dual);

  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::string row = "macwilliams.slice[k=" + idx(k) + "]";
    guard(o, n, k, q, row);
    rep.compare(row, Rational(dual.counts[k]), Relation::kEq,
                Rational(dual_slice_count(*code, k)), RowKind::kHard,
                "transform vs enumerated weight-k dual words");
  }

  if (!o.inject_dual.empty()) {
    const Word y = parse_word(code->field(), n, o.inject_dual);
    std::size_t bad = 0;
    for (const Word& g : code->generators()) bad += inner_product(g, y) != 0;
    rep.compare("inject.dual_orthogonal", Rational(bad), Relation::kEq, 0, RowKind::kHard,
                "injected dual word: generators with non-zero inner product");
    doc.config["inject_dual"] = o.inject_dual;
  }

  rep.append(verify_prop4(*code, params));

  const Rational claim_k = (params.t + params.c + 1) / params.gamma;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (Rational(k) >= claim_k) rep.append(claim5_sum(wd, k, params, q, n));
    rep.append(lemma6_report(*code, k, slack));
    rep.append(lemma8_check(k, params.tau, q, n));
    if (k >= 2) rep.append(lemma9_sum_check(*code, k, params));
  }

  // One deterministic word outside C for the span identity.
  RandomSource rng = RandomSource::derive(o.seed, 0);
  const std::size_t count = std::max<std::size_t>(
      1, floor(params.delta * Rational(n)).convert_to<std::size_t>());
  const Word v = corrupt(random_codeword(*code, rng), std::min(count, n), rng);
  doc.config["lemma10_word"] = to_string(v);
  if (code->contains(v)) {
    rep.hypothesis("lemma10.word_outside", false, "drawn word is a codeword; rows skipped");
  } else {
    for (std::size_t k = 1; k <= kmax; ++k) rep.append(lemma10_check(*code, v, k));
  }

  for (std::size_t k = 1; k <= kmax; ++k) {
    guard(o, n, k, q, "prop11[k=" + idx(k) + "]");
    for (std::size_t i = 0; i < n; ++i) rep.append(prop11_check(*code, k, i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        rep.append(prop12_check(*code, k, i, j));
        const std::size_t at_i[] = {i};
        if (dual_slice_count(*code, k, at_i) > 0) rep.append(lemma13_report(*code, k, i, j));
      }
    }
  }
  doc.add_rows(rep);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for sparse low-bias linear codes", "sparsecode"};
  app.fallthrough();
  app.require_subcommand(1);
  CliOptions o;

  app.add_option("--q", o.q, "Field order (prime)");
  app.add_option("--n", o.n, "Block length");
  app.add_option("--dim", o.dim, "Code dimension");
  app.add_option("--k", o.k, "Query count k, or 'auto'");
  app.add_option("--kmax", o.kmax, "Largest k examined");
  app.add_option("--t", o.t, "Sparsity exponent t");
  app.add_option("--gamma", o.gamma, "Bias exponent gamma");
  app.add_option("--c", o.c, "Error exponent c");
  app.add_option("--delta", o.delta, "Distance parameter delta");
  app.add_option("--tau", o.tau, "Closeness parameter tau");
  app.add_option("--slack", o.slack, "Additive slack on finite-n bounds");
  app.add_option("--trials", o.trials, "Monte Carlo trials");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--in", o.in, "Code file");
  app.add_option("--out", o.out, "Output path (stdout when omitted)");
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit the report timestamp");
  app.add_option("--word", o.word, "Word as comma-separated symbols");
  app.add_option("--errors", o.errors, "Corruption pos:value,... or 'none'");
  app.add_option("--i", o.index, "Index to correct");
  app.add_option("--max-bias", o.max_bias, "Largest accepted bias for gen");
  app.add_option("--inject-weights", o.inject_weights, "Test hook: primal weights")
      ->group("");
  app.add_option("--inject-dual", o.inject_dual, "Test hook: claimed dual word")->group("");

  auto* gen = app.add_subcommand("gen", "Generate a random code file");
  auto* inspect = app.add_subcommand("inspect", "Profile a code");
  auto* macw = app.add_subcommand("macwilliams", "Weight and dual weight tables");
  auto* test = app.add_subcommand("test", "Run the k-query tester");
  auto* correct = app.add_subcommand("correct", "Run the self-corrector");
  auto* verify = app.add_subcommand("verify", "Run the verification suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto emit = [&](const std::string& text) {
    if (o.out.empty()) {
      out << text;
    } else {
      write_atomic(o.out, text);
    }
  };
  auto emit_doc = [&](ReportDocument& doc) {
    if (!o.no_timestamp) doc.timestamp = utc_timestamp();
    emit(o.format == "csv" ? to_csv(doc) : to_json(doc).dump(2) + "\n");
  };

  ReportDocument doc;
  try {
    o.guard_limit = guard_limit_from_env();
    if (gen->parsed()) {
      if (!o.q || !o.n || !o.dim) throw ParseError("gen needs --q, --n and --dim");
      std::optional<Rational> bias;
      if (!o.max_bias.empty()) bias = parse_param(o.max_bias, "max-bias");
      const LinearCode code = generate_code(*o.q, *o.n, *o.dim, o.seed, bias);
      emit(serialize_code(code));
      const Profile prof = profile(code);
      std::ostream& info = o.out.empty() ? err : out;
      if (const CodeProfile* p = as_code_profile(prof)) {
        info << "q=" << p->q << " n=" << p->n << " |C|=" << p->size << " d=" << p->dimension
             << " delta=" << to_string(p->min_distance) << " bias=" << to_string(p->bias)
             << "\n";
      } else {
        info << "all-zero code\n";
      }
      return kExitOk;
    }
    if (inspect->parsed()) run_inspect(o, doc);
    if (macw->parsed()) run_macwilliams(o, doc);
    if (test->parsed()) run_test(o, doc);
    if (correct->parsed()) run_correct(o, doc);
    if (verify->parsed()) run_verify(o, doc);
    emit_doc(doc);
    for (const ReportRow& r : doc.rows) {
      if (r.kind == RowKind::kHard && !r.pass) err << "FAILED " << r.check << "\n";
    }
    if (doc.error) {
      err << "error: " << *doc.error << "\n";
      return kExitFailure;
    }
    return doc.hard_failures() == 0 ? kExitOk : kExitFailure;
  } catch (const Error& e) {
    int code = kExitFailure;
    switch (e.kind()) {
      case ErrorKind::kScanTooLarge:
        code = kExitGuard;
        break;
      case ErrorKind::kParseError:
      case ErrorKind::kDomainError:
      case ErrorKind::kIndexError:
      case ErrorKind::kCompositeOrder:
      case ErrorKind::kEmptyBlock:
        code = kExitUsage;
        break;
      default:
        break;
    }
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    if (!gen->parsed()) {
      // Partial report: the config echo gathered so far plus the error.
      doc.error = std::string(to_string(e.kind())) + ": " + e.what();
      try {
        emit_doc(doc);
      } catch (const std::exception&) {
      }
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace sparsecode
