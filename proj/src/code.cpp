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

#include "sparsecode/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sparsecode/errors.hpp"

namespace sparsecode {

Word::Word(FieldSpec field, std::vector<Symbol> symbols)
    : field_(field), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) {
    if (s >= field_.order()) {
      throw DomainError("symbol " + std::to_string(s) + " is not a residue mod " +
                        std::to_string(field_.order()));
    }
  }
}

Word Word::zero(FieldSpec field, std::size_t n) {
  return Word(field, std::vector<Symbol>(n, 0));
}

FieldElement Word::at(std::size_t j) const { return field_.element(symbols_.at(j)); }

std::size_t Word::weight() const {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s != 0; }));
}

void Word::set(std::size_t j, Symbol value) {
  if (value >= field_.order()) throw DomainError("symbol out of range");
  symbols_.at(j) = value;
}

namespace {

void check_compatible(const Word& a, const Word& b) {
  if (a.field() != b.field()) throw FieldMismatch("words over different fields");
  if (a.length() != b.length()) {
    throw DomainError("word lengths differ: " + std::to_string(a.length()) + " vs " +
                      std::to_string(b.length()));
  }
}

}  // namespace

Word operator+(const Word& a, const Word& b) {
  check_compatible(a, b);
  const FieldSpec f = a.field();
  std::vector<Symbol> out(a.length());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(a[j], b[j]);
  return Word(f, std::move(out));
}

Word operator-(const Word& a, const Word& b) {
  check_compatible(a, b);
  const FieldSpec f = a.field();
  std::vector<Symbol> out(a.length());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.sub(a[j], b[j]);
  return Word(f, std::move(out));
}

Word scale(Symbol mu, const Word& a) {
  const FieldSpec f = a.field();
  mu %= f.order();
  std::vector<Symbol> out(a.length());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.mul(mu, a[j]);
  return Word(f, std::move(out));
}

Symbol inner_product(const Word& a, const Word& b) {
  check_compatible(a, b);
  const FieldSpec f = a.field();
  Symbol acc = 0;
  for (std::size_t j = 0; j < a.length(); ++j) acc = f.add(acc, f.mul(a[j], b[j]));
  return acc;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  check_compatible(a, b);
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.length(); ++j) d += a[j] != b[j];
  return d;
}

std::string to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t j = 0; j < w.length(); ++j) {
    if (j) out += ",";
    out += std::to_string(w[j]);
  }
  return out + ")";
}

WeightDistribution WeightDistribution::from_counts(std::vector<Integer> counts) {
  WeightDistribution wd;
  wd.set_size = std::accumulate(counts.begin(), counts.end(), Integer(0));
  wd.counts = std::move(counts);
  return wd;
}

// ---------------------------------------------------------------------------

namespace {

// Row-reduced echelon basis with unit pivots.
class Echelon {
 public:
  explicit Echelon(FieldSpec f) : f_(f) {}

  std::vector<Symbol> reduce(std::vector<Symbol> row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Symbol c = row[pivots_[r]];
      if (c == 0) continue;
      const auto& b = rows_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (b[j] != 0) row[j] = f_.sub(row[j], f_.mul(c, b[j]));
      }
    }
    return row;
  }

  bool insert(const std::vector<Symbol>& row) {
    std::vector<Symbol> res = reduce(row);
    auto it = std::find_if(res.begin(), res.end(), [](Symbol s) { return s != 0; });
    if (it == res.end()) return false;
    auto p = static_cast<std::size_t>(it - res.begin());
    Symbol inv = f_.inv(res[p]);
    for (auto& s : res) s = f_.mul(s, inv);
    for (auto& b : rows_) {
      Symbol c = b[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) b[j] = f_.sub(b[j], f_.mul(c, res[j]));
    }
    auto pos = static_cast<std::size_t>(
        std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(res));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  const std::vector<std::vector<Symbol>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  FieldSpec f_;
  std::vector<std::vector<Symbol>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

LinearCode LinearCode::from_generators(FieldSpec field, std::size_t n,
                                       std::span<const Word> rows) {
  if (n == 0) throw EmptyBlock("block length must be positive");
  LinearCode code(field, n);
  Echelon ech(field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Word& row = rows[r];
    if (row.field() != field) throw FieldMismatch("generator row over a different field");
    if (row.length() != n) {
      throw DomainError("generator row " + std::to_string(r) + " has length " +
                        std::to_string(row.length()) + ", expected " + std::to_string(n));
    }
    std::vector<Symbol> sym(row.symbols().begin(), row.symbols().end());
    if (ech.insert(sym)) {
      code.generators_.push_back(row);
    } else {
      code.dropped_.push_back(r);
    }
  }
  for (const auto& r : ech.rows()) code.echelon_.emplace_back(field, r);
  code.pivots_ = ech.pivots();

  const std::size_t d = code.generators_.size();
  double approx = std::pow(static_cast<double>(field.order()), static_cast<double>(d));
  if (approx > static_cast<double>(kMaxCodewords)) {
    throw ScanTooLarge("code has q^d = " + std::to_string(field.order()) + "^" +
                       std::to_string(d) + " codewords, above the enumeration cap");
  }

  // Odometer over coefficient vectors; the last generator varies fastest.
  std::vector<Symbol> digits(d, 0);
  std::vector<Symbol> current(n, 0);
  const Symbol q = field.order();
  while (true) {
    code.codewords_.emplace_back(field, current);
    std::size_t j = d;
    while (j > 0) {
      --j;
      const Word& g = code.generators_[j];
      for (std::size_t c = 0; c < n; ++c) current[c] = field.add(current[c], g[c]);
      if (++digits[j] < q) break;
      digits[j] = 0;  // q*g = 0, so `current` is already back in place
      if (j == 0) return code;
    }
    if (d == 0) return code;
  }
}

LinearCode LinearCode::zero_code(FieldSpec field, std::size_t n) {
  return from_generators(field, n, {});
}

bool LinearCode::contains(const Word& v) const {
  if (v.field() != field_ || v.length() != n_) return false;
  std::vector<Symbol> row(v.symbols().begin(), v.symbols().end());
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    Symbol c = row[pivots_[r]];
    if (c == 0) continue;
    const Word& b = echelon_[r];
    for (std::size_t j = 0; j < n_; ++j) row[j] = field_.sub(row[j], field_.mul(c, b[j]));
  }
  return std::all_of(row.begin(), row.end(), [](Symbol s) { return s == 0; });
}

WeightDistribution weight_distribution(const LinearCode& code) {
  std::vector<Integer> counts(code.length() + 1, 0);
  for (const Word& c : code.codewords()) counts[c.weight()] += 1;
  return WeightDistribution::from_counts(std::move(counts));
}

WeightDistribution coset_weight_distribution(const LinearCode& code, const Word& v) {
  std::vector<Integer> counts(code.length() + 1, 0);
  const Word minus_v = scale(v.field().order() - 1, v);
  // weight(c + v) = d(c, -v)
  for (const Word& c : code.codewords()) counts[hamming_distance(c, minus_v)] += 1;
  return WeightDistribution::from_counts(std::move(counts));
}

std::size_t distance_to_code(const LinearCode& code, const Word& v) {
  std::size_t best = v.length();
  for (const Word& c : code.codewords()) best = std::min(best, hamming_distance(c, v));
  return best;
}

Rational relative_distance(const LinearCode& code, const Word& v) {
  return Rational(distance_to_code(code, v), code.length());
}

Profile profile(const LinearCode& code) {
  const std::size_t n = code.length();
  const Symbol q = code.q();
  std::size_t min_w = n + 1;
  std::size_t max_w = 0;
  for (const Word& c : code.codewords()) {
    std::size_t w = c.weight();
    if (w == 0) continue;
    min_w = std::min(min_w, w);
    max_w = std::max(max_w, w);
  }
  if (max_w == 0) return AllZeroProfile{n, q};

  CodeProfile p;
  p.n = n;
  p.q = q;
  p.size = code.size();
  p.dimension = code.dimension();
  p.min_weight = min_w;
  p.max_weight = max_w;
  p.min_distance = Rational(min_w, n);
  const Rational mean = 1 - Rational(1, q);
  p.bias = std::max(abs(Rational(min_w, n) - mean), abs(Rational(max_w, n) - mean));
  if (n >= 2) {
    p.sparsity_exponent =
        std::log(static_cast<double>(code.size())) / std::log(static_cast<double>(n));
  }
  return p;
}

const CodeProfile* as_code_profile(const Profile& p) { return std::get_if<CodeProfile>(&p); }

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> drop) {
  const std::size_t n = code.length();
  if (drop.empty() || drop.size() > 2) {
    throw IndexError("puncturing takes one or two indices");
  }
  for (std::size_t idx : drop) {
    if (idx >= n) {
      throw IndexError("index " + std::to_string(idx) + " out of range for n=" +
                       std::to_string(n));
    }
  }
  if (drop.size() == 2 && drop[0] == drop[1]) throw IndexError("puncture indices must differ");
  if (n <= drop.size()) throw EmptyBlock("puncturing would leave a length-0 code");

  auto dropped = [&](std::size_t j) {
    return std::find(drop.begin(), drop.end(), j) != drop.end();
  };
  std::vector<Word> rows;
  for (const Word& g : code.generators()) {
    std::vector<Symbol> sym;
    sym.reserve(n - drop.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (!dropped(j)) sym.push_back(g[j]);
    }
    rows.emplace_back(code.field(), std::move(sym));
  }
  return LinearCode::from_generators(code.field(), n - drop.size(), rows);
}

LinearCode span_with(const LinearCode& code, const Word& v) {
  if (code.contains(v)) return code;
  std::vector<Word> rows = code.generators();
  rows.push_back(v);
  return LinearCode::from_generators(code.field(), code.length(), rows);
}

// ---------------------------------------------------------------------------

SparseWordView DualSlice::member(std::size_t index) const {
  if (index >= size()) throw IndexError("slice index out of range");
  return {std::span<const std::uint32_t>(positions_).subspan(index * k_, k_),
          std::span<const Symbol>(values_).subspan(index * k_, k_)};
}

Word DualSlice::word(std::size_t index) const {
  SparseWordView m = member(index);
  Word w = Word::zero(field_, n_);
  for (std::size_t j = 0; j < m.support.size(); ++j) w.set(m.support[j], m.values[j]);
  return w;
}

void DualSlice::append(std::span<const std::uint32_t> support, std::span<const Symbol> values) {
  if (k_ == 0) {
    ++zero_members_;
    return;
  }
  positions_.insert(positions_.end(), support.begin(), support.end());
  values_.insert(values_.end(), values.begin(), values.end());
}

Integer dual_candidate_count(std::size_t n, std::size_t k, Symbol q) {
  return binomial(n, k) * ipow(Integer(q - 1), k);
}

namespace {

// Solves the parity constraints restricted to one support. `m` is the d x k
// matrix of basis columns; it is reduced in place.
class SupportSolver {
 public:
  SupportSolver(FieldSpec f, std::size_t d, std::size_t k)
      : f_(f), d_(d), k_(k), m_(d * k), x_(k), is_pivot_(k) {}

  // Appends every all-non-zero kernel vector of the support, in lex order.
  void solve(const std::vector<Word>& basis, std::span<const std::uint32_t> support,
             std::vector<Symbol>& out) {
    for (std::size_t r = 0; r < d_; ++r) {
      for (std::size_t c = 0; c < k_; ++c) m_[r * k_ + c] = basis[r][support[c]];
    }
    reduce();
    std::size_t first = out.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k_; ++c) {
      if (!is_pivot_[c]) free_cols.push_back(c);
    }
    const Symbol q = f_.order();
    std::fill(x_.begin(), x_.end(), 0);
    for (std::size_t c : free_cols) x_[c] = 1;
    while (true) {
      bool ok = true;
      for (std::size_t r = 0; r < rank_ && ok; ++r) {
        Symbol acc = 0;
        for (std::size_t c : free_cols) acc = f_.add(acc, f_.mul(m_[r * k_ + c], x_[c]));
        x_[pivot_cols_[r]] = f_.neg(acc);
        ok = x_[pivot_cols_[r]] != 0;
      }
      if (ok) out.insert(out.end(), x_.begin(), x_.end());
      // Odometer over non-zero values of the free columns.
      std::size_t j = free_cols.size();
      bool done = true;
      while (j > 0) {
        --j;
        Symbol& v = x_[free_cols[j]];
        if (++v < q) {
          done = false;
          break;
        }
        v = 1;
      }
      if (done) break;
    }
    if (rank_ > 0) sort_block(out, first);
  }

 private:
  void reduce() {
    rank_ = 0;
    pivot_cols_.clear();
    std::fill(is_pivot_.begin(), is_pivot_.end(), false);
    for (std::size_t c = 0; c < k_ && rank_ < d_; ++c) {
      std::size_t piv = rank_;
      while (piv < d_ && m_[piv * k_ + c] == 0) ++piv;
      if (piv == d_) continue;
      if (piv != rank_) {
        for (std::size_t j = 0; j < k_; ++j) std::swap(m_[piv * k_ + j], m_[rank_ * k_ + j]);
      }
      Symbol inv = f_.inv(m_[rank_ * k_ + c]);
      for (std::size_t j = 0; j < k_; ++j) m_[rank_ * k_ + j] = f_.mul(m_[rank_ * k_ + j], inv);
      for (std::size_t r = 0; r < d_; ++r) {
        if (r == rank_) continue;
        Symbol factor = m_[r * k_ + c];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < k_; ++j) {
          m_[r * k_ + j] = f_.sub(m_[r * k_ + j], f_.mul(factor, m_[rank_ * k_ + j]));
        }
      }
      is_pivot_[c] = true;
      pivot_cols_.push_back(c);
      ++rank_;
    }
  }

  void sort_block(std::vector<Symbol>& out, std::size_t first) const {
    std::size_t count = (out.size() - first) / k_;
    if (count < 2) return;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto base = out.begin() + static_cast<std::ptrdiff_t>(first);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto pa = base + static_cast<std::ptrdiff_t>(a * k_);
      auto pb = base + static_cast<std::ptrdiff_t>(b * k_);
      return std::lexicographical_compare(pa, pa + static_cast<std::ptrdiff_t>(k_), pb,
                                          pb + static_cast<std::ptrdiff_t>(k_));
    });
    std::vector<Symbol> sorted;
    sorted.reserve(count * k_);
    for (std::size_t idx : order) {
      auto p = base + static_cast<std::ptrdiff_t>(idx * k_);
      sorted.insert(sorted.end(), p, p + static_cast<std::ptrdiff_t>(k_));
    }
    std::copy(sorted.begin(), sorted.end(), base);
  }

  FieldSpec f_;
  std::size_t d_;
  std::size_t k_;
  std::vector<Symbol> m_;
  std::vector<Symbol> x_;
  std::vector<bool> is_pivot_;
  std::vector<std::size_t> pivot_cols_;
  std::size_t rank_ = 0;
};

}  // namespace

void for_each_dual_word(const LinearCode& code, std::size_t k,
                        std::span<const std::size_t> required_nonzero,
                        const DualWordVisitor& visit) {
  const std::size_t n = code.length();
  if (k > n) {
    throw DomainError("weight " + std::to_string(k) + " exceeds block length " +
                      std::to_string(n));
  }
  std::vector<std::size_t> required(required_nonzero.begin(), required_nonzero.end());
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  for (std::size_t idx : required) {
    if (idx >= n) throw IndexError("required index " + std::to_string(idx) + " out of range");
  }
  if (k == 0) {
    if (required.empty()) visit({}, {});
    return;
  }
  if (required.size() > k) return;

  const auto& basis = code.echelon_basis();
  SupportSolver solver(code.field(), basis.size(), k);
  std::vector<std::uint32_t> support(k);
  std::iota(support.begin(), support.end(), 0u);
  std::vector<Symbol> block;
  while (true) {
    if (std::includes(support.begin(), support.end(), required.begin(), required.end())) {
      block.clear();
      solver.solve(basis, support, block);
      for (std::size_t off = 0; off < block.size(); off += k) {
        visit(support, std::span<const Symbol>(block).subspan(off, k));
      }
    }
    // Next k-subset in lexicographic order.
    std::size_t j = k;
    while (j > 0 && support[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++support[j - 1];
    for (std::size_t t = j; t < k; ++t) support[t] = support[t - 1] + 1;
  }
}

DualSlice dual_slice(const LinearCode& code, std::size_t k,
                     std::span<const std::size_t> required_nonzero) {
  std::vector<std::size_t> required(required_nonzero.begin(), required_nonzero.end());
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  DualSlice slice(code.field(), code.length(), k, required);
  for_each_dual_word(code, k, required,
                     [&](std::span<const std::uint32_t> support, std::span<const Symbol> values) {
                       slice.append(support, values);
                     });
  return slice;
}

Integer dual_slice_count(const LinearCode& code, std::size_t k,
                         std::span<const std::size_t> required_nonzero) {
  std::uint64_t count = 0;
  for_each_dual_word(code, k, required_nonzero,
                     [&](std::span<const std::uint32_t>, std::span<const Symbol>) { ++count; });
  return count;
}

}  // namespace sparsecode
