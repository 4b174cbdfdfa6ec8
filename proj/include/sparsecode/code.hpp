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

// Linear codes over a prime field, stored fully enumerated. The intended
// regime is sparse codes (|C| polynomial in n), where enumeration is both
// cheap and the only way to get exact distance, bias and weight counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sparsecode/exact.hpp"
#include "sparsecode/field.hpp"

namespace sparsecode {

class Word {
 public:
  // Throws DomainError if a symbol is not a residue of `field`.
  Word(FieldSpec field, std::vector<Symbol> symbols);
  static Word zero(FieldSpec field, std::size_t n);

  FieldSpec field() const { return field_; }
  std::size_t length() const { return symbols_.size(); }
  Symbol operator[](std::size_t j) const { return symbols_[j]; }
  FieldElement at(std::size_t j) const;
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t weight() const;
  bool is_zero() const { return weight() == 0; }

  void set(std::size_t j, Symbol value);

  friend bool operator==(const Word& a, const Word& b) {
    return a.field_ == b.field_ && a.symbols_ == b.symbols_;
  }
  friend bool operator<(const Word& a, const Word& b) { return a.symbols_ < b.symbols_; }

 private:
  FieldSpec field_;
  std::vector<Symbol> symbols_;
};

Word operator+(const Word& a, const Word& b);
Word operator-(const Word& a, const Word& b);
Word scale(Symbol mu, const Word& a);
Symbol inner_product(const Word& a, const Word& b);
std::size_t hamming_distance(const Word& a, const Word& b);
std::string to_string(const Word& w);

struct WeightDistribution {
  std::vector<Integer> counts;  // B_0..B_n
  Integer set_size;

  static WeightDistribution from_counts(std::vector<Integer> counts);
  std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

class LinearCode {
 public:
  // Rows are scanned in order; a row dependent on the earlier ones is dropped
  // and its input index reported by dropped_rows(). No rows gives {0}.
  // Throws EmptyBlock for n = 0, DomainError on length or field mismatch,
  // ScanTooLarge if q^d exceeds the enumeration cap.
  static LinearCode from_generators(FieldSpec field, std::size_t n,
                                    std::span<const Word> rows);
  static LinearCode zero_code(FieldSpec field, std::size_t n);

  FieldSpec field() const { return field_; }
  Symbol q() const { return field_.order(); }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generators_.size(); }
  std::size_t size() const { return codewords_.size(); }

  const std::vector<Word>& generators() const { return generators_; }
  const std::vector<std::size_t>& dropped_rows() const { return dropped_; }
  const std::vector<Word>& codewords() const { return codewords_; }
  // Reduced row echelon form of the generator matrix.
  const std::vector<Word>& echelon_basis() const { return echelon_; }

  bool contains(const Word& v) const;

  static constexpr std::size_t kMaxCodewords = std::size_t{1} << 22;

 private:
  LinearCode(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  FieldSpec field_;
  std::size_t n_;
  std::vector<Word> generators_;
  std::vector<std::size_t> dropped_;
  std::vector<Word> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<Word> codewords_;
};

WeightDistribution weight_distribution(const LinearCode& code);
// Weight counts of the coset C + v.
WeightDistribution coset_weight_distribution(const LinearCode& code, const Word& v);

// Minimum Hamming distance from v to any codeword.
std::size_t distance_to_code(const LinearCode& code, const Word& v);
Rational relative_distance(const LinearCode& code, const Word& v);

struct AllZeroProfile {
  std::size_t n = 0;
  Symbol q = 0;
};

struct CodeProfile {
  std::size_t n = 0;
  Symbol q = 0;
  Integer size;
  std::size_t dimension = 0;
  std::size_t min_weight = 0;
  std::size_t max_weight = 0;
  Rational min_distance;  // min nonzero weight / n
  Rational bias;          // max |w/n - (1 - 1/q)| over nonzero codewords
  std::optional<double> sparsity_exponent;  // ln|C| / ln n, n >= 2
};

using Profile = std::variant<AllZeroProfile, CodeProfile>;

Profile profile(const LinearCode& code);
// Convenience: nullptr for the zero code.
const CodeProfile* as_code_profile(const Profile& p);

// Deletes the listed coordinates (1 or 2 distinct indices) from every
// codeword. Throws IndexError for bad indices, EmptyBlock if nothing is left.
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> drop);

// Linear span of C and v; C itself when v is already a codeword.
LinearCode span_with(const LinearCode& code, const Word& v);

// A weight-k dual codeword in sparse form.
struct SparseWordView {
  std::span<const std::uint32_t> support;  // increasing positions
  std::span<const Symbol> values;          // non-zero, same length
};

// Exhaustive list of weight-k words of C^perp that are non-zero on every
// required index. Members are ordered by support (lexicographic), then by
// values (lexicographic), so sampling by index is reproducible.
class DualSlice {
 public:
  DualSlice(FieldSpec field, std::size_t n, std::size_t k,
            std::vector<std::size_t> required_nonzero)
      : field_(field), n_(n), k_(k), required_(std::move(required_nonzero)) {}

  FieldSpec field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<std::size_t>& required_nonzero() const { return required_; }
  std::size_t size() const { return k_ == 0 ? zero_members_ : values_.size() / k_; }
  bool empty() const { return size() == 0; }

  SparseWordView member(std::size_t index) const;
  Word word(std::size_t index) const;

  void append(std::span<const std::uint32_t> support, std::span<const Symbol> values);

 private:
  FieldSpec field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> required_;
  std::vector<std::uint32_t> positions_;
  std::vector<Symbol> values_;
  std::size_t zero_members_ = 0;
};

using DualWordVisitor =
    std::function<void(std::span<const std::uint32_t>, std::span<const Symbol>)>;

// Visits the members of [C^perp]_k (restricted to required indices) in
// canonical order without storing them.
void for_each_dual_word(const LinearCode& code, std::size_t k,
                        std::span<const std::size_t> required_nonzero,
                        const DualWordVisitor& visit);
DualSlice dual_slice(const LinearCode& code, std::size_t k,
                     std::span<const std::size_t> required_nonzero = {});
Integer dual_slice_count(const LinearCode& code, std::size_t k,
                         std::span<const std::size_t> required_nonzero = {});

// C(n,k)(q-1)^k: number of candidate words a slice enumeration inspects.
Integer dual_candidate_count(std::size_t n, std::size_t k, Symbol q);

}  // namespace sparsecode
