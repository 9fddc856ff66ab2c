/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORBITCODE_LINALG2_HPP
#define ORBITCODE_LINALG2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/bitvec.hpp"
#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/krawtchouk.hpp"
#include "orbitcode/parallel.hpp"

namespace orbitcode {

/// A word of F_2^L whose coordinates are bound to a domain ordering (see DomainKind).
class Codeword {
 public:
  Codeword() = default;
  Codeword(DomainKind kind, std::size_t length) : kind_(kind), bits_(length) {}
  Codeword(DomainKind kind, BitVector bits) : kind_(kind), bits_(std::move(bits)) {}

  DomainKind kind() const { return kind_; }
  std::size_t length() const { return bits_.size(); }
  const BitVector& bits() const { return bits_; }
  BitVector& bits() { return bits_; }

  bool get(std::size_t i) const { return bits_.get(i); }
  void set(std::size_t i, bool v = true) { bits_.set(i, v); }
  void flip(std::size_t i) { bits_.flip(i); }
  std::size_t weight() const { return bits_.weight(); }
  std::vector<std::size_t> support() const { return bits_.support(); }
  bool is_zero() const { return bits_.none(); }

  bool same_domain(const Codeword& other) const { return kind_ == other.kind_ && length() == other.length(); }

  Codeword& operator^=(const Codeword& other) {
    check_domain(other);
    bits_ ^= other.bits_;
    return *this;
  }
  friend Codeword operator^(Codeword a, const Codeword& b) { return a ^= b; }

  bool dot(const Codeword& other) const {
    check_domain(other);
    return bits_.dot(other.bits_);
  }

  std::string to_hex() const { return bits_.to_hex(); }
  static Codeword from_hex(DomainKind kind, std::size_t length, std::string_view hex) {
    return Codeword(kind, BitVector::from_hex(hex, length));
  }

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  void check_domain(const Codeword& other) const {
    if (!same_domain(other))
      throw DomainMismatch("codewords on different domains (" + to_string(kind_) + "/" +
                           std::to_string(length()) + " vs " + to_string(other.kind_) + "/" +
                           std::to_string(other.length()) + ")");
  }

  DomainKind kind_ = DomainKind::Nonzero;
  BitVector bits_;
};

/// A_0..A_L, exact.
using WeightEnumerator = std::vector<BigInt>;

/// Incremental reduced-row-echelon basis; each row's pivot is its lowest set coordinate
/// and no other row has that coordinate set.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == length_; }

  /// Reduces v against the current rows in place.
  void reduce(BitVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (v.get(pivots_[r])) v ^= rows_[r];
  }

  bool in_span(BitVector v) const {
    reduce(v);
    return v.none();
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(BitVector v) {
    if (v.size() != length_) throw DomainMismatch("vector length does not match echelon width");
    reduce(v);
    if (v.none()) return false;
    const std::size_t p = v.lowest();
    for (auto& row : rows_)
      if (row.get(p)) row ^= v;
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<BitVector> take_rows() && { return std::move(rows_); }

 private:
  std::size_t length_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A binary linear code held by its canonical reduced-echelon basis, so two codes are
/// equal exactly when their bases are equal.
class LinearCode {
 public:
  LinearCode(DomainKind kind, std::size_t length) : kind_(kind), length_(length), cache_(std::make_shared<Cache>()) {}

  DomainKind kind() const { return kind_; }
  std::size_t length() const { return length_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.empty(); }

  std::vector<Codeword> basis_words() const {
    std::vector<Codeword> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.emplace_back(kind_, b);
    return out;
  }

  /// |C| = 2^rank.
  BigInt size() const { return BigInt(1) << rank(); }

  bool contains(const Codeword& w) const {
    if (w.kind() != kind_ || w.length() != length_)
      throw DomainMismatch("codeword domain does not match code domain");
    BitVector v = w.bits();
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (v.get(pivots_[r])) v ^= basis_[r];
    return v.none();
  }

  /// Codeword for the combination whose bit r selects basis row r.
  Codeword combination(std::uint64_t mask) const {
    BitVector v(length_);
    for (std::size_t r = 0; mask; ++r, mask >>= 1)
      if (mask & 1u) v ^= basis_[r];
    return Codeword(kind_, std::move(v));
  }

  bool has_cached_weights() const {
    std::lock_guard lock(cache_->mutex);
    return cache_->weights.has_value();
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.kind_ == b.kind_ && a.length_ == b.length_ && a.basis_ == b.basis_;
  }

  static LinearCode from_echelon(DomainKind kind, EchelonBuilder&& builder) {
    LinearCode code(kind, builder.length());
    code.pivots_ = builder.pivots();
    code.basis_ = std::move(builder).take_rows();
    return code;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<WeightEnumerator> weights;
  };

  friend const WeightEnumerator& weight_distribution(const LinearCode& code, unsigned jobs);

  DomainKind kind_;
  std::size_t length_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Cache> cache_;
};

inline LinearCode span(DomainKind kind, std::size_t length, const std::vector<Codeword>& words) {
  EchelonBuilder builder(length);
  for (const auto& w : words) {
    if (w.kind() != kind || w.length() != length) throw DomainMismatch("span over mixed domains");
    builder.insert(w.bits());
  }
  return LinearCode::from_echelon(kind, std::move(builder));
}

/// Span of a non-empty list; the domain is taken from the first word.
inline LinearCode span(const std::vector<Codeword>& words) {
  if (words.empty()) throw InvalidArgument("span of an empty list needs an explicit domain");
  return span(words.front().kind(), words.front().length(), words);
}

inline LinearCode zero_code(DomainKind kind, std::size_t length) { return LinearCode(kind, length); }

inline LinearCode full_space(DomainKind kind, std::size_t length) {
  EchelonBuilder builder(length);
  for (std::size_t i = 0; i < length; ++i) builder.insert(BitVector::from_indices(length, {i}));
  return LinearCode::from_echelon(kind, std::move(builder));
}

/// Null space under the standard inner product.
inline LinearCode dual(const LinearCode& code) {
  const std::size_t n = code.length();
  const auto& rows = code.basis();
  const auto& pivots = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  EchelonBuilder builder(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector z(n);
    z.set(f);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].get(f)) z.set(pivots[r]);
    builder.insert(std::move(z));
  }
  return LinearCode::from_echelon(code.kind(), std::move(builder));
}

inline constexpr std::size_t kMaxEnumerationRank = 28;

namespace detail {

/// Gray-code walk over all 2^rank codewords, accumulating weights.
inline std::vector<std::uint64_t> enumerate_weights(const LinearCode& code, unsigned jobs) {
  const std::size_t r = code.rank();
  const std::size_t L = code.length();
  if (r > kMaxEnumerationRank) throw InvalidArgument("rank too large for exhaustive enumeration");
  const auto& basis = code.basis();
  // Split on the top bits so each worker walks an independent Gray sequence.
  const unsigned split_bits = r >= 16 ? std::min<unsigned>(6, static_cast<unsigned>(r) - 10) : 0;
  const std::size_t low_bits = r - split_bits;
  const std::uint64_t prefixes = std::uint64_t{1} << split_bits;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), prefixes));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(L + 1, 0));
  parallel_chunks(prefixes, workers, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    auto& counts = partial[worker];
    for (std::uint64_t prefix = begin; prefix < end; ++prefix) {
      BitVector v(L);
      for (std::size_t b = 0; b < split_bits; ++b)
        if ((prefix >> b) & 1u) v ^= basis[low_bits + b];
      auto& words = v.mutable_words();
      ++counts[v.weight()];
      const std::uint64_t steps = std::uint64_t{1} << low_bits;
      for (std::uint64_t i = 1; i < steps; ++i) {
        const auto& row = basis[static_cast<std::size_t>(std::countr_zero(i))].words();
        std::size_t wt = 0;
        for (std::size_t k = 0; k < words.size(); ++k) {
          words[k] ^= row[k];
          wt += static_cast<std::size_t>(std::popcount(words[k]));
        }
        ++counts[wt];
      }
    }
  });
  std::vector<std::uint64_t> total(L + 1, 0);
  for (const auto& p : partial)
    for (std::size_t w = 0; w <= L; ++w) total[w] += p[w];
  return total;
}

}  // namespace detail

/// Weight distribution by direct enumeration of all codewords (rank <= 28).
inline WeightEnumerator weight_distribution_by_enumeration(const LinearCode& code, unsigned jobs = 1) {
  const auto counts = detail::enumerate_weights(code, jobs);
  WeightEnumerator out(counts.size());
  for (std::size_t w = 0; w < counts.size(); ++w) out[w] = counts[w];
  return out;
}

/// MacWilliams transform: enumerator of C^perp from that of C (rank r, length L),
/// B_j = 2^-r sum_w A_w K_j(w). Throws when the input is not the enumerator of a linear code.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& a, std::size_t rank, std::size_t length) {
  if (a.size() != length + 1) throw InvalidArgument("weight enumerator has wrong length");
  BigInt total = 0;
  for (const auto& x : a) {
    if (x < 0) throw InvalidArgument("negative weight count");
    total += x;
  }
  const BigInt code_size = BigInt(1) << rank;
  if (total != code_size) throw InvalidArgument("weight counts do not sum to 2^rank");
  const BinomialTable binom(length);
  WeightEnumerator b(length + 1);
  for (std::size_t j = 0; j <= length; ++j) {
    BigInt sum = 0;
    for (std::size_t w = 0; w <= length; ++w)
      if (a[w] != 0) sum += a[w] * krawtchouk(binom, length, j, w);
    if (sum < 0 || (sum % code_size) != 0)
      throw InvalidArgument("inconsistent weight enumerator: B_" + std::to_string(j) + " is not a non-negative integer");
    b[j] = sum / code_size;
  }
  return b;
}

/// Weight distribution; enumerates the smaller of C and C^perp and transforms when needed.
/// The result is memoized on the code.
inline const WeightEnumerator& weight_distribution(const LinearCode& code, unsigned jobs = 0) {
  {
    std::lock_guard lock(code.cache_->mutex);
    if (code.cache_->weights) return *code.cache_->weights;
  }
  WeightEnumerator result;
  if (code.rank() <= kMaxEnumerationRank) {
    result = weight_distribution_by_enumeration(code, jobs);
  } else {
    const LinearCode d = dual(code);
    if (d.rank() > kMaxEnumerationRank)
      throw InvalidArgument("code of rank " + std::to_string(code.rank()) + " and dual rank " +
                            std::to_string(d.rank()) + " is too large to enumerate");
    result = macwilliams_transform(weight_distribution_by_enumeration(d, jobs), d.rank(), code.length());
  }
  std::lock_guard lock(code.cache_->mutex);
  if (!code.cache_->weights) code.cache_->weights = std::move(result);
  return *code.cache_->weights;
}

inline std::size_t min_distance(const LinearCode& code) {
  if (code.is_zero()) throw InvalidArgument("minimum distance of the zero code is undefined");
  const auto& a = weight_distribution(code);
  for (std::size_t w = 1; w < a.size(); ++w)
    if (a[w] != 0) return w;
  throw Error("nonzero code without nonzero codewords");
}

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline Fraction relative_distance(const LinearCode& code) {
  const std::uint64_t d = min_distance(code);
  const std::uint64_t len = code.length();
  const std::uint64_t g = std::gcd(d, len);
  return Fraction{d / g, len / g};
}

}  // namespace orbitcode

#endif  // ORBITCODE_LINALG2_HPP
