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

#ifndef ORBITCODE_BITVEC_HPP
#define ORBITCODE_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcode/error.hpp"

namespace orbitcode {

/// Fixed-length bit vector over GF(2), packed 64 coordinates per word.
/// Bits past size() in the last word are always zero.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  static BitVector from_indices(std::size_t size, const std::vector<std::size_t>& ones) {
    BitVector v(size);
    for (auto i : ones) v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }
  const std::vector<word_type>& words() const { return words_; }
  std::vector<word_type>& mutable_words() { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t weight() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool parity() const {
    word_type acc = 0;
    for (auto w : words_) acc ^= w;
    return std::popcount(acc) & 1;
  }

  /// Index of the lowest set coordinate, or size() when the vector is zero.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }

  /// Set coordinates in ascending order.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w) {
        out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  /// GF(2) inner product.
  bool dot(const BitVector& other) const {
    check_same_size(other);
    word_type acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
  }

  /// result[i] = (*this)[(i + shift) mod size()].
  BitVector rotated(std::size_t shift) const {
    BitVector out(size_);
    if (size_ == 0) return out;
    shift %= size_;
    if (size_ <= kWordBits) {
      const word_type w = words_[0];
      const word_type mask = size_ == kWordBits ? ~word_type{0} : (word_type{1} << size_) - 1;
      out.words_[0] = shift == 0 ? w : ((w >> shift) | (w << (size_ - shift))) & mask;
      return out;
    }
    for (auto i : support()) out.set((i + size_ - shift) % size_);
    return out;
  }

  /// Lowercase hex, most significant digit first, bit i of the value = coordinate i,
  /// zero-padded to ceil(size/4) digits.
  std::string to_hex() const {
    const std::size_t digits = (size_ + 3) / 4;
    std::string out(digits == 0 ? 1 : digits, '0');
    if (digits == 0) return out;
    for (std::size_t d = 0; d < digits; ++d) {
      unsigned nibble = 0;
      for (unsigned b = 0; b < 4; ++b) {
        const std::size_t i = d * 4 + b;
        if (i < size_ && get(i)) nibble |= 1u << b;
      }
      out[digits - 1 - d] = "0123456789abcdef"[nibble];
    }
    return out;
  }

  static BitVector from_hex(std::string_view hex, std::size_t size) {
    BitVector v(size);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      const char c = *it;
      unsigned nibble;
      if (c >= '0' && c <= '9')
        nibble = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nibble = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        nibble = static_cast<unsigned>(c - 'A' + 10);
      else
        throw ParseError("invalid hex digit in '" + std::string(hex) + "'");
      for (unsigned b = 0; b < 4; ++b) {
        if (!((nibble >> b) & 1u)) continue;
        if (bit + b >= size)
          throw ParseError("hex value '" + std::string(hex) + "' exceeds " + std::to_string(size) + " bits");
        v.set(bit + b);
      }
    }
    return v;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Support-lexicographic order: the word whose sorted support is lexicographically
  /// smaller comes first. Only meaningful between words of equal size.
  friend bool support_less(const BitVector& a, const BitVector& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const word_type diff = a.words_[k] ^ b.words_[k];
      if (diff) return (a.words_[k] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_)
      throw DomainMismatch("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                           std::to_string(other.size_));
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace orbitcode

#endif  // ORBITCODE_BITVEC_HPP
