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

#ifndef ORBITCODE_KRAWTCHOUK_HPP
#define ORBITCODE_KRAWTCHOUK_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitcode/error.hpp"

namespace orbitcode {

using BigInt = boost::multiprecision::cpp_int;

/// Pascal triangle rows 0..max_n in exact arithmetic.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
    for (std::size_t m = 0; m <= max_n; ++m) {
      rows_[m].resize(m + 1);
      rows_[m][0] = rows_[m][m] = 1;
      for (std::size_t k = 1; k < m; ++k) rows_[m][k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
    }
  }

  std::size_t max_n() const { return rows_.size() - 1; }

  /// C(m, k), zero outside 0 <= k <= m.
  const BigInt& operator()(std::size_t m, std::ptrdiff_t k) const {
    static const BigInt kZero = 0;
    if (m >= rows_.size()) throw InvalidArgument("binomial table too small");
    if (k < 0 || static_cast<std::size_t>(k) > m) return kZero;
    return rows_[m][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

inline BigInt binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

/// Binary Krawtchouk polynomial K_j(w) = sum_s (-1)^s C(w, s) C(length - w, j - s).
inline BigInt krawtchouk(const BinomialTable& binom, std::size_t length, std::size_t j, std::size_t w) {
  BigInt sum = 0;
  for (std::size_t s = 0; s <= j && s <= w; ++s) {
    const BigInt term = binom(w, static_cast<std::ptrdiff_t>(s)) *
                        binom(length - w, static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(s));
    if (s & 1u)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

/// Full matrix K[j][w] for 0 <= j, w <= length.
inline std::vector<std::vector<BigInt>> krawtchouk_matrix(std::size_t length) {
  const BinomialTable binom(length);
  std::vector<std::vector<BigInt>> k(length + 1, std::vector<BigInt>(length + 1));
  for (std::size_t j = 0; j <= length; ++j)
    for (std::size_t w = 0; w <= length; ++w) k[j][w] = krawtchouk(binom, length, j, w);
  return k;
}

}  // namespace orbitcode

#endif  // ORBITCODE_KRAWTCHOUK_HPP
