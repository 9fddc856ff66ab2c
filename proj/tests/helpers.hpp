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

#ifndef ORBITCODE_TESTS_HELPERS_HPP
#define ORBITCODE_TESTS_HELPERS_HPP

#include <vector>

#include "oracle.hpp"
#include "orbitcode/orbitcode.hpp"

namespace testutil {

inline oracle::Row to_row(const orbitcode::BitVector& v) {
  oracle::Row r(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v.get(i) ? 1 : 0;
  return r;
}

inline std::vector<oracle::Row> rows_of(const orbitcode::LinearCode& c) {
  std::vector<oracle::Row> out;
  for (const auto& b : c.basis()) out.push_back(to_row(b));
  return out;
}

inline orbitcode::Codeword random_word(orbitcode::DomainKind kind, std::size_t len, orbitcode::CounterRng& rng) {
  orbitcode::BitVector v(len);
  for (std::size_t i = 0; i < len; ++i)
    if (rng() & 1) v.set(i);
  return orbitcode::Codeword(kind, std::move(v));
}

/// Random code from `count` random generators (rank may come out lower).
inline orbitcode::LinearCode random_code(std::size_t len, std::size_t count, orbitcode::CounterRng& rng) {
  std::vector<orbitcode::Codeword> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_word(orbitcode::DomainKind::Nonzero, len, rng));
  return orbitcode::span(orbitcode::DomainKind::Nonzero, len, gens);
}

inline std::vector<std::uint64_t> to_u64(const orbitcode::WeightEnumerator& a) {
  std::vector<std::uint64_t> out;
  for (const auto& x : a) out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

}  // namespace testutil

#endif  // ORBITCODE_TESTS_HELPERS_HPP
