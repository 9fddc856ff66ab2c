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

#ifndef ORBITCODE_BCH_HPP
#define ORBITCODE_BCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/groupaction.hpp"
#include "orbitcode/linalg2.hpp"
#include "orbitcode/tracecodes.hpp"

namespace orbitcode {

/// Cyclic codes live on F* (length N-1); extended codes on F (length N).
enum class BchFlavor { Cyclic, Extended };

inline DomainKind domain_of(BchFlavor flavor) {
  return flavor == BchFlavor::Cyclic ? DomainKind::Nonzero : DomainKind::WithZero;
}

inline GroupKind group_of(BchFlavor flavor) { return flavor == BchFlavor::Cyclic ? GroupKind::Cyclic : GroupKind::Affine; }

struct BchParams {
  unsigned n = 3;
  unsigned t = 1;
  BchFlavor flavor = BchFlavor::Cyclic;
};

inline bool is_mersenne_exponent(unsigned n) { return n >= 2 && n < 64 && is_prime((std::uint64_t{1} << n) - 1); }

inline void validate(const BchParams& p) {
  if (p.n < 1 || p.n > Field::kMaxDegree) throw InvalidArgument("n must be in [1, 24]");
  const std::uint64_t N = std::uint64_t{1} << p.n;
  if (N < 2 || 2 * std::uint64_t{p.t} > N - 2)
    throw InvalidArgument("BCH parameters need 2t <= N-2 (n=" + std::to_string(p.n) + ", t=" + std::to_string(p.t) + ")");
}

/// Degrees of the dual-BCH code: canonical forms of 1..2t plus the constant
/// (degree 0 on F, which is x^(N-1) on F*).
inline DegreeSet dual_bch_degrees(const BchParams& p) {
  validate(p);
  std::vector<Degree> raw;
  for (Degree j = 1; j <= 2 * p.t; ++j) raw.push_back(j);
  raw.push_back(p.flavor == BchFlavor::Cyclic ? top_degree(p.n) : Degree{0});
  return DegreeSet::canonicalized(p.n, raw);
}

/// Traces of polynomials of degree <= 2t, evaluated on F* (cyclic) or F (extended).
inline LinearCode dual_bch(const BchParams& p, const Field& field) {
  if (field.degree() != p.n) throw DomainMismatch("field degree differs from BCH n");
  return code_from_degrees(dual_bch_degrees(p), domain_of(p.flavor), field);
}

inline LinearCode bch(const BchParams& p, const Field& field) { return dual(dual_bch(p, field)); }

inline LinearCode ebch_dual(unsigned n, unsigned t, const Field& field) {
  return dual_bch(BchParams{n, t, BchFlavor::Extended}, field);
}

inline LinearCode ebch(unsigned n, unsigned t, const Field& field) { return dual(ebch_dual(n, t, field)); }

/// Upper bound on the dual-BCH rank: n per middle degree plus the constant.
inline std::size_t dual_bch_rank_bound(const BchParams& p) { return static_cast<std::size_t>(p.n) * 2 * p.t + 2; }

struct BchOrbitReport {
  BchParams params;
  GroupKind group = GroupKind::Cyclic;
  std::size_t k_max = 0;
  LinearCode target{DomainKind::Nonzero, 0};  // the code whose single-orbit property is tested
  SearchResult search;

  bool found() const { return search.status == SearchStatus::Found; }
};

inline std::size_t default_k_max(unsigned t) { return 2 * static_cast<std::size_t>(t) + 2; }

/// Affine single-orbit search on eBCH(n, t). n must be prime.
inline BchOrbitReport verify_affine_ebch(unsigned n, unsigned t, std::optional<std::size_t> k_max = std::nullopt,
                                          const SearchOptions& options = {}) {
  if (!is_prime(n)) throw InvalidArgument("affine BCH check needs prime n (got " + std::to_string(n) + ")");
  const BchParams p{n, t, BchFlavor::Extended};
  validate(p);
  const Field field(n);
  BchOrbitReport r{p, GroupKind::Affine, k_max.value_or(default_k_max(t)), bch(p, field), {}};
  r.search = find_single_orbit_generator(r.target, r.k_max, GroupKind::Affine, field, options);
  return r;
}

/// Cyclic single-orbit search on BCH(n, t). 2^n - 1 must be prime.
inline BchOrbitReport verify_cyclic_bch(unsigned n, unsigned t, std::optional<std::size_t> k_max = std::nullopt,
                                         const SearchOptions& options = {}) {
  if (!is_mersenne_exponent(n))
    throw InvalidArgument("cyclic BCH check needs 2^n - 1 prime (got n=" + std::to_string(n) + ")");
  const BchParams p{n, t, BchFlavor::Cyclic};
  validate(p);
  const Field field(n);
  BchOrbitReport r{p, GroupKind::Cyclic, k_max.value_or(default_k_max(t)), bch(p, field), {}};
  r.search = find_single_orbit_generator(r.target, r.k_max, GroupKind::Cyclic, field, options);
  return r;
}

}  // namespace orbitcode

#endif  // ORBITCODE_BCH_HPP
