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

#ifndef ORBITCODE_GROUPACTION_HPP
#define ORBITCODE_GROUPACTION_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "orbitcode/bitvec.hpp"
#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/linalg2.hpp"
#include "orbitcode/parallel.hpp"
#include "orbitcode/rng.hpp"
#include "orbitcode/tracecodes.hpp"

namespace orbitcode {

/// Cyclic: x -> a x on F*. Affine: x -> a x + b on F.
enum class GroupKind { Cyclic, Affine };

inline std::string to_string(GroupKind kind) { return kind == GroupKind::Cyclic ? "cyclic" : "affine"; }

inline GroupKind group_kind_from_string(std::string_view s) {
  if (s == "cyclic") return GroupKind::Cyclic;
  if (s == "affine") return GroupKind::Affine;
  throw ParseError("unknown group '" + std::string(s) + "' (expected cyclic|affine)");
}

inline DomainKind domain_of(GroupKind kind) {
  return kind == GroupKind::Cyclic ? DomainKind::Nonzero : DomainKind::WithZero;
}

struct GroupElement {
  GroupKind kind = GroupKind::Cyclic;
  Element alpha{1};
  Element beta{0};

  static GroupElement identity(GroupKind kind) { return GroupElement{kind, Element{1}, Element{0}}; }

  Element apply(Element x, const Field& field) const { return field.mul(alpha, x) + beta; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline void check_group_element(const GroupElement& g, const Field& field) {
  if (g.alpha.is_zero() || !field.contains(g.alpha)) throw InvalidArgument("group element needs a nonzero alpha in the field");
  if (!field.contains(g.beta)) throw InvalidArgument("beta outside the field");
  if (g.kind == GroupKind::Cyclic && !g.beta.is_zero()) throw InvalidArgument("cyclic elements have beta = 0");
}

/// The map x -> outer(inner(x)).
inline GroupElement compose(const GroupElement& outer, const GroupElement& inner, const Field& field) {
  if (outer.kind != inner.kind) throw DomainMismatch("composing elements of different groups");
  return GroupElement{outer.kind, field.mul(outer.alpha, inner.alpha), field.mul(outer.alpha, inner.beta) + outer.beta};
}

inline std::uint64_t group_order(GroupKind kind, const Field& field) {
  return kind == GroupKind::Cyclic ? field.group_order() : field.group_order() * field.order();
}

/// Element number index in the canonical order: alpha over <w, w^2, ..., 1>, and for the
/// affine group beta over <0, w, ..., 1> within each alpha.
inline GroupElement group_element_at(GroupKind kind, std::uint64_t index, const Field& field) {
  if (kind == GroupKind::Cyclic) return GroupElement{kind, field.point(static_cast<std::size_t>(index), DomainKind::Nonzero), Element{0}};
  const std::uint64_t a = index / field.order();
  const std::uint64_t b = index % field.order();
  return GroupElement{kind, field.point(static_cast<std::size_t>(a), DomainKind::Nonzero),
                      field.point(static_cast<std::size_t>(b), DomainKind::WithZero)};
}

inline std::vector<GroupElement> group_elements(GroupKind kind, const Field& field) {
  std::vector<GroupElement> out;
  const std::uint64_t order = group_order(kind, field);
  out.reserve(static_cast<std::size_t>(order));
  for (std::uint64_t i = 0; i < order; ++i) out.push_back(group_element_at(kind, i, field));
  return out;
}

/// Uniformly random group element.
inline GroupElement random_group_element(GroupKind kind, const Field& field, CounterRng& rng) {
  return group_element_at(kind, rng.uniform(group_order(kind, field)), field);
}

/// Coordinate permutation of g: (w o g)[i] = w[perm[i]].
inline std::vector<std::size_t> coordinate_map(const GroupElement& g, const Field& field) {
  check_group_element(g, field);
  const DomainKind dom = domain_of(g.kind);
  const std::size_t len = field.domain_length(dom);
  std::vector<std::size_t> perm(len);
  if (g.kind == GroupKind::Cyclic) {
    const std::size_t shift = field.log(g.alpha);
    for (std::size_t i = 0; i < len; ++i) perm[i] = (i + shift) % len;
    return perm;
  }
  for (std::size_t i = 0; i < len; ++i) perm[i] = field.index_of(g.apply(field.point(i, dom), field), dom);
  return perm;
}

inline void check_action_domain(GroupKind kind, const Codeword& w, const Field& field) {
  const DomainKind dom = domain_of(kind);
  if (w.kind() != dom || w.length() != field.domain_length(dom))
    throw DomainMismatch("the " + to_string(kind) + " group acts on the " + to_string(dom) + " domain of length " +
                         std::to_string(field.domain_length(dom)));
}

inline Codeword permute(const Codeword& w, const std::vector<std::size_t>& perm) {
  BitVector bits(w.length());
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (w.get(perm[i])) bits.set(i);
  return Codeword(w.kind(), std::move(bits));
}

/// (w o g)(x) = w(alpha x + beta). This is a right action: act(h, act(g, w)) == act(compose(g, h), w).
inline Codeword act(const GroupElement& g, const Codeword& w, const Field& field) {
  check_action_domain(g.kind, w, field);
  check_group_element(g, field);
  if (g.kind == GroupKind::Cyclic) return Codeword(w.kind(), w.bits().rotated(field.log(g.alpha)));
  return permute(w, coordinate_map(g, field));
}

/// Precomputed coordinate permutations for every element of a group, in canonical order.
class GroupTable {
 public:
  GroupTable(GroupKind kind, const Field& field) : kind_(kind), field_(field) {
    if (kind == GroupKind::Affine) {
      const std::uint64_t order = group_order(kind, field);
      perms_.reserve(static_cast<std::size_t>(order));
      for (std::uint64_t i = 0; i < order; ++i) perms_.push_back(coordinate_map(group_element_at(kind, i, field), field));
    }
  }

  GroupKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  std::uint64_t order() const { return group_order(kind_, field_); }

  Codeword image(const Codeword& w, std::uint64_t index) const {
    if (kind_ == GroupKind::Cyclic) return Codeword(w.kind(), w.bits().rotated(static_cast<std::size_t>(index + 1)));
    const auto& perm = perms_[static_cast<std::size_t>(index)];
    BitVector bits(w.length());
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (w.get(perm[i])) bits.set(i);
    return Codeword(w.kind(), std::move(bits));
  }

 private:
  GroupKind kind_;
  Field field_;
  std::vector<std::vector<std::size_t>> perms_;
};

/// All N-1 (cyclic) or N(N-1) (affine) images of w, duplicates kept, in canonical element order.
inline std::vector<Codeword> orbit(const Codeword& w, GroupKind kind, const Field& field) {
  check_action_domain(kind, w, field);
  const GroupTable table(kind, field);
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(table.order()));
  for (std::uint64_t i = 0; i < table.order(); ++i) out.push_back(table.image(w, i));
  return out;
}

inline LinearCode orbit_span(const Codeword& w, const GroupTable& table) {
  check_action_domain(table.kind(), w, table.field());
  EchelonBuilder builder(w.length());
  for (std::uint64_t i = 0; i < table.order() && !builder.full(); ++i) builder.insert(table.image(w, i).bits());
  return LinearCode::from_echelon(w.kind(), std::move(builder));
}

inline LinearCode orbit_span(const Codeword& w, GroupKind kind, const Field& field) {
  return orbit_span(w, GroupTable(kind, field));
}

/// Whether the orbit of w spans exactly ; stops as soon as the answer is known.
inline bool orbit_spans(const Codeword& w, const GroupTable& table, const LinearCode& target) {
  EchelonBuilder builder(w.length());
  for (std::uint64_t i = 0; i < table.order(); ++i) {
    const Codeword img = table.image(w, i);
    if (!target.contains(img)) return false;
    if (builder.insert(img.bits()) && builder.rank() == target.rank()) return true;
  }
  return builder.rank() == target.rank();
}

/// Checks closure of the code under a generating set of the group
/// (x -> w x, plus x -> x + 1 for the affine group).
inline bool is_group_invariant(const LinearCode& code, GroupKind kind, const Field& field) {
  if (code.kind() != domain_of(kind) || code.length() != field.domain_length(code.kind())) return false;
  std::vector<GroupElement> gens{GroupElement{kind, field.generator(), Element{0}}};
  if (kind == GroupKind::Affine) gens.push_back(GroupElement{kind, Element{1}, Element{1}});
  for (const auto& b : code.basis_words())
    for (const auto& g : gens)
      if (!code.contains(act(g, b, field))) return false;
  return true;
}

struct OrbitCertificate {
  Codeword generator;
  GroupKind kind = GroupKind::Cyclic;
  std::size_t k = 0;  // weight of the generator
  std::size_t span_rank = 0;
  std::size_t target_rank = 0;
  bool verified = false;
};

/// Builds a certificate by recomputing the orbit span of generator and comparing it to target.
inline OrbitCertificate certify(const Codeword& generator, GroupKind kind, const Field& field, const LinearCode& target) {
  check_action_domain(kind, generator, field);
  const LinearCode s = orbit_span(generator, kind, field);
  OrbitCertificate cert{generator, kind, generator.weight(), s.rank(), target.rank(), false};
  cert.verified = !generator.is_zero() && s == target;
  return cert;
}

inline bool reverify(const OrbitCertificate& cert, const LinearCode& target, const Field& field) {
  if (cert.generator.kind() != target.kind() || cert.generator.length() != target.length()) return false;
  if (cert.generator.weight() > cert.k) return false;
  return certify(cert.generator, cert.kind, field, target).verified;
}

enum class SearchStatus { Found, Refuted, BudgetExhausted };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Refuted: return "refuted";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

struct SearchOptions {
  std::uint64_t budget = 1000;  // information-set trials when enumeration is out of reach
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Refuted;
  std::optional<OrbitCertificate> certificate;
  std::string method;                  // codeword-enumeration | weight-enumeration | information-set-sampling
  std::uint64_t candidates_seen = 0;   // low-weight codewords considered
  std::uint64_t orbit_checks = 0;      // orbit spans actually computed
  std::uint64_t trials = 0;            // sampling trials used
};

namespace detail {

inline std::uint64_t saturating_binomial_sum(std::size_t length, std::size_t k_max, std::uint64_t cap) {
  BigInt total = 0;
  for (std::size_t w = 1; w <= std::min(k_max, length); ++w) {
    total += binomial(length, w);
    if (total > cap) return cap + 1;
  }
  return total.convert_to<std::uint64_t>();
}

/// Syndromes of single coordinates against the rows of `checks` (at most 64 rows).
inline std::vector<std::uint64_t> column_syndromes(const LinearCode& checks) {
  std::vector<std::uint64_t> cols(checks.length(), 0);
  const auto& rows = checks.basis();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto j : rows[r].support()) cols[j] |= std::uint64_t{1} << r;
  return cols;
}

/// Calls fn(index_vector) for every weight-w subset of [0, length) in lexicographic order;
/// stops early when fn returns false.
template <typename Fn>
void for_each_combination(std::size_t length, std::size_t w, Fn&& fn) {
  if (w > length) return;
  std::vector<std::size_t> idx(w);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (!fn(idx)) return;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == length - w + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool weight_then_support_less(const Codeword& a, const Codeword& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return support_less(a.bits(), b.bits());
}

}  // namespace detail

/// Codewords of code with weight exactly w, in support-lexicographic order.
inline std::vector<Codeword> codewords_of_weight(const LinearCode& code, std::size_t w,
                                                 std::uint64_t limit = std::uint64_t{1} << 26) {
  std::vector<Codeword> out;
  const std::size_t L = code.length();
  const std::uint64_t by_subsets = w > L ? 0 : (binomial(L, w) > limit ? limit + 1 : binomial(L, w).convert_to<std::uint64_t>());
  const LinearCode checks = dual(code);
  const bool subsets_ok = checks.rank() <= 64 && by_subsets <= limit;
  const bool codewords_ok = code.rank() <= kMaxEnumerationRank && (std::uint64_t{1} << code.rank()) <= limit;
  if (subsets_ok && (!codewords_ok || by_subsets <= (std::uint64_t{1} << code.rank()))) {
    const auto cols = detail::column_syndromes(checks);
    detail::for_each_combination(L, w, [&](const std::vector<std::size_t>& idx) {
      std::uint64_t s = 0;
      for (auto j : idx) s ^= cols[j];
      if (s == 0) out.emplace_back(code.kind(), BitVector::from_indices(L, idx));
      return true;
    });
    return out;
  }
  if (!codewords_ok) throw InvalidArgument("too many codewords to enumerate weight " + std::to_string(w));
  const std::uint64_t total = std::uint64_t{1} << code.rank();
  BitVector v(L);
  for (std::uint64_t i = 1; i < total; ++i) {
    v ^= code.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    if (v.weight() == w) out.emplace_back(code.kind(), v);
  }
  if (w == 0) out.emplace_back(code.kind(), L);
  std::sort(out.begin(), out.end(), [](const Codeword& a, const Codeword& b) { return support_less(a.bits(), b.bits()); });
  return out;
}

namespace detail {

/// Walks candidates in order, skipping orbit-mates of words already refuted, and returns the
/// position of the first one whose orbit spans the target.
class OrbitScanner {
 public:
  OrbitScanner(const GroupTable& table, const LinearCode& target, unsigned jobs)
      : table_(table), target_(target), jobs_(resolve_jobs(jobs)) {}

  /// Counters match a one-candidate-at-a-time scan, whatever the number of jobs.
  std::optional<Codeword> scan(const std::vector<Codeword>& candidates, SearchResult& stats) {
    std::size_t pos = 0;
    const std::size_t block = jobs_ <= 1 ? 1 : 4 * static_cast<std::size_t>(jobs_);
    while (pos < candidates.size()) {
      const std::size_t start = pos;
      std::vector<std::size_t> batch;
      for (; pos < candidates.size() && batch.size() < block; ++pos)
        if (!visited_.contains(candidates[pos].bits())) batch.push_back(pos);
      std::vector<char> ok(batch.size(), 0);
      parallel_chunks(batch.size(), jobs_, [&](unsigned, std::uint64_t b, std::uint64_t e) {
        for (auto i = b; i < e; ++i) ok[i] = orbit_spans(candidates[batch[i]], table_, target_) ? 1 : 0;
      });
      std::size_t next = 0;
      for (std::size_t at = start; at < pos; ++at) {
        ++stats.candidates_seen;
        if (next == batch.size() || batch[next] != at) continue;
        const std::size_t i = next++;
        if (visited_.contains(candidates[at].bits())) continue;  // orbit-mate of an earlier batch entry
        ++stats.orbit_checks;
        if (ok[i]) return candidates[at];
        for (std::uint64_t g = 0; g < table_.order(); ++g) visited_.insert(table_.image(candidates[at], g).bits());
      }
    }
    return std::nullopt;
  }

 private:
  const GroupTable& table_;
  const LinearCode& target_;
  unsigned jobs_;
  std::unordered_set<BitVector, BitVectorHash> visited_;
};

/// Systematic rows of `code` on a random information set, plus their pairwise sums.
inline std::vector<Codeword> information_set_candidates(const LinearCode& code, std::size_t k_max, CounterRng& rng) {
  const std::size_t L = code.length();
  std::vector<std::size_t> order(L);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = L; i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(i))]);
  std::vector<BitVector> rows = code.basis();
  std::size_t placed = 0;
  for (auto c : order) {
    if (placed == rows.size()) break;
    std::size_t r = placed;
    while (r < rows.size() && !rows[r].get(c)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[placed]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != placed && rows[q].get(c)) rows[q] ^= rows[placed];
    ++placed;
  }
  std::vector<Codeword> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].weight() <= k_max) out.emplace_back(code.kind(), rows[i]);
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      BitVector s = rows[i] ^ rows[j];
      if (s.weight() <= k_max) out.emplace_back(code.kind(), std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), weight_then_support_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Looks for a codeword of target (= C^perp for a group-invariant C) of weight <= k_max whose
/// orbit spans target. Candidates are scanned by ascending weight, support-lexicographic within a
/// weight, so the answer is the first generator in that order. When neither all codewords nor all
/// words of weight <= k_max fit in options.exhaustive_limit, information-set sampling is used
/// instead and a miss is reported as BudgetExhausted rather than Refuted.
inline SearchResult find_single_orbit_generator(const LinearCode& target, std::size_t k_max, GroupKind kind,
                                                const Field& field, const SearchOptions& options = {}) {
  if (target.kind() != domain_of(kind) || target.length() != field.domain_length(target.kind()))
    throw DomainMismatch("target code does not live on the " + to_string(kind) + " group's domain");
  if (!is_group_invariant(target, kind, field))
    throw NotInvariant("target code is not invariant under the " + to_string(kind) + " group");

  SearchResult result;
  const GroupTable table(kind, field);
  detail::OrbitScanner scanner(table, target, options.jobs);
  auto finish = [&](const Codeword& w) {
    result.status = SearchStatus::Found;
    result.certificate = certify(w, kind, field, target);
    if (!result.certificate->verified) throw Error("orbit scan and certificate disagree");
    return result;
  };

  if (target.is_zero() || k_max == 0) {
    result.method = "trivial";
    result.status = SearchStatus::Refuted;
    return result;
  }

  const std::size_t L = target.length();
  const LinearCode checks = dual(target);
  const std::uint64_t limit = options.exhaustive_limit;
  const std::uint64_t subset_cost = checks.rank() <= 64 ? detail::saturating_binomial_sum(L, k_max, limit) : limit + 1;
  const std::uint64_t codeword_cost = target.rank() <= 24 ? (std::uint64_t{1} << target.rank()) : limit + 1;

  if (std::min(subset_cost, codeword_cost) <= limit) {
    if (subset_cost <= codeword_cost) {
      result.method = "weight-enumeration";
      const auto cols = detail::column_syndromes(checks);
      for (std::size_t w = 1; w <= std::min(k_max, L); ++w) {
        std::vector<Codeword> layer;
        detail::for_each_combination(L, w, [&](const std::vector<std::size_t>& idx) {
          std::uint64_t s = 0;
          for (auto j : idx) s ^= cols[j];
          if (s == 0) layer.emplace_back(target.kind(), BitVector::from_indices(L, idx));
          return true;
        });
        if (auto hit = scanner.scan(layer, result)) return finish(*hit);
      }
    } else {
      result.method = "codeword-enumeration";
      std::vector<std::vector<Codeword>> layers(k_max + 1);
      BitVector v(L);
      const std::uint64_t total = std::uint64_t{1} << target.rank();
      for (std::uint64_t i = 1; i < total; ++i) {
        v ^= target.basis()[static_cast<std::size_t>(std::countr_zero(i))];
        const std::size_t wt = v.weight();
        if (wt <= k_max) layers[wt].emplace_back(target.kind(), v);
      }
      for (auto& layer : layers) {
        std::sort(layer.begin(), layer.end(),
                  [](const Codeword& a, const Codeword& b) { return support_less(a.bits(), b.bits()); });
        if (auto hit = scanner.scan(layer, result)) return finish(*hit);
      }
    }
    result.status = SearchStatus::Refuted;
    return result;
  }

  result.method = "information-set-sampling";
  for (std::uint64_t trial = 0; trial < options.budget; ++trial) {
    CounterRng rng(options.seed, trial);
    ++result.trials;
    const auto cands = detail::information_set_candidates(target, k_max, rng);
    if (auto hit = scanner.scan(cands, result)) return finish(*hit);
  }
  result.status = SearchStatus::BudgetExhausted;
  return result;
}

struct EscapeClassification {
  Codeword word;
  bool spans = false;
  std::vector<Degree> witnesses;  // d with word in C(D + d)^perp
};

struct EscapeReport {
  DegreeSet degrees;
  std::size_t k = 0;
  GroupKind kind = GroupKind::Cyclic;
  std::vector<Degree> candidates;
  std::vector<EscapeClassification> words;
  std::size_t spanning = 0;
  std::size_t non_spanning = 0;
  std::size_t exceptions = 0;
  std::map<Degree, std::size_t> escape_counts;  // weight-k words of C(D + d)^perp

  bool dichotomy_holds() const { return exceptions == 0; }

  /// count(weight-k words of C(D+d)^perp) / count(weight-k words of C^perp).
  double escape_ratio(Degree d) const {
    const std::size_t total = words.size();
    auto it = escape_counts.find(d);
    if (total == 0 || it == escape_counts.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total);
  }
};

/// Degrees d outside D that may extend C(D) in the affine argument: D + d must stay shadow-closed
/// (so C(D + d) is again affine-invariant), d has binary weight at most t+1, and optionally
/// d <= degree_cap. t defaults to the largest binary weight present in D.
struct AffineCandidateRule {
  std::optional<unsigned> t;
  std::optional<Degree> degree_cap;
};

inline std::vector<Degree> affine_escape_candidates(const DegreeSet& degrees, const AffineCandidateRule& rule = {}) {
  unsigned tt = 1;
  if (rule.t) {
    tt = *rule.t;
  } else {
    for (auto d : degrees.middle()) tt = std::max(tt, static_cast<unsigned>(std::popcount(d)));
  }
  std::vector<Degree> out;
  if (!degrees.contains(0)) out.push_back(0);
  for (auto d : canonical_degree_universe(degrees.n())) {
    if (degrees.contains(d) || static_cast<unsigned>(std::popcount(d)) > tt + 1) continue;
    if (rule.degree_cap && d > *rule.degree_cap) continue;
    const DegreeSet grown = degrees.with(d);
    if (shadow_closure(grown) != grown) continue;
    out.push_back(d);
  }
  return out;
}

/// Splits the weight-k words of C(D)^perp into those whose orbit spans C(D)^perp and those caught
/// by some C(D + d)^perp, counting words that fall on neither or both sides as exceptions.
inline EscapeReport classify_dual_words_by_escape(const DegreeSet& degrees, std::size_t k, GroupKind kind,
                                                  const Field& field, const AffineCandidateRule& rule = {}) {
  const DomainKind dom = domain_of(kind);
  if (kind == GroupKind::Affine && shadow_closure(degrees) != degrees)
    throw NotInvariant("affine classification needs a shadow-closed degree set");
  EscapeReport report{degrees, k, kind};
  const LinearCode code = code_from_degrees(degrees, dom, field);
  const LinearCode perp = dual(code);
  if (kind == GroupKind::Cyclic) {
    for (auto d : canonical_degree_universe(field.degree()))
      if (!degrees.contains(d)) report.candidates.push_back(d);
  } else {
    report.candidates = affine_escape_candidates(degrees, rule);
  }
  std::map<Degree, std::vector<Codeword>> extra;
  for (auto d : report.candidates) {
    extra[d] = trace_code_generators(DegreeSet(field.degree(), {d}), dom, field);
    report.escape_counts[d] = 0;
  }

  const GroupTable table(kind, field);
  for (auto& w : codewords_of_weight(perp, k)) {
    EscapeClassification c{w, orbit_spans(w, table, perp), {}};
    for (auto d : report.candidates) {
      const auto& gens = extra[d];
      const bool orthogonal = std::all_of(gens.begin(), gens.end(), [&](const Codeword& g) { return !g.dot(w); });
      if (orthogonal) {
        c.witnesses.push_back(d);
        ++report.escape_counts[d];
      }
    }
    if (c.spans)
      ++report.spanning;
    else
      ++report.non_spanning;
    if (c.spans == !c.witnesses.empty()) ++report.exceptions;
    report.words.push_back(std::move(c));
  }
  return report;
}

}  // namespace orbitcode

#endif  // ORBITCODE_GROUPACTION_HPP
