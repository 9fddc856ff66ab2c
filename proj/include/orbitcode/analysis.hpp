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

#ifndef ORBITCODE_ANALYSIS_HPP
#define ORBITCODE_ANALYSIS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/groupaction.hpp"
#include "orbitcode/krawtchouk.hpp"
#include "orbitcode/linalg2.hpp"
#include "orbitcode/parallel.hpp"
#include "orbitcode/rng.hpp"

namespace orbitcode {

// ---------------------------------------------------------------- character sums

struct ExponentTerm {
  Element a;
  std::uint64_t k = 1;
  friend bool operator==(const ExponentTerm&, const ExponentTerm&) = default;
};

/// f(x) = sum a_i x^(k_i) with 1 <= k_i <= N-1 and distinct k_i.
class SparseExponentPoly {
 public:
  SparseExponentPoly() = default;
  explicit SparseExponentPoly(std::vector<ExponentTerm> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) { return x.k < y.k; });
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].k == terms_[i - 1].k) throw InvalidArgument("repeated exponent " + std::to_string(terms_[i].k));
    for (const auto& t : terms_)
      if (t.k == 0) throw InvalidArgument("exponents must be >= 1");
  }

  const std::vector<ExponentTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void validate(const Field& field) const {
    for (const auto& t : terms_) {
      if (t.k < 1 || t.k > field.group_order())
        throw InvalidArgument("exponent " + std::to_string(t.k) + " outside [1, N-1]");
      if (!field.contains(t.a)) throw InvalidArgument("coefficient outside the field");
    }
  }

  Element operator()(Element x, const Field& field) const {
    Element s{0};
    for (const auto& t : terms_) s = s + field.mul(t.a, field.pow(x, static_cast<std::int64_t>(t.k)));
    return s;
  }

 private:
  std::vector<ExponentTerm> terms_;
};

/// Trace(f(x)) on the with-zero domain.
inline Codeword trace_word(const SparseExponentPoly& f, const Field& field) {
  f.validate(field);
  const std::size_t len = field.domain_length(DomainKind::WithZero);
  Codeword out(DomainKind::WithZero, len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, field.trace(f(field.point(i, DomainKind::WithZero), field)));
  return out;
}

/// sum over all x in F of (-1)^Trace(f(x)), exactly.
inline std::int64_t char_sum(const SparseExponentPoly& f, const Field& field) {
  f.validate(field);
  std::int64_t s = 0;
  for (std::uint64_t b = 0; b < field.order(); ++b)
    s += field.trace(f(Element{static_cast<std::uint32_t>(b)}, field)) ? -1 : 1;
  return s;
}

struct GcdCheck {
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;  // 0 for single-exponent checks
  std::uint64_t gcd = 0;
  bool pass = false;
};

struct ExponentConditionReport {
  double epsilon = 0;
  double threshold = 0;  // N^(1 - epsilon)
  bool range_ok = true;  // condition 1
  std::vector<GcdCheck> single;  // gcd(k_i, N-1) < N^(1-eps)
  std::vector<GcdCheck> pairs;   // gcd(k_i - k_j, N-1) < N^(1-eps)

  bool all_pass() const {
    return range_ok && std::all_of(single.begin(), single.end(), [](const GcdCheck& c) { return c.pass; }) &&
           std::all_of(pairs.begin(), pairs.end(), [](const GcdCheck& c) { return c.pass; });
  }
};

/// Exact gcd conditions on the exponents; g < N^(1-eps) is decided as log2 g < n (1 - eps).
inline ExponentConditionReport check_exponent_conditions(const SparseExponentPoly& f, const Field& field, double epsilon) {
  const std::uint64_t m = field.group_order();
  const double n = field.degree();
  ExponentConditionReport r;
  r.epsilon = epsilon;
  r.threshold = std::pow(2.0, n * (1.0 - epsilon));
  auto below = [&](std::uint64_t g) { return std::log2(static_cast<double>(g)) < n * (1.0 - epsilon); };
  const auto& ts = f.terms();
  for (const auto& t : ts) {
    if (t.k < 1 || t.k > m) r.range_ok = false;
    const std::uint64_t g = std::gcd(t.k, m);
    r.single.push_back({t.k, 0, g, below(g)});
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const std::uint64_t diff = ts[j].k - ts[i].k;
      const std::uint64_t g = std::gcd(diff, m);
      r.pairs.push_back({ts[i].k, ts[j].k, g, below(g)});
    }
  return r;
}

// ---------------------------------------------------------------- weight profile

struct DistanceProfile {
  std::size_t length = 0;
  std::size_t min_weight = 0;
  std::size_t max_weight = 0;
  double delta_min = 0;
  double delta_max = 0;
  double max_bias = 0;  // max |1/2 - w/L| over nonzero weights
  double delta_hat = 0;  // -log_N(max_bias); +inf when every weight is exactly L/2
};

/// Extremes of the nonzero relative weights. N is taken as the power of two covering the length.
inline DistanceProfile distance_profile(const LinearCode& code) {
  if (code.is_zero()) throw InvalidArgument("distance profile of the zero code");
  const auto& a = weight_distribution(code);
  const std::size_t L = code.length();
  DistanceProfile p{L};
  bool first = true;
  for (std::size_t w = 1; w <= L; ++w) {
    if (a[w] == 0) continue;
    if (first) p.min_weight = w;
    first = false;
    p.max_weight = w;
    p.max_bias = std::max(p.max_bias, std::abs(0.5 - static_cast<double>(w) / static_cast<double>(L)));
  }
  p.delta_min = static_cast<double>(p.min_weight) / static_cast<double>(L);
  p.delta_max = static_cast<double>(p.max_weight) / static_cast<double>(L);
  const double logN = std::log2(static_cast<double>(std::bit_ceil(L)));
  p.delta_hat = p.max_bias == 0 ? std::numeric_limits<double>::infinity() : -std::log2(p.max_bias) / logN;
  return p;
}

// ---------------------------------------------------------------- dual counting

struct LowWeightCount {
  std::size_t k = 0;
  BigInt exact;           // weight-k words of C^perp
  BigInt binom;           // C(L, k)
  BigInt code_size;       // |C|
  double predicted = 0;   // C(L,k) / |C|
  double ratio = 0;       // exact / predicted
};

inline LowWeightCount count_low_weight_dual(const LinearCode& code, std::size_t k) {
  const std::size_t L = code.length();
  if (k > L) throw InvalidArgument("k exceeds the code length");
  const WeightEnumerator perp = macwilliams_transform(weight_distribution(code), code.rank(), L);
  LowWeightCount r{k, perp[k], binomial(L, k), code.size()};
  r.predicted = static_cast<double>(r.binom) / static_cast<double>(r.code_size);
  // exact * |C| / C(L, k), formed in integers before the single rounding step
  r.ratio = r.binom == 0 ? 0.0 : static_cast<double>(boost::multiprecision::cpp_rational(r.exact * r.code_size, r.binom));
  return r;
}

// ---------------------------------------------------------------- local tester

/// Read access to a word that counts every coordinate read.
class QueryOracle {
 public:
  explicit QueryOracle(const Codeword& v) : v_(v) {}
  bool query(std::size_t i) {
    ++queries_;
    return v_.get(i);
  }
  std::size_t queries() const { return queries_; }

 private:
  const Codeword& v_;
  std::size_t queries_ = 0;
};

struct TesterReport {
  std::size_t k = 0;
  GroupKind group = GroupKind::Cyclic;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t accepts = 0;
  std::uint64_t rejects = 0;
  std::size_t max_queries = 0;  // largest number of reads in a single trial
  std::optional<double> exact_rejection;

  double empirical_rejection() const { return trials == 0 ? 0.0 : static_cast<double>(rejects) / static_cast<double>(trials); }
  double standard_error() const {
    if (trials == 0) return 0.0;
    const double p = empirical_rejection();
    return std::sqrt(p * (1 - p) / static_cast<double>(trials));
  }
};

inline void check_tester_inputs(const Codeword& v, const OrbitCertificate& cert) {
  if (!cert.verified) throw InvalidArgument("tester needs a verified certificate");
  if (!v.same_domain(cert.generator)) throw DomainMismatch("word and certificate live on different domains");
}

/// Exact probability over a uniform group element that the permuted generator is not orthogonal to v.
inline double exact_rejection(const Codeword& v, const OrbitCertificate& cert, const GroupTable& table) {
  check_tester_inputs(v, cert);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < table.order(); ++i) bad += table.image(cert.generator, i).dot(v) ? 1 : 0;
  return static_cast<double>(bad) / static_cast<double>(table.order());
}

inline double exact_rejection(const Codeword& v, const OrbitCertificate& cert, const Field& field) {
  return exact_rejection(v, cert, GroupTable(cert.kind, field));
}

/// Runs the single-orbit tester: each trial draws a uniform group element pi, reads v only on
/// the support of generator o pi, and rejects when the parity of those reads is odd.
/// Trial i uses random stream i of the seed, so the report does not depend on `jobs`.
inline TesterReport single_orbit_test(const Codeword& v, const OrbitCertificate& cert, const Field& field,
                                      std::uint64_t seed, std::uint64_t trials, bool exact = false, unsigned jobs = 1) {
  check_tester_inputs(v, cert);
  const GroupTable table(cert.kind, field);
  TesterReport r{cert.k, cert.kind, seed, trials};
  const unsigned workers = resolve_jobs(jobs);
  std::vector<std::uint64_t> rejects(workers, 0);
  std::vector<std::size_t> max_q(workers, 0);
  parallel_chunks(trials, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t t = b; t < e; ++t) {
      CounterRng rng(seed, t);
      const Codeword probe = table.image(cert.generator, rng.uniform(table.order()));
      QueryOracle oracle(v);
      bool parity = false;
      for (auto i : probe.support()) parity ^= oracle.query(i);
      rejects[w] += parity ? 1 : 0;
      max_q[w] = std::max(max_q[w], oracle.queries());
    }
  });
  r.rejects = std::accumulate(rejects.begin(), rejects.end(), std::uint64_t{0});
  r.accepts = trials - r.rejects;
  r.max_queries = *std::max_element(max_q.begin(), max_q.end());
  if (exact) r.exact_rejection = exact_rejection(v, cert, table);
  return r;
}

// ---------------------------------------------------------------- soundness

struct Coset {
  BitVector syndrome;
  Codeword leader;
  std::size_t distance = 0;  // weight of the leader = distance of the coset to the code
};

/// Coset leaders of `code` by increasing weight, one per syndrome (syndromes against the
/// basis of code^perp). The first leader found in support order is kept.
inline std::vector<Coset> coset_leaders(const LinearCode& code, std::uint64_t limit = std::uint64_t{1} << 26) {
  const LinearCode checks = dual(code);
  const std::size_t r = checks.rank();
  if (r > 24) throw InvalidArgument("too many cosets to enumerate");
  const std::size_t L = code.length();
  const std::uint64_t total = std::uint64_t{1} << r;
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  const auto cols = detail::column_syndromes(checks);
  std::vector<Coset> out;
  out.push_back({BitVector(r), Codeword(code.kind(), L), 0});
  seen[0] = 1;
  std::uint64_t visited = 0;
  for (std::size_t w = 1; w <= L && out.size() < total; ++w) {
    detail::for_each_combination(L, w, [&](const std::vector<std::size_t>& idx) {
      if (++visited > limit) throw InvalidArgument("coset leader enumeration exceeded its limit");
      std::uint64_t s = 0;
      for (auto j : idx) s ^= cols[j];
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        BitVector syn(r);
        for (std::size_t b = 0; b < r; ++b)
          if ((s >> b) & 1) syn.set(b);
        out.push_back({std::move(syn), Codeword(code.kind(), BitVector::from_indices(L, idx)), w});
      }
      return out.size() < total;
    });
  }
  return out;
}

inline Codeword random_codeword(const LinearCode& code, CounterRng& rng) {
  BitVector v(code.length());
  std::uint64_t bits = 0;
  for (std::size_t r = 0; r < code.rank(); ++r) {
    if (r % 64 == 0) bits = rng();
    if ((bits >> (r % 64)) & 1) v ^= code.basis()[r];
  }
  return Codeword(code.kind(), std::move(v));
}

struct SoundnessPoint {
  std::size_t distance = 0;
  double relative_distance = 0;
  std::size_t cosets = 0;     // cosets at this distance
  std::size_t samples = 0;    // words evaluated
  double min_rejection = 0;
  double max_rejection = 0;
  double min_ratio = 0;       // min rejection / relative distance
};

struct SoundnessReport {
  std::size_t k = 0;
  GroupKind group = GroupKind::Cyclic;
  std::uint64_t seed = 0;
  std::uint64_t samples_per_point = 0;  // 0: every coset exactly once
  std::vector<SoundnessPoint> points;
  double alpha_hat = 0;  // min over nonzero distances of rejection / distance
  double benchmark = 0;  // 1 / k^2, shown for comparison only
};

/// Tests words at exact distances from C = (cert target)^perp. Rejection only depends on the coset,
/// so it is computed exactly over the whole group; sampled words are leader + random codeword.
/// An empty grid means every achievable distance.
inline SoundnessReport soundness_curve(const OrbitCertificate& cert, const LinearCode& target, const Field& field,
                                       std::vector<std::size_t> grid, std::uint64_t samples_per_point,
                                       std::uint64_t seed) {
  if (!cert.verified) throw InvalidArgument("soundness curve needs a verified certificate");
  const LinearCode code = dual(target);
  const GroupTable table(cert.kind, field);
  const auto cosets = coset_leaders(code);
  SoundnessReport rep{cert.k, cert.kind, seed, samples_per_point};
  rep.benchmark = cert.k == 0 ? 0.0 : 1.0 / static_cast<double>(cert.k * cert.k);
  if (grid.empty()) {
    for (const auto& c : cosets) grid.push_back(c.distance);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const double L = static_cast<double>(code.length());
  rep.alpha_hat = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const std::size_t dist = grid[g];
    std::vector<const Coset*> at;
    for (const auto& c : cosets)
      if (c.distance == dist) at.push_back(&c);
    SoundnessPoint pt{dist, static_cast<double>(dist) / L, at.size()};
    if (at.empty()) {
      rep.points.push_back(pt);
      continue;
    }
    std::vector<const Coset*> picks;
    CounterRng rng(seed, g);
    if (samples_per_point == 0) {
      picks = at;
    } else {
      for (std::uint64_t s = 0; s < samples_per_point; ++s) picks.push_back(at[static_cast<std::size_t>(rng.uniform(at.size()))]);
    }
    pt.min_rejection = std::numeric_limits<double>::infinity();
    for (const Coset* c : picks) {
      Codeword v = c->leader;
      if (samples_per_point != 0) v ^= random_codeword(code, rng);
      const double p = exact_rejection(v, cert, table);
      pt.min_rejection = std::min(pt.min_rejection, p);
      pt.max_rejection = std::max(pt.max_rejection, p);
      ++pt.samples;
    }
    pt.min_ratio = dist == 0 ? 0.0 : pt.min_rejection / pt.relative_distance;
    if (dist > 0) rep.alpha_hat = std::min(rep.alpha_hat, pt.min_ratio);
    rep.points.push_back(pt);
  }
  if (std::isinf(rep.alpha_hat)) rep.alpha_hat = 0;
  return rep;
}

}  // namespace orbitcode

#endif  // ORBITCODE_ANALYSIS_HPP
