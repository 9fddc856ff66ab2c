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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "orbitcode/orbitcode.hpp"

using namespace orbitcode;

namespace {

constexpr DomainKind kNz = DomainKind::Nonzero;
constexpr DomainKind kWz = DomainKind::WithZero;

// Runtime limits in seconds, and the ratio band for the low-weight count.
constexpr double kLimit1 = 10, kLimit2 = 30, kLimit3 = 1, kLimit4 = 60, kLimit5 = 300, kLimit6 = 120, kLimit7 = 60,
                 kLimit8 = 30, kLimit9 = 60, kLimit10 = 120, kLimit11 = 600;
constexpr double kBandLow = 0.5, kBandHigh = 2.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: " << what << ";";
      pass = false;
    }
  }
};

TracePolynomial random_poly(const Field& f, DomainKind kind, CounterRng& rng) {
  TracePolynomial p{kind, f.degree(), {}, false, false};
  for (auto d : canonical_degree_universe(f.degree()).middle()) p.set(d, Element{static_cast<std::uint32_t>(rng.uniform(f.order()))});
  p.c_top = rng() & 1;
  if (kind == kWz) p.c0 = rng() & 1;
  return p;
}

Codeword word_from_bits(DomainKind kind, std::size_t len, std::uint64_t bits) {
  Codeword w(kind, len);
  for (std::size_t i = 0; i < len; ++i)
    if ((bits >> i) & 1) w.set(i);
  return w;
}

std::uint64_t to_u64(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

std::string certificate_string(const SearchResult& r, const Field& f) {
  std::string s = to_string(r.status) + " " + r.method + " " + std::to_string(r.candidates_seen) + " " +
                  std::to_string(r.orbit_checks) + " " + std::to_string(r.trials);
  if (r.certificate) s += " " + io::certificate_to_json(*r.certificate, f).dump();
  return s;
}

std::string tester_string(const TesterReport& r) {
  std::ostringstream os;
  os << r.k << " " << r.seed << " " << r.trials << " " << r.accepts << " " << r.rejects << " " << r.max_queries;
  if (r.exact_rejection) os << " " << *r.exact_rejection;
  return os.str();
}

std::string soundness_string(const SoundnessReport& r) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& p : r.points)
    os << p.distance << "," << p.cosets << "," << p.samples << "," << p.min_rejection << "," << p.max_rejection << ";";
  os << r.alpha_hat;
  return os.str();
}

// ---------------------------------------------------------------- criteria

Outcome round_trip() {
  Outcome o;
  const Field f3(3);
  for (DomainKind kind : {kNz, kWz}) {
    const std::size_t len = f3.domain_length(kind);
    std::size_t checked = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m, ++checked) {
      const Codeword w = word_from_bits(kind, len, m);
      o.require(eval_trace_poly(poly_from_word(w, f3), f3) == w, "n=3 word " + w.to_hex());
    }
    o.detail << " n=3 " << to_string(kind) << ": " << checked << " words;";
  }
  for (unsigned n : {5u, 7u}) {
    const Field f(n);
    CounterRng rng(1000 + n);
    for (DomainKind kind : {kNz, kWz}) {
      const CoefficientExtractor ex(f, kind);
      const std::size_t len = f.domain_length(kind);
      for (int i = 0; i < 10000; ++i) {
        BitVector v(len);
        for (auto& word : v.mutable_words()) word = rng();
        v.mutable_words().back() &= len % 64 == 0 ? ~0ull : (1ull << (len % 64)) - 1;
        const Codeword w(kind, std::move(v));
        o.require(eval_trace_poly(ex.poly_from_word(w), f) == w, "n=" + std::to_string(n) + " word " + w.to_hex());
      }
    }
    o.detail << " n=" << n << ": 2x10000 random words;";
  }
  return o;
}

Outcome coefficient_extraction() {
  Outcome o;
  for (unsigned n : {3u, 5u}) {
    const Field f(n);
    CounterRng rng(2000 + n);
    for (DomainKind kind : {kNz, kWz}) {
      const CoefficientExtractor ex(f, kind);
      const auto degrees = canonical_degree_universe(n).middle();
      for (int i = 0; i < 1000; ++i) {
        const TracePolynomial p = random_poly(f, kind, rng);
        const Codeword w = eval_trace_poly(p, f);
        for (auto e : degrees) {
          const auto it = p.coeffs.find(e);
          const Element c = it == p.coeffs.end() ? Element{0} : it->second;
          o.require(ex.orbit_component(w, e) == trace_monomial_word(c, e, kind, f),
                    "n=" + std::to_string(n) + " e=" + std::to_string(e));
        }
      }
      o.detail << " n=" << n << " " << to_string(kind) << ": 1000 codewords x " << degrees.size() << " degrees;";
    }
  }
  return o;
}

Outcome universe_size() {
  Outcome o;
  for (unsigned n : {3u, 5u, 7u, 11u, 13u}) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const std::size_t got = canonical_degree_universe(n).size();
    o.require(got == 1 + (N - 2) / n, "n=" + std::to_string(n));
    o.detail << " n=" << n << ": " << got << ";";
  }
  return o;
}

/// Recomputes the orbit span independently of the search and compares ranks.
void check_certificate(Outcome& o, const SearchResult& r, const LinearCode& target, const Field& f, std::size_t k_max,
                       const std::string& label) {
  o.require(r.status == SearchStatus::Found && r.certificate.has_value(), label + " found");
  if (!r.certificate) return;
  const auto& c = *r.certificate;
  const LinearCode s = orbit_span(c.generator, c.kind, f);
  o.require(c.k <= k_max, label + " k");
  o.require(s.rank() == target.rank() && s == target, label + " span");
  o.require(target.contains(c.generator), label + " membership");
  o.detail << " " << label << ": k=" << c.k << " generator=" << c.generator.to_hex() << " span rank " << s.rank() << "/"
           << target.rank() << " (" << r.method << ");";
}

Outcome cyclic_bch() {
  Outcome o;
  for (unsigned n : {3u, 5u}) {
    const auto r = verify_cyclic_bch(n, 1, 4);
    check_certificate(o, r.search, r.target, Field(n), 4, "BCH(" + std::to_string(n) + ",1)");
  }
  const auto r = verify_cyclic_bch(5, 2, 6);
  o.require(r.search.status != SearchStatus::BudgetExhausted, "BCH(5,2) decided");
  if (r.search.status == SearchStatus::Found)
    check_certificate(o, r.search, r.target, Field(5), 6, "BCH(5,2)");
  else
    o.detail << " BCH(5,2): refuted exhaustively (" << r.search.method << ");";
  return o;
}

Outcome affine_ebch() {
  Outcome o;
  for (unsigned n : {3u, 5u}) {
    const auto r = verify_affine_ebch(n, 1, 6);
    check_certificate(o, r.search, r.target, Field(n), 6, "eBCH(" + std::to_string(n) + ",1)");
  }
  return o;
}

Outcome dichotomy() {
  Outcome o;
  const Field f(3);
  const auto u = canonical_degree_universe(3).degrees();
  std::size_t words = 0, spanning = 0, exceptions = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << u.size()); ++m) {
    std::vector<Degree> d;
    for (std::size_t i = 0; i < u.size(); ++i)
      if ((m >> i) & 1) d.push_back(u[i]);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto r = classify_dual_words_by_escape(DegreeSet(3, d), k, GroupKind::Cyclic, f);
      words += r.words.size();
      spanning += r.spanning;
      exceptions += r.exceptions;
    }
  }
  o.require(exceptions == 0, "exceptions");
  o.detail << " " << (std::uint64_t{1} << u.size()) << " degree sets, k<=5: " << words << " words, " << spanning
           << " spanning, " << exceptions << " exceptions;";
  return o;
}

Outcome macwilliams() {
  Outcome o;
  CounterRng rng(7000);
  for (int i = 0; i < 200; ++i) {
    const std::size_t L = 4 + rng.uniform(28);  // 4..31
    // Rank chosen so the dual also stays within direct enumeration.
    const std::size_t lo = L > 24 ? L - 24 : 1;
    const std::size_t rows = lo + rng.uniform(std::min<std::size_t>(L, 24) - lo + 1);
    std::vector<Codeword> words;
    for (std::size_t r = 0; r < rows; ++r) {
      BitVector v(L);
      v.mutable_words()[0] = rng() & ((std::uint64_t{1} << L) - 1);
      words.emplace_back(kNz, std::move(v));
    }
    const LinearCode c = span(kNz, L, words);
    const auto direct = weight_distribution_by_enumeration(dual(c), 0);
    const auto mw = macwilliams_transform(weight_distribution_by_enumeration(c, 0), c.rank(), L);
    o.require(direct == mw, "random code " + std::to_string(i));
  }
  std::size_t instances = 0;
  for (unsigned n : {3u, 5u}) {
    const Field f(n);
    for (unsigned t : {1u, 2u}) {
      if (n == 3 && t == 2) continue;
      for (const LinearCode& c : {bch({n, t}, f), dual_bch({n, t}, f), ebch(n, t, f), ebch_dual(n, t, f)}) {
        const auto direct = weight_distribution_by_enumeration(dual(c), 0);
        const auto mw = macwilliams_transform(weight_distribution_by_enumeration(c, 0), c.rank(), c.length());
        o.require(direct == mw, "BCH instance n=" + std::to_string(n));
        ++instances;
      }
    }
  }
  o.detail << " 200 random codes, " << instances << " BCH-family codes, exact match;";
  return o;
}

Outcome weight_link() {
  Outcome o;
  const Field f8(3);
  std::size_t pairs = 0;
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint64_t k = 1; k <= 64; ++k, ++pairs) {
      // x^k and x^(((k-1) mod 7) + 1) agree on every point of GF(8) when k >= 1.
      const SparseExponentPoly p({{Element{a}, ((k - 1) % 7) + 1}});
      const std::int64_t s = char_sum(p, f8);
      o.require(static_cast<std::int64_t>(trace_word(p, f8).weight()) * 2 == 8 - s, "GF(8) pair");
    }
  const Field f32(5);
  CounterRng rng(8000);
  for (int i = 0; i < 10000; ++i) {
    std::vector<ExponentTerm> terms;
    std::vector<bool> used(32, false);
    const std::size_t count = 1 + rng.uniform(5);
    while (terms.size() < count) {
      const std::uint64_t k = 1 + rng.uniform(31);
      if (used[k]) continue;
      used[k] = true;
      terms.push_back({Element{static_cast<std::uint32_t>(rng.uniform(32))}, k});
    }
    const SparseExponentPoly p(terms);
    o.require(static_cast<std::int64_t>(trace_word(p, f32).weight()) * 2 == 32 - char_sum(p, f32), "GF(32) poly");
  }
  o.detail << " " << pairs << " GF(8) pairs, 10000 GF(32) polynomials;";
  return o;
}

Outcome low_weight_trend() {
  Outcome o;
  const Field f(5);
  const LinearCode c = dual_bch({5, 1}, f);
  o.detail << " dual_bch(5,1) rank " << c.rank() << "; k exact predicted ratio:";
  for (std::size_t k = 8; k <= 16; ++k) {
    const auto r = count_low_weight_dual(c, k);
    char buf[160];
    std::snprintf(buf, sizeof buf, " [%zu %s %.3f %.5f]", k, r.exact.str().c_str(), r.predicted, r.ratio);
    o.detail << buf;
    o.require(r.ratio >= kBandLow && r.ratio <= kBandHigh, "k=" + std::to_string(k));
  }
  o.detail << ";";
  return o;
}

Outcome tester_contract() {
  Outcome o;
  for (unsigned n : {3u, 5u}) {
    const Field f(n);
    const LinearCode target = dual_bch({n, 1}, f);  // the tested code is BCH(n,1)
    const LinearCode tested = dual(target);
    const auto r = find_single_orbit_generator(target, target.length(), GroupKind::Cyclic, f);
    o.require(r.status == SearchStatus::Found, "certificate for n=" + std::to_string(n));
    if (!r.certificate) continue;
    const auto& cert = *r.certificate;
    const GroupTable table(cert.kind, f);

    // Completeness over every codeword and every group element, on packed words.
    std::vector<std::uint64_t> images;
    for (std::uint64_t g = 0; g < table.order(); ++g) images.push_back(to_u64(table.image(cert.generator, g).bits()));
    std::vector<std::uint64_t> basis;
    for (const auto& b : tested.basis()) basis.push_back(to_u64(b));
    std::uint64_t v = 0, bad = 0;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 0; i < total; ++i) {
      if (i) v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
      for (auto img : images) bad += std::popcount(v & img) & 1;
    }
    o.require(bad == 0, "completeness n=" + std::to_string(n));
    // The library's exact computation on a sample of codewords.
    CounterRng rng(9000 + n);
    for (int i = 0; i < 200; ++i)
      o.require(exact_rejection(random_codeword(tested, rng), cert, table) == 0.0, "exact completeness");

    // Query bound on words in and out of the code.
    std::size_t max_q = 0;
    for (int i = 0; i < 50; ++i) {
      BitVector w(tested.length());
      w.mutable_words()[0] = rng() & ((std::uint64_t{1} << tested.length()) - 1);
      const auto rep = single_orbit_test(Codeword(kNz, std::move(w)), cert, f, 9100 + i, 200);
      max_q = std::max(max_q, rep.max_queries);
    }
    o.require(max_q <= cert.k, "query bound");
    o.detail << " BCH(" << n << ",1): k=" << cert.k << ", " << total << " codewords x " << images.size()
             << " group elements accepted, max queries " << max_q << ";";

    if (n == 3) {
      const auto rep = soundness_curve(cert, target, f, {}, 0, 0);
      std::size_t cosets = 0;
      double worst = 1;
      for (const auto& p : rep.points) {
        cosets += p.cosets;
        if (p.distance > 0) worst = std::min(worst, p.min_rejection);
      }
      o.require(cosets == (std::size_t{1} << (tested.length() - tested.rank())), "coset count");
      o.require(worst > 0 && rep.alpha_hat > 0, "soundness");
      o.detail << " cosets " << cosets << ", min rejection " << worst << ", alpha_hat " << rep.alpha_hat << ";";
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  auto searches = [](unsigned jobs) {
    SearchOptions opt;
    opt.jobs = jobs;
    std::string s;
    for (unsigned n : {3u, 5u}) s += certificate_string(verify_cyclic_bch(n, 1, 4, opt).search, Field(n)) + "\n";
    s += certificate_string(verify_cyclic_bch(5, 2, 6, opt).search, Field(5)) + "\n";
    for (unsigned n : {3u, 5u}) s += certificate_string(verify_affine_ebch(n, 1, 6, opt).search, Field(n)) + "\n";
    return s;
  };
  const std::string a = searches(1), b = searches(1), c = searches(4);
  o.require(a == b, "repeated searches");
  o.require(a == c, "searches with 4 jobs");

  const Field f(5);
  const LinearCode target = bch({5, 1}, f);
  const auto cert = *find_single_orbit_generator(target, 4, GroupKind::Cyclic, f).certificate;
  CounterRng rng(11000);
  BitVector w(31);
  w.mutable_words()[0] = rng() & 0x7fffffffu;
  const Codeword v(kNz, std::move(w));
  const std::string t1 = tester_string(single_orbit_test(v, cert, f, 42, 20000, true, 1));
  const std::string t2 = tester_string(single_orbit_test(v, cert, f, 42, 20000, true, 1));
  const std::string t3 = tester_string(single_orbit_test(v, cert, f, 42, 20000, true, 4));
  o.require(t1 == t2 && t1 == t3, "seeded tester");
  // Soundness runs on the BCH(5,1) side, whose 64 cosets are enumerable.
  const LinearCode small = dual_bch({5, 1}, f);
  const auto scert = *find_single_orbit_generator(small, small.length(), GroupKind::Cyclic, f).certificate;
  const std::string s1 = soundness_string(soundness_curve(scert, small, f, {1, 2, 3}, 100, 7));
  const std::string s2 = soundness_string(soundness_curve(scert, small, f, {1, 2, 3}, 100, 7));
  o.require(s1 == s2, "seeded soundness");
  o.detail << " 5 searches x3 (jobs 1, 1, 4), tester and soundness reports repeated;";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "trace representation round trip", kLimit1, round_trip},
      {2, "coefficient extraction by character sums", kLimit2, coefficient_extraction},
      {3, "degree universe size 1 + (N-2)/n", kLimit3, universe_size},
      {4, "cyclic single-orbit BCH certificates", kLimit4, cyclic_bch},
      {5, "affine single-orbit eBCH certificates", kLimit5, affine_ebch},
      {6, "orbit-span dichotomy for n = 3", kLimit6, dichotomy},
      {7, "MacWilliams transform against direct enumeration", kLimit7, macwilliams},
      {8, "weight and character-sum link", kLimit8, weight_link},
      {9, "low-weight dual counts within [0.5, 2.0] of C(L,k)/|C|", kLimit9, low_weight_trend},
      {10, "tester completeness, query bound and soundness", kLimit10, tester_contract},
      {11, "determinism of searches and seeded reports", kLimit11, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what() << ";";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit) {
      o.pass = false;
      o.detail << " over time limit;";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %s (%.2f s, limit %.0f s):%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
