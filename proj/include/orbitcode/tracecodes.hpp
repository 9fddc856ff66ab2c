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

#ifndef ORBITCODE_TRACECODES_HPP
#define ORBITCODE_TRACECODES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/bitvec.hpp"
#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/krawtchouk.hpp"
#include "orbitcode/linalg2.hpp"

namespace orbitcode {

// Degrees are exponents 0..N-1 of x over GF(2^n). Trace(x^d) = Trace(x^(2d mod N-1)), so the
// middle degrees 1..N-2 fall into doubling orbits, each named by its least member. Degree 0 is
// the constant on the with-zero domain; N-1 is x^(N-1), which is the constant on the nonzero
// domain and the indicator of the nonzero points on the with-zero domain.

using Degree = std::uint32_t;

inline Degree top_degree(unsigned n) { return static_cast<Degree>((std::uint64_t{1} << n) - 1); }

inline void check_degree_width(unsigned n) {
  if (n < 1 || n > Field::kMaxDegree) throw InvalidArgument("extension degree n=" + std::to_string(n) + " out of range");
}

/// 2d mod (N-1): a one-bit cyclic rotation of the n-bit representation.
inline Degree double_mod(Degree d, unsigned n) {
  const Degree mask = top_degree(n);
  return static_cast<Degree>(((d << 1) | (d >> (n - 1))) & mask);
}

struct DegreeOrbit {
  Degree representative = 0;
  std::vector<Degree> members;  // sorted, distinct
};

/// The doubling orbit {d, 2d, 4d, ...} mod N-1 of a middle degree 1 <= d <= N-2.
inline DegreeOrbit orb(Degree d, unsigned n) {
  check_degree_width(n);
  if (d < 1 || d >= top_degree(n))
    throw InvalidArgument("degree " + std::to_string(d) + " outside [1, N-2] for n=" + std::to_string(n));
  DegreeOrbit o;
  Degree cur = d;
  for (unsigned j = 0; j < n; ++j) {
    o.members.push_back(cur);
    cur = double_mod(cur, n);
  }
  std::sort(o.members.begin(), o.members.end());
  o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
  o.representative = o.members.front();
  return o;
}

inline Degree min_orb(Degree d, unsigned n) {
  Degree best = d;
  Degree cur = d;
  for (unsigned j = 1; j < n; ++j) {
    cur = double_mod(cur, n);
    best = std::min(best, cur);
  }
  return best;
}

/// Canonical name of any degree in [0, N-1]: 0 and N-1 are fixed, middle degrees map to min-orb.
inline Degree canonical_degree(Degree d, unsigned n) {
  if (d > top_degree(n)) throw InvalidArgument("degree " + std::to_string(d) + " exceeds N-1");
  if (d == 0 || d == top_degree(n)) return d;
  return min_orb(d, n);
}

inline bool is_canonical_degree(Degree d, unsigned n) {
  return d <= top_degree(n) && canonical_degree(d, n) == d;
}

/// e is in the shadow of d: every binary digit of e is at most the matching digit of d.
inline constexpr bool shadow_leq(std::uint64_t e, std::uint64_t d) { return (e & d) == e; }

/// A set of canonical degrees (optionally including 0) for a fixed n.
class DegreeSet {
 public:
  explicit DegreeSet(unsigned n) : n_(n) { check_degree_width(n); }

  DegreeSet(unsigned n, std::initializer_list<Degree> degrees) : DegreeSet(n, std::vector<Degree>(degrees)) {}

  DegreeSet(unsigned n, std::vector<Degree> degrees) : n_(n), degrees_(std::move(degrees)) {
    check_degree_width(n);
    for (auto d : degrees_)
      if (!is_canonical_degree(d, n))
        throw InvalidArgument("degree " + std::to_string(d) + " is not a canonical representative for n=" +
                              std::to_string(n) + (d > top_degree(n) ? " (exceeds N-1)" : ""));
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
  }

  /// Canonicalizes each input degree first.
  static DegreeSet canonicalized(unsigned n, const std::vector<Degree>& raw) {
    std::vector<Degree> out;
    out.reserve(raw.size());
    for (auto d : raw) out.push_back(canonical_degree(d, n));
    return DegreeSet(n, std::move(out));
  }

  unsigned n() const { return n_; }
  Degree top() const { return top_degree(n_); }
  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  const std::vector<Degree>& degrees() const { return degrees_; }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }

  bool contains(Degree d) const { return std::binary_search(degrees_.begin(), degrees_.end(), d); }

  /// Degrees other than 0 and N-1.
  std::vector<Degree> middle() const {
    std::vector<Degree> out;
    for (auto d : degrees_)
      if (d != 0 && d != top()) out.push_back(d);
    return out;
  }

  DegreeSet with(Degree d) const {
    auto v = degrees_;
    v.push_back(d);
    return DegreeSet(n_, std::move(v));
  }

  DegreeSet without(Degree d) const {
    auto v = degrees_;
    v.erase(std::remove(v.begin(), v.end(), d), v.end());
    return DegreeSet(n_, std::move(v));
  }

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  unsigned n_;
  std::vector<Degree> degrees_;
};

/// The universe {min-orb(d) : 1 <= d <= N-2} together with N-1.
/// For prime n its size is 1 + (N-2)/n; composite n is accepted but orbits may be short.
inline DegreeSet canonical_degree_universe(unsigned n) {
  check_degree_width(n);
  const Degree top = top_degree(n);
  std::vector<Degree> out;
  for (Degree d = 1; d < top; ++d)
    if (min_orb(d, n) == d) out.push_back(d);
  out.push_back(top);
  return DegreeSet(n, std::move(out));
}

/// Smallest superset closed under taking (canonicalized) shadows.
inline DegreeSet shadow_closure(const DegreeSet& degrees) {
  const unsigned n = degrees.n();
  std::vector<Degree> result(degrees.begin(), degrees.end());
  std::vector<bool> seen(static_cast<std::size_t>(top_degree(n)) + 1, false);
  for (auto d : result) seen[d] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    const Degree d = result[i];
    // All submasks e of d, including 0 and d itself.
    for (Degree e = d;; e = (e - 1) & d) {
      const Degree c = canonical_degree(e, n);
      if (!seen[c]) {
        seen[c] = true;
        result.push_back(c);
      }
      if (e == 0) break;
    }
  }
  return DegreeSet(n, std::move(result));
}

/// alpha_0 + sum_d alpha_d x^d + alpha_top x^(N-1), evaluated through Trace. Middle coefficients
/// live in GF(2^n); the constant and top coefficients are bits. c0 only exists on the with-zero
/// domain.
struct TracePolynomial {
  DomainKind kind = DomainKind::Nonzero;
  unsigned n = 1;
  std::map<Degree, Element> coeffs;  // canonical middle degrees, nonzero coefficients only
  bool c0 = false;
  bool c_top = false;

  /// Degrees with nonzero coefficient.
  DegreeSet support() const {
    std::vector<Degree> d;
    if (c0) d.push_back(0);
    for (const auto& [deg, c] : coeffs)
      if (!c.is_zero()) d.push_back(deg);
    if (c_top) d.push_back(top_degree(n));
    return DegreeSet(n, std::move(d));
  }

  bool is_zero() const {
    if (c0 || c_top) return false;
    return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_zero(); });
  }

  void set(Degree d, Element c) {
    if (c.is_zero())
      coeffs.erase(d);
    else
      coeffs[d] = c;
  }

  void validate(const Field& field) const {
    if (field.degree() != n) throw DomainMismatch("trace polynomial and field disagree on n");
    if (kind == DomainKind::Nonzero && c0)
      throw InvalidArgument("the constant on the nonzero domain is carried by x^(N-1), not degree 0");
    for (const auto& [d, c] : coeffs) {
      if (d == 0 || d == top_degree(n) || !is_canonical_degree(d, n))
        throw InvalidArgument("coefficient at non-canonical middle degree " + std::to_string(d));
      if (!field.contains(c)) throw InvalidArgument("coefficient outside the field");
    }
  }

  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    auto nonzero = [](const std::map<Degree, Element>& m) {
      std::map<Degree, Element> out;
      for (const auto& [d, c] : m)
        if (!c.is_zero()) out.emplace(d, c);
      return out;
    };
    return a.kind == b.kind && a.n == b.n && a.c0 == b.c0 && a.c_top == b.c_top &&
           nonzero(a.coeffs) == nonzero(b.coeffs);
  }
};

/// The word x -> Trace(p(x)) in domain order. The constant and top bits enter as bits, which is
/// Trace of the same terms whenever n is odd.
inline Codeword eval_trace_poly(const TracePolynomial& p, const Field& field) {
  p.validate(field);
  const std::size_t len = field.domain_length(p.kind);
  const std::uint64_t m = field.group_order();
  Codeword out(p.kind, len);
  for (std::size_t i = 0; i < len; ++i) {
    const Element x = field.point(i, p.kind);
    bool bit = p.c0;
    if (x.is_zero()) {
      out.set(i, bit);
      continue;
    }
    bit ^= p.c_top;
    const std::uint64_t lx = field.log(x);
    for (const auto& [d, c] : p.coeffs) bit ^= field.trace(field.mul(c, field.exp((lx * d) % m)));
    out.set(i, bit);
  }
  return out;
}

/// Trace(beta * x^d) for a middle degree d.
inline Codeword trace_monomial_word(Element beta, Degree d, DomainKind kind, const Field& field) {
  TracePolynomial p{kind, field.degree(), {}, false, false};
  if (d == 0 || d == top_degree(field.degree()) || !is_canonical_degree(d, field.degree())) {
    const std::size_t len = field.domain_length(kind);
    Codeword out(kind, len);
    for (std::size_t i = 0; i < len; ++i) {
      const Element x = field.point(i, kind);
      out.set(i, field.trace(field.mul(beta, field.pow(x, d))));
    }
    return out;
  }
  p.set(d, beta);
  return eval_trace_poly(p, field);
}

/// Generating words of C(D): Trace(x^j x^d) over the polynomial basis for every middle d,
/// the constant word for 0, and x^(N-1) for N-1.
inline std::vector<Codeword> trace_code_generators(const DegreeSet& degrees, DomainKind kind, const Field& field) {
  if (degrees.n() != field.degree()) throw DomainMismatch("degree set and field disagree on n");
  const unsigned n = field.degree();
  const std::size_t len = field.domain_length(kind);
  std::vector<Codeword> gens;
  for (auto d : degrees) {
    if (d == 0) {
      if (kind == DomainKind::Nonzero)
        throw InvalidArgument("degree 0 is not canonical on the nonzero domain; the constant there is degree N-1");
      Codeword one(kind, len);
      for (std::size_t i = 0; i < len; ++i) one.set(i);
      gens.push_back(std::move(one));
    } else if (d == top_degree(n)) {
      TracePolynomial p{kind, n, {}, false, true};
      gens.push_back(eval_trace_poly(p, field));
    } else {
      for (unsigned j = 0; j < n; ++j) {
        TracePolynomial p{kind, n, {}, false, false};
        p.set(d, Element{std::uint32_t{1} << j});
        gens.push_back(eval_trace_poly(p, field));
      }
    }
  }
  return gens;
}

/// C_N(D) (with-zero domain) or C_{N-1}(D) (nonzero domain).
inline LinearCode code_from_degrees(const DegreeSet& degrees, DomainKind kind, const Field& field) {
  return span(kind, field.domain_length(kind), trace_code_generators(degrees, kind, field));
}

/// Recovers trace-polynomial coefficients by the character sum
///   sum_{a in F*} Trace(a^-e) w(a x) = Trace(c_e x^e),
/// read at x = 1, w, ..., w^(n-1) and solved for c_e; the constant and top bits come from the
/// plain sum over F*. Requires an odd prime n (unique representation).
class CoefficientExtractor {
 public:
  CoefficientExtractor(const Field& field, DomainKind kind) : field_(field), kind_(kind) {
    const unsigned n = field.degree();
    if (n < 3 || !is_prime(n))
      throw InvalidArgument("unique trace representation needs an odd prime n; got n=" + std::to_string(n));
    const std::size_t m = static_cast<std::size_t>(field.group_order());
    for (auto e : canonical_degree_universe(n).middle()) {
      Slot slot;
      slot.degree = e;
      slot.kernel = BitVector(m);
      for (std::size_t a = 0; a < m; ++a) {
        const Element alpha = field.point(a, DomainKind::Nonzero);
        slot.kernel.set(a, field.trace(field.pow(alpha, -static_cast<std::int64_t>(e))));
      }
      // rows j: Trace(x^i * w^(e j)) as a function of coefficient bit i
      std::vector<std::uint32_t> rows(n, 0);
      for (unsigned j = 0; j < n; ++j) {
        const Element pt = field.exp(static_cast<std::uint64_t>(e) * j);
        for (unsigned i = 0; i < n; ++i)
          if (field.trace(field.mul(Element{std::uint32_t{1} << i}, pt))) rows[j] |= std::uint32_t{1} << i;
      }
      slot.solve = invert(rows, n);
      index_.emplace(e, slots_.size());
      slots_.push_back(std::move(slot));
    }
  }

  const Field& field() const { return field_; }
  DomainKind kind() const { return kind_; }

  /// The word sum_{a in F*} Trace(a^-e) w(a x) for every domain point x.
  Codeword orbit_component(const Codeword& w, Degree e) const {
    check(w);
    const Slot& slot = slot_for(e);
    const BitVector ws = nonzero_part(w);
    const std::size_t len = w.length();
    Codeword out(kind_, len);
    for (std::size_t i = 0; i < len; ++i) {
      const Element x = field_.point(i, kind_);
      if (x.is_zero()) {
        out.set(i, w.get(0) && slot.kernel.parity());
        continue;
      }
      // x = w^s; a*x sits at nonzero coordinate (a + s) mod (N-1).
      const std::size_t s = field_.log(x);
      out.set(i, slot.kernel.dot(ws.rotated(s)));
    }
    return out;
  }

  /// The coefficient c_e of the unique trace polynomial of w.
  Element coefficient(const Codeword& w, Degree e) const {
    check(w);
    const BitVector ws = nonzero_part(w);
    std::vector<BitVector> shifts;
    for (unsigned j = 0; j < field_.degree(); ++j) shifts.push_back(ws.rotated(j));
    return solve(slot_for(e), shifts);
  }

  TracePolynomial poly_from_word(const Codeword& w) const {
    check(w);
    const unsigned n = field_.degree();
    const BitVector ws = nonzero_part(w);
    std::vector<BitVector> shifts;
    shifts.reserve(n);
    for (unsigned j = 0; j < n; ++j) shifts.push_back(ws.rotated(j));
    TracePolynomial p{kind_, n, {}, false, false};
    for (const auto& slot : slots_) p.set(slot.degree, solve(slot, shifts));
    const bool nonzero_sum = ws.parity();  // sum over a in F* of w(a x) at any x != 0
    if (kind_ == DomainKind::Nonzero) {
      p.c_top = nonzero_sum;
    } else {
      p.c0 = w.get(0);
      p.c_top = nonzero_sum != p.c0;
    }
    return p;
  }

 private:
  struct Slot {
    Degree degree = 0;
    BitVector kernel;                 // Trace(a^-e) over the nonzero coordinates
    std::vector<std::uint32_t> solve;  // inverse of the evaluation matrix, row i -> bit i of c_e
  };

  void check(const Codeword& w) const {
    if (w.kind() != kind_ || w.length() != field_.domain_length(kind_))
      throw DomainMismatch("word does not live on the extractor's domain");
  }

  const Slot& slot_for(Degree e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw InvalidArgument("degree " + std::to_string(e) + " is not a canonical middle degree");
    return slots_[it->second];
  }

  BitVector nonzero_part(const Codeword& w) const {
    if (kind_ == DomainKind::Nonzero) return w.bits();
    const std::size_t m = static_cast<std::size_t>(field_.group_order());
    BitVector out(m);
    for (std::size_t i = 0; i < m; ++i)
      if (w.get(i + 1)) out.set(i);
    return out;
  }

  Element solve(const Slot& slot, const std::vector<BitVector>& shifts) const {
    std::uint32_t y = 0;
    for (std::size_t j = 0; j < shifts.size(); ++j)
      if (slot.kernel.dot(shifts[j])) y |= std::uint32_t{1} << j;
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < slot.solve.size(); ++i)
      if (std::popcount(slot.solve[i] & y) & 1) c |= std::uint32_t{1} << i;
    return Element{c};
  }

  static std::vector<std::uint32_t> invert(std::vector<std::uint32_t> a, unsigned n) {
    std::vector<std::uint32_t> inv(n);
    for (unsigned i = 0; i < n; ++i) inv[i] = std::uint32_t{1} << i;
    for (unsigned col = 0; col < n; ++col) {
      unsigned pivot = col;
      while (pivot < n && !((a[pivot] >> col) & 1u)) ++pivot;
      if (pivot == n) throw Error("trace evaluation matrix is singular");
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      for (unsigned r = 0; r < n; ++r)
        if (r != col && ((a[r] >> col) & 1u)) {
          a[r] ^= a[col];
          inv[r] ^= inv[col];
        }
    }
    // a is now the identity: inv * A = I, so c = inv * y with y = A c.
    return inv;
  }

  Field field_;
  DomainKind kind_;
  std::vector<Slot> slots_;
  std::map<Degree, std::size_t> index_;
};

/// The unique trace polynomial over the full universe whose evaluation is w.
inline TracePolynomial poly_from_word(const Codeword& w, const Field& field) {
  return CoefficientExtractor(field, w.kind()).poly_from_word(w);
}

/// The degree set D with code_from_degrees(D) == code; throws NotInvariant when no such D exists.
inline DegreeSet degrees_of_code(const LinearCode& code, const Field& field) {
  if (code.length() != field.domain_length(code.kind())) throw DomainMismatch("code length does not match the field");
  const CoefficientExtractor extractor(field, code.kind());
  std::vector<Degree> all;
  for (const auto& w : code.basis_words()) {
    const auto s = extractor.poly_from_word(w).support();
    all.insert(all.end(), s.begin(), s.end());
  }
  DegreeSet d(field.degree(), std::move(all));
  if (code_from_degrees(d, code.kind(), field) != code)
    throw NotInvariant("code is not spanned by the trace monomials of its own degrees; it is not group-invariant");
  return d;
}

/// floor(N^(1 - 1/t)) = floor(2^(n(t-1)/t)), exact.
inline std::uint64_t sparse_degree_bound(unsigned n, unsigned t) {
  if (t == 0) throw InvalidArgument("sparsity parameter t must be positive");
  const BigInt target = BigInt(1) << (static_cast<unsigned>(n) * (t - 1));
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << n;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (boost::multiprecision::pow(BigInt(mid), t) <= target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

struct SparsityReport {
  DegreeSet degrees;
  unsigned t = 0;
  bool affine = false;
  std::size_t sparse_count = 0;  // |D| without 0 and N-1
  std::optional<std::uint64_t> degree_bound;
  Degree max_degree = 0;
  bool shadow_closed = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// |D| <= t, and for the affine case: every middle degree at most floor(N^(1-1/t)), binary
/// weight at most t, and D shadow-closed.
inline SparsityReport check_sparsity_bounds(const DegreeSet& degrees, unsigned t, bool affine) {
  SparsityReport r{degrees, t, affine};
  if (t == 0) throw InvalidArgument("sparsity parameter t must be positive");
  const auto mid = degrees.middle();
  r.sparse_count = mid.size();
  r.max_degree = mid.empty() ? 0 : mid.back();
  if (r.sparse_count > t)
    r.violations.push_back("|D| = " + std::to_string(r.sparse_count) + " exceeds t = " + std::to_string(t));
  if (affine) {
    r.degree_bound = sparse_degree_bound(degrees.n(), t);
    for (auto d : mid) {
      if (d > *r.degree_bound)
        r.violations.push_back("degree " + std::to_string(d) + " exceeds floor(N^(1-1/t)) = " +
                               std::to_string(*r.degree_bound));
      if (static_cast<unsigned>(std::popcount(d)) > t)
        r.violations.push_back("degree " + std::to_string(d) + " has binary weight " +
                               std::to_string(std::popcount(d)) + " > t");
    }
    r.shadow_closed = shadow_closure(degrees) == degrees;
    if (!r.shadow_closed) r.violations.push_back("degree set is not shadow-closed");
  }
  return r;
}

inline SparsityReport check_sparsity_bounds(const LinearCode& code, unsigned t, const Field& field) {
  return check_sparsity_bounds(degrees_of_code(code, field), t, code.kind() == DomainKind::WithZero);
}

}  // namespace orbitcode

#endif  // ORBITCODE_TRACECODES_HPP
