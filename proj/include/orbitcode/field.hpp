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

#ifndef ORBITCODE_FIELD_HPP
#define ORBITCODE_FIELD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orbitcode/error.hpp"

namespace orbitcode {

/// Element of GF(2^n): bit i is the coefficient of x^i in the residue polynomial.
struct Element {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element operator+(Element a, Element b) { return Element{a.bits ^ b.bits}; }

namespace gf2poly {

// Binary polynomials packed into machine words; bit i = coefficient of x^i.

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return mod(clmul(a, b), m); }

/// Ben-Or irreducibility test; adequate for degrees up to 31.
inline bool is_irreducible(std::uint64_t f) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::uint64_t h = 2;  // x
  for (int i = 1; i <= n / 2; ++i) {
    h = mulmod(h, h, f);
    if (gcd(f, h ^ 2u) != 1) return false;
  }
  return true;
}

}  // namespace gf2poly

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline std::string hex_digits(std::uint64_t value, unsigned bits) {
  const unsigned digits = bits == 0 ? 1 : (bits + 3) / 4;
  std::string out(digits, '0');
  for (unsigned d = 0; d < digits; ++d) out[digits - 1 - d] = "0123456789abcdef"[(value >> (4 * d)) & 0xfu];
  return out;
}

inline std::uint64_t parse_hex(std::string_view s) {
  if (s.empty() || s.size() > 16) throw ParseError("bad hex literal '" + std::string(s) + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    unsigned nibble;
    if (c >= '0' && c <= '9')
      nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      nibble = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      nibble = static_cast<unsigned>(c - 'A' + 10);
    else
      throw ParseError("bad hex literal '" + std::string(s) + "'");
    v = (v << 4) | nibble;
  }
  return v;
}

}  // namespace detail

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

/// Which points of GF(2^n) index the coordinates of a word.
///  - WithZero: <0, w, w^2, ..., w^(N-1) = 1>, length N
///  - Nonzero:  <w, w^2, ..., w^(N-1) = 1>, length N-1
/// so that x -> w*x acts on Nonzero coordinates as a one-step rotation.
enum class DomainKind { WithZero, Nonzero };

inline std::string to_string(DomainKind kind) { return kind == DomainKind::WithZero ? "withzero" : "nonzero"; }

inline DomainKind domain_kind_from_string(std::string_view s) {
  if (s == "withzero") return DomainKind::WithZero;
  if (s == "nonzero") return DomainKind::Nonzero;
  throw ParseError("unknown domain '" + std::string(s) + "' (expected withzero|nonzero)");
}

/// GF(2^n) for 1 <= n <= 24, with the lexicographically smallest irreducible modulus
/// (constant term 1) and the smallest primitive element as generator.
/// Immutable; copies share the lookup tables.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 24;
  static constexpr unsigned kTableThreshold = 20;

  explicit Field(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxDegree)
      throw InvalidArgument("field degree n=" + std::to_string(n) + " outside [1, " + std::to_string(kMaxDegree) +
                            "]");
    modulus_ = smallest_irreducible(n);
    build();
  }

  unsigned degree() const { return n_; }
  /// N = 2^n.
  std::uint64_t order() const { return std::uint64_t{1} << n_; }
  /// N - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return order() - 1; }
  std::uint64_t modulus() const { return modulus_; }
  Element generator() const { return omega_; }
  bool has_tables() const { return static_cast<bool>(tables_); }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }

  bool contains(Element a) const { return (a.bits >> n_) == 0; }

  Element element(std::uint64_t bits) const {
    if (bits >> n_) throw InvalidArgument("value does not fit in GF(2^" + std::to_string(n_) + ")");
    return Element{static_cast<std::uint32_t>(bits)};
  }

  Element add(Element a, Element b) const { return a + b; }

  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (tables_) {
      const auto& t = *tables_;
      std::uint64_t e = std::uint64_t{t.log[a.bits]} + t.log[b.bits];
      if (e >= group_order()) e -= group_order();
      return Element{t.exp[e]};
    }
    return Element{static_cast<std::uint32_t>(gf2poly::mulmod(a.bits, b.bits, modulus_))};
  }

  Element square(Element a) const { return mul(a, a); }
  Element frobenius(Element a) const { return square(a); }

  /// a^e; negative exponents allowed for a != 0.
  Element pow(Element a, std::int64_t e) const {
    if (a.is_zero()) {
      if (e < 0) throw InvalidArgument("zero raised to a negative power");
      return e == 0 ? one() : zero();
    }
    const auto m = static_cast<std::int64_t>(group_order());
    std::int64_t r = e % m;
    if (r < 0) r += m;
    if (tables_) return exp(static_cast<std::uint64_t>(log(a)) * static_cast<std::uint64_t>(r));
    Element result = one();
    Element base = a;
    for (auto k = static_cast<std::uint64_t>(r); k; k >>= 1) {
      if (k & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  Element inv(Element a) const {
    if (a.is_zero()) throw InvalidArgument("inverse of zero");
    return pow(a, static_cast<std::int64_t>(group_order()) - 1);
  }

  /// omega^i, exponent taken mod N-1.
  Element exp(std::uint64_t i) const {
    i %= group_order();
    if (tables_) return Element{tables_->exp[i]};
    return pow_generic(omega_, i);
  }

  /// Discrete log base omega in [0, N-2]; a must be nonzero.
  std::uint32_t log(Element a) const {
    if (a.is_zero()) throw InvalidArgument("log of zero");
    if (tables_) return tables_->log[a.bits];
    return bsgs_log(a);
  }

  /// Trace(a) = a + a^2 + ... + a^(2^(n-1)), evaluated through the precomputed GF(2)-linear
  /// form (mask bit i = Trace(x^i)).
  bool trace(Element a) const { return std::popcount(a.bits & trace_mask_) & 1; }

  /// Same value via the literal sum of the n Frobenius images.
  bool trace_by_frobenius(Element a) const {
    Element acc = zero();
    Element term = a;
    for (unsigned i = 0; i < n_; ++i) {
      acc = acc + term;
      term = frobenius(term);
    }
    if (acc.bits > 1) throw Error("trace left the prime field; modulus is not irreducible");
    return acc.bits == 1;
  }

  std::uint32_t trace_mask() const { return trace_mask_; }

  /// Domain points in coordinate order; see DomainKind.
  std::vector<Element> enumerate_domain(bool include_zero) const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(group_order() + (include_zero ? 1 : 0)));
    if (include_zero) out.push_back(zero());
    Element x = omega_;
    for (std::uint64_t i = 1; i <= group_order(); ++i) {
      out.push_back(x);
      x = mul(x, omega_);
    }
    return out;
  }

  std::vector<Element> enumerate_domain(DomainKind kind) const {
    return enumerate_domain(kind == DomainKind::WithZero);
  }

  std::size_t domain_length(DomainKind kind) const {
    return static_cast<std::size_t>(kind == DomainKind::WithZero ? order() : group_order());
  }

  /// Coordinate index of point x in the given domain ordering.
  std::size_t index_of(Element x, DomainKind kind) const {
    if (kind == DomainKind::WithZero) {
      if (x.is_zero()) return 0;
      return 1 + nonzero_index(x);
    }
    if (x.is_zero()) throw InvalidArgument("zero is not a coordinate of the nonzero domain");
    return nonzero_index(x);
  }

  /// Domain point at coordinate index i.
  Element point(std::size_t i, DomainKind kind) const {
    if (kind == DomainKind::WithZero) return i == 0 ? zero() : exp(i);
    return exp(i + 1);
  }

  std::string to_hex(Element a) const { return detail::hex_digits(a.bits, n_); }
  Element from_hex(std::string_view s) const { return element(detail::parse_hex(s)); }
  std::string modulus_hex() const { return detail::hex_digits(modulus_, n_ + 1); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.omega_ == b.omega_;
  }

  static std::uint64_t smallest_irreducible(unsigned n) {
    const std::uint64_t lo = (std::uint64_t{1} << n) | 1u;
    const std::uint64_t hi = std::uint64_t{1} << (n + 1);
    for (std::uint64_t f = lo; f < hi; f += 2)
      if (gf2poly::is_irreducible(f)) return f;
    throw Error("no irreducible polynomial of degree " + std::to_string(n));
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Element a) const {
    if (a.is_zero()) throw InvalidArgument("order of zero");
    std::uint64_t order = group_order();
    for (auto p : detail::prime_factors(group_order()))
      while (order % p == 0 && pow_generic(a, order / p) == one()) order /= p;
    return order;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = omega^i, 0 <= i < N-1
    std::vector<std::uint32_t> log;  // log[exp[i]] = i
  };

  Element pow_generic(Element a, std::uint64_t e) const {
    std::uint64_t result = 1;
    std::uint64_t base = a.bits;
    for (; e; e >>= 1) {
      if (e & 1u) result = gf2poly::mulmod(result, base, modulus_);
      base = gf2poly::mulmod(base, base, modulus_);
    }
    return Element{static_cast<std::uint32_t>(result)};
  }

  void build() {
    const auto factors = detail::prime_factors(group_order());
    omega_ = one();
    for (std::uint64_t g = 1; g < order(); ++g) {
      const Element cand{static_cast<std::uint32_t>(g)};
      bool primitive = true;
      for (auto p : factors)
        if (pow_generic(cand, group_order() / p) == one()) {
          primitive = false;
          break;
        }
      if (primitive) {
        omega_ = cand;
        break;
      }
    }

    if (n_ <= kTableThreshold) {
      auto t = std::make_shared<Tables>();
      const auto m = static_cast<std::size_t>(group_order());
      t->exp.resize(m);
      t->log.assign(static_cast<std::size_t>(order()), 0);
      std::uint64_t x = 1;
      for (std::size_t i = 0; i < m; ++i) {
        t->exp[i] = static_cast<std::uint32_t>(x);
        t->log[x] = static_cast<std::uint32_t>(i);
        x = gf2poly::mulmod(x, omega_.bits, modulus_);
      }
      tables_ = std::move(t);
    } else {
      const auto m = static_cast<std::uint64_t>(1) << ((n_ + 1) / 2);
      auto baby = std::make_shared<std::unordered_map<std::uint32_t, std::uint32_t>>();
      baby->reserve(static_cast<std::size_t>(m));
      std::uint64_t x = 1;
      for (std::uint64_t j = 0; j < m; ++j) {
        baby->emplace(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(j));
        x = gf2poly::mulmod(x, omega_.bits, modulus_);
      }
      baby_steps_ = std::move(baby);
      giant_stride_ = m;
    }

    trace_mask_ = 0;
    for (unsigned i = 0; i < n_; ++i)
      if (trace_by_frobenius(Element{std::uint32_t{1} << i})) trace_mask_ |= std::uint32_t{1} << i;
  }

  std::uint32_t bsgs_log(Element a) const {
    // omega^(-m), stepping a * omega^(-m*i) until it lands among the baby steps.
    const Element giant = pow_generic(omega_, group_order() - (giant_stride_ % group_order()));
    std::uint64_t y = a.bits;
    for (std::uint64_t i = 0; i * giant_stride_ <= group_order(); ++i) {
      auto it = baby_steps_->find(static_cast<std::uint32_t>(y));
      if (it != baby_steps_->end())
        return static_cast<std::uint32_t>((i * giant_stride_ + it->second) % group_order());
      y = gf2poly::mulmod(y, giant.bits, modulus_);
    }
    throw Error("discrete log failed");
  }

  std::size_t nonzero_index(Element x) const {
    const std::uint64_t l = log(x);
    return static_cast<std::size_t>((l + group_order() - 1) % group_order());
  }

  unsigned n_;
  std::uint64_t modulus_ = 0;
  Element omega_{};
  std::uint32_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
  std::shared_ptr<const std::unordered_map<std::uint32_t, std::uint32_t>> baby_steps_;
  std::uint64_t giant_stride_ = 0;
};

}  // namespace orbitcode

#endif  // ORBITCODE_FIELD_HPP
