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

#ifndef ORBITCODE_RNG_HPP
#define ORBITCODE_RNG_HPP

#include <cstdint>

namespace orbitcode {

/// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based generator: the i-th draw of stream s under seed k depends only on (k, s, i),
/// so work split across threads reproduces the sequential stream exactly.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type at(std::uint64_t index) const { return mix64(key_ + index * 0x9e3779b97f4a7c15ull); }
  result_type operator()() { return at(counter_++); }

  /// Uniform integer in [0, bound), bound > 0 (rejection sampling, no modulo bias).
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x < limit) return x % bound;
    }
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace orbitcode

#endif  // ORBITCODE_RNG_HPP
