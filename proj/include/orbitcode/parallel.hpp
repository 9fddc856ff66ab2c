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

#ifndef ORBITCODE_PARALLEL_HPP
#define ORBITCODE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace orbitcode {

/// Worker count for a jobs request; 0 means one per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(worker, begin, end) over [0, count) split into contiguous chunks, one per worker.
/// Chunk boundaries depend only on count and the worker count.
template <typename Fn>
void parallel_chunks(std::uint64_t count, unsigned jobs, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
}

}  // namespace orbitcode

#endif  // ORBITCODE_PARALLEL_HPP
