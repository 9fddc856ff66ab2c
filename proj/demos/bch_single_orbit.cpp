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

// Finds a cyclic single-orbit generator for BCH(5,1), then runs the tester it defines on the
// dual-BCH side: a codeword, a word one flip away, and a random word.

#include <iostream>

#include "orbitcode/orbitcode.hpp"

using namespace orbitcode;

int main() {
  const Field field(5);
  const BchParams params{5, 1, BchFlavor::Cyclic};
  const LinearCode code = bch(params, field);
  std::cout << "BCH(5,1): length " << code.length() << ", rank " << code.rank() << ", min distance "
            << min_distance(code) << "\n";

  const BchOrbitReport r = verify_cyclic_bch(5, 1);
  if (!r.found()) {
    std::cout << "no generator up to weight " << r.k_max << "\n";
    return 1;
  }
  const OrbitCertificate& cert = *r.search.certificate;
  std::cout << "generator " << cert.generator.to_hex() << " (weight " << cert.k << "), orbit span rank "
            << cert.span_rank << "\n";

  // The certificate spans BCH(5,1), so it tests membership in dual-BCH(5,1).
  const LinearCode tested = dual_bch(params, field);
  Codeword word = tested.combination(0b101101);
  std::cout << "codeword:       p_reject = " << exact_rejection(word, cert, field) << "\n";
  word.flip(0);
  std::cout << "one flip:       p_reject = " << exact_rejection(word, cert, field) << "\n";

  CounterRng rng(7);
  BitVector noise(code.length());
  for (std::size_t i = 0; i < noise.size(); ++i)
    if (rng() & 1) noise.set(i);
  const Codeword random_word(DomainKind::Nonzero, noise);
  const TesterReport rep = single_orbit_test(random_word, cert, field, 7, 20000, true);
  std::cout << "random word:    p_reject = " << *rep.exact_rejection << ", Monte Carlo " << rep.empirical_rejection()
            << " +/- " << rep.standard_error() << ", at most " << rep.max_queries << " reads per trial\n";
  return 0;
}
