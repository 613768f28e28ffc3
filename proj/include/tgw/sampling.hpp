/* Copyright 2026 The tgw Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Random polynomial samples for relation checks.

#ifndef TGW_SAMPLING_HPP_
#define TGW_SAMPLING_HPP_

#include <random>

#include "tgw/ring.hpp"

namespace tgw {

struct SamplingOptions {
  int max_degree = 2;     // per-variable bound on |exponent|
  int max_terms = 3;
  int coeff_bound = 5;    // coefficients drawn from [-bound, bound] \ {0}
};

// Ordinary variables get exponents in [0, max_degree], Laurent ones in
// [-max_degree, max_degree].
template <typename Rng>
Polynomial random_polynomial(const RingPtr& ring, Rng& rng, const SamplingOptions& opts = {}) {
  std::uniform_int_distribution<int> nterms(1, opts.max_terms);
  std::uniform_int_distribution<int> coeff(-opts.coeff_bound, opts.coeff_bound - 1);
  Polynomial p(ring);
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
      int lo = (*ring)[v].invertible ? -opts.max_degree : 0;
      m[v] = std::uniform_int_distribution<int>(lo, opts.max_degree)(rng);
    }
    int c = coeff(rng);
    if (c >= 0) ++c;
    p += Polynomial::term(ring, std::move(m), c);
  }
  return p;
}

}  // namespace tgw

#endif  // TGW_SAMPLING_HPP_
