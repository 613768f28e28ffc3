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

// Generators and oracles shared by the test binaries.

#ifndef TGW_TESTS_SUPPORT_HPP_
#define TGW_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tgw/tgw.hpp"
#include "tgw/sampling.hpp"

namespace tgw::testing {

using Rng = std::mt19937_64;

inline RingPtr laurent_ring(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, true});
  return RingSpec::make(std::move(vars));
}

inline RingPtr polynomial_ring(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, false});
  return RingSpec::make(std::move(vars));
}

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

// Point evaluation straight from the term map. Nonzero point entries only.
inline Rational eval(const Polynomial& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t v = 0; v < m.size(); ++v) {
      for (int k = 0; k < m[v]; ++k) term *= point[v];
      for (int k = 0; k > m[v]; --k) term /= point[v];
    }
    total += term;
  }
  return total;
}

inline std::vector<Rational> random_point(const RingPtr& ring, Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1);
  std::vector<Rational> out;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

// Point evaluation of a substitution image: phi(x)(point) for every generator x.
inline std::vector<Rational> pull_point(const Substitution& phi, const std::vector<Rational>& point) {
  std::vector<Rational> out;
  for (std::size_t v = 0; v < phi.source()->size(); ++v) out.push_back(eval(*phi.image(v), point));
  return out;
}

inline Rational random_scalar(Rng& rng) {
  static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                     Rational(3), Rational(-2, 3), Rational(5, 4)};
  return choices[std::uniform_int_distribution<int>(0, 6)(rng)];
}

inline Rational random_sign(Rng& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? Rational(1) : Rational(-1);
}

// Ring Q[a1^+-1,...,am^+-1, t1^+-1,...,tn^+-1] with
//   sigma_i(a_k) = s_ik a_k,  s_ik = +-1,
//   sigma_i(t_j) = c_ij M_ij t_j,  M_ij a monomial in the a's,
//   t_j = t_j.
// The s_ik are drawn until the sigma_i commute. With probability 1/2 a pair
// (i,j) gets M_ji = M_ij^-1 and mu_ji chosen to make the pair relation hold.
struct MonomialDatum {
  TgwDatum datum;
  std::size_t pairs_forced = 0;
};

inline MonomialDatum random_monomial_datum(std::size_t n, Rng& rng) {
  const std::size_t m = n;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) names.push_back("a" + std::to_string(k + 1));
  for (std::size_t j = 0; j < n; ++j) names.push_back("t" + std::to_string(j + 1));
  RingPtr ring = laurent_ring(names);
  std::uniform_int_distribution<int> expo(-1, 1), coin(0, 1);

  for (;;) {
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(m));
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
    std::vector<std::vector<std::vector<int>>> M(n, std::vector<std::vector<int>>(n, std::vector<int>(m)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) s[i][k] = random_sign(rng);
      for (std::size_t j = 0; j < n; ++j) {
        c[i][j] = random_scalar(rng);
        for (std::size_t k = 0; k < m; ++k) M[i][j][k] = expo(rng);
      }
    }
    std::vector<std::vector<bool>> forced(n, std::vector<bool>(n, false));
    std::size_t forced_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng)) {
          for (std::size_t k = 0; k < m; ++k) M[j][i][k] = -M[i][j][k];
          forced[i][j] = true;
          ++forced_count;
        }
      }
    }
    auto chi = [&](std::size_t i, const std::vector<int>& mono) {
      Rational out = 1;
      for (std::size_t k = 0; k < m; ++k) {
        if (mono[k] % 2 != 0) out *= s[i][k];
      }
      return out;
    };

    std::vector<RingAutomorphism> sigma;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::optional<Polynomial>> fwd, bwd;
      for (std::size_t k = 0; k < m; ++k) {
        fwd.emplace_back(Polynomial::variable(ring, k) * s[i][k]);
        bwd.emplace_back(Polynomial::variable(ring, k) * s[i][k]);
      }
      for (std::size_t j = 0; j < n; ++j) {
        Monomial mono(ring->size());
        for (std::size_t k = 0; k < m; ++k) mono[k] = M[i][j][k];
        mono[m + j] = 1;
        fwd.emplace_back(Polynomial::term(ring, mono, c[i][j]));
        // sigma_i^-1(t_j) = c_ij^-1 sigma_i^-1(M_ij)^-1 t_j, and sigma_i^-1 = sigma_i on the a's.
        Monomial inv(ring->size());
        for (std::size_t k = 0; k < m; ++k) inv[k] = -M[i][j][k];
        inv[m + j] = 1;
        bwd.emplace_back(Polynomial::term(ring, inv, 1 / (c[i][j] * chi(i, M[i][j]))));
      }
      sigma.emplace_back(Substitution(ring, ring, std::move(fwd)), Substitution(ring, ring, std::move(bwd)));
    }

    std::vector<Polynomial> t;
    for (std::size_t j = 0; j < n; ++j) t.push_back(Polynomial::variable(ring, m + j));

    ParameterMatrix mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) mu.set(i, j, random_scalar(rng));
      }
    }
    // sigma_i sigma_j(t_i t_j) = c_ji chi_i(M_ji) c_ii M_ii M_ji t_i * c_jj chi_i(M_jj) c_ij M_jj M_ij t_j
    // against mu_ij mu_ji c_ii M_ii t_i c_jj M_jj t_j.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!forced[i][j]) continue;
        Rational product = c[j][i] * chi(i, M[j][i]) * chi(i, M[j][j]) * c[i][j];
        mu.set(j, i, product / mu(i, j));
      }
    }

    TgwDatum d(ring, std::move(sigma), std::move(t), std::move(mu));
    if (validate_datum(d).ok()) return {std::move(d), forced_count};
  }
}

// Quantum torus on n invertible generators: sigma_i(t_j) = q_ij t_j for
// i != j, sigma_i(t_i) = t_i, mu_ij mu_ji = q_ij q_ji. Consistent.
inline TgwDatum quantum_torus(std::size_t n, Rng& rng) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("t" + std::to_string(j + 1));
  RingPtr ring = laurent_ring(names);
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) q[i][j] = random_scalar(rng);
    }
  }
  std::vector<RingAutomorphism> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::optional<Polynomial>> fwd, bwd;
    for (std::size_t j = 0; j < n; ++j) {
      fwd.emplace_back(Polynomial::variable(ring, j) * q[i][j]);
      bwd.emplace_back(Polynomial::variable(ring, j) * (1 / q[i][j]));
    }
    sigma.emplace_back(Substitution(ring, ring, std::move(fwd)), Substitution(ring, ring, std::move(bwd)));
  }
  std::vector<Polynomial> t;
  for (std::size_t j = 0; j < n; ++j) t.push_back(Polynomial::variable(ring, j));
  ParameterMatrix mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational m = random_scalar(rng);
      mu.set(i, j, m);
      mu.set(j, i, q[i][j] * q[j][i] / m);
    }
  }
  return TgwDatum(ring, std::move(sigma), std::move(t), std::move(mu));
}

inline Word random_word(std::size_t n, std::size_t max_len, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), idx(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) w.push_back({idx(rng), coin(rng) ? 1 : -1});
  return w;
}

inline GroupElement random_degree(std::size_t n, int bound, Rng& rng) {
  std::uniform_int_distribution<int> comp(-bound, bound);
  GroupElement g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = comp(rng);
  return g;
}

inline Fraction random_fraction(const RingPtr& ring, Rng& rng) {
  SamplingOptions opts;
  opts.max_degree = 1;
  opts.max_terms = 2;
  opts.coeff_bound = 3;
  Polynomial num = random_polynomial(ring, rng, opts);
  while (num.is_zero()) num = random_polynomial(ring, rng, opts);
  if (std::uniform_int_distribution<int>(0, 2)(rng) != 0) return Fraction(num);
  Polynomial den = random_polynomial(ring, rng, opts);
  while (den.is_zero()) den = random_polynomial(ring, rng, opts);
  return Fraction(num, den);
}

inline CrossedElement random_element(const AlgebraPtr& algebra, std::size_t max_support, int bound,
                                     Rng& rng) {
  const std::size_t n = algebra->degree();
  CrossedElement::Terms terms;
  for (std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_support)(rng); k > 0; --k) {
    terms.insert_or_assign(random_degree(n, bound, rng), random_fraction(algebra->datum().ring_ptr(), rng));
  }
  return CrossedElement(algebra, std::move(terms));
}

// Sum over letter pairs p < q of sign_p * sign_q where w[p] = X_hi^{+-1}
// and w[q] = X_lo^{+-1}.
inline long signed_inversions(const Word& w, std::size_t lo, std::size_t hi) {
  long total = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].index != hi) continue;
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (w[q].index == lo) total += w[p].sign * w[q].sign;
    }
  }
  return total;
}

}  // namespace tgw::testing

#endif  // TGW_TESTS_SUPPORT_HPP_
