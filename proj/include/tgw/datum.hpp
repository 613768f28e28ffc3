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

// Twisted generalized Weyl data (R, sigma, t) together with a parameter
// matrix mu, and the checks that decide whether the associated algebra is
// consistent.
//
// Indices are 0-based throughout the C++ interface. Text and JSON formats
// use 1-based indices.

#ifndef TGW_DATUM_HPP_
#define TGW_DATUM_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgw/fraction.hpp"
#include "tgw/ring.hpp"

namespace tgw {

// Element of Z^n.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::size_t n) : components_(n, 0) {}
  explicit GroupElement(std::vector<std::int64_t> components)
      : components_(std::move(components)) {}
  GroupElement(std::initializer_list<std::int64_t> components)
      : components_(components) {}

  // k * e_i
  static GroupElement basis(std::size_t n, std::size_t i, std::int64_t k = 1) {
    GroupElement g(n);
    g.components_[i] = k;
    return g;
  }

  std::size_t size() const noexcept { return components_.size(); }
  std::int64_t operator[](std::size_t i) const { return components_[i]; }
  std::int64_t& operator[](std::size_t i) { return components_[i]; }
  const std::vector<std::int64_t>& components() const noexcept { return components_; }

  bool is_zero() const {
    for (auto c : components_) {
      if (c != 0) return false;
    }
    return true;
  }

  GroupElement operator-() const {
    GroupElement out(*this);
    for (auto& c : out.components_) c = -c;
    return out;
  }

  friend GroupElement operator+(GroupElement a, const GroupElement& b) {
    if (a.size() != b.size()) throw IndexError("group elements of different rank");
    for (std::size_t i = 0; i < a.size(); ++i) a.components_[i] += b[i];
    return a;
  }

  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) {
    return a + (-b);
  }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

  // "g1,...,gn"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += std::to_string(components_[i]);
    }
    return out;
  }

 private:
  std::vector<std::int64_t> components_;
};

// A ring automorphism given by the images of the generators under it and
// under its inverse. Both maps are total. That they are mutually inverse is
// checked by validate_datum, not here.
class RingAutomorphism {
 public:
  RingAutomorphism(Substitution forward, Substitution backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {
    const RingPtr& ring = forward_.source();
    if (!same_ring(ring, forward_.target()) || !same_ring(ring, backward_.source()) ||
        !same_ring(ring, backward_.target())) {
      throw RingMismatch();
    }
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (!forward_.image(i) || !backward_.image(i)) {
        throw ValidationError("automorphism is missing the image of '" +
                              (*ring)[i].name + "'");
      }
    }
  }

  static RingAutomorphism identity(const RingPtr& ring) {
    return RingAutomorphism(Substitution::identity(ring), Substitution::identity(ring));
  }

  const Substitution& forward() const noexcept { return forward_; }
  const Substitution& backward() const noexcept { return backward_; }
  const RingPtr& ring_ptr() const noexcept { return forward_.source(); }

  // Generators x with backward(forward(x)) != x or forward(backward(x)) != x.
  std::vector<std::size_t> inverse_defects() const {
    std::vector<std::size_t> out;
    const RingPtr& ring = ring_ptr();
    for (std::size_t i = 0; i < ring->size(); ++i) {
      Polynomial x = Polynomial::variable(ring, i);
      if (backward_(forward_(x)) != x || forward_(backward_(x)) != x) out.push_back(i);
    }
    return out;
  }

  bool operator==(const RingAutomorphism& other) const {
    return forward_ == other.forward_ && backward_ == other.backward_;
  }

 private:
  Substitution forward_;
  Substitution backward_;
};

// Off-diagonal n x n matrix of nonzero rationals. Entries default to 1.
class ParameterMatrix {
 public:
  explicit ParameterMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(1)) {}

  std::size_t size() const noexcept { return n_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return entries_[i * n_ + j];
  }

  void set(std::size_t i, std::size_t j, const Rational& value) {
    check(i, j);
    if (value == 0) {
      throw ValidationError("parameter matrix entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") must be nonzero");
    }
    entries_[i * n_ + j] = value;
  }

  bool operator==(const ParameterMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && entries_[i * n_ + j] != other.entries_[i * n_ + j]) return false;
      }
    }
    return true;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) {
      throw IndexError("parameter matrix has no entry (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")");
    }
  }

  std::size_t n_;
  std::vector<Rational> entries_;
};

class TgwDatum {
 public:
  TgwDatum(RingPtr ring, std::vector<RingAutomorphism> sigma, std::vector<Polynomial> t,
           ParameterMatrix mu)
      : ring_(std::move(ring)),
        sigma_(std::move(sigma)),
        t_(std::move(t)),
        mu_(std::move(mu)),
        cache_(std::make_shared<Cache>()) {
    const std::size_t n = sigma_.size();
    if (n == 0) throw ValidationError("degree n must be positive");
    if (t_.size() != n) throw ValidationError("expected " + std::to_string(n) + " entries in t");
    if (mu_.size() != n) throw ValidationError("parameter matrix size differs from n");
    for (const auto& s : sigma_) {
      if (!same_ring(s.ring_ptr(), ring_)) throw RingMismatch();
    }
    for (const auto& ti : t_) {
      if (!same_ring(ti.ring_ptr(), ring_)) throw RingMismatch();
    }
  }

  const RingSpec& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return sigma_.size(); }
  const RingAutomorphism& sigma(std::size_t i) const { return sigma_.at(i); }
  const Polynomial& t(std::size_t i) const { return t_.at(i); }
  const ParameterMatrix& mu() const noexcept { return mu_; }
  const Rational& mu(std::size_t i, std::size_t j) const { return mu_(i, j); }

  GroupElement zero() const { return GroupElement(degree()); }
  GroupElement e(std::size_t i) const { return GroupElement::basis(degree(), i); }

  // sigma_g = sigma_1^{g_1} ... sigma_n^{g_n}, memoized per g.
  const Substitution& action(const GroupElement& g) const {
    if (g.size() != degree()) throw IndexError("group element has wrong rank");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->sigma.find(g);
    if (it != cache_->sigma.end()) return *it->second;
    std::vector<std::optional<Polynomial>> images;
    images.reserve(ring_->size());
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      Polynomial p = Polynomial::variable(ring_, v);
      for (std::size_t i = 0; i < degree(); ++i) {
        const Substitution& step = g[i] > 0 ? sigma_[i].forward() : sigma_[i].backward();
        for (std::int64_t k = 0; k < (g[i] > 0 ? g[i] : -g[i]); ++k) p = step(p);
      }
      images.emplace_back(std::move(p));
    }
    auto sub = std::make_shared<const Substitution>(ring_, ring_, std::move(images));
    return *cache_->sigma.emplace(g, std::move(sub)).first->second;
  }

  Polynomial apply_sigma(const GroupElement& g, const Polynomial& p) const {
    if (g.is_zero()) return p;
    return action(g)(p);
  }

  Fraction apply_sigma(const GroupElement& g, const Fraction& f) const {
    if (g.is_zero()) return f;
    return apply_substitution(action(g), f);
  }

  bool operator==(const TgwDatum& other) const {
    return same_ring(ring_, other.ring_) && sigma_ == other.sigma_ && t_ == other.t_ &&
           mu_ == other.mu_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<GroupElement, std::shared_ptr<const Substitution>> sigma;
  };

  RingPtr ring_;
  std::vector<RingAutomorphism> sigma_;
  std::vector<Polynomial> t_;
  ParameterMatrix mu_;
  std::shared_ptr<Cache> cache_;
};

inline Polynomial apply_sigma(const TgwDatum& d, const GroupElement& g, const Polynomial& p) {
  return d.apply_sigma(g, p);
}

inline Fraction apply_sigma(const TgwDatum& d, const GroupElement& g, const Fraction& f) {
  return d.apply_sigma(g, f);
}

struct ValidationIssue {
  enum class Kind {
    NonCommuting,    // indices {i, j}, generator set
    ZeroT,           // indices {i}
    BadInverse,      // indices {i}, generator set
    DegreeMismatch,  // morphism between data of different degree
    MuMismatch,      // morphism between data with different mu
    RingMismatch,    // morphism with wrong source/target ring
    NotEquivariant,  // indices {i}, generator set
    TMismatch,       // indices {i}
    MissingImage,    // generator set
  };

  Kind kind;
  std::vector<std::size_t> indices;
  std::string generator;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

inline ValidationReport validate_datum(const TgwDatum& d) {
  ValidationReport report;
  const RingPtr& ring = d.ring_ptr();
  const std::size_t n = d.degree();
  auto one_based = [](std::size_t i) { return std::to_string(i + 1); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t v : d.sigma(i).inverse_defects()) {
      report.issues.push_back({ValidationIssue::Kind::BadInverse, {i}, (*ring)[v].name,
                               "backward map of sigma_" + one_based(i) +
                                   " is not inverse to the forward map on " + (*ring)[v].name});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& si = d.sigma(i).forward();
      const auto& sj = d.sigma(j).forward();
      for (std::size_t v = 0; v < ring->size(); ++v) {
        Polynomial x = Polynomial::variable(ring, v);
        if (si(sj(x)) != sj(si(x))) {
          report.issues.push_back({ValidationIssue::Kind::NonCommuting, {i, j}, (*ring)[v].name,
                                   "sigma_" + one_based(i) + " and sigma_" + one_based(j) +
                                       " do not commute on " + (*ring)[v].name});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.t(i).is_zero()) {
      report.issues.push_back(
          {ValidationIssue::Kind::ZeroT, {i}, "", "t_" + one_based(i) + " is zero"});
    }
  }
  return report;
}

enum class Verdict { Consistent, TrivialAlgebra, Undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "Consistent";
    case Verdict::TrivialAlgebra:
      return "TrivialAlgebra";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

// A relation-defect polynomial that is a unit of R.
struct Witness {
  enum class Relation { Pair, Triple };

  Polynomial value;
  Relation relation;
  std::vector<std::size_t> indices;
};

struct ConsistencyReport {
  // (i, j) -> sigma_i sigma_j(t_i t_j) - mu_ij mu_ji sigma_i(t_i) sigma_j(t_j)
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> pair_defects;
  // (i, j, k) -> t_j sigma_i sigma_k(t_j) - sigma_i(t_j) sigma_k(t_j)
  std::map<std::array<std::size_t, 3>, Polynomial> triple_defects;
  Verdict verdict = Verdict::Undetermined;
  std::optional<Witness> witness;
};

// Requires a valid datum. The first unit found, scanning pair defects and
// then triple defects in lexicographic index order, becomes the witness.
inline ConsistencyReport check_consistency(const TgwDatum& d) {
  ConsistencyReport report;
  const std::size_t n = d.degree();
  bool all_zero = true;
  auto record = [&](const Polynomial& p, Witness::Relation rel, std::vector<std::size_t> idx) {
    if (p.is_zero()) return;
    all_zero = false;
    if (!report.witness && is_unit(p)) report.witness = Witness{p, rel, std::move(idx)};
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Polynomial lhs = d.apply_sigma(d.e(i) + d.e(j), d.t(i) * d.t(j));
      Polynomial rhs = d.apply_sigma(d.e(i), d.t(i)) * d.apply_sigma(d.e(j), d.t(j));
      rhs *= d.mu(i, j) * d.mu(j, i);
      Polynomial defect = lhs - rhs;
      record(defect, Witness::Relation::Pair, {i, j});
      report.pair_defects.emplace(std::make_pair(i, j), std::move(defect));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Polynomial& tj = d.t(j);
        Polynomial defect = tj * d.apply_sigma(d.e(i) + d.e(k), tj) -
                            d.apply_sigma(d.e(i), tj) * d.apply_sigma(d.e(k), tj);
        record(defect, Witness::Relation::Triple, {i, j, k});
        report.triple_defects.emplace(std::array<std::size_t, 3>{i, j, k}, std::move(defect));
      }
    }
  }
  if (all_zero) {
    report.verdict = Verdict::Consistent;
  } else if (report.witness) {
    report.verdict = Verdict::TrivialAlgebra;
  } else {
    report.verdict = Verdict::Undetermined;
  }
  return report;
}

// mu_ij sigma_j(t_j) / sigma_i sigma_j(t_j): the coefficient c in the
// algebra relation X_j X_i = c X_i X_j.
inline Fraction tau(const TgwDatum& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.degree();
  if (i >= n || j >= n || i == j) {
    throw IndexError("tau needs two distinct indices in 1.." + std::to_string(n));
  }
  Polynomial num = d.apply_sigma(d.e(j), d.t(j)) * d.mu(i, j);
  Polynomial den = d.apply_sigma(d.e(i) + d.e(j), d.t(j));
  return Fraction(std::move(num), std::move(den));
}

// Checks phi sigma_i = sigma'_i phi on generators and phi(t_i) = t'_i.
inline ValidationReport validate_morphism(const TgwDatum& d, const TgwDatum& d2,
                                          const Substitution& phi) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  if (d.degree() != d2.degree()) {
    report.issues.push_back({Kind::DegreeMismatch, {}, "", "data have different degrees"});
    return report;
  }
  if (!(d.mu() == d2.mu())) {
    report.issues.push_back({Kind::MuMismatch, {}, "", "data have different parameter matrices"});
  }
  if (!same_ring(phi.source(), d.ring_ptr()) || !same_ring(phi.target(), d2.ring_ptr())) {
    report.issues.push_back({Kind::RingMismatch, {}, "", "map does not go from R to R'"});
    return report;
  }
  const RingPtr& ring = d.ring_ptr();
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (!phi.image(v)) {
      report.issues.push_back(
          {Kind::MissingImage, {}, (*ring)[v].name, "no image for " + (*ring)[v].name});
    }
  }
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < d.degree(); ++i) {
    for (std::size_t v = 0; v < ring->size(); ++v) {
      Polynomial x = Polynomial::variable(ring, v);
      Polynomial lhs = phi(d.sigma(i).forward()(x));
      Polynomial rhs = d2.sigma(i).forward()(phi(x));
      if (lhs != rhs) {
        report.issues.push_back({Kind::NotEquivariant, {i}, (*ring)[v].name,
                                 "phi sigma_" + std::to_string(i + 1) + " != sigma'_" +
                                     std::to_string(i + 1) + " phi on " + (*ring)[v].name});
      }
    }
  }
  for (std::size_t i = 0; i < d.degree(); ++i) {
    if (phi(d.t(i)) != d2.t(i)) {
      report.issues.push_back({Kind::TMismatch, {i}, "",
                               "phi(t_" + std::to_string(i + 1) + ") != t'_" +
                                   std::to_string(i + 1)});
    }
  }
  return report;
}

// A ring map that has passed validate_morphism.
class DatumMorphism {
 public:
  DatumMorphism(TgwDatum source, TgwDatum target, Substitution map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    ValidationReport report = validate_morphism(source_, target_, map_);
    if (!report.ok()) throw InvalidMorphism(report.issues.front().message);
  }

  const TgwDatum& source() const noexcept { return source_; }
  const TgwDatum& target() const noexcept { return target_; }
  const Substitution& map() const noexcept { return map_; }

 private:
  TgwDatum source_;
  TgwDatum target_;
  Substitution map_;
};

}  // namespace tgw

#endif  // TGW_DATUM_HPP_
