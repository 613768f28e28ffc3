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

// Normal-form arithmetic in a consistent TGW algebra, realized as the
// crossed product Frac(R) x_alpha^sigma Z^n. The basis element u_g stands for
// the sorted word X_1^{g_1} ... X_n^{g_n}, and
//
//   (r u_g)(s u_h) = r sigma_g(s) alpha(g, h) u_{g+h}
//
// where alpha(g, h) is the coefficient of the normal form of
// word(g) word(h). Text form of an element: "<fraction> * u[g1,...,gn]"
// terms joined by " + " / " - ", or "0".

#ifndef TGW_ALGEBRA_HPP_
#define TGW_ALGEBRA_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgw/datum.hpp"
#include "tgw/rewrite.hpp"
#include "tgw/sampling.hpp"

namespace tgw {

class CrossedElement;

class CrossedProduct : public std::enable_shared_from_this<CrossedProduct> {
  struct Token {};

 public:
  CrossedProduct(Token, TgwDatum datum) : rewriting_(std::move(datum)) {}

  // Throws ValidationError for an invalid datum and InconsistentDatum unless
  // check_consistency reports Consistent.
  static std::shared_ptr<const CrossedProduct> create(TgwDatum datum) {
    auto algebra = std::make_shared<const CrossedProduct>(Token{}, std::move(datum));
    if (check_consistency(algebra->datum()).verdict != Verdict::Consistent) {
      throw InconsistentDatum();
    }
    return algebra;
  }

  const TgwDatum& datum() const noexcept { return rewriting_.datum(); }
  const RewriteSystem& rewriting() const noexcept { return rewriting_; }
  std::size_t degree() const noexcept { return datum().degree(); }

  // Memoized; safe to call from several threads.
  Fraction cocycle(const GroupElement& g, const GroupElement& h) const {
    if (g.size() != degree() || h.size() != degree()) {
      throw IndexError("group element has wrong rank");
    }
    auto key = std::make_pair(g, h);
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    WeightedWord w{Fraction::constant(datum().ring_ptr(), 1), concat(word_of(g), word_of(h))};
    Fraction value = rewriting_.normalize(std::move(w)).coeff;
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

  CrossedElement zero() const;
  CrossedElement scalar(const Fraction& r) const;
  CrossedElement monomial(const Fraction& r, const GroupElement& g) const;
  CrossedElement x(std::size_t i) const;
  CrossedElement y(std::size_t i) const;

 private:
  RewriteSystem rewriting_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<GroupElement, GroupElement>, Fraction> memo_;
};

using AlgebraPtr = std::shared_ptr<const CrossedProduct>;

// Finite sum of r_g u_g with nonzero r_g.
class CrossedElement {
 public:
  using Terms = std::map<GroupElement, Fraction>;

  CrossedElement(AlgebraPtr algebra, Terms terms)
      : algebra_(std::move(algebra)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [g, r] : terms_) {
      if (g.size() != algebra_->degree()) throw IndexError("group element has wrong rank");
      if (!same_ring(r.ring_ptr(), algebra_->datum().ring_ptr())) throw RingMismatch();
    }
  }

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Fraction coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Fraction(algebra_->datum().ring_ptr()) : it->second;
  }

  std::vector<GroupElement> support() const {
    std::vector<GroupElement> out;
    for (const auto& [g, r] : terms_) out.push_back(g);
    return out;
  }

  CrossedElement operator-() const {
    Terms out = terms_;
    for (auto& [g, r] : out) r = -r;
    return CrossedElement(algebra_, std::move(out));
  }

  friend CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
    a.require_same_algebra(b);
    Terms out = a.terms_;
    for (const auto& [g, r] : b.terms_) {
      auto [it, inserted] = out.try_emplace(g, r);
      if (!inserted) it->second += r;
    }
    return CrossedElement(a.algebra_, std::move(out));
  }

  friend CrossedElement operator-(const CrossedElement& a, const CrossedElement& b) {
    return a + (-b);
  }

  friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
    a.require_same_algebra(b);
    const TgwDatum& d = a.algebra_->datum();
    Terms out;
    for (const auto& [g, r] : a.terms_) {
      for (const auto& [h, s] : b.terms_) {
        Fraction c = r * d.apply_sigma(g, s) * a.algebra_->cocycle(g, h);
        GroupElement gh = g + h;
        auto [it, inserted] = out.try_emplace(gh, c);
        if (!inserted) it->second += c;
      }
    }
    return CrossedElement(a.algebra_, std::move(out));
  }

  // Left multiplication by r u_0.
  friend CrossedElement operator*(const Fraction& r, const CrossedElement& a) {
    return a.algebra_->scalar(r) * a;
  }

  bool operator==(const CrossedElement& other) const {
    return same_algebra(other) && terms_ == other.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, r] : terms_) {
      std::string coeff = r.to_string();
      std::string term = "u[" + g.to_string() + "]";
      if (out.empty()) {
        out = coeff + " * " + term;
      } else if (coeff.front() == '-') {
        out += " - " + coeff.substr(1) + " * " + term;
      } else {
        out += " + " + coeff + " * " + term;
      }
    }
    return out;
  }

 private:
  bool same_algebra(const CrossedElement& other) const {
    return algebra_ == other.algebra_ || algebra_->datum() == other.algebra_->datum();
  }

  void require_same_algebra(const CrossedElement& other) const {
    if (!same_algebra(other)) throw DatumMismatch();
  }

  AlgebraPtr algebra_;
  Terms terms_;
};

inline CrossedElement CrossedProduct::zero() const {
  return CrossedElement(shared_from_this(), {});
}

inline CrossedElement CrossedProduct::monomial(const Fraction& r, const GroupElement& g) const {
  return CrossedElement(shared_from_this(), {{g, r}});
}

inline CrossedElement CrossedProduct::scalar(const Fraction& r) const {
  return monomial(r, GroupElement(degree()));
}

inline CrossedElement CrossedProduct::x(std::size_t i) const {
  if (i >= degree()) throw IndexError("generator index out of range");
  return monomial(Fraction::constant(datum().ring_ptr(), 1), datum().e(i));
}

// Y_i = t_i X_i^{-1}
inline CrossedElement CrossedProduct::y(std::size_t i) const {
  if (i >= degree()) throw IndexError("generator index out of range");
  return monomial(Fraction(datum().t(i)), -datum().e(i));
}

inline CrossedElement embed_scalar(const AlgebraPtr& algebra, const Fraction& r) {
  return algebra->scalar(r);
}

inline CrossedElement x_gen(const AlgebraPtr& algebra, std::size_t i) { return algebra->x(i); }
inline CrossedElement y_gen(const AlgebraPtr& algebra, std::size_t i) { return algebra->y(i); }

inline Fraction cocycle(const AlgebraPtr& algebra, const GroupElement& g, const GroupElement& h) {
  return algebra->cocycle(g, h);
}

inline CrossedElement mul(const CrossedElement& a, const CrossedElement& b) { return a * b; }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline GroupElement parse_group_element(std::string_view text, std::size_t n, std::size_t offset) {
  std::vector<std::int64_t> comps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::size_t consumed = 0;
    try {
      comps.push_back(std::stoll(std::string(part), &consumed));
    } catch (const std::exception&) {
      throw SyntaxError("expected an integer", std::string(part), offset + pos);
    }
    if (consumed != part.size()) throw SyntaxError("expected an integer", std::string(part), offset + pos);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (comps.size() != n) {
    throw IndexError("group element [" + std::string(text) + "] should have " + std::to_string(n) +
                     " components");
  }
  return GroupElement(std::move(comps));
}

}  // namespace detail

// Parses "1,0" or "(1,0)" or "[1,0]".
inline GroupElement parse_group_element(std::string_view text, std::size_t n) {
  std::string_view s = detail::trim(text);
  std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    s = s.substr(1, s.size() >= 2 ? s.size() - 2 : 0);
    ++offset;
  }
  return detail::parse_group_element(s, n, offset);
}

inline CrossedElement parse_element(std::string_view text, const AlgebraPtr& algebra) {
  const RingPtr& ring = algebra->datum().ring_ptr();
  std::string_view s = detail::trim(text);
  if (s == "0") return algebra->zero();

  // Split at top-level '+'/'-' that are not exponent signs.
  struct Piece {
    bool negative;
    std::size_t start;
    std::string_view body;
  };
  std::vector<Piece> pieces;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  char prev = '\0';
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && prev != '^') {
      std::string_view body = detail::trim(s.substr(start, i - start));
      if (!body.empty()) {
        pieces.push_back({negative, start, body});
      } else if (!pieces.empty() || i != 0) {
        throw SyntaxError("empty term", std::string(1, c), i);
      }
      negative = c == '-';
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  std::string_view last = detail::trim(s.substr(start));
  if (last.empty()) throw SyntaxError("empty term", "", s.size());
  pieces.push_back({negative, start, last});

  CrossedElement result = algebra->zero();
  for (const Piece& piece : pieces) {
    std::string_view body = piece.body;
    std::size_t bracket = body.rfind('[');
    if (bracket == std::string_view::npos || bracket == 0 || body[bracket - 1] != 'u' ||
        body.back() != ']') {
      throw SyntaxError("expected '<fraction> * u[g1,...,gn]'", std::string(body), piece.start);
    }
    GroupElement g = parse_group_element(body.substr(bracket + 1, body.size() - bracket - 2),
                                         algebra->degree());
    std::string_view head = detail::trim(body.substr(0, bracket - 1));
    Fraction coeff = Fraction::constant(ring, 1);
    if (!head.empty()) {
      if (head.back() != '*') {
        throw SyntaxError("expected '*' before u[...]", std::string(head), piece.start);
      }
      coeff = parse_fraction(head.substr(0, head.size() - 1), ring);
    }
    if (piece.negative) coeff = -coeff;
    result = result + algebra->monomial(coeff, g);
  }
  return result;
}

struct RelationViolation {
  std::string relation;
  std::vector<std::size_t> indices;
  std::string sample;  // the ring element r, when the relation involves one
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  std::size_t checks = 0;
  std::vector<RelationViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Checks, in crossed-product arithmetic,
//   X_i r = sigma_i(r) X_i,  Y_i r = sigma_i^{-1}(r) Y_i   for `samples` random r,
//   Y_i X_i = t_i,  X_i Y_i = sigma_i(t_i),  X_i Y_j = mu_ij Y_j X_i.
inline RelationReport verify_defining_relations(const AlgebraPtr& algebra, std::size_t samples,
                                                std::uint64_t seed,
                                                const SamplingOptions& opts = {}) {
  RelationReport report;
  const TgwDatum& d = algebra->datum();
  const RingPtr& ring = d.ring_ptr();
  const std::size_t n = d.degree();
  auto check = [&](const char* name, std::vector<std::size_t> idx, const std::string& sample,
                   const CrossedElement& lhs, const CrossedElement& rhs) {
    ++report.checks;
    if (!(lhs == rhs)) {
      report.violations.push_back({name, std::move(idx), sample, lhs.to_string(), rhs.to_string()});
    }
  };

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Polynomial r = random_polynomial(ring, rng, opts);
    CrossedElement re = algebra->scalar(Fraction(r));
    for (std::size_t i = 0; i < n; ++i) {
      CrossedElement sr = algebra->scalar(Fraction(d.apply_sigma(d.e(i), r)));
      CrossedElement sinv = algebra->scalar(Fraction(d.apply_sigma(-d.e(i), r)));
      check("X_i r = sigma_i(r) X_i", {i}, r.to_string(), algebra->x(i) * re, sr * algebra->x(i));
      check("Y_i r = sigma_i^-1(r) Y_i", {i}, r.to_string(), algebra->y(i) * re,
            sinv * algebra->y(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    check("Y_i X_i = t_i", {i}, "", algebra->y(i) * algebra->x(i),
          algebra->scalar(Fraction(d.t(i))));
    check("X_i Y_i = sigma_i(t_i)", {i}, "", algebra->x(i) * algebra->y(i),
          algebra->scalar(Fraction(d.apply_sigma(d.e(i), d.t(i)))));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Fraction mu = Fraction::constant(ring, d.mu(i, j));
      check("X_i Y_j = mu_ij Y_j X_i", {i, j}, "", algebra->x(i) * algebra->y(j),
            mu * (algebra->y(j) * algebra->x(i)));
    }
  }
  return report;
}

struct CocycleReport {
  std::size_t triples_checked = 0;
  std::size_t action_checks = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few, for display

  bool ok() const noexcept { return failure_count == 0; }
};

// For all g, h, k in [-box, box]^n:
//   alpha(g,h) alpha(g+h,k) = sigma_g(alpha(h,k)) alpha(g,h+k),
//   alpha(g,0) = alpha(0,g) = 1,
// and sigma_g sigma_h = sigma_{g+h} on the ring generators.
inline CocycleReport verify_cocycle_identities(const AlgebraPtr& algebra, int box) {
  constexpr std::size_t kMaxListed = 20;
  CocycleReport report;
  const TgwDatum& d = algebra->datum();
  const std::size_t n = d.degree();
  const RingPtr& ring = d.ring_ptr();
  auto fail = [&](std::string what) {
    ++report.failure_count;
    if (report.failures.size() < kMaxListed) report.failures.push_back(std::move(what));
  };

  std::vector<GroupElement> box_elements;
  GroupElement g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = -box;
  for (;;) {
    box_elements.push_back(g);
    std::size_t i = 0;
    while (i < n && g[i] == box) g[i++] = -box;
    if (i == n) break;
    ++g[i];
  }

  const GroupElement zero(n);
  for (const auto& a : box_elements) {
    if (!algebra->cocycle(a, zero).is_one() || !algebra->cocycle(zero, a).is_one()) {
      fail("alpha(g,0) or alpha(0,g) != 1 for g = (" + a.to_string() + ")");
    }
  }

  for (const auto& a : box_elements) {
    for (const auto& b : box_elements) {
      Fraction ab = algebra->cocycle(a, b);
      for (const auto& c : box_elements) {
        ++report.triples_checked;
        Fraction lhs = ab * algebra->cocycle(a + b, c);
        Fraction rhs = d.apply_sigma(a, algebra->cocycle(b, c)) * algebra->cocycle(a, b + c);
        if (!(lhs == rhs)) {
          fail("cocycle identity fails at g=(" + a.to_string() + ") h=(" + b.to_string() +
               ") k=(" + c.to_string() + ")");
        }
      }
    }
  }

  for (const auto& a : box_elements) {
    for (const auto& b : box_elements) {
      for (std::size_t v = 0; v < ring->size(); ++v) {
        ++report.action_checks;
        Polynomial x = Polynomial::variable(ring, v);
        if (d.apply_sigma(a, d.apply_sigma(b, x)) != d.apply_sigma(a + b, x)) {
          fail("sigma_g sigma_h != sigma_{g+h} on " + (*ring)[v].name + " at g=(" +
               a.to_string() + ") h=(" + b.to_string() + ")");
        }
      }
    }
  }
  return report;
}

// r u_g -> phi(r) u_g. `target` must be the algebra of phi.target().
inline CrossedElement induced_map(const DatumMorphism& phi, const AlgebraPtr& target,
                                  const CrossedElement& a) {
  if (!(a.algebra()->datum() == phi.source()) || !(target->datum() == phi.target())) {
    throw DatumMismatch();
  }
  CrossedElement::Terms out;
  for (const auto& [g, r] : a.terms()) out.emplace(g, apply_substitution(phi.map(), r));
  return CrossedElement(target, std::move(out));
}

}  // namespace tgw

#endif  // TGW_ALGEBRA_HPP_
