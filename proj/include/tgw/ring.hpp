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

// Exact multivariate polynomials over Q in which each variable is either an
// ordinary polynomial variable or a Laurent (invertible) one.
//
// Text grammar (whitespace is insignificant):
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := name ('^' int)?
//   coeff  := int ('/' posint)?
//
// Polynomial::to_string() emits exactly this grammar, with terms in
// descending lexicographic order of their exponent vectors, so printing and
// re-parsing is the identity.

#ifndef TGW_RING_HPP_
#define TGW_RING_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgw/errors.hpp"

namespace tgw {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

struct Variable {
  std::string name;
  bool invertible = false;

  bool operator==(const Variable&) const = default;
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

}  // namespace detail

// Ordered list of variables. Shared between polynomials via RingPtr.
class RingSpec {
 public:
  explicit RingSpec(std::vector<Variable> variables)
      : variables_(std::move(variables)) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      const auto& name = variables_[i].name;
      if (!detail::is_identifier(name)) {
        throw ValidationError("variable name '" + name +
                              "' is not an ASCII identifier");
      }
      if (!index_.emplace(name, i).second) {
        throw ValidationError("duplicate variable name '" + name + "'");
      }
    }
  }

  static std::shared_ptr<const RingSpec> make(std::vector<Variable> variables) {
    return std::make_shared<const RingSpec>(std::move(variables));
  }

  std::size_t size() const noexcept { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const noexcept { return variables_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const RingSpec& other) const {
    return variables_ == other.variables_;
  }

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Exponent vector, one entry per ring variable. Ordering is lexicographic.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {}

  std::size_t size() const noexcept { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  int& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  bool is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](int e) { return e == 0; });
  }

  Monomial operator*(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] += other[i];
    return out;
  }

  Monomial operator/(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] -= other[i];
    return out;
  }

  // Componentwise <=.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (exponents_[i] > other[i]) return false;
    }
    return true;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
};

class Polynomial {
 public:
  // Leading term first.
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Drops zero coefficients and checks the invertibility flags.
  Polynomial(RingPtr ring, Terms terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [m, c] : terms_) check_monomial(m);
  }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.emplace(Monomial(p.ring_->size()), c);
    return p;
  }

  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }

  static Polynomial term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (m.size() != p.ring_->size()) {
      throw ValidationError("monomial length does not match the ring");
    }
    p.check_monomial(m);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index, int exponent = 1) {
    Monomial m(ring->size());
    m[index] = exponent;
    return term(std::move(ring), std::move(m), 1);
  }

  const RingSpec& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  // Coefficient of the empty monomial; 0 if absent.
  Rational constant_term() const {
    auto it = terms_.find(Monomial(ring_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  // Componentwise minimum of the exponent vectors of a nonzero polynomial.
  Monomial content() const {
    Monomial out = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], m[i]);
    }
    return out;
  }

  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_) accumulate(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_) accumulate(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.accumulate(ma * mb, ca * cb);
    }
    return out;
  }

  // Negative exponents require a unit.
  Polynomial pow(long k) const;

  // Multiplies by a (possibly Laurent) monomial without checking flags.
  // Callers guarantee the result respects the ring.
  Polynomial shifted(const Monomial& m) const {
    Polynomial out(ring_);
    for (const auto& [mon, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mon * m, c);
    return out;
  }

  bool operator==(const Polynomial& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  }

  void check_monomial(const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0 && !(*ring_)[i].invertible) {
        throw NegativeExponentOnNonInvertible(
            "negative exponent on non-invertible variable", (*ring_)[i].name);
      }
    }
  }

  void accumulate(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
      terms_.erase(it);
    }
  }

  RingPtr ring_;
  Terms terms_;
};

// True iff `p` is a nonzero single term in invertible variables only.
inline bool is_unit(const Polynomial& p) {
  if (p.size() != 1) return false;
  const auto& m = p.leading_monomial();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !p.ring()[i].invertible) return false;
  }
  return true;
}

inline Polynomial unit_inverse(const Polynomial& p) {
  if (!is_unit(p)) throw NotInvertible("'" + p.to_string() + "' is not a unit");
  Monomial inv(p.ring().size());
  inv = inv / p.leading_monomial();
  return Polynomial::term(p.ring_ptr(), std::move(inv), 1 / p.leading_coefficient());
}

inline Polynomial Polynomial::pow(long k) const {
  if (k < 0) return unit_inverse(*this).pow(-k);
  Polynomial result = one(ring_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

inline std::string monomial_to_string(const RingSpec& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring[i].name;
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mon = monomial_to_string(*ring_, m);
    if (mon.empty()) {
      out += tgw::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mon;
    } else {
      out += tgw::to_string(magnitude) + '*' + mon;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw SyntaxError("empty polynomial", "", pos_);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Polynomial result = parse_term();
    if (negative) result = -result;
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') {
        throw SyntaxError("expected '+' or '-'", std::string(1, c), pos_);
      }
      ++pos_;
      Polynomial term = parse_term();
      if (c == '-') {
        result -= term;
      } else {
        result += term;
      }
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool peek_is_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (peek_is_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial parse_term() {
    skip_space();
    if (at_end()) throw SyntaxError("expected a term", "", pos_);
    Rational coeff = 1;
    Monomial mon(ring_->size());
    if (peek_is_digit()) {
      coeff = parse_coeff();
    } else if (is_ident_start()) {
      parse_factor(mon);
    } else {
      throw SyntaxError("expected a term", std::string(1, peek()), pos_);
    }
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
      parse_factor(mon);
    }
    return Polynomial::term(ring_, std::move(mon), coeff);
  }

  Rational parse_coeff() {
    std::string num = read_digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t den_pos = pos_;
      if (!peek_is_digit()) {
        throw SyntaxError("expected a positive denominator",
                          at_end() ? "" : std::string(1, peek()), pos_);
      }
      std::string den = read_digits();
      mpz_class d(den);
      if (d == 0) throw SyntaxError("zero denominator", den, den_pos);
      Rational q(mpz_class(num), d);
      q.canonicalize();
      return q;
    }
    return Rational(mpz_class(num));
  }

  bool is_ident_start() const {
    if (at_end()) return false;
    auto c = static_cast<unsigned char>(peek());
    return std::isalpha(c) || c == '_';
  }

  void parse_factor(Monomial& mon) {
    if (!is_ident_start()) {
      throw SyntaxError("expected a variable",
                        at_end() ? "" : std::string(1, peek()), pos_);
    }
    std::size_t start = pos_;
    while (!at_end()) {
      auto c = static_cast<unsigned char>(peek());
      if (!(std::isalnum(c) || c == '_')) break;
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    auto index = ring_->index_of(name);
    if (!index) throw UnknownVariable("unknown variable", name, start);
    long exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t exp_pos = pos_;
      bool negative = false;
      if (!at_end() && peek() == '-') {
        negative = true;
        ++pos_;
      }
      if (!peek_is_digit()) {
        throw SyntaxError("expected an integer exponent",
                          at_end() ? "" : std::string(1, peek()), pos_);
      }
      std::string digits = read_digits();
      if (digits.size() > 9) throw SyntaxError("exponent too large", digits, exp_pos);
      exponent = std::stol(digits);
      if (negative) exponent = -exponent;
      if (exponent < 0 && !(*ring_)[*index].invertible) {
        throw NegativeExponentOnNonInvertible(
            "negative exponent on non-invertible variable", name, start);
      }
    }
    long total = static_cast<long>(mon[*index]) + exponent;
    if (total > INT_MAX / 2 || total < INT_MIN / 2) {
      throw SyntaxError("exponent too large", name, start);
    }
    mon[*index] = static_cast<int>(total);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

// Exact quotient a / b in R, or nullopt when b does not divide a.
//
// Both operands are first stripped of their monomial content, which turns
// them into ordinary polynomials; lexicographic division then terminates.
// For Laurent variables this is exact because R is a localization of the
// stripped polynomial ring at monomials.
inline std::optional<Polynomial> divide_exact(const Polynomial& a,
                                              const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw RingMismatch();
  if (a.is_zero()) return a;

  const Monomial ca = a.content();
  const Monomial cb = b.content();
  Polynomial::Terms rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m / ca, c);
  Polynomial::Terms divisor;
  for (const auto& [m, c] : b.terms()) divisor.emplace(m / cb, c);

  const auto& [lead_m, lead_c] = *divisor.begin();
  Polynomial::Terms quot;
  while (!rem.empty()) {
    auto [m, c] = *rem.begin();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial qm = m / lead_m;
    Rational qc = c / lead_c;
    quot.emplace(qm, qc);
    for (const auto& [dm, dc] : divisor) {
      auto key = qm * dm;
      auto [it, inserted] = rem.try_emplace(key, -qc * dc);
      if (!inserted) {
        it->second -= qc * dc;
        if (it->second == 0) rem.erase(it);
      }
    }
  }

  const Monomial shift = ca / cb;
  Polynomial::Terms out;
  for (const auto& [m, c] : quot) {
    Monomial shifted = m * shift;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      if (shifted[i] < 0 && !a.ring()[i].invertible) return std::nullopt;
    }
    out.emplace(std::move(shifted), c);
  }
  return Polynomial(a.ring_ptr(), std::move(out));
}

// Ring homomorphism R -> R' determined by generator images. An image may be
// absent; evaluating a polynomial that uses such a variable throws
// UnknownVariable. Images of invertible variables must be units.
class Substitution {
 public:
  Substitution(RingPtr source, RingPtr target,
               std::vector<std::optional<Polynomial>> images)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)),
        inverses_(images_.size()) {
    if (images_.size() != source_->size()) {
      throw ValidationError("substitution must list one slot per variable");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!images_[i]) continue;
      if (!same_ring(images_[i]->ring_ptr(), target_)) throw RingMismatch();
      if ((*source_)[i].invertible) {
        if (!is_unit(*images_[i])) {
          throw NonUnitImageOfInvertibleVariable((*source_)[i].name);
        }
        inverses_[i] = unit_inverse(*images_[i]);
      }
    }
  }

  static Substitution identity(const RingPtr& ring) {
    std::vector<std::optional<Polynomial>> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
      images.emplace_back(Polynomial::variable(ring, i));
    }
    return Substitution(ring, ring, std::move(images));
  }

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::optional<Polynomial>& image(std::size_t i) const { return images_[i]; }

  Polynomial operator()(const Polynomial& p) const {
    if (!same_ring(p.ring_ptr(), source_)) throw RingMismatch();
    // Powers are cached per call; the same generator power recurs across terms.
    std::map<std::pair<std::size_t, int>, Polynomial> powers;
    auto power = [&](std::size_t var, int e) -> const Polynomial& {
      auto key = std::make_pair(var, e);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      if (!images_[var]) {
        throw UnknownVariable("no image for variable", (*source_)[var].name);
      }
      Polynomial value = e >= 0 ? images_[var]->pow(e) : inverses_[var]->pow(-e);
      return powers.emplace(key, std::move(value)).first->second;
    };

    Polynomial out(target_);
    for (const auto& [m, c] : p.terms()) {
      Polynomial term = Polynomial::constant(target_, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) term *= power(i, m[i]);
      }
      out += term;
    }
    return out;
  }

  bool operator==(const Substitution& other) const {
    return same_ring(source_, other.source_) &&
           same_ring(target_, other.target_) && images_ == other.images_;
  }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::optional<Polynomial>> images_;
  std::vector<std::optional<Polynomial>> inverses_;
};

// Name-keyed convenience form. The target ring is the ring of the images
// (or the source ring when no images are given).
inline Polynomial apply_substitution(
    const std::map<std::string, Polynomial>& images, const Polynomial& p) {
  RingPtr target = images.empty() ? p.ring_ptr() : images.begin()->second.ring_ptr();
  std::vector<std::optional<Polynomial>> slots(p.ring().size());
  for (const auto& [name, image] : images) {
    auto index = p.ring().index_of(name);
    if (!index) throw UnknownVariable("unknown variable", name);
    slots[*index] = image;
  }
  return Substitution(p.ring_ptr(), target, std::move(slots))(p);
}

}  // namespace tgw

#endif  // TGW_RING_HPP_
