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

// Elements of the fraction field Frac(R).
//
// Canonical form, applied after every operation:
//   * the zero fraction is 0/1;
//   * the denominator carries no Laurent monomial content, and common
//     powers of ordinary variables are cancelled;
//   * if either side divides the other exactly, the quotient is taken;
//   * the denominator has coprime integer coefficients and a positive
//     leading coefficient.
// No general multivariate gcd is taken, so two equal fractions need not have
// identical representations; operator== cross-multiplies.

#ifndef TGW_FRACTION_HPP_
#define TGW_FRACTION_HPP_

#include <string>
#include <string_view>
#include <utility>

#include "tgw/ring.hpp"

namespace tgw {

class Fraction {
 public:
  explicit Fraction(RingPtr ring)
      : num_(ring), den_(Polynomial::one(ring)) {}

  explicit Fraction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::one(num_.ring_ptr())) {}

  Fraction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (!same_ring(num_.ring_ptr(), den_.ring_ptr())) throw RingMismatch();
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
  }

  static Fraction constant(const RingPtr& ring, const Rational& c) {
    return Fraction(Polynomial::constant(ring, c));
  }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  const RingSpec& ring() const { return num_.ring(); }
  const RingPtr& ring_ptr() const noexcept { return num_.ring_ptr(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_one() const { return num_ == den_; }

  Fraction operator-() const {
    Fraction out(*this);
    out.num_ = -out.num_;
    return out;
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return a + (-b);
  }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction(a.ring_ptr());
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    return a * b.inverse();
  }

  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

  Fraction inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Fraction(den_, num_);
  }

  Fraction pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    return Fraction(num_.pow(k), den_.pow(k));
  }

  bool operator==(const Fraction& other) const {
    if (!same_ring(ring_ptr(), other.ring_ptr())) return false;
    if (den_ == other.den_) return num_ == other.num_;
    return num_ * other.den_ == other.num_ * den_;
  }

  // `p` when the denominator is 1, `(p)` for a multi-term polynomial and
  // `(p)/(q)` otherwise. The parenthesized forms keep the text unambiguous
  // inside sums.
  std::string to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) {
      if (num_.size() <= 1) return num_.to_string();
      return "(" + num_.to_string() + ")";
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Polynomial::one(num_.ring_ptr());
      return;
    }
    const RingSpec& ring = num_.ring();
    Monomial cn = num_.content();
    Monomial cd = den_.content();
    Monomial shift(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      shift[i] = ring[i].invertible ? -cd[i] : -std::min(cn[i], cd[i]);
    }
    if (!shift.is_one()) {
      num_ = num_.shifted(shift);
      den_ = den_.shifted(shift);
    }
    if (!den_.is_constant()) {
      if (auto q = divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = Polynomial::one(num_.ring_ptr());
      } else if (auto r = divide_exact(den_, num_)) {
        num_ = Polynomial::one(num_.ring_ptr());
        den_ = std::move(*r);
      }
    }
    normalize_scalars();
  }

  void normalize_scalars() {
    mpz_class lcm_den = 1;
    for (const auto& [m, c] : den_.terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class gcd_num = 0;
    for (const auto& [m, c] : den_.terms()) {
      mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational k(lcm_den, gcd_num);
    k.canonicalize();
    if (den_.leading_coefficient() < 0) k = -k;
    if (k != 1) {
      num_ *= k;
      den_ *= k;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

// Parses `p`, `(p)` or `(p)/(q)`.
inline Fraction parse_fraction(std::string_view text, const RingPtr& ring) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty() || s.front() != '(') return Fraction(parse_poly(s, ring));

  auto close = s.find(')');
  if (close == std::string_view::npos) throw SyntaxError("unbalanced '('", "(", 0);
  Polynomial num = parse_poly(s.substr(1, close - 1), ring);
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.empty()) return Fraction(std::move(num));
  std::size_t offset = s.size() - rest.size();
  if (rest.front() != '/') {
    throw SyntaxError("expected '/'", std::string(1, rest.front()), offset);
  }
  rest = trim(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
    throw SyntaxError("expected '(' denominator ')'", std::string(rest), offset);
  }
  Polynomial den = parse_poly(rest.substr(1, rest.size() - 2), ring);
  if (den.is_zero()) throw DivisionByZero();
  return Fraction(std::move(num), std::move(den));
}

// Applies a ring homomorphism to numerator and denominator.
inline Fraction apply_substitution(const Substitution& phi, const Fraction& f) {
  Polynomial den = phi(f.den());
  if (den.is_zero()) throw DivisionByZero();
  return Fraction(phi(f.num()), std::move(den));
}

}  // namespace tgw

#endif  // TGW_FRACTION_HPP_
