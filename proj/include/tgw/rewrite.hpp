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

// Reduction system on words in the letters X_i^{+1}, X_i^{-1} with a single
// left coefficient in Frac(R):
//
//   X_b^{s} X_a^{r}  ->  sigma_b^{(s-1)/2} sigma_a^{(r-1)/2}(tau^{rs}) X_a^{r} X_b^{s}   (a < b)
//   X_i^{s} X_i^{-s} ->  1
//
// where tau = tau(d, a, b), the coefficient of X_b X_a = tau X_a X_b. A
// coefficient produced at some position is moved to the front of the word
// through X_i^{+-1} r = sigma_i^{+-1}(r) X_i^{+-1}, i.e. it is acted on by
// sigma of the degree of the prefix.
//
// Every step lowers (number of index inversions, length) lexicographically,
// so normalization terminates. Irreducible words are X_1^{g_1} ... X_n^{g_n}.

#ifndef TGW_REWRITE_HPP_
#define TGW_REWRITE_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgw/datum.hpp"

namespace tgw {

struct Letter {
  std::size_t index;  // 0-based
  int sign;           // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WeightedWord {
  Fraction coeff;
  Word word;
};

// coeff * X_1^{g_1} ... X_n^{g_n}
struct NormalForm {
  Fraction coeff;
  GroupElement degree;

  bool operator==(const NormalForm& other) const {
    return degree == other.degree && coeff == other.coeff;
  }
};

inline Word word_of(const GroupElement& g) {
  Word w;
  for (std::size_t i = 0; i < g.size(); ++i) {
    int sign = g[i] > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (g[i] > 0 ? g[i] : -g[i]); ++k) w.push_back({i, sign});
  }
  return w;
}

// Signed letter count.
inline GroupElement degree_of(const Word& w, std::size_t n) {
  GroupElement g(n);
  for (const Letter& l : w) {
    if (l.index >= n) throw IndexError("letter index out of range");
    g[l.index] += l.sign;
  }
  return g;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// "x2 x1 x1^-1"; `X` and `x` are interchangeable, indices are 1-based.
inline Word parse_word(std::string_view text, std::size_t n) {
  Word w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  for (skip(); pos < text.size(); skip()) {
    std::size_t start = pos;
    if (text[pos] != 'x' && text[pos] != 'X') {
      throw SyntaxError("expected a letter x<i>", std::string(1, text[pos]), pos);
    }
    ++pos;
    std::string idx = digits();
    if (idx.empty() || idx.size() > 9) throw SyntaxError("expected a letter index", "", pos);
    std::size_t i = std::stoul(idx);
    if (i == 0 || i > n) {
      throw IndexError("letter x" + idx + " out of range 1.." + std::to_string(n));
    }
    int sign = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      if (digits() != "1") {
        throw SyntaxError("letter exponent must be 1 or -1",
                          std::string(text.substr(start, pos - start)), start);
      }
      sign = negative ? -1 : 1;
    }
    w.push_back({i - 1, sign});
  }
  return w;
}

inline std::string to_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.index + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

class Strategy {
 public:
  enum class Kind { Leftmost, Rightmost, Random };

  static Strategy leftmost() { return Strategy(Kind::Leftmost, 0); }
  static Strategy rightmost() { return Strategy(Kind::Rightmost, 0); }
  static Strategy random(std::uint64_t seed) { return Strategy(Kind::Random, seed); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  Strategy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}

  Kind kind_;
  std::uint64_t seed_;
};

struct AmbiguityInstance {
  enum class Type {
    Triple,      // X_c X_b X_a, a < b < c
    SwapCancel,  // X_b X_a X_a^{-1}, a < b
    CancelSwap,  // X_b X_b^{-1} X_a, a < b
    Cancel,      // X_i X_i^{-1} X_i
  };

  Type type;
  Word word;
  NormalForm via_left;   // reduce at site 0 first
  NormalForm via_right;  // reduce at site 1 first
  bool resolved;
};

inline const char* to_string(AmbiguityInstance::Type t) {
  switch (t) {
    case AmbiguityInstance::Type::Triple:
      return "triple";
    case AmbiguityInstance::Type::SwapCancel:
      return "swap-cancel";
    case AmbiguityInstance::Type::CancelSwap:
      return "cancel-swap";
    case AmbiguityInstance::Type::Cancel:
      return "cancel";
  }
  return "?";
}

struct AmbiguityReport {
  std::vector<AmbiguityInstance> instances;

  std::size_t unresolved_count() const {
    std::size_t count = 0;
    for (const auto& inst : instances) count += inst.resolved ? 0 : 1;
    return count;
  }

  bool all_resolved() const { return unresolved_count() == 0; }
};

class RewriteSystem {
 public:
  // Throws ValidationError when the datum is invalid.
  explicit RewriteSystem(TgwDatum datum) : datum_(std::move(datum)) {
    ValidationReport report = validate_datum(datum_);
    if (!report.ok()) throw ValidationError(report.issues.front().message);
    const std::size_t n = datum_.degree();
    rules_.resize(n * n * 4, Fraction(datum_.ring_ptr()));
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo + 1; hi < n; ++hi) {
        Fraction base = tau(datum_, lo, hi);
        for (int s_hi : {1, -1}) {
          for (int s_lo : {1, -1}) {
            GroupElement shift(n);
            shift[hi] = (s_hi - 1) / 2;
            shift[lo] = (s_lo - 1) / 2;
            rules_[rule_slot(hi, s_hi, lo, s_lo)] =
                datum_.apply_sigma(shift, base.pow(s_hi * s_lo));
          }
        }
      }
    }
  }

  const TgwDatum& datum() const noexcept { return datum_; }
  std::size_t degree() const noexcept { return datum_.degree(); }

  // Coefficient c of X_hi^{s_hi} X_lo^{s_lo} -> c X_lo^{s_lo} X_hi^{s_hi}, lo < hi.
  const Fraction& swap_coefficient(std::size_t hi, int hi_sign, std::size_t lo,
                                   int lo_sign) const {
    if (lo >= hi || hi >= degree()) throw IndexError("swap rule needs lo < hi <= n");
    return rules_[rule_slot(hi, hi_sign, lo, lo_sign)];
  }

  bool is_redex(const Word& w, std::size_t site) const {
    const Letter& a = w[site];
    const Letter& b = w[site + 1];
    return a.index > b.index || (a.index == b.index && a.sign == -b.sign);
  }

  std::optional<WeightedWord> reduce_step(const WeightedWord& w, std::size_t site) const {
    if (site + 1 >= w.word.size()) {
      throw InvalidSite("no adjacent pair at site " + std::to_string(site) + " in a word of length " +
                        std::to_string(w.word.size()));
    }
    check_letters(w.word);
    if (!is_redex(w.word, site)) return std::nullopt;
    return apply_at(w, site);
  }

  NormalForm normalize(WeightedWord w, Strategy strategy = Strategy::leftmost()) const {
    check_letters(w.word);
    std::mt19937_64 rng(strategy.seed());
    std::vector<std::size_t> sites;
    for (;;) {
      sites.clear();
      for (std::size_t s = 0; s + 1 < w.word.size(); ++s) {
        if (is_redex(w.word, s)) sites.push_back(s);
      }
      if (sites.empty()) break;
      std::size_t site = 0;
      switch (strategy.kind()) {
        case Strategy::Kind::Leftmost:
          site = sites.front();
          break;
        case Strategy::Kind::Rightmost:
          site = sites.back();
          break;
        case Strategy::Kind::Random:
          site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
          break;
      }
      w = apply_at(w, site);
    }
    return NormalForm{std::move(w.coeff), degree_of(w.word, degree())};
  }

  AmbiguityReport check_ambiguities() const {
    using Type = AmbiguityInstance::Type;
    AmbiguityReport report;
    const std::size_t n = degree();
    const int signs[] = {1, -1};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (int sc : signs) {
            for (int sb : signs) {
              for (int sa : signs) {
                report.instances.push_back(resolve(Type::Triple, {{c, sc}, {b, sb}, {a, sa}}));
              }
            }
          }
        }
        for (int sb : signs) {
          for (int sa : signs) {
            report.instances.push_back(resolve(Type::SwapCancel, {{b, sb}, {a, sa}, {a, -sa}}));
            report.instances.push_back(resolve(Type::CancelSwap, {{b, sb}, {b, -sb}, {a, sa}}));
          }
        }
      }
      for (int s : signs) {
        report.instances.push_back(resolve(Type::Cancel, {{a, s}, {a, -s}, {a, s}}));
      }
    }
    return report;
  }

 private:
  static std::size_t sign_bit(int s) { return s > 0 ? 0 : 1; }

  std::size_t rule_slot(std::size_t hi, int hi_sign, std::size_t lo, int lo_sign) const {
    return ((hi * degree() + lo) * 2 + sign_bit(hi_sign)) * 2 + sign_bit(lo_sign);
  }

  void check_letters(const Word& w) const {
    for (const Letter& l : w) {
      if (l.index >= degree() || (l.sign != 1 && l.sign != -1)) {
        throw IndexError("invalid letter in word");
      }
    }
  }

  WeightedWord apply_at(const WeightedWord& w, std::size_t site) const {
    const Letter a = w.word[site];
    const Letter b = w.word[site + 1];
    WeightedWord out{w.coeff, {}};
    out.word.reserve(w.word.size());
    out.word.insert(out.word.end(), w.word.begin(), w.word.begin() + site);
    if (a.index == b.index) {
      out.word.insert(out.word.end(), w.word.begin() + site + 2, w.word.end());
      return out;
    }
    const Fraction& c = rules_[rule_slot(a.index, a.sign, b.index, b.sign)];
    Word prefix(w.word.begin(), w.word.begin() + site);
    out.coeff = w.coeff * datum_.apply_sigma(degree_of(prefix, degree()), c);
    out.word.push_back(b);
    out.word.push_back(a);
    out.word.insert(out.word.end(), w.word.begin() + site + 2, w.word.end());
    return out;
  }

  AmbiguityInstance resolve(AmbiguityInstance::Type type, Word word) const {
    WeightedWord start{Fraction::constant(datum_.ring_ptr(), 1), word};
    NormalForm left = normalize(apply_at(start, 0));
    NormalForm right = normalize(apply_at(start, 1));
    bool same = left == right;
    return AmbiguityInstance{type, std::move(word), std::move(left), std::move(right), same};
  }

  TgwDatum datum_;
  std::vector<Fraction> rules_;
};

inline std::optional<WeightedWord> reduce_step(const RewriteSystem& rs, const WeightedWord& w,
                                               std::size_t site) {
  return rs.reduce_step(w, site);
}

inline NormalForm normalize(const RewriteSystem& rs, WeightedWord w,
                            Strategy strategy = Strategy::leftmost()) {
  return rs.normalize(std::move(w), strategy);
}

inline AmbiguityReport check_ambiguities(const RewriteSystem& rs) {
  return rs.check_ambiguities();
}

}  // namespace tgw

#endif  // TGW_REWRITE_HPP_
