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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace tgw;
using namespace tgw::testing;

namespace {

// The pair defect evaluated at a point from its definition, using only
// point evaluation of the generator images.
Rational rel1_at(const TgwDatum& d, std::size_t i, std::size_t j, const std::vector<Rational>& pt) {
  const Substitution& si = d.sigma(i).forward();
  const Substitution& sj = d.sigma(j).forward();
  auto sigma_i_pt = pull_point(si, pt);
  auto sigma_ij_pt = pull_point(sj, sigma_i_pt);  // sigma_i(sigma_j(x)) evaluated at pt
  auto sigma_j_pt = pull_point(sj, pt);
  Rational lhs = eval(d.t(i), sigma_ij_pt) * eval(d.t(j), sigma_ij_pt);
  Rational rhs = d.mu(i, j) * d.mu(j, i) * eval(d.t(i), sigma_i_pt) * eval(d.t(j), sigma_j_pt);
  return lhs - rhs;
}

Rational rel2_at(const TgwDatum& d, std::size_t i, std::size_t j, std::size_t k,
                 const std::vector<Rational>& pt) {
  auto si = pull_point(d.sigma(i).forward(), pt);
  auto sk = pull_point(d.sigma(k).forward(), pt);
  auto sik = pull_point(d.sigma(k).forward(), si);
  return eval(d.t(j), pt) * eval(d.t(j), sik) - eval(d.t(j), si) * eval(d.t(j), sk);
}

TgwDatum gp2_with_mu12(const Rational& m) {
  TgwDatum g = gallery("gp2");
  ParameterMatrix mu = g.mu();
  mu.set(0, 1, m);
  return TgwDatum(g.ring_ptr(), {g.sigma(0), g.sigma(1)}, {g.t(0), g.t(1)}, mu);
}

}  // namespace

TEST_CASE("gallery data are valid", "[datum]") {
  for (const auto& name : gallery_names()) {
    INFO(name);
    CHECK(validate_datum(gallery(name)).ok());
  }
  CHECK_THROWS_AS(gallery("nope"), IoError);
}

TEST_CASE("triv3 automorphisms commute on every generator", "[datum]") {
  TgwDatum d = gallery("triv3");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t v = 0; v < d.ring().size(); ++v) {
        Polynomial x = Polynomial::variable(d.ring_ptr(), v);
        CHECK(d.sigma(i).forward()(d.sigma(j).forward()(x)) == d.sigma(j).forward()(d.sigma(i).forward()(x)));
      }
    }
  }
}

TEST_CASE("validate_datum reports violations", "[datum]") {
  RingPtr r = polynomial_ring({"t1", "t2"});
  Polynomial t1 = P("t1", r), t2 = P("t2", r);
  RingAutomorphism s1(Substitution(r, r, {t1, P("2*t2", r)}), Substitution(r, r, {t1, P("1/2*t2", r)}));
  RingAutomorphism s2(Substitution(r, r, {t1, P("t2 + 1", r)}), Substitution(r, r, {t1, P("t2 - 1", r)}));

  ValidationReport bad = validate_datum(TgwDatum(r, {s1, s2}, {t1, t2}, ParameterMatrix(2)));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.issues.front().kind == ValidationIssue::Kind::NonCommuting);
  CHECK(bad.issues.front().generator == "t2");

  ValidationReport zero = validate_datum(TgwDatum(r, {s1, s1}, {Polynomial(r), t2}, ParameterMatrix(2)));
  REQUIRE_FALSE(zero.ok());
  CHECK(zero.issues.front().kind == ValidationIssue::Kind::ZeroT);
  CHECK(zero.issues.front().indices == std::vector<std::size_t>{0});

  RingAutomorphism broken(Substitution(r, r, {t1, P("2*t2", r)}), Substitution(r, r, {t1, t2}));
  ValidationReport inv = validate_datum(TgwDatum(r, {broken, s1}, {t1, t2}, ParameterMatrix(2)));
  REQUIRE_FALSE(inv.ok());
  CHECK(inv.issues.front().kind == ValidationIssue::Kind::BadInverse);
}

TEST_CASE("parameter matrix", "[datum]") {
  ParameterMatrix mu(3);
  CHECK(mu(0, 2) == 1);
  CHECK_THROWS_AS(mu.set(0, 1, 0), ValidationError);
  CHECK_THROWS_AS(mu(1, 1), IndexError);
  CHECK_THROWS_AS(mu(0, 3), IndexError);
}

TEST_CASE("apply_sigma", "[datum]") {
  TgwDatum triv = gallery("triv3");
  const RingPtr& r = triv.ring_ptr();
  CHECK(triv.apply_sigma(triv.e(0), P("t2", r)) == P("a12*t2", r));
  CHECK(triv.apply_sigma(triv.e(0), P("a23", r)) == P("-a23", r));

  TgwDatum qt = gallery("qt2");
  CHECK(apply_sigma(qt, GroupElement{1, 1}, P("t2", qt.ring_ptr())) == P("2*t2", qt.ring_ptr()));
  CHECK(apply_sigma(qt, GroupElement{-3, 2}, P("t1*t2", qt.ring_ptr())) == P("9/8*t1*t2", qt.ring_ptr()));

  TgwDatum gp = gallery("gp2");
  Polynomial u = P("u1^2*u2 + u1", gp.ring_ptr());
  CHECK(apply_sigma(gp, gp.zero(), u) == u);
  CHECK(apply_sigma(gp, GroupElement{2, -1}, u) == P("u1^2*u2 + u1^2 - 4*u1*u2 - 3*u1 + 4*u2 + 2", gp.ring_ptr()));
}

TEST_CASE("apply_sigma is a group action", "[datum][property]") {
  Rng rng(29);
  for (const auto& name : gallery_names()) {
    TgwDatum d = gallery(name);
    for (int k = 0; k < 30; ++k) {
      GroupElement g = random_degree(d.degree(), 2, rng);
      GroupElement h = random_degree(d.degree(), 2, rng);
      Polynomial p = random_polynomial(d.ring_ptr(), rng);
      CHECK(d.apply_sigma(g + h, p) == d.apply_sigma(g, d.apply_sigma(h, p)));
    }
  }
}

TEST_CASE("consistency of the gallery", "[datum]") {
  ConsistencyReport qt = check_consistency(gallery("qt2"));
  CHECK(qt.verdict == Verdict::Consistent);
  CHECK(qt.pair_defects.size() == 2);
  CHECK(qt.triple_defects.empty());
  CHECK_FALSE(qt.witness);

  CHECK(check_consistency(gallery("gp2")).verdict == Verdict::Consistent);

  TgwDatum triv = gallery("triv3");
  ConsistencyReport r = check_consistency(triv);
  CHECK(r.verdict == Verdict::TrivialAlgebra);
  CHECK(r.pair_defects.size() == 6);
  CHECK(r.triple_defects.size() == 6);
  for (const auto& [k, p] : r.pair_defects) CHECK(p.is_zero());
  for (const auto& [k, p] : r.triple_defects) {
    CHECK_FALSE(p.is_zero());
    CHECK(is_unit(p));
  }
  REQUIRE(r.witness);
  CHECK(r.witness->relation == Witness::Relation::Triple);
  CHECK(r.witness->indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.witness->value == P("-2*a12*a23^-1*t2^2", triv.ring_ptr()));
  CHECK(r.witness->value.to_string() == "-2*a12*a23^-1*t2^2");
}

TEST_CASE("a non-unit defect is undetermined", "[datum]") {
  TgwDatum d = gp2_with_mu12(2);
  ConsistencyReport r = check_consistency(d);
  CHECK(r.verdict == Verdict::Undetermined);
  CHECK_FALSE(r.witness);
  CHECK(r.pair_defects.at({0, 1}) == P("-u1*u2 + u1 + u2 - 1", d.ring_ptr()));
}

TEST_CASE("defects agree with pointwise evaluation", "[datum][oracle]") {
  Rng rng(31);
  std::vector<TgwDatum> data{gallery("qt2"), gallery("gp2"), gallery("triv3"), gp2_with_mu12(Rational(-3, 5))};
  for (int k = 0; k < 10; ++k) data.push_back(random_monomial_datum(2 + k % 2, rng).datum);
  for (const auto& d : data) {
    ConsistencyReport r = check_consistency(d);
    for (int s = 0; s < 3; ++s) {
      auto pt = random_point(d.ring_ptr(), rng);
      for (const auto& [key, p] : r.pair_defects) CHECK(eval(p, pt) == rel1_at(d, key.first, key.second, pt));
      for (const auto& [key, p] : r.triple_defects) CHECK(eval(p, pt) == rel2_at(d, key[0], key[1], key[2], pt));
    }
  }
}

TEST_CASE("verdict soundness and consistency on random data", "[datum][property]") {
  Rng rng(37);
  for (int k = 0; k < 40; ++k) {
    TgwDatum d = random_monomial_datum(2 + k % 2, rng).datum;
    ConsistencyReport r = check_consistency(d);
    bool all_zero = true;
    for (const auto& [key, p] : r.pair_defects) all_zero = all_zero && p.is_zero();
    for (const auto& [key, p] : r.triple_defects) all_zero = all_zero && p.is_zero();
    CHECK((r.verdict == Verdict::Consistent) == all_zero);
    if (r.verdict == Verdict::TrivialAlgebra) {
      REQUIRE(r.witness);
      CHECK(is_unit(r.witness->value));
    }
  }
}

TEST_CASE("verdict is invariant under renaming", "[datum][property]") {
  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    TgwDatum d = random_monomial_datum(3, rng).datum;
    std::string renamed = datum_to_json(d).dump();
    for (std::size_t v = d.ring().size(); v-- > 0;) {
      const std::string& from = d.ring()[v].name;
      std::string to = "z" + std::to_string(d.ring().size() - v) + "_" + from;
      std::string out;
      for (std::size_t pos = 0; pos < renamed.size();) {
        bool boundary_before = pos == 0 || !(std::isalnum(static_cast<unsigned char>(renamed[pos - 1])) || renamed[pos - 1] == '_');
        std::size_t end = pos + from.size();
        bool boundary_after = end >= renamed.size() || !std::isalnum(static_cast<unsigned char>(renamed[end]));
        if (boundary_before && renamed.compare(pos, from.size(), from) == 0 && boundary_after) {
          out += to;
          pos = end;
        } else {
          out += renamed[pos++];
        }
      }
      renamed = out;
    }
    TgwDatum e = datum_from_json_text(renamed);
    CHECK(check_consistency(d).verdict == check_consistency(e).verdict);
  }
}

TEST_CASE("tau", "[datum]") {
  TgwDatum qt = gallery("qt2");
  const RingPtr& r = qt.ring_ptr();
  CHECK(tau(qt, 0, 1) == Fraction::constant(r, 3));
  CHECK(tau(qt, 1, 0) == Fraction::constant(r, Rational(1, 3)));
  CHECK((tau(qt, 0, 1) * tau(qt, 1, 0)).is_one());
  CHECK_THROWS_AS(tau(qt, 0, 0), IndexError);
  CHECK_THROWS_AS(tau(qt, 0, 2), IndexError);

  TgwDatum triv = gallery("triv3");
  CHECK(tau(triv, 0, 1) == Fraction(P("a12^-1", triv.ring_ptr())));
}

TEST_CASE("tau reformulation of the relations", "[datum][property]") {
  Rng rng(43);
  std::vector<TgwDatum> data{gallery("qt2"), gallery("gp2"), gallery("triv3"), gp2_with_mu12(2)};
  for (int k = 0; k < 30; ++k) data.push_back(random_monomial_datum(2 + k % 2, rng).datum);
  for (const auto& d : data) {
    ConsistencyReport r = check_consistency(d);
    const std::size_t n = d.degree();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK((tau(d, i, j) * tau(d, j, i)).is_one() == r.pair_defects.at({i, j}).is_zero());
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          bool fixed = d.apply_sigma(d.e(k), tau(d, i, j)) == tau(d, i, j);
          CHECK(fixed == r.triple_defects.at({i, j, k}).is_zero());
        }
      }
    }
  }
}

TEST_CASE("morphisms", "[datum]") {
  TgwDatum qt = gallery("qt2");
  const RingPtr& r = qt.ring_ptr();
  CHECK(validate_morphism(qt, qt, Substitution::identity(r)).ok());
  ValidationReport bad = validate_morphism(qt, qt, Substitution(r, r, {P("t1^2", r), P("t2", r)}));
  REQUIRE_FALSE(bad.ok());
  bool saw_t = false;
  for (const auto& issue : bad.issues) saw_t = saw_t || issue.kind == ValidationIssue::Kind::TMismatch;
  CHECK(saw_t);

  TgwDatum gp = gallery("gp2");
  json doc = gallery_json("gp2").value();
  std::string text = doc.dump();
  for (const char* from : {"u1", "u2"}) {
    for (std::size_t pos; (pos = text.find(from)) != std::string::npos;) text[pos] = 'v';
  }
  TgwDatum gpv = datum_from_json_text(text);
  Substitution rename(gp.ring_ptr(), gpv.ring_ptr(), {P("v1", gpv.ring_ptr()), P("v2", gpv.ring_ptr())});
  CHECK(validate_morphism(gp, gpv, rename).ok());
  CHECK_NOTHROW(DatumMorphism(gp, gpv, rename));
  CHECK_THROWS_AS(DatumMorphism(qt, qt, Substitution(r, r, {P("t1^2", r), P("t2", r)})), InvalidMorphism);
}
