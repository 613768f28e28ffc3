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

// JSON documents for data and reports.
//
// Datum schema:
//   {"variables": [{"name": "t1", "invertible": true}, ...],
//    "n": 2,
//    "sigma": [{"forward": {"t2": "2*t2"}, "backward": {"t2": "1/2*t2"}}, ...],
//    "t": ["t1", "t2"],
//    "mu": {"1,2": "6", "2,1": "1"}}
// Omitted generator images are the identity, omitted mu entries are 1.
// Indices in keys are 1-based. Objects are emitted with sorted keys, so the
// same datum or report always serializes to the same bytes.

#ifndef TGW_JSON_IO_HPP_
#define TGW_JSON_IO_HPP_

#include <json.hpp>

#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "tgw/datum.hpp"
#include "tgw/rewrite.hpp"

namespace tgw {

using json = nlohmann::json;

namespace detail {

inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*-?\d+(\s*/\s*\d+)?\s*)");
  if (!std::regex_match(text, pattern)) {
    throw SyntaxError("expected a rational number", text, 0);
  }
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  Rational q;
  q.set_str(compact, 10);
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

inline std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& key, std::size_t n) {
  static const std::regex pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(key, m, pattern)) {
    throw ValidationError("mu key '" + key + "' is not of the form \"i,j\"");
  }
  std::size_t i = std::stoul(m[1]);
  std::size_t j = std::stoul(m[2]);
  if (i == 0 || j == 0 || i > n || j > n || i == j) {
    throw ValidationError("mu key '" + key + "' is not a pair of distinct indices in 1.." +
                          std::to_string(n));
  }
  return {i - 1, j - 1};
}

// Runs `f`, prefixing any library error with a location in the document.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline Substitution images_from_json(const json& obj, const RingPtr& ring, const std::string& path) {
  std::vector<std::optional<Polynomial>> images;
  for (std::size_t v = 0; v < ring->size(); ++v) images.emplace_back(Polynomial::variable(ring, v));
  if (!obj.is_null()) {
    if (!obj.is_object()) throw ValidationError(path + ": expected an object");
    for (const auto& [name, value] : obj.items()) {
      auto index = ring->index_of(name);
      if (!index) throw ValidationError(path + ": unknown variable '" + name + "'");
      images[*index] = at_path(path + "." + name,
                               [&] { return parse_poly(value.get<std::string>(), ring); });
    }
  }
  return at_path(path, [&] { return Substitution(ring, ring, std::move(images)); });
}

inline json images_to_json(const Substitution& s) {
  json out = json::object();
  const RingPtr& ring = s.source();
  for (std::size_t v = 0; v < ring->size(); ++v) {
    const Polynomial& image = *s.image(v);
    if (image != Polynomial::variable(ring, v)) out[(*ring)[v].name] = image.to_string();
  }
  return out;
}

}  // namespace detail

inline TgwDatum datum_from_json(const json& doc) {
  using detail::at_path;
  if (!doc.is_object()) throw ValidationError("datum: expected a JSON object");
  if (!doc.contains("variables") || !doc["variables"].is_array()) {
    throw ValidationError("variables: expected an array");
  }
  std::vector<Variable> vars;
  for (std::size_t k = 0; k < doc["variables"].size(); ++k) {
    const json& v = doc["variables"][k];
    std::string path = "variables[" + std::to_string(k) + "]";
    at_path(path, [&] {
      vars.push_back({v.at("name").get<std::string>(), v.value("invertible", false)});
      return 0;
    });
  }
  RingPtr ring = at_path("variables", [&] { return RingSpec::make(std::move(vars)); });

  std::size_t n = at_path("n", [&] {
    long value = doc.at("n").get<long>();
    if (value <= 0) throw ValidationError("n must be positive");
    return static_cast<std::size_t>(value);
  });

  std::vector<RingAutomorphism> sigma;
  json sigma_doc = doc.value("sigma", json::array());
  if (!sigma_doc.is_array() || sigma_doc.size() > n) {
    throw ValidationError("sigma: expected an array of at most n automorphisms");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string path = "sigma[" + std::to_string(i) + "]";
    json entry = i < sigma_doc.size() ? sigma_doc[i] : json::object();
    if (!entry.is_object()) throw ValidationError(path + ": expected an object");
    Substitution fwd = detail::images_from_json(entry.value("forward", json()), ring, path + ".forward");
    Substitution bwd =
        detail::images_from_json(entry.value("backward", json()), ring, path + ".backward");
    sigma.push_back(at_path(path, [&] { return RingAutomorphism(std::move(fwd), std::move(bwd)); }));
  }

  std::vector<Polynomial> t;
  if (!doc.contains("t") || !doc["t"].is_array() || doc["t"].size() != n) {
    throw ValidationError("t: expected an array of n polynomials");
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back(at_path("t[" + std::to_string(i) + "]",
                        [&] { return parse_poly(doc["t"][i].get<std::string>(), ring); }));
  }

  ParameterMatrix mu(n);
  if (doc.contains("mu")) {
    if (!doc["mu"].is_object()) throw ValidationError("mu: expected an object");
    for (const auto& [key, value] : doc["mu"].items()) {
      auto [i, j] = detail::parse_index_pair(key, n);
      at_path("mu." + key, [&] {
        Rational q = value.is_string() ? detail::parse_rational(value.get<std::string>())
                                       : Rational(value.get<long>());
        mu.set(i, j, q);
        return 0;
      });
    }
  }
  return TgwDatum(ring, std::move(sigma), std::move(t), std::move(mu));
}

inline TgwDatum datum_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("datum is not valid JSON: ") + e.what());
  }
  return datum_from_json(doc);
}

inline json datum_to_json(const TgwDatum& d) {
  json out;
  json vars = json::array();
  for (const auto& v : d.ring().variables()) vars.push_back({{"name", v.name}, {"invertible", v.invertible}});
  out["variables"] = std::move(vars);
  out["n"] = d.degree();
  json sigma = json::array();
  for (std::size_t i = 0; i < d.degree(); ++i) {
    sigma.push_back({{"forward", detail::images_to_json(d.sigma(i).forward())},
                     {"backward", detail::images_to_json(d.sigma(i).backward())}});
  }
  out["sigma"] = std::move(sigma);
  json t = json::array();
  for (std::size_t i = 0; i < d.degree(); ++i) t.push_back(d.t(i).to_string());
  out["t"] = std::move(t);
  json mu = json::object();
  for (std::size_t i = 0; i < d.degree(); ++i) {
    for (std::size_t j = 0; j < d.degree(); ++j) {
      if (i != j) mu[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_string(d.mu(i, j));
    }
  }
  out["mu"] = std::move(mu);
  return out;
}

namespace detail {

inline std::string index_key(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k] + 1);
  }
  return out;
}

inline json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

inline const char* to_string(ValidationIssue::Kind k) {
  using Kind = ValidationIssue::Kind;
  switch (k) {
    case Kind::NonCommuting:
      return "NonCommuting";
    case Kind::ZeroT:
      return "ZeroT";
    case Kind::BadInverse:
      return "BadInverse";
    case Kind::DegreeMismatch:
      return "DegreeMismatch";
    case Kind::MuMismatch:
      return "MuMismatch";
    case Kind::RingMismatch:
      return "RingMismatch";
    case Kind::NotEquivariant:
      return "NotEquivariant";
    case Kind::TMismatch:
      return "TMismatch";
    case Kind::MissingImage:
      return "MissingImage";
  }
  return "?";
}

}  // namespace detail

inline json to_json(const ConsistencyReport& r) {
  json out;
  out["verdict"] = to_string(r.verdict);
  json pairs = json::object();
  for (const auto& [key, p] : r.pair_defects) {
    pairs[detail::index_key({key.first, key.second})] = p.to_string();
  }
  json triples = json::object();
  for (const auto& [key, p] : r.triple_defects) {
    triples[detail::index_key({key[0], key[1], key[2]})] = p.to_string();
  }
  out["pair_defects"] = std::move(pairs);
  out["triple_defects"] = std::move(triples);
  if (r.witness) {
    out["witness"] = r.witness->value.to_string();
    out["witness_relation"] = r.witness->relation == Witness::Relation::Pair ? "pair" : "triple";
    out["witness_indices"] = detail::one_based(r.witness->indices);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline json to_json(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& issue : r.issues) {
    issues.push_back({{"kind", detail::to_string(issue.kind)},
                      {"indices", detail::one_based(issue.indices)},
                      {"generator", issue.generator},
                      {"message", issue.message}});
  }
  return {{"valid", r.ok()}, {"issues", std::move(issues)}};
}

inline json to_json(const NormalForm& nf) {
  return {{"coeff", nf.coeff.to_string()}, {"degree", nf.degree.components()}};
}

inline json to_json(const AmbiguityReport& r) {
  json instances = json::array();
  for (const auto& inst : r.instances) {
    instances.push_back({{"type", to_string(inst.type)},
                         {"word", to_string(inst.word)},
                         {"resolved", inst.resolved},
                         {"via_left", to_json(inst.via_left)},
                         {"via_right", to_json(inst.via_right)}});
  }
  return {{"all_resolved", r.all_resolved()},
          {"unresolved", r.unresolved_count()},
          {"instances", std::move(instances)}};
}

}  // namespace tgw

#endif  // TGW_JSON_IO_HPP_
