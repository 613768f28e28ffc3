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

// Command-line front end.
//
// Exit status: 0 success, 1 the requested property fails (inconsistent
// datum, unresolved ambiguity, failed relation/cocycle check, invalid
// morphism), 2 usage or input errors.

#ifndef TGW_CLI_HPP_
#define TGW_CLI_HPP_

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tgw/algebra.hpp"
#include "tgw/gallery.hpp"
#include "tgw/json_io.hpp"

namespace tgw::cli {

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kUsage = 2 };

// A gallery name or a path to a datum JSON file. The datum is validated;
// the first violated invariant is reported as a ValidationError.
inline TgwDatum load_datum(const std::string& source) {
  TgwDatum d = [&] {
    if (gallery_json(source)) return gallery(source);
    std::ifstream in(source);
    if (!in) throw IoError("'" + source + "' is neither a gallery name nor a readable file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return datum_from_json_text(buffer.str());
  }();
  ValidationReport report = validate_datum(d);
  if (!report.ok()) throw ValidationError(source + ": " + report.issues.front().message);
  return d;
}

namespace detail {

struct Common {
  std::string gallery;
  std::string datum;
  bool json = false;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gallery", gallery, "built-in datum (gp2, qt2, triv3)");
    auto* d = cmd->add_option("--datum", datum, "path to a datum JSON file");
    g->excludes(d);
    cmd->add_flag("--json", json, "machine-readable output");
  }

  TgwDatum load() const {
    if (gallery.empty() && datum.empty()) throw CLI::RequiredError("--gallery or --datum");
    return load_datum(gallery.empty() ? datum : gallery);
  }
};

inline std::size_t to_index(long one_based, std::size_t n, const char* flag) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > n) {
    throw IndexError(std::string(flag) + " must lie in 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(one_based - 1);
}

inline void print(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

inline int run_check(const Common& c, std::ostream& out) {
  TgwDatum d = c.load();
  ConsistencyReport r = check_consistency(d);
  if (c.json) {
    print(out, to_json(r));
  } else {
    out << to_string(r.verdict) << '\n';
    if (r.witness) {
      out << "witness: " << r.witness->value.to_string() << " ("
          << (r.witness->relation == Witness::Relation::Pair ? "pair " : "triple ")
          << tgw::detail::index_key(r.witness->indices) << ")\n";
    }
    for (const auto& [k, p] : r.pair_defects) {
      if (!p.is_zero()) out << "pair " << k.first + 1 << "," << k.second + 1 << ": " << p.to_string() << '\n';
    }
    for (const auto& [k, p] : r.triple_defects) {
      if (!p.is_zero()) {
        out << "triple " << k[0] + 1 << "," << k[1] + 1 << "," << k[2] + 1 << ": " << p.to_string()
            << '\n';
      }
    }
  }
  return r.verdict == Verdict::Consistent ? kOk : kPropertyFails;
}

inline int run_tau(const Common& c, long i, long j, std::ostream& out) {
  TgwDatum d = c.load();
  Fraction value = tau(d, to_index(i, d.degree(), "--i"), to_index(j, d.degree(), "--j"));
  if (c.json) {
    print(out, {{"i", i}, {"j", j}, {"tau", value.to_string()}});
  } else {
    out << value.to_string() << '\n';
  }
  return kOk;
}

inline Strategy parse_strategy(const std::string& name, std::uint64_t seed) {
  if (name == "leftmost") return Strategy::leftmost();
  if (name == "rightmost") return Strategy::rightmost();
  if (name == "random") return Strategy::random(seed);
  throw CLI::ValidationError("--strategy", "expected leftmost, rightmost or random");
}

inline int run_normalize(const Common& c, const std::string& word, const std::string& coeff,
                         const std::string& strategy, std::uint64_t seed, std::ostream& out) {
  TgwDatum d = c.load();
  Strategy s = parse_strategy(strategy, seed);
  RewriteSystem rs(d);
  WeightedWord w{parse_fraction(coeff, d.ring_ptr()), parse_word(word, d.degree())};
  NormalForm nf = rs.normalize(std::move(w), s);
  if (c.json) {
    print(out, to_json(nf));
  } else {
    out << nf.coeff.to_string() << " * u[" << nf.degree.to_string() << "]\n";
  }
  return kOk;
}

inline int run_ambiguities(const Common& c, std::ostream& out) {
  RewriteSystem rs(c.load());
  AmbiguityReport r = rs.check_ambiguities();
  if (c.json) {
    print(out, to_json(r));
  } else {
    if (r.all_resolved()) {
      out << "all " << r.instances.size() << " overlap instances resolve\n";
    } else {
      out << r.unresolved_count() << " of " << r.instances.size() << " overlap instances do not resolve\n";
      for (const auto& inst : r.instances) {
        if (inst.resolved) continue;
        out << to_string(inst.type) << " " << to_string(inst.word) << ": "
            << inst.via_left.coeff.to_string() << " vs " << inst.via_right.coeff.to_string()
            << " at u[" << inst.via_left.degree.to_string() << "]\n";
      }
    }
  }
  return r.all_resolved() ? kOk : kPropertyFails;
}

inline int run_cocycle(const Common& c, const std::string& g, const std::string& h, int box,
                       bool box_given, std::ostream& out) {
  TgwDatum d = c.load();
  if (box_given == (!g.empty() || !h.empty())) {
    throw CLI::ValidationError("cocycle", "give either --g and --h, or --box");
  }
  AlgebraPtr algebra = CrossedProduct::create(d);
  if (box_given) {
    if (box < 0) throw CLI::ValidationError("--box", "must be nonnegative");
    CocycleReport r = verify_cocycle_identities(algebra, box);
    if (c.json) {
      print(out, {{"ok", r.ok()},
                  {"triples_checked", r.triples_checked},
                  {"action_checks", r.action_checks},
                  {"failure_count", r.failure_count},
                  {"failures", r.failures}});
    } else {
      out << (r.ok() ? "pass" : "FAIL") << ": " << r.triples_checked << " triples, "
          << r.action_checks << " action checks, " << r.failure_count << " failures\n";
      for (const auto& f : r.failures) out << "  " << f << '\n';
    }
    return r.ok() ? kOk : kPropertyFails;
  }
  if (g.empty() || h.empty()) throw CLI::ValidationError("cocycle", "--g and --h go together");
  Fraction value = algebra->cocycle(parse_group_element(g, d.degree()), parse_group_element(h, d.degree()));
  if (c.json) {
    print(out, {{"g", g}, {"h", h}, {"alpha", value.to_string()}});
  } else {
    out << value.to_string() << '\n';
  }
  return kOk;
}

inline int run_multiply(const Common& c, const std::string& a, const std::string& b,
                        std::ostream& out) {
  AlgebraPtr algebra = CrossedProduct::create(c.load());
  CrossedElement product = parse_element(a, algebra) * parse_element(b, algebra);
  if (c.json) {
    print(out, {{"product", product.to_string()}});
  } else {
    out << product.to_string() << '\n';
  }
  return kOk;
}

inline int run_relations(const Common& c, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  AlgebraPtr algebra = CrossedProduct::create(c.load());
  RelationReport r = verify_defining_relations(algebra, samples, seed);
  if (c.json) {
    json violations = json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"relation", v.relation},
                            {"indices", tgw::detail::one_based(v.indices)},
                            {"sample", v.sample},
                            {"lhs", v.lhs},
                            {"rhs", v.rhs}});
    }
    print(out, {{"ok", r.ok()}, {"checks", r.checks}, {"violations", violations}});
  } else {
    out << (r.ok() ? "pass" : "FAIL") << ": " << r.checks << " checks, " << r.violations.size()
        << " violations\n";
    for (const auto& v : r.violations) {
      out << "  " << v.relation << " [" << tgw::detail::index_key(v.indices) << "]"
          << (v.sample.empty() ? "" : " r = " + v.sample) << ": " << v.lhs << " != " << v.rhs << '\n';
    }
  }
  return r.ok() ? kOk : kPropertyFails;
}

// "u1=v1, u2=v2^2"
inline Substitution parse_map(const std::string& text, const RingPtr& source, const RingPtr& target) {
  std::vector<std::optional<Polynomial>> images(source->size());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--map", "expected var=poly, got '" + item + "'");
    std::string name(tgw::detail::trim(std::string_view(item).substr(0, eq)));
    auto index = source->index_of(name);
    if (!index) throw UnknownVariable("unknown source variable", name);
    images[*index] = parse_poly(std::string_view(item).substr(eq + 1), target);
  }
  return Substitution(source, target, std::move(images));
}

inline int run_morphism(const Common& c, const std::string& target_source, const std::string& map,
                        const std::string& element, std::ostream& out) {
  TgwDatum d = c.load();
  TgwDatum d2 = load_datum(target_source);
  Substitution phi = parse_map(map, d.ring_ptr(), d2.ring_ptr());
  ValidationReport r = validate_morphism(d, d2, phi);
  std::string image;
  if (r.ok() && !element.empty()) {
    AlgebraPtr src = CrossedProduct::create(d);
    AlgebraPtr dst = CrossedProduct::create(d2);
    DatumMorphism m(d, d2, phi);
    image = induced_map(m, dst, parse_element(element, src)).to_string();
  }
  if (c.json) {
    json doc = to_json(r);
    if (!image.empty()) doc["image"] = image;
    print(out, doc);
  } else {
    out << (r.ok() ? "valid morphism" : "not a morphism") << '\n';
    for (const auto& issue : r.issues) out << "  " << issue.message << '\n';
    if (!image.empty()) out << image << '\n';
  }
  return r.ok() ? kOk : kPropertyFails;
}

inline int run_gallery(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const auto& n : gallery_names()) out << n << '\n';
    return kOk;
  }
  auto doc = gallery_json(name);
  if (!doc) throw IoError("unknown gallery datum '" + name + "'");
  print(out, datum_to_json(datum_from_json(*doc)));
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consistency checks and normal-form arithmetic for twisted generalized Weyl data", "tgw"};
  app.require_subcommand(1);

  detail::Common common;
  long tau_i = 0, tau_j = 0;
  std::string word, coeff = "1", strategy = "leftmost";
  std::uint64_t seed = 0;
  std::string g, h;
  int box = 0;
  std::string a, b;
  std::size_t samples = 20;
  std::string target, map, element;
  std::string gallery_name;

  auto* check = app.add_subcommand("check", "decide the consistency relations");
  auto* tau_cmd = app.add_subcommand("tau", "print tau(i,j) = mu_ij sigma_j(t_j) / sigma_i sigma_j(t_j)");
  tau_cmd->add_option("--i", tau_i, "first index (1-based)")->required();
  tau_cmd->add_option("--j", tau_j, "second index (1-based)")->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "rewrite a word to normal form");
  normalize_cmd->add_option("--word", word, "letters like 'x2 x1 x1^-1'")->required();
  normalize_cmd->add_option("--coeff", coeff, "left coefficient (fraction)");
  normalize_cmd->add_option("--strategy", strategy, "leftmost, rightmost or random");
  normalize_cmd->add_option("--seed", seed, "seed for the random strategy");
  auto* amb = app.add_subcommand("ambiguities", "check every overlap ambiguity");
  auto* cocycle_cmd = app.add_subcommand("cocycle", "evaluate alpha(g,h) or verify the cocycle identities");
  cocycle_cmd->set_help_flag("--help", "Print this help message and exit");
  cocycle_cmd->add_option("--g", g, "e.g. 0,1");
  cocycle_cmd->add_option("--h", h, "e.g. 1,0");
  auto* box_opt = cocycle_cmd->add_option("--box", box, "verify identities on [-box,box]^n");
  auto* multiply = app.add_subcommand("multiply", "multiply two algebra elements");
  multiply->add_option("--a", a, "left factor, e.g. '1 * u[1,0]'")->required();
  multiply->add_option("--b", b, "right factor")->required();
  auto* relations = app.add_subcommand("relations", "verify the defining relations on random samples");
  relations->add_option("--samples", samples, "number of random ring elements");
  relations->add_option("--seed", seed, "random seed");
  auto* morphism = app.add_subcommand("morphism", "validate a morphism of data");
  morphism->add_option("--target", target, "target datum (gallery name or file)")->required();
  morphism->add_option("--map", map, "generator images, e.g. 'u1=v1,u2=v2'")->required();
  morphism->add_option("--element", element, "element to push forward along the morphism");
  auto* gallery_cmd = app.add_subcommand("gallery", "list built-in data or print one as JSON");
  gallery_cmd->add_option("name", gallery_name, "gallery name");

  for (auto* cmd : {check, tau_cmd, normalize_cmd, amb, cocycle_cmd, multiply, relations, morphism}) {
    common.attach(cmd);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tgw: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return detail::run_check(common, out);
    if (tau_cmd->parsed()) return detail::run_tau(common, tau_i, tau_j, out);
    if (normalize_cmd->parsed()) return detail::run_normalize(common, word, coeff, strategy, seed, out);
    if (amb->parsed()) return detail::run_ambiguities(common, out);
    if (cocycle_cmd->parsed()) return detail::run_cocycle(common, g, h, box, box_opt->count() > 0, out);
    if (multiply->parsed()) return detail::run_multiply(common, a, b, out);
    if (relations->parsed()) return detail::run_relations(common, samples, seed, out);
    if (morphism->parsed()) return detail::run_morphism(common, target, map, element, out);
    if (gallery_cmd->parsed()) return detail::run_gallery(gallery_name, out);
  } catch (const InconsistentDatum& e) {
    err << "tgw: " << e.what() << '\n';
    return kPropertyFails;
  } catch (const CLI::Error& e) {
    err << "tgw: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "tgw: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tgw::cli

#endif  // TGW_CLI_HPP_
