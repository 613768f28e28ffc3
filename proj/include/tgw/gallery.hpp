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

// Built-in data.
//
//   triv3  n = 3 over Q[a12^+-1, a13^+-1, a23^+-1, t1^+-1, t2^+-1, t3^+-1],
//          mu = 1, sigma_i(t_j) = a_ij t_j (a_ji = a_ij^-1, a_ii = 1), and
//          sigma_i(a_jk) = -a_jk exactly when {i,j,k} = {1,2,3}.
//          The pair relations hold but every triple relation fails with a
//          unit defect, so the algebra is zero.
//   qt2    quantum torus: n = 2 over Q[t1^+-1, t2^+-1], sigma_1(t2) = 2 t2,
//          sigma_2(t1) = 3 t1, mu_12 = 6, mu_21 = 1. Consistent.
//   gp2    product of two classical GWAs: n = 2 over Q[u1, u2], t_i = u_i,
//          sigma_i(u_i) = u_i - 1, mu = 1. Consistent.

#ifndef TGW_GALLERY_HPP_
#define TGW_GALLERY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgw/json_io.hpp"

namespace tgw {

inline const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"gp2", "qt2", "triv3"};
  return names;
}

inline std::optional<json> gallery_json(std::string_view name) {
  if (name == "triv3") {
    json vars = json::array();
    for (const char* v : {"a12", "a13", "a23", "t1", "t2", "t3"}) {
      vars.push_back({{"name", v}, {"invertible", true}});
    }
    return json{
        {"variables", vars},
        {"n", 3},
        {"sigma",
         {{{"forward", {{"a23", "-a23"}, {"t2", "a12*t2"}, {"t3", "a13*t3"}}},
           {"backward", {{"a23", "-a23"}, {"t2", "a12^-1*t2"}, {"t3", "a13^-1*t3"}}}},
          {{"forward", {{"a13", "-a13"}, {"t1", "a12^-1*t1"}, {"t3", "a23*t3"}}},
           {"backward", {{"a13", "-a13"}, {"t1", "a12*t1"}, {"t3", "a23^-1*t3"}}}},
          {{"forward", {{"a12", "-a12"}, {"t1", "a13^-1*t1"}, {"t2", "a23^-1*t2"}}},
           {"backward", {{"a12", "-a12"}, {"t1", "a13*t1"}, {"t2", "a23*t2"}}}}}},
        {"t", {"t1", "t2", "t3"}},
        {"mu", {{"1,2", "1"}, {"1,3", "1"}, {"2,1", "1"}, {"2,3", "1"}, {"3,1", "1"}, {"3,2", "1"}}},
    };
  }
  if (name == "qt2") {
    return json{
        {"variables", {{{"name", "t1"}, {"invertible", true}}, {{"name", "t2"}, {"invertible", true}}}},
        {"n", 2},
        {"sigma",
         {{{"forward", {{"t2", "2*t2"}}}, {"backward", {{"t2", "1/2*t2"}}}},
          {{"forward", {{"t1", "3*t1"}}}, {"backward", {{"t1", "1/3*t1"}}}}}},
        {"t", {"t1", "t2"}},
        {"mu", {{"1,2", "6"}, {"2,1", "1"}}},
    };
  }
  if (name == "gp2") {
    return json{
        {"variables", {{{"name", "u1"}, {"invertible", false}}, {{"name", "u2"}, {"invertible", false}}}},
        {"n", 2},
        {"sigma",
         {{{"forward", {{"u1", "u1 - 1"}}}, {"backward", {{"u1", "u1 + 1"}}}},
          {{"forward", {{"u2", "u2 - 1"}}}, {"backward", {{"u2", "u2 + 1"}}}}}},
        {"t", {"u1", "u2"}},
        {"mu", {{"1,2", "1"}, {"2,1", "1"}}},
    };
  }
  return std::nullopt;
}

// Throws IoError for an unknown name.
inline TgwDatum gallery(std::string_view name) {
  auto doc = gallery_json(name);
  if (!doc) throw IoError("unknown gallery datum '" + std::string(name) + "'");
  return datum_from_json(*doc);
}

}  // namespace tgw

#endif  // TGW_GALLERY_HPP_
