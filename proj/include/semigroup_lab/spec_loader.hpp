/*
 *   Copyright 2026 The semigroup-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Loading semigroups named on the command line: either a builtin name
// ("ic:4", "t:4:2", ...) or a JSON spec file of one of the kinds
//
//   {"kind": "builtin", "name": "b21"}
//   {"kind": "partial_transformations", "generators": [[2, null, 4, null]]}
//   {"kind": "matrices_gf2", "generators": [[[0, 1], [0, 0]]]}
//   {"kind": "cayley", "labels": ["a", "b"], "table": [[0, 0], [1, 1]]}
//
// Transformations list the image of 1, ..., m with values in 1..m and null
// for undefined. Cayley table entries are element indices (0-based) or labels.

#ifndef SEMIGROUP_LAB_SPEC_LOADER_HPP_
#define SEMIGROUP_LAB_SPEC_LOADER_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "constructions.hpp"
#include "core.hpp"
#include "error.hpp"

namespace semigroup_lab {

  struct LoadedSpec {
    FiniteSemigroup semigroup;
    std::string     source;  // builtin name or file path
    std::string     kind;    // builtin | partial_transformations | ...
  };

  namespace detail {

    inline std::string line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      return "line " + std::to_string(line) + ", column " + std::to_string(column);
    }

    [[noreturn]] inline void schema_error(std::string const& where,
                                          std::string const& pointer,
                                          std::string const& what) {
      throw Error(ErrorKind::parse_error,
                  where + ": at " + (pointer.empty() ? "/" : pointer) + ": " + what);
    }

    inline nlohmann::json const& member(nlohmann::json const& j,
                                        char const*           key,
                                        std::string const&    where) {
      if (!j.is_object() || !j.contains(key)) {
        schema_error(where, "", std::string("missing \"") + key + "\"");
      }
      return j.at(key);
    }

    inline FiniteSemigroup load_transformations(nlohmann::json const& gens,
                                                std::string const&    where,
                                                std::size_t           cap) {
      if (!gens.is_array() || gens.empty()) {
        schema_error(where, "/generators", "expected a nonempty array");
      }
      std::vector<PartialTransformation> seeds;
      std::size_t                        degree = 0;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string const at = "/generators/" + std::to_string(g);
        if (!gens[g].is_array() || gens[g].empty()) {
          schema_error(where, at, "expected a nonempty array of images");
        }
        if (degree == 0) {
          degree = gens[g].size();
        } else if (gens[g].size() != degree) {
          schema_error(where, at, "degree differs from the first generator");
        }
        std::vector<std::optional<std::size_t>> images;
        for (std::size_t i = 0; i < degree; ++i) {
          auto const& v = gens[g][i];
          if (v.is_null()) {
            images.emplace_back();
          } else if (v.is_number_unsigned() && v.get<std::size_t>() >= 1
                     && v.get<std::size_t>() <= degree) {
            images.emplace_back(v.get<std::size_t>());
          } else {
            schema_error(where,
                         at + "/" + std::to_string(i),
                         "expected null or an integer in 1.." + std::to_string(degree));
          }
        }
        seeds.emplace_back(images);
      }
      return generate(
          std::span<PartialTransformation const>(seeds),
          [](auto const& a, auto const& b) { return a * b; },
          [](auto const& a) { return a.to_string(); },
          cap);
    }

    inline FiniteSemigroup load_matrices(nlohmann::json const& gens,
                                         std::string const&    where,
                                         std::size_t           cap) {
      if (!gens.is_array() || gens.empty()) {
        schema_error(where, "/generators", "expected a nonempty array");
      }
      std::vector<BinaryMatrix> seeds;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string const at = "/generators/" + std::to_string(g);
        if (!gens[g].is_array() || gens[g].empty()
            || gens[g].size() > BinaryMatrix::max_dimension) {
          schema_error(where, at, "expected an n x n array with 1 <= n <= 8");
        }
        std::vector<std::vector<int>> rows;
        for (std::size_t i = 0; i < gens[g].size(); ++i) {
          auto const& row = gens[g][i];
          if (!row.is_array() || row.size() != gens[g].size()) {
            schema_error(where, at + "/" + std::to_string(i), "row length differs from n");
          }
          rows.emplace_back();
          for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number_unsigned() || row[j].get<unsigned>() > 1) {
              schema_error(where,
                           at + "/" + std::to_string(i) + "/" + std::to_string(j),
                           "expected 0 or 1");
            }
            rows.back().push_back(row[j].get<int>());
          }
        }
        if (!seeds.empty() && seeds.front().dimension() != rows.size()) {
          schema_error(where, at, "dimension differs from the first generator");
        }
        seeds.push_back(BinaryMatrix::from_rows(rows));
      }
      return generate(
          std::span<BinaryMatrix const>(seeds),
          [](auto const& a, auto const& b) { return a * b; },
          matrix_label,
          cap);
    }

    inline FiniteSemigroup load_cayley(nlohmann::json const& j,
                                       std::string const&    where) {
      auto const& labels = member(j, "labels", where);
      auto const& table  = member(j, "table", where);
      if (!labels.is_array() || labels.empty()) {
        schema_error(where, "/labels", "expected a nonempty array of strings");
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i].is_string()) {
          schema_error(where, "/labels/" + std::to_string(i), "expected a string");
        }
        names.push_back(labels[i].get<std::string>());
      }
      std::size_t const n = names.size();
      if (!table.is_array() || table.size() != n) {
        schema_error(where, "/table", "expected " + std::to_string(n) + " rows");
      }
      std::vector<element_index> entries;
      for (std::size_t a = 0; a < n; ++a) {
        std::string const at = "/table/" + std::to_string(a);
        if (!table[a].is_array() || table[a].size() != n) {
          schema_error(where, at, "expected " + std::to_string(n) + " entries");
        }
        for (std::size_t b = 0; b < n; ++b) {
          auto const& v = table[a][b];
          std::optional<std::size_t> index;
          if (v.is_number_unsigned() && v.get<std::size_t>() < n) {
            index = v.get<std::size_t>();
          } else if (v.is_string()) {
            for (std::size_t i = 0; i < n; ++i) {
              if (names[i] == v.get<std::string>()) {
                index = i;
              }
            }
          }
          if (!index) {
            schema_error(where,
                         at + "/" + std::to_string(b),
                         "expected an element index below " + std::to_string(n)
                             + " or a label");
          }
          entries.push_back(static_cast<element_index>(*index));
        }
      }
      try {
        return FiniteSemigroup(std::move(names), std::move(entries));
      } catch (Error const& e) {
        throw Error(e.kind(), where + ": " + e.what());
      }
    }

  }  // namespace detail

  // Parses a spec document; `where` names it in error messages.
  inline LoadedSpec load_spec_json(std::string const& text,
                                   std::string const& where,
                                   std::size_t        cap = default_element_cap) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      // e.what() reads "[json.exception...] parse error at line L, column C:
      // <reason>"; keep only the reason.
      std::string       reason = e.what();
      auto const        colon  = reason.find(": ", reason.find("column"));
      reason = colon == std::string::npos ? std::string() : " (" + reason.substr(colon + 2) + ")";
      throw Error(ErrorKind::parse_error,
                  where + ": " + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1)
                      + ": malformed JSON" + reason);
    }
    auto const& kind_node = detail::member(j, "kind", where);
    if (!kind_node.is_string()) {
      detail::schema_error(where, "/kind", "expected a string");
    }
    std::string const kind = kind_node.get<std::string>();
    if (kind == "builtin") {
      auto const& name = detail::member(j, "name", where);
      if (!name.is_string()) {
        detail::schema_error(where, "/name", "expected a string");
      }
      return {builtin(name.get<std::string>()), where, kind};
    }
    if (kind == "partial_transformations") {
      return {detail::load_transformations(detail::member(j, "generators", where), where, cap),
              where,
              kind};
    }
    if (kind == "matrices_gf2") {
      return {detail::load_matrices(detail::member(j, "generators", where), where, cap),
              where,
              kind};
    }
    if (kind == "cayley") {
      return {detail::load_cayley(j, where), where, kind};
    }
    detail::schema_error(where, "/kind", "unknown kind \"" + kind + "\"");
  }

  // A builtin name, or else a path to a JSON spec file.
  inline LoadedSpec load_spec(std::string const& name_or_path,
                              std::size_t        cap = default_element_cap) {
    if (auto s = try_builtin(name_or_path)) {
      if (s->size() > cap) {
        throw Error(ErrorKind::closure_overflow,
                    "closure overflow: " + name_or_path + " has "
                        + std::to_string(s->size()) + " elements, cap is "
                        + std::to_string(cap));
      }
      return {std::move(*s), name_or_path, "builtin"};
    }
    std::ifstream in(name_or_path);
    if (!in) {
      throw Error(ErrorKind::invalid_argument,
                  "unknown builtin or unreadable file \"" + name_or_path + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_spec_json(buffer.str(), name_or_path, cap);
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_SPEC_LOADER_HPP_
