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

// Reference computations for the tests. Each is the textbook definition
// written out directly, sharing no code with the library beyond reading a
// multiplication table.

#ifndef SEMIGROUP_LAB_TESTS_ORACLES_HPP_
#define SEMIGROUP_LAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "semigroup_lab/constructions.hpp"
#include "semigroup_lab/core.hpp"
#include "semigroup_lab/words.hpp"

namespace oracle {

  using semigroup_lab::element_index;
  using semigroup_lab::FiniteSemigroup;

  // C_0 = 1, C_{n+1} = sum_{i=0..n} C_i C_{n-i}.
  inline std::uint64_t catalan(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        c[k] += c[i] * c[k - 1 - i];
      }
    }
    return c[n];
  }

  inline element_index naive_power(FiniteSemigroup const& s,
                                   element_index          x,
                                   std::size_t            e) {
    element_index p = x;
    for (std::size_t i = 1; i < e; ++i) {
      p = s.product(p, x);
    }
    return p;
  }

  inline bool associative(FiniteSemigroup const& s) {
    for (element_index a = 0; a < s.size(); ++a) {
      for (element_index b = 0; b < s.size(); ++b) {
        for (element_index c = 0; c < s.size(); ++c) {
          if (s.product(s.product(a, b), c) != s.product(a, s.product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // The principal ideals xS^1, S^1x and S^1xS^1 as sets.
  inline std::set<element_index> right_ideal(FiniteSemigroup const& s, element_index x) {
    std::set<element_index> r{x};
    for (element_index t = 0; t < s.size(); ++t) {
      r.insert(s.product(x, t));
    }
    return r;
  }

  inline std::set<element_index> left_ideal(FiniteSemigroup const& s, element_index x) {
    std::set<element_index> r{x};
    for (element_index t = 0; t < s.size(); ++t) {
      r.insert(s.product(t, x));
    }
    return r;
  }

  inline std::set<element_index> two_sided_ideal(FiniteSemigroup const& s,
                                                 element_index          x) {
    std::set<element_index> r;
    for (auto y : left_ideal(s, x)) {
      for (auto z : right_ideal(s, y)) {
        r.insert(z);
      }
    }
    return r;
  }

  // x R y iff xS^1 = yS^1, etc; related(x, y) as a full n x n matrix.
  template <typename Ideal>
  std::vector<bool> relation_from_ideals(FiniteSemigroup const& s, Ideal ideal) {
    std::size_t const n = s.size();
    std::vector<std::set<element_index>> ideals;
    for (element_index x = 0; x < n; ++x) {
      ideals.push_back(ideal(s, x));
    }
    std::vector<bool> rel(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        rel[x * n + y] = ideals[x] == ideals[y];
      }
    }
    return rel;
  }

  // The class sizes of the equivalence relation rel, sorted.
  inline std::multiset<std::size_t> class_sizes(std::vector<bool> const& rel,
                                                std::size_t              n) {
    std::multiset<std::size_t> sizes;
    std::vector<bool>          seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x]) {
        continue;
      }
      std::size_t count = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (rel[x * n + y]) {
          seen[y] = true;
          ++count;
        }
      }
      sizes.insert(count);
    }
    return sizes;
  }

  // Every pair (a, b) checked: f(ab) = f(a) f(b).
  inline bool is_homomorphism(std::vector<element_index> const& f,
                              FiniteSemigroup const&            s,
                              FiniteSemigroup const&            t) {
    for (element_index a = 0; a < s.size(); ++a) {
      for (element_index b = 0; b < s.size(); ++b) {
        if (f[s.product(a, b)] != t.product(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  // Small builtins used by the property suites; all comfortably under 1100
  // elements.
  inline std::vector<std::string> property_builtins() {
    return {"semilattice:1", "semilattice:2", "semilattice:3", "cyclic:1",
            "cyclic:2",      "cyclic:3",      "cyclic:6",      "b2",
            "b21",           "ic:1",          "ic:2",          "ic:3",
            "ic:4",          "t:1:2",         "t:2:2",         "t:3:2"};
  }

  // Does s satisfy lhs == rhs? Plain odometer over all substitutions of the
  // variables in order of first occurrence, evaluating each side from scratch.
  // Returns the first failing substitution, or an empty vector if none.
  inline std::optional<std::vector<element_index>> naive_counterexample(
      FiniteSemigroup const&          s,
      semigroup_lab::Identity const& id) {
    auto const vars = id.variables();
    std::vector<element_index> value(vars.size(), 0);
    auto eval = [&](semigroup_lab::Word const& w) {
      element_index acc = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto const pos = static_cast<std::size_t>(
            std::find(vars.begin(), vars.end(), w[i]) - vars.begin());
        acc = i == 0 ? value[pos] : s.product(acc, value[pos]);
      }
      return acc;
    };
    while (true) {
      if (eval(id.lhs) != eval(id.rhs)) {
        return value;
      }
      std::size_t d = vars.size();
      while (d > 0) {
        --d;
        if (++value[d] < s.size()) {
          break;
        }
        value[d] = 0;
        if (d == 0) {
          return std::nullopt;
        }
      }
    }
  }

  // Every two occurrences (not only consecutive ones) of a repeated variable
  // have a variable occurring once in w strictly between them.
  inline bool sparse(semigroup_lab::Word const& w) {
    auto count = [&](std::string const& v) {
      return std::count(w.letters().begin(), w.letters().end(), v);
    };
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        if (w[p] != w[q]) {
          continue;
        }
        bool linear_between = false;
        for (std::size_t r = p + 1; r < q; ++r) {
          linear_between = linear_between || count(w[r]) == 1;
        }
        if (!linear_between) {
          return false;
        }
      }
    }
    return true;
  }

  // All words of length 1..max_length over the first `letters` names of
  // {x, y, z, t, ...} in which variables first occur in alphabetical order,
  // i.e. one representative per renaming class.
  inline std::vector<semigroup_lab::Word> canonical_words(std::size_t max_length,
                                                          std::size_t letters) {
    std::vector<std::string> const names{"x", "y", "z", "t", "s", "r"};
    std::vector<semigroup_lab::Word> out;
    std::vector<std::size_t>         digits;
    auto recurse = [&](auto&& self, std::size_t used) -> void {
      if (!digits.empty()) {
        std::vector<std::string> w;
        for (auto d : digits) {
          w.push_back(names[d]);
        }
        out.emplace_back(w);
      }
      if (digits.size() == max_length) {
        return;
      }
      for (std::size_t d = 0; d <= std::min(used, letters - 1); ++d) {
        digits.push_back(d);
        self(self, std::max(used, d + 1));
        digits.pop_back();
      }
    };
    recurse(recurse, 0);
    return out;
  }

}  // namespace oracle

#endif  // SEMIGROUP_LAB_TESTS_ORACLES_HPP_
