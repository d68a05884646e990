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

// Green's relations of a finite semigroup, local submonoids eSe, and
// membership in DS and LDS.
//
// x R y iff x and y are mutually reachable in the right Cayley graph (edges
// x -> xs for all s), so R-classes are its strongly connected components;
// likewise L for the left graph and J for the union of both. D is the join of
// R and L; on every run it is checked to coincide with R∘L, with L∘R, and
// with J.

#ifndef SEMIGROUP_LAB_GREEN_HPP_
#define SEMIGROUP_LAB_GREEN_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace semigroup_lab {

  // Class index per element. Classes are numbered in order of their least
  // element, so two partitions are equal iff their class_of vectors are.
  struct Partition {
    std::vector<std::size_t> class_of;
    std::size_t              count = 0;

    [[nodiscard]] std::vector<std::vector<element_index>> classes() const {
      std::vector<std::vector<element_index>> result(count);
      for (element_index x = 0; x < class_of.size(); ++x) {
        result[class_of[x]].push_back(x);
      }
      return result;
    }

    [[nodiscard]] std::vector<std::size_t> class_sizes() const {
      std::vector<std::size_t> result(count, 0);
      for (auto c : class_of) {
        ++result[c];
      }
      return result;
    }

    bool operator==(Partition const&) const = default;
  };

  namespace detail {

    // Renumbers arbitrary labels so classes appear in order of least element.
    inline Partition normalize(std::vector<std::size_t> const& raw) {
      Partition                             p;
      std::map<std::size_t, std::size_t>    renumber;
      p.class_of.reserve(raw.size());
      for (auto r : raw) {
        auto [it, fresh] = renumber.emplace(r, renumber.size());
        p.class_of.push_back(it->second);
      }
      p.count = renumber.size();
      return p;
    }

    // Iterative Tarjan over the graph on [0, n) whose out-neighbours of v are
    // produced by neighbours(v, callback).
    template <typename Neighbours>
    Partition strongly_connected(std::size_t n, Neighbours&& neighbours) {
      constexpr std::size_t    unvisited = static_cast<std::size_t>(-1);
      std::vector<std::size_t> order(n, unvisited), low(n, 0), comp(n, unvisited);
      std::vector<std::vector<element_index>> adjacency(n);
      for (element_index v = 0; v < n; ++v) {
        neighbours(v, [&](element_index w) { adjacency[v].push_back(w); });
        std::sort(adjacency[v].begin(), adjacency[v].end());
        adjacency[v].erase(std::unique(adjacency[v].begin(), adjacency[v].end()),
                           adjacency[v].end());
      }
      std::vector<element_index>                          stack;
      std::vector<bool>                                   on_stack(n, false);
      std::vector<std::pair<element_index, std::size_t>> frames;
      std::size_t                                         counter = 0, ncomp = 0;
      for (element_index root = 0; root < n; ++root) {
        if (order[root] != unvisited) {
          continue;
        }
        frames.emplace_back(root, 0);
        order[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
          auto& [v, next] = frames.back();
          if (next < adjacency[v].size()) {
            element_index const w = adjacency[v][next++];
            if (order[w] == unvisited) {
              order[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], order[w]);
            }
            continue;
          }
          element_index const done = v;
          frames.pop_back();
          if (!frames.empty()) {
            element_index const parent = frames.back().first;
            low[parent] = std::min(low[parent], low[done]);
          }
          if (low[done] == order[done]) {
            element_index w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = ncomp;
            } while (w != done);
            ++ncomp;
          }
        }
      }
      return normalize(comp);
    }

    inline std::size_t find_root(std::vector<std::size_t>& parent,
                                 std::size_t               x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

  }  // namespace detail

  struct DClassInfo {
    std::vector<element_index> elements;
    bool                       contains_idempotent = false;
    bool                       is_subsemigroup     = false;
  };

  struct GreenData {
    Partition               R, L, J, H, D;
    std::vector<DClassInfo> d_classes;
  };

  inline Partition right_classes(FiniteSemigroup const& s) {
    return detail::strongly_connected(s.size(), [&](element_index x, auto&& out) {
      for (auto y : s.row(x)) {
        out(y);
      }
    });
  }

  inline Partition left_classes(FiniteSemigroup const& s) {
    return detail::strongly_connected(s.size(), [&](element_index x, auto&& out) {
      for (element_index t = 0; t < s.size(); ++t) {
        out(s.product(t, x));
      }
    });
  }

  inline Partition two_sided_classes(FiniteSemigroup const& s) {
    return detail::strongly_connected(s.size(), [&](element_index x, auto&& out) {
      for (element_index t = 0; t < s.size(); ++t) {
        out(s.product(x, t));
        out(s.product(t, x));
      }
    });
  }

  inline Partition intersect(Partition const& a, Partition const& b) {
    std::vector<std::size_t> raw(a.class_of.size());
    for (std::size_t x = 0; x < raw.size(); ++x) {
      raw[x] = a.class_of[x] * b.count + b.class_of[x];
    }
    return detail::normalize(raw);
  }

  // Finest partition coarser than both a and b.
  inline Partition join(Partition const& a, Partition const& b) {
    std::size_t const        n = a.class_of.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> first_a(a.count, n), first_b(b.count, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (auto [p, first] : {std::pair{&a, &first_a}, std::pair{&b, &first_b}}) {
        std::size_t& rep = (*first)[p->class_of[x]];
        if (rep == n) {
          rep = x;
        } else {
          parent[detail::find_root(parent, x)] = detail::find_root(parent, rep);
        }
      }
    }
    std::vector<std::size_t> raw(n);
    for (std::size_t x = 0; x < n; ++x) {
      raw[x] = detail::find_root(parent, x);
    }
    return detail::normalize(raw);
  }

  // True iff "x ~ y iff some z has x first z and z second y" defines exactly
  // the partition d.
  inline bool composition_equals(Partition const& first,
                                 Partition const& second,
                                 Partition const& d) {
    std::size_t const n = d.class_of.size();
    std::vector<bool> meets(first.count * second.count, false);
    for (std::size_t z = 0; z < n; ++z) {
      meets[first.class_of[z] * second.count + second.class_of[z]] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        bool const related
            = meets[first.class_of[x] * second.count + second.class_of[y]];
        if (related != (d.class_of[x] == d.class_of[y])) {
          return false;
        }
      }
    }
    return true;
  }

  inline GreenData green(FiniteSemigroup const& s) {
    GreenData g;
    g.R = right_classes(s);
    g.L = left_classes(s);
    g.J = two_sided_classes(s);
    g.H = intersect(g.R, g.L);
    g.D = join(g.R, g.L);
    if (!composition_equals(g.R, g.L, g.D) || !composition_equals(g.L, g.R, g.D)) {
      throw Error(ErrorKind::internal,
                  "internal error: D differs from R∘L or L∘R");
    }
    if (g.D != g.J) {
      throw Error(ErrorKind::internal, "internal error: D differs from J");
    }
    auto classes = g.D.classes();
    for (auto& elems : classes) {
      DClassInfo info;
      std::vector<bool> member(s.size(), false);
      for (auto x : elems) {
        member[x] = true;
        info.contains_idempotent = info.contains_idempotent || s.is_idempotent(x);
      }
      info.is_subsemigroup = true;
      for (auto a : elems) {
        for (auto b : elems) {
          if (!member[s.product(a, b)]) {
            info.is_subsemigroup = false;
            break;
          }
        }
        if (!info.is_subsemigroup) {
          break;
        }
      }
      info.elements = std::move(elems);
      g.d_classes.push_back(std::move(info));
    }
    return g;
  }

  // D-class indices ordered from the top of the J-order down: a class comes
  // before every class inside the ideal it generates. Ties go to the class
  // with the smaller index.
  inline std::vector<std::size_t> top_down_d_classes(FiniteSemigroup const& s,
                                                     GreenData const&       g) {
    std::size_t const c = g.D.count;
    std::vector<bool> edge(c * c, false);
    std::vector<std::size_t> indegree(c, 0);
    auto link = [&](std::size_t from, std::size_t to) {
      if (from != to && !edge[from * c + to]) {
        edge[from * c + to] = true;
        ++indegree[to];
      }
    };
    for (element_index x = 0; x < s.size(); ++x) {
      for (element_index t = 0; t < s.size(); ++t) {
        link(g.D.class_of[x], g.D.class_of[s.product(x, t)]);
        link(g.D.class_of[x], g.D.class_of[s.product(t, x)]);
      }
    }
    std::vector<std::size_t> order;
    std::vector<bool>        placed(c, false);
    while (order.size() < c) {
      std::size_t next = 0;
      while (placed[next] || indegree[next] != 0) {
        ++next;
      }
      placed[next] = true;
      order.push_back(next);
      for (std::size_t to = 0; to < c; ++to) {
        if (edge[next * c + to]) {
          --indegree[to];
        }
      }
    }
    return order;
  }

  inline bool in_DS(GreenData const& g) {
    return std::all_of(g.d_classes.begin(), g.d_classes.end(), [](auto const& d) {
      return !d.contains_idempotent || d.is_subsemigroup;
    });
  }

  inline bool in_DS(FiniteSemigroup const& s) {
    return in_DS(green(s));
  }

  // eSe, with elements listed in increasing order of their index in s.
  inline std::vector<element_index> local_submonoid_elements(
      FiniteSemigroup const& s,
      element_index          e) {
    if (!s.is_idempotent(e)) {
      throw Error(ErrorKind::not_an_idempotent,
                  "not an idempotent: " + s.label(e));
    }
    std::vector<bool> member(s.size(), false);
    for (element_index x = 0; x < s.size(); ++x) {
      member[s.product(s.product(e, x), e)] = true;
    }
    std::vector<element_index> result;
    for (element_index x = 0; x < s.size(); ++x) {
      if (member[x]) {
        result.push_back(x);
      }
    }
    return result;
  }

  inline FiniteSemigroup local_submonoid(FiniteSemigroup const& s,
                                         element_index          e) {
    return induced_subsemigroup(s, local_submonoid_elements(s, e));
  }

  inline bool in_LDS(FiniteSemigroup const& s) {
    for (auto e : s.idempotents()) {
      if (!in_DS(local_submonoid(s, e))) {
        return false;
      }
    }
    return true;
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_GREEN_HPP_
