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

// Explicit finite semigroups given by a full multiplication table, closure
// of a seed set under an arbitrary associative operation, and the power data
// (index, period, idempotent power, subgroup exponent) of every element.

#ifndef SEMIGROUP_LAB_CORE_HPP_
#define SEMIGROUP_LAB_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semigroup_lab {

  using element_index = std::uint32_t;

  inline constexpr std::size_t default_element_cap = 100000;

  // Semigroups up to this size have associativity checked on every triple;
  // larger ones on a seeded random sample of 10 * n^2 triples.
  inline constexpr std::size_t exhaustive_validation_limit = 300;

  enum class ValidationLevel { exhaustive, sampled };

  inline char const* to_string(ValidationLevel level) {
    return level == ValidationLevel::exhaustive ? "exhaustive" : "sampled";
  }

  namespace detail {
    inline std::optional<std::size_t> parse_size(std::string_view text) {
      if (text.empty() || text.size() > 6) {
        return std::nullopt;
      }
      std::size_t value = 0;
      for (char c : text) {
        if (c < '0' || c > '9') {
          return std::nullopt;
        }
        value = value * 10 + static_cast<std::size_t>(c - '0');
      }
      return value;
    }
  }  // namespace detail

  class FiniteSemigroup {
   public:
    FiniteSemigroup(std::vector<std::string>   labels,
                    std::vector<element_index> table)
        : _labels(std::move(labels)), _table(std::move(table)) {
      std::size_t const n = _labels.size();
      if (n == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "not a semigroup: empty element set");
      }
      if (_table.size() != n * n) {
        throw Error(ErrorKind::invalid_argument,
                    "not a semigroup: table has " + std::to_string(_table.size())
                        + " entries, expected " + std::to_string(n * n));
      }
      for (std::size_t i = 0; i < _table.size(); ++i) {
        if (_table[i] >= n) {
          throw Error(ErrorKind::invalid_argument,
                      "not a semigroup: product of " + _labels[i / n] + " and "
                          + _labels[i % n] + " is out of range");
        }
      }
      _lookup.reserve(n);
      for (element_index i = 0; i < n; ++i) {
        if (!_lookup.emplace(_labels[i], i).second) {
          throw Error(ErrorKind::invalid_argument,
                      "duplicate label \"" + _labels[i] + "\"");
        }
      }
      validate_associativity();
      detect_identity();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }

    [[nodiscard]] element_index product(element_index a,
                                        element_index b) const noexcept {
      return _table[static_cast<std::size_t>(a) * size() + b];
    }

    [[nodiscard]] std::string const& label(element_index a) const {
      return _labels[a];
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    [[nodiscard]] std::optional<element_index>
    find(std::string_view label) const {
      auto it = _lookup.find(std::string(label));
      if (it == _lookup.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::optional<element_index> identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    [[nodiscard]] bool is_idempotent(element_index a) const noexcept {
      return product(a, a) == a;
    }

    [[nodiscard]] std::vector<element_index> idempotents() const {
      std::vector<element_index> result;
      for (element_index a = 0; a < size(); ++a) {
        if (is_idempotent(a)) {
          result.push_back(a);
        }
      }
      return result;
    }

    [[nodiscard]] ValidationLevel validation() const noexcept {
      return _validation;
    }

    // Row a of the table, i.e. the products a * b for every b.
    [[nodiscard]] std::span<element_index const> row(element_index a) const {
      return {_table.data() + static_cast<std::size_t>(a) * size(), size()};
    }

    bool operator==(FiniteSemigroup const& that) const {
      return _labels == that._labels && _table == that._table;
    }

   private:
    void validate_associativity() {
      std::size_t const n = size();
      auto check = [this](element_index a, element_index b, element_index c) {
        if (product(product(a, b), c) != product(a, product(b, c))) {
          throw Error(ErrorKind::not_a_semigroup,
                      "not a semigroup: (" + _labels[a] + " " + _labels[b]
                          + ") " + _labels[c] + " != " + _labels[a] + " ("
                          + _labels[b] + " " + _labels[c] + ")");
        }
      };
      if (n <= exhaustive_validation_limit) {
        _validation = ValidationLevel::exhaustive;
        for (element_index a = 0; a < n; ++a) {
          for (element_index b = 0; b < n; ++b) {
            element_index const ab = product(a, b);
            for (element_index c = 0; c < n; ++c) {
              if (product(ab, c) != product(a, product(b, c))) {
                check(a, b, c);
              }
            }
          }
        }
        return;
      }
      _validation = ValidationLevel::sampled;
      std::mt19937_64                              rng(0x5eed5eedULL);
      std::uniform_int_distribution<element_index> pick(0, n - 1);
      std::size_t const                            samples = 10 * n * n;
      for (std::size_t s = 0; s < samples; ++s) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }

    void detect_identity() {
      for (element_index e = 0; e < size(); ++e) {
        bool ok = true;
        for (element_index a = 0; a < size() && ok; ++a) {
          ok = product(e, a) == a && product(a, e) == a;
        }
        if (ok) {
          _identity = e;
          return;
        }
      }
    }

    std::vector<std::string>                       _labels;
    std::vector<element_index>                     _table;
    std::unordered_map<std::string, element_index> _lookup;
    std::optional<element_index>                   _identity;
    ValidationLevel _validation = ValidationLevel::exhaustive;
  };

  // A semigroup together with the carrier values its elements stand for,
  // indexed like the semigroup's elements.
  template <typename T>
  struct ConcreteSemigroup {
    FiniteSemigroup semigroup;
    std::vector<T>  elements;
  };

  // Tabulates the multiplication on a fixed, already closed element list. The
  // element order is kept as given.
  template <typename T, typename Multiply, typename Label>
  ConcreteSemigroup<T> tabulate(std::vector<T> elements,
                                Multiply&&     multiply,
                                Label&&        label) {
    std::map<T, element_index> position;
    for (element_index i = 0; i < elements.size(); ++i) {
      position.emplace(elements[i], i);
    }
    std::size_t const          n = elements.size();
    std::vector<element_index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = position.find(multiply(elements[a], elements[b]));
        if (it == position.end()) {
          throw Error(ErrorKind::not_closed,
                      "element set is not closed under the operation: "
                          + label(elements[a]) + " * " + label(elements[b]));
        }
        table[a * n + b] = it->second;
      }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& x : elements) {
      labels.push_back(label(x));
    }
    return {FiniteSemigroup(std::move(labels), std::move(table)),
            std::move(elements)};
  }

  // Least set containing the seeds and closed under multiply. Elements are
  // numbered in breadth-first discovery order: seeds first (duplicates
  // dropped), then products x * g of known elements with seeds.
  template <typename T, typename Multiply, typename Label>
  ConcreteSemigroup<T> generate_concrete(std::span<T const> seeds,
                                         Multiply&&         multiply,
                                         Label&&            label,
                                         std::size_t cap = default_element_cap) {
    if (seeds.empty()) {
      throw Error(ErrorKind::invalid_argument, "no seed elements");
    }
    std::vector<T>             elements;
    std::map<T, element_index> seen;
    auto                       add = [&](T const& x) {
      if (seen.contains(x)) {
        return;
      }
      if (elements.size() >= cap) {
        throw Error(ErrorKind::closure_overflow,
                    "closure overflow: more than " + std::to_string(cap)
                        + " elements");
      }
      seen.emplace(x, static_cast<element_index>(elements.size()));
      elements.push_back(x);
    };
    for (auto const& s : seeds) {
      add(s);
    }
    std::vector<T> const gens(elements);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(multiply(elements[i], g));
      }
    }
    return tabulate(std::move(elements),
                    std::forward<Multiply>(multiply),
                    std::forward<Label>(label));
  }

  template <typename T, typename Multiply, typename Label>
  FiniteSemigroup generate(std::span<T const> seeds,
                           Multiply&&         multiply,
                           Label&&            label,
                           std::size_t        cap = default_element_cap) {
    return generate_concrete(seeds,
                             std::forward<Multiply>(multiply),
                             std::forward<Label>(label),
                             cap)
        .semigroup;
  }

  // The subsemigroup of s on the given elements, which must be closed. Labels
  // are inherited; element i of the result is elements[i] of s.
  inline FiniteSemigroup induced_subsemigroup(FiniteSemigroup const&     s,
                                              std::vector<element_index> elems) {
    std::vector<element_index> position(s.size(), 0);
    std::vector<bool>          member(s.size(), false);
    for (element_index i = 0; i < elems.size(); ++i) {
      position[elems[i]] = i;
      member[elems[i]]   = true;
    }
    std::size_t const          n = elems.size();
    std::vector<element_index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        element_index const p = s.product(elems[a], elems[b]);
        if (!member[p]) {
          throw Error(ErrorKind::not_closed,
                      "element set is not closed under the operation: "
                          + s.label(elems[a]) + " * " + s.label(elems[b]));
        }
        table[a * n + b] = position[p];
      }
    }
    std::vector<std::string> labels;
    for (auto e : elems) {
      labels.push_back(s.label(e));
    }
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

  inline FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    if (s.is_monoid()) {
      return s;
    }
    std::string fresh = "1";
    while (s.find(fresh)) {
      fresh += "'";
    }
    std::size_t const          n = s.size();
    std::vector<element_index> table((n + 1) * (n + 1));
    for (element_index a = 0; a <= n; ++a) {
      for (element_index b = 0; b <= n; ++b) {
        element_index p;
        if (a == n) {
          p = b;
        } else if (b == n) {
          p = a;
        } else {
          p = s.product(a, b);
        }
        table[a * (n + 1) + b] = p;
      }
    }
    std::vector<std::string> labels = s.labels();
    labels.push_back(fresh);
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

  // Element (a, b) of the product has index a * |t| + b.
  inline FiniteSemigroup direct_product(FiniteSemigroup const& s,
                                        FiniteSemigroup const& t,
                                        std::size_t cap = default_element_cap) {
    std::size_t const n = s.size() * t.size();
    if (n > cap) {
      throw Error(ErrorKind::closure_overflow,
                  "closure overflow: product has " + std::to_string(n)
                      + " elements, cap is " + std::to_string(cap));
    }
    std::size_t const          m = t.size();
    std::vector<element_index> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<element_index>(
            s.product(x / m, y / m) * m + t.product(x % m, y % m));
      }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (element_index a = 0; a < s.size(); ++a) {
      for (element_index b = 0; b < m; ++b) {
        labels.push_back("(" + s.label(a) + "," + t.label(b) + ")");
      }
    }
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

  // x^e for e >= 1.
  inline element_index power(FiniteSemigroup const& s,
                             element_index          x,
                             std::size_t            e) {
    element_index result = x;
    for (std::size_t i = 1; i < e; ++i) {
      result = s.product(result, x);
    }
    return result;
  }

  struct PowerData {
    std::vector<std::size_t> index;
    std::vector<std::size_t> period;
    // Least k >= 1 such that x^k is idempotent for every x.
    std::size_t uniform_k = 1;
    // lcm of the exponents of the maximal subgroups.
    std::size_t subgroup_lcm_m = 1;
  };

  inline PowerData power_data(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    PowerData         data;
    data.index.resize(n);
    data.period.resize(n);
    // exponent_of[y] = e if y = x^e was already seen for the current x.
    std::vector<std::size_t> exponent_of(n, 0);
    std::vector<element_index> touched;
    std::size_t max_index = 1, all_periods = 1;
    for (element_index x = 0; x < n; ++x) {
      element_index p = x;
      std::size_t   e = 1;
      while (exponent_of[p] == 0) {
        exponent_of[p] = e;
        touched.push_back(p);
        p = s.product(p, x);
        ++e;
      }
      data.index[x]  = exponent_of[p];
      data.period[x] = e - exponent_of[p];
      for (auto t : touched) {
        exponent_of[t] = 0;
      }
      touched.clear();
      max_index   = std::max(max_index, data.index[x]);
      all_periods = std::lcm(all_periods, data.period[x]);
      // x lies in a subgroup iff x = x^{1+period}; its order is the period.
      if (data.index[x] == 1) {
        data.subgroup_lcm_m = std::lcm(data.subgroup_lcm_m, data.period[x]);
      }
    }
    data.uniform_k = ((max_index + all_periods - 1) / all_periods) * all_periods;
    return data;
  }

  // True iff x^k is idempotent for every x.
  inline bool is_idempotent_power(FiniteSemigroup const& s, std::size_t k) {
    if (k == 0) {
      return false;
    }
    for (element_index x = 0; x < s.size(); ++x) {
      if (!s.is_idempotent(power(s, x, k))) {
        return false;
      }
    }
    return true;
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_CORE_HPP_
