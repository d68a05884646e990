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

// Concrete semigroups: partial transformations of a chain (and the monoids
// IC_m of extensive, order preserving partial injections), 0/1 matrices over
// the two-element field (B_2, B_2^1, upper triangular T_n(2)), chains and
// cyclic groups, plus the row-monomial embedding of IC_4 into T_4(2).

#ifndef SEMIGROUP_LAB_CONSTRUCTIONS_HPP_
#define SEMIGROUP_LAB_CONSTRUCTIONS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace semigroup_lab {

  ////////////////////////////////////////////////////////////////////////
  // Partial transformations
  ////////////////////////////////////////////////////////////////////////

  // A partial map of [m] = {1, ..., m}, written on the right: i(ab) = (ia)b.
  class PartialTransformation {
   public:
    static constexpr std::size_t max_degree = 255;

    // The empty map of degree m.
    explicit PartialTransformation(std::size_t degree) : _image(degree, 0) {
      if (degree == 0 || degree > max_degree) {
        throw Error(ErrorKind::invalid_argument,
                    "degree " + std::to_string(degree) + " out of range");
      }
    }

    // images[i - 1] is the image of i, 1-based, or nullopt if undefined.
    explicit PartialTransformation(
        std::vector<std::optional<std::size_t>> const& images)
        : PartialTransformation(images.size()) {
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i]) {
          set(i + 1, *images[i]);
        }
      }
    }

    static PartialTransformation
    from_pairs(std::size_t                                              degree,
               std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
      PartialTransformation result(degree);
      for (auto [i, j] : pairs) {
        result.set(i, j);
      }
      return result;
    }

    static PartialTransformation identity(std::size_t degree) {
      PartialTransformation result(degree);
      for (std::size_t i = 1; i <= degree; ++i) {
        result.set(i, i);
      }
      return result;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _image.size();
    }

    [[nodiscard]] std::optional<std::size_t> at(std::size_t i) const {
      check_point(i);
      if (_image[i - 1] == 0) {
        return std::nullopt;
      }
      return _image[i - 1];
    }

    void set(std::size_t i, std::size_t j) {
      check_point(i);
      check_point(j);
      _image[i - 1] = static_cast<std::uint8_t>(j);
    }

    void unset(std::size_t i) {
      check_point(i);
      _image[i - 1] = 0;
    }

    [[nodiscard]] bool is_injective() const {
      std::vector<bool> hit(degree() + 1, false);
      for (auto j : _image) {
        if (j != 0) {
          if (hit[j]) {
            return false;
          }
          hit[j] = true;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_order_preserving() const {
      std::uint8_t last = 0;
      for (auto j : _image) {
        if (j != 0) {
          if (j < last) {
            return false;
          }
          last = j;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_extensive() const {
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_image[i] != 0 && _image[i] < i + 1) {
          return false;
        }
      }
      return true;
    }

    // "[2,-,4,-]": the image of 1, 2, ..., with - for undefined.
    [[nodiscard]] std::string to_string() const {
      std::string result = "[";
      for (std::size_t i = 0; i < degree(); ++i) {
        if (i != 0) {
          result += ",";
        }
        result += _image[i] == 0 ? std::string("-") : std::to_string(_image[i]);
      }
      return result + "]";
    }

    auto operator<=>(PartialTransformation const&) const = default;

   private:
    friend PartialTransformation compose(PartialTransformation const&,
                                         PartialTransformation const&);

    void check_point(std::size_t i) const {
      if (i == 0 || i > degree()) {
        throw Error(ErrorKind::invalid_argument,
                    "point " + std::to_string(i) + " outside [1, "
                        + std::to_string(degree()) + "]");
      }
    }

    std::vector<std::uint8_t> _image;  // 0 = undefined
  };

  // Apply a, then b.
  inline PartialTransformation compose(PartialTransformation const& a,
                                       PartialTransformation const& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorKind::invalid_argument,
                  "degree mismatch: " + std::to_string(a.degree()) + " and "
                      + std::to_string(b.degree()));
    }
    PartialTransformation result(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
      std::uint8_t const j = a._image[i];
      result._image[i]     = j == 0 ? 0 : b._image[j - 1];
    }
    return result;
  }

  inline PartialTransformation operator*(PartialTransformation const& a,
                                         PartialTransformation const& b) {
    return compose(a, b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices over GF(2)
  ////////////////////////////////////////////////////////////////////////

  // n x n matrix over the two-element field, n <= 8, packed row-major into
  // one word: row i is byte i, entry (i, j) is bit j of that byte (0-based).
  class BinaryMatrix {
   public:
    static constexpr std::size_t max_dimension = 8;

    explicit BinaryMatrix(std::size_t n) : _n(static_cast<std::uint8_t>(n)) {
      if (n == 0 || n > max_dimension) {
        throw Error(ErrorKind::invalid_argument,
                    "matrix dimension " + std::to_string(n) + " out of range");
      }
    }

    static BinaryMatrix identity(std::size_t n) {
      BinaryMatrix result(n);
      for (std::size_t i = 0; i < n; ++i) {
        result.set(i, i, true);
      }
      return result;
    }

    // Matrix unit with a single 1 at (i, j), 1-based like E_ij.
    static BinaryMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
      BinaryMatrix result(n);
      result.set(i - 1, j - 1, true);
      return result;
    }

    static BinaryMatrix from_rows(std::vector<std::vector<int>> const& rows) {
      BinaryMatrix result(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
          throw Error(ErrorKind::invalid_argument, "matrix is not square");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
          if (rows[i][j] != 0 && rows[i][j] != 1) {
            throw Error(ErrorKind::invalid_argument,
                        "matrix entries must be 0 or 1");
          }
          result.set(i, j, rows[i][j] == 1);
        }
      }
      return result;
    }

    [[nodiscard]] std::size_t dimension() const noexcept {
      return _n;
    }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept {
      return (_bits >> (8 * i + j)) & 1U;
    }

    void set(std::size_t i, std::size_t j, bool value) noexcept {
      std::uint64_t const mask = std::uint64_t{1} << (8 * i + j);
      _bits                    = value ? (_bits | mask) : (_bits & ~mask);
    }

    [[nodiscard]] std::uint8_t row_bits(std::size_t i) const noexcept {
      return static_cast<std::uint8_t>(_bits >> (8 * i));
    }

    [[nodiscard]] bool is_upper_triangular() const noexcept {
      for (std::size_t i = 1; i < _n; ++i) {
        // bits 0 .. i-1 of row i lie below the diagonal
        if (row_bits(i) & ((1U << i) - 1)) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_row_monomial() const noexcept {
      for (std::size_t i = 0; i < _n; ++i) {
        std::uint8_t const r = row_bits(i);
        if (r & (r - 1)) {
          return false;
        }
      }
      return true;
    }

    // "0100/0010/0001/0000", rows top to bottom.
    [[nodiscard]] std::string to_string() const {
      std::string result;
      for (std::size_t i = 0; i < _n; ++i) {
        if (i != 0) {
          result += "/";
        }
        for (std::size_t j = 0; j < _n; ++j) {
          result += get(i, j) ? '1' : '0';
        }
      }
      return result;
    }

    auto operator<=>(BinaryMatrix const&) const = default;

    friend BinaryMatrix operator*(BinaryMatrix const& a, BinaryMatrix const& b) {
      if (a._n != b._n) {
        throw Error(ErrorKind::invalid_argument, "dimension mismatch");
      }
      BinaryMatrix result(a._n);
      for (std::size_t i = 0; i < a._n; ++i) {
        std::uint8_t const r   = a.row_bits(i);
        std::uint8_t       acc = 0;
        for (std::size_t k = 0; k < a._n; ++k) {
          if ((r >> k) & 1U) {
            acc ^= b.row_bits(k);
          }
        }
        result._bits |= std::uint64_t{acc} << (8 * i);
      }
      return result;
    }

   private:
    std::uint8_t  _n;
    std::uint64_t _bits = 0;
  };

  // E11, E12, ..., 0 and 1 for the 2 x 2 matrices that have names in B_2^1,
  // the row string otherwise.
  inline std::string matrix_label(BinaryMatrix const& a) {
    if (a.dimension() == 2) {
      if (a == BinaryMatrix(2)) {
        return "0";
      }
      if (a == BinaryMatrix::identity(2)) {
        return "1";
      }
      for (std::size_t i = 1; i <= 2; ++i) {
        for (std::size_t j = 1; j <= 2; ++j) {
          if (a == BinaryMatrix::unit(2, i, j)) {
            return "E" + std::to_string(i) + std::to_string(j);
          }
        }
      }
    }
    return a.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_ic_degree = 8;
  inline constexpr std::size_t max_tn2_dimension = 4;

  // Every partial map of [m] (all (m+1)^m of them, the image of 1 varying
  // slowest) filtered to the injective, order preserving, extensive ones.
  inline ConcreteSemigroup<PartialTransformation> build_ic(std::size_t m) {
    if (m == 0 || m > max_ic_degree) {
      throw Error(ErrorKind::invalid_argument,
                  "m out of range: IC_m needs 1 <= m <= "
                      + std::to_string(max_ic_degree));
    }
    std::vector<PartialTransformation> elements;
    std::vector<std::size_t>           digits(m, 0);
    while (true) {
      // Defined images strictly increasing and >= their point is exactly
      // injective + order preserving + extensive; this skips building the
      // (m+1)^m candidates that fail.
      bool        admissible = true;
      std::size_t last       = 0;
      for (std::size_t i = 0; i < m && admissible; ++i) {
        if (digits[i] != 0) {
          admissible = digits[i] > last && digits[i] >= i + 1;
          last       = digits[i];
        }
      }
      if (admissible) {
        PartialTransformation alpha(m);
        for (std::size_t i = 0; i < m; ++i) {
          if (digits[i] != 0) {
            alpha.set(i + 1, digits[i]);
          }
        }
        elements.push_back(alpha);
      }
      std::size_t pos = m;
      while (pos > 0 && digits[pos - 1] == m) {
        digits[--pos] = 0;
      }
      if (pos == 0) {
        break;
      }
      ++digits[pos - 1];
    }
    return tabulate(
        std::move(elements),
        [](auto const& a, auto const& b) { return a * b; },
        [](auto const& a) { return a.to_string(); });
  }

  inline ConcreteSemigroup<BinaryMatrix> build_b2() {
    std::vector<BinaryMatrix> elements = {BinaryMatrix::unit(2, 1, 1),
                                          BinaryMatrix::unit(2, 1, 2),
                                          BinaryMatrix::unit(2, 2, 1),
                                          BinaryMatrix::unit(2, 2, 2),
                                          BinaryMatrix(2)};
    return tabulate(
        std::move(elements),
        [](auto const& a, auto const& b) { return a * b; },
        matrix_label);
  }

  inline ConcreteSemigroup<BinaryMatrix> build_b21() {
    auto b2 = build_b2();
    b2.elements.push_back(BinaryMatrix::identity(2));
    return tabulate(
        std::move(b2.elements),
        [](auto const& a, auto const& b) { return a * b; },
        matrix_label);
  }

  // All upper triangular n x n matrices over GF(2), enumerated by counting
  // through the n(n+1)/2 entries on and above the diagonal.
  inline ConcreteSemigroup<BinaryMatrix> build_tn2(std::size_t n) {
    if (n == 0 || n > max_tn2_dimension) {
      throw Error(ErrorKind::invalid_argument,
                  "n out of range: T_n(2) needs 1 <= n <= "
                      + std::to_string(max_tn2_dimension));
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        free.emplace_back(i, j);
      }
    }
    std::vector<BinaryMatrix> elements;
    for (std::size_t code = 0; code < (std::size_t{1} << free.size()); ++code) {
      BinaryMatrix a(n);
      for (std::size_t b = 0; b < free.size(); ++b) {
        a.set(free[b].first, free[b].second, (code >> b) & 1U);
      }
      elements.push_back(a);
    }
    return tabulate(
        std::move(elements),
        [](auto const& a, auto const& b) { return a * b; },
        [](auto const& a) { return a.to_string(); });
  }

  // {0, ..., n-1} under min.
  inline FiniteSemigroup build_semilattice_chain(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::invalid_argument, "n must be positive");
    }
    std::vector<std::string>   labels;
    std::vector<element_index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("e" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<element_index>(std::min(a, b));
      }
    }
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

  // Z_n under addition; element g_i is i.
  inline FiniteSemigroup build_cyclic(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::invalid_argument, "n must be positive");
    }
    std::vector<std::string>   labels;
    std::vector<element_index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("g" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<element_index>((a + b) % n);
      }
    }
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and the IC_4 embedding
  ////////////////////////////////////////////////////////////////////////

  struct HomomorphismCheck {
    bool ok = true;
    // First (a, b) in row-major order with f(ab) != f(a)f(b).
    std::optional<std::pair<element_index, element_index>> counterexample;
    std::size_t                                            pairs_checked = 0;
  };

  inline HomomorphismCheck verify_homomorphism(std::vector<element_index> const& f,
                                               FiniteSemigroup const&            s,
                                               FiniteSemigroup const&            t) {
    if (f.size() != s.size()) {
      throw Error(ErrorKind::invalid_argument, "map is not total on the source");
    }
    for (auto y : f) {
      if (y >= t.size()) {
        throw Error(ErrorKind::invalid_argument, "map value outside the target");
      }
    }
    HomomorphismCheck result;
    for (element_index a = 0; a < s.size(); ++a) {
      for (element_index b = 0; b < s.size(); ++b) {
        ++result.pairs_checked;
        if (f[s.product(a, b)] != t.product(f[a], f[b])) {
          result.ok             = false;
          result.counterexample = {a, b};
          return result;
        }
      }
    }
    return result;
  }

  // a_ij = 1 iff i alpha = j.
  inline BinaryMatrix transformation_matrix(PartialTransformation const& alpha) {
    BinaryMatrix a(alpha.degree());
    for (std::size_t i = 1; i <= alpha.degree(); ++i) {
      if (auto j = alpha.at(i)) {
        a.set(i - 1, *j - 1, true);
      }
    }
    return a;
  }

  struct Ic4Embedding {
    ConcreteSemigroup<PartialTransformation> source;  // IC_4
    ConcreteSemigroup<BinaryMatrix>          target;  // T_4(2)
    std::vector<BinaryMatrix>                images;
    std::vector<element_index>               map;  // source index -> target index
  };

  inline Ic4Embedding embed_ic4() {
    Ic4Embedding result{build_ic(4), build_tn2(4), {}, {}};
    std::map<BinaryMatrix, element_index> position;
    for (element_index i = 0; i < result.target.elements.size(); ++i) {
      position.emplace(result.target.elements[i], i);
    }
    for (auto const& alpha : result.source.elements) {
      auto a  = transformation_matrix(alpha);
      auto it = position.find(a);
      if (it == position.end()) {
        throw Error(ErrorKind::internal,
                    "internal error: image of " + alpha.to_string()
                        + " is not upper triangular");
      }
      result.images.push_back(a);
      result.map.push_back(it->second);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Builtin names
  ////////////////////////////////////////////////////////////////////////

  // "ic:m", "b2", "b21", "t:n:2", "semilattice:n", "cyclic:n".
  inline std::optional<FiniteSemigroup> try_builtin(std::string_view name) {
    auto suffix = [&](std::string_view prefix) -> std::optional<std::size_t> {
      if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
      }
      return detail::parse_size(name.substr(prefix.size()));
    };
    if (name == "b2") {
      return build_b2().semigroup;
    }
    if (name == "b21") {
      return build_b21().semigroup;
    }
    if (auto m = suffix("ic:")) {
      return build_ic(*m).semigroup;
    }
    if (name.size() > 4 && name.substr(0, 2) == "t:"
        && name.substr(name.size() - 2) == ":2") {
      if (auto n = detail::parse_size(name.substr(2, name.size() - 4))) {
        return build_tn2(*n).semigroup;
      }
    }
    if (auto n = suffix("semilattice:")) {
      return build_semilattice_chain(*n);
    }
    if (auto n = suffix("cyclic:")) {
      return build_cyclic(*n);
    }
    return std::nullopt;
  }

  inline FiniteSemigroup builtin(std::string_view name) {
    if (auto s = try_builtin(name)) {
      return std::move(*s);
    }
    throw Error(ErrorKind::invalid_argument,
                "unknown builtin \"" + std::string(name) + "\"");
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_CONSTRUCTIONS_HPP_
