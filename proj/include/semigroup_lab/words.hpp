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

// Words over named variables, identities between them, and the checks run
// against a finite semigroup: satisfaction by exhaustive substitution,
// bounded isoterm search, and a single application of an identity inside a
// word.
//
// Surface syntax: variables are whitespace separated lowercase alphanumeric
// tokens ("x0 y1 x0"); "x^3" abbreviates "x x x". Identities are written
// "LHS == RHS".

#ifndef SEMIGROUP_LAB_WORDS_HPP_
#define SEMIGROUP_LAB_WORDS_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace semigroup_lab {

  using Variable    = std::string;
  using VariableSet = std::set<Variable>;

  inline bool is_variable_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
  }

  class Word {
   public:
    Word() = default;

    explicit Word(std::vector<Variable> letters) : _letters(std::move(letters)) {
      for (auto const& v : _letters) {
        if (!is_variable_name(v)) {
          throw Error(ErrorKind::parse_error, "invalid variable \"" + v + "\"");
        }
      }
    }

    static Word parse(std::string_view text) {
      std::vector<Variable> letters;
      std::size_t           i = 0;
      auto fail = [&](std::size_t pos, std::string const& what) -> Error {
        return Error(ErrorKind::parse_error,
                     "parse error at position " + std::to_string(pos) + ": "
                         + what);
      };
      while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
          ++i;
          continue;
        }
        std::size_t const start = i;
        while (i < text.size() && is_variable_name(text.substr(i, 1))) {
          ++i;
        }
        if (i == start) {
          throw fail(start, std::string("unexpected character '") + text[i] + "'");
        }
        Variable    name(text.substr(start, i - start));
        std::size_t repeat = 1;
        if (i < text.size() && text[i] == '^') {
          std::size_t const exp_start = ++i;
          repeat                      = 0;
          while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            repeat = repeat * 10 + static_cast<std::size_t>(text[i] - '0');
            if (repeat > 100000) {
              throw fail(exp_start, "exponent too large");
            }
            ++i;
          }
          if (i == exp_start || repeat == 0) {
            throw fail(exp_start, "expected a positive exponent");
          }
        }
        if (i < text.size() && text[i] != ' ' && text[i] != '\t'
            && text[i] != '\n') {
          throw fail(i, std::string("unexpected character '") + text[i] + "'");
        }
        letters.insert(letters.end(), repeat, name);
      }
      return Word(std::move(letters));
    }

    [[nodiscard]] std::vector<Variable> const& letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    [[nodiscard]] Variable const& operator[](std::size_t i) const {
      return _letters[i];
    }

    [[nodiscard]] std::string to_string() const {
      std::string result;
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (i != 0) {
          result += ' ';
        }
        result += _letters[i];
      }
      return result;
    }

    Word& operator+=(Word const& that) {
      _letters.insert(_letters.end(), that._letters.begin(), that._letters.end());
      return *this;
    }

    friend Word operator+(Word a, Word const& b) {
      a += b;
      return a;
    }

    // Concatenation of e copies.
    [[nodiscard]] Word power(std::size_t e) const {
      Word result;
      for (std::size_t i = 0; i < e; ++i) {
        result += *this;
      }
      return result;
    }

    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Variable> _letters;
  };

  // Distinct variables of w in order of first occurrence.
  inline std::vector<Variable> ordered_alphabet(Word const& w) {
    std::vector<Variable> result;
    VariableSet           seen;
    for (auto const& v : w.letters()) {
      if (seen.insert(v).second) {
        result.push_back(v);
      }
    }
    return result;
  }

  inline VariableSet alphabet(Word const& w) {
    return VariableSet(w.letters().begin(), w.letters().end());
  }

  inline std::map<Variable, std::size_t> occurrence_counts(Word const& w) {
    std::map<Variable, std::size_t> result;
    for (auto const& v : w.letters()) {
      ++result[v];
    }
    return result;
  }

  // w(X): w with every occurrence of a variable outside X deleted.
  inline Word project(Word const& w, VariableSet const& keep) {
    std::vector<Variable> letters;
    for (auto const& v : w.letters()) {
      if (keep.contains(v)) {
        letters.push_back(v);
      }
    }
    return Word(std::move(letters));
  }

  // Every two occurrences of a repeated variable have a linear variable
  // strictly between them. Checking consecutive occurrences suffices.
  inline bool is_sparse(Word const& w) {
    auto const                      counts      = occurrence_counts(w);
    std::size_t                     linear_seen = 0;  // linear letters so far
    std::map<Variable, std::size_t> linear_at_last;
    for (auto const& v : w.letters()) {
      if (counts.at(v) == 1) {
        ++linear_seen;
        continue;
      }
      auto it = linear_at_last.find(v);
      if (it != linear_at_last.end() && it->second == linear_seen) {
        return false;
      }
      linear_at_last[v] = linear_seen;
    }
    return true;
  }

  // Number of decompositions w = v' u v'', overlapping ones included.
  inline std::size_t factor_occurrences(Word const& u, Word const& w) {
    if (u.empty()) {
      throw Error(ErrorKind::invalid_argument, "factor must be nonempty");
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
      if (std::equal(u.letters().begin(),
                     u.letters().end(),
                     w.letters().begin() + static_cast<std::ptrdiff_t>(i))) {
        ++count;
      }
    }
    return count;
  }

  struct Identity {
    Word lhs;
    Word rhs;

    Identity() = default;
    Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {
      if (lhs.empty() || rhs.empty()) {
        throw Error(ErrorKind::parse_error, "both sides of an identity must be nonempty");
      }
    }

    static Identity parse(std::string_view text) {
      auto const pos = text.find("==");
      if (pos == std::string_view::npos) {
        throw Error(ErrorKind::parse_error,
                    "parse error at position 0: expected \"LHS == RHS\"");
      }
      if (text.find("==", pos + 2) != std::string_view::npos) {
        throw Error(ErrorKind::parse_error,
                    "parse error at position "
                        + std::to_string(text.find("==", pos + 2))
                        + ": more than one \"==\"");
      }
      Word l, r;
      try {
        l = Word::parse(text.substr(0, pos));
      } catch (Error const& e) {
        throw Error(ErrorKind::parse_error, std::string("left side: ") + e.what());
      }
      try {
        r = Word::parse(text.substr(pos + 2));
      } catch (Error const& e) {
        throw Error(ErrorKind::parse_error,
                    std::string("right side (offset ") + std::to_string(pos + 2)
                        + "): " + e.what());
      }
      return Identity(std::move(l), std::move(r));
    }

    [[nodiscard]] std::string to_string() const {
      return lhs.to_string() + " == " + rhs.to_string();
    }

    // Variables of lhs then rhs, in order of first occurrence.
    [[nodiscard]] std::vector<Variable> variables() const {
      return ordered_alphabet(lhs + rhs);
    }

    bool operator==(Identity const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Satisfaction
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t default_budget = 100'000'000;

  struct SatisfiesOptions {
    // Largest allowed number of substitutions |S|^|variables|.
    std::uint64_t budget = default_budget;
    // Worker threads; 0 means one per hardware thread.
    std::size_t threads = 1;
  };

  struct SatisfiesResult {
    bool                  holds = true;
    std::vector<Variable> variables;
    // On failure, the image of variables[i] is witness[i]. This is the least
    // failing substitution in lexicographic order (variables[0] most
    // significant), independent of the thread count.
    std::optional<std::vector<element_index>> witness;
    std::uint64_t                             substitution_space = 0;
  };

  inline std::size_t resolve_threads(std::size_t threads) {
    if (threads == 0) {
      threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    return threads;
  }

  // |base|^exponent, or nullopt past the uint64 range.
  inline std::optional<std::uint64_t> checked_power(std::uint64_t base,
                                                    std::size_t   exponent) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
        return std::nullopt;
      }
      result *= base;
    }
    return result;
  }

  namespace detail {

    // An identity with variables replaced by their position in variables().
    struct CompiledIdentity {
      std::vector<Variable>                 variables;
      std::vector<std::vector<std::size_t>> sides;  // lhs, rhs
      // restart[s][j]: first position of side s holding a variable of level
      // >= j; prefix products before it survive a change of levels >= j.
      std::vector<std::vector<std::size_t>> restart;

      explicit CompiledIdentity(Identity const& id) : variables(id.variables()) {
        std::map<Variable, std::size_t> level;
        for (std::size_t i = 0; i < variables.size(); ++i) {
          level[variables[i]] = i;
        }
        for (Word const* w : {&id.lhs, &id.rhs}) {
          std::vector<std::size_t> side;
          for (auto const& v : w->letters()) {
            side.push_back(level.at(v));
          }
          std::vector<std::size_t> r(variables.size() + 1, side.size());
          for (std::size_t p = side.size(); p-- > 0;) {
            r[side[p]] = p;
          }
          for (std::size_t j = variables.size(); j-- > 0;) {
            r[j] = std::min(r[j], r[j + 1]);
          }
          sides.push_back(std::move(side));
          restart.push_back(std::move(r));
        }
      }
    };

    class Evaluator {
     public:
      Evaluator(FiniteSemigroup const& s, CompiledIdentity const& id)
          : _s(s), _id(id) {
        for (auto const& side : id.sides) {
          _prefix.emplace_back(side.size());
        }
      }

      // Values of both sides under digits, recomputing only the positions at
      // or after the first occurrence of a level >= changed.
      bool sides_equal(std::vector<element_index> const& digits,
                       std::size_t                       changed) {
        for (std::size_t s = 0; s < 2; ++s) {
          auto const& side = _id.sides[s];
          auto&       pre  = _prefix[s];
          for (std::size_t p = _id.restart[s][changed]; p < side.size(); ++p) {
            element_index const x = digits[side[p]];
            pre[p]                = p == 0 ? x : _s.product(pre[p - 1], x);
          }
        }
        return _prefix[0].back() == _prefix[1].back();
      }

     private:
      FiniteSemigroup const&                  _s;
      CompiledIdentity const&                 _id;
      std::vector<std::vector<element_index>> _prefix;
    };

    // Least failing substitution whose first digit lies in [lo, hi), scanning
    // in lexicographic order. stop_above is lowered by whichever worker
    // finds a witness so others skip first digits that cannot win.
    inline std::optional<std::vector<element_index>>
    scan_range(FiniteSemigroup const&      s,
               CompiledIdentity const&     id,
               element_index               lo,
               element_index               hi,
               std::atomic<element_index>& stop_above) {
      std::size_t const          r = id.variables.size();
      auto const                 n = static_cast<element_index>(s.size());
      Evaluator                  eval(s, id);
      std::vector<element_index> digits(r, 0);
      for (element_index first = lo; first < hi; ++first) {
        if (first > stop_above.load()) {
          return std::nullopt;
        }
        std::fill(digits.begin(), digits.end(), 0);
        digits[0]           = first;
        std::size_t changed = 0;
        while (true) {
          if (!eval.sides_equal(digits, changed)) {
            element_index current = stop_above.load();
            while (first < current
                   && !stop_above.compare_exchange_weak(current, first)) {
            }
            return digits;
          }
          std::size_t level = r;
          while (level > 1 && digits[level - 1] == n - 1) {
            digits[--level] = 0;
          }
          if (level == 1) {
            break;
          }
          ++digits[level - 1];
          changed = level - 1;
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  inline SatisfiesResult satisfies(FiniteSemigroup const&  s,
                                   Identity const&         id,
                                   SatisfiesOptions const& options = {}) {
    detail::CompiledIdentity compiled(id);
    SatisfiesResult          result;
    result.variables = compiled.variables;
    auto space       = checked_power(s.size(), compiled.variables.size());
    if (!space || *space > options.budget) {
      throw Error(ErrorKind::search_too_large,
                  "search too large: " + std::to_string(s.size()) + "^"
                      + std::to_string(compiled.variables.size())
                      + " substitutions exceed the budget of "
                      + std::to_string(options.budget));
    }
    result.substitution_space = *space;

    auto const                 n       = static_cast<element_index>(s.size());
    std::size_t const          workers = std::min<std::size_t>(
        resolve_threads(options.threads), s.size());
    std::atomic<element_index> stop_above(n);
    std::vector<std::optional<std::vector<element_index>>> found(workers);
    auto run = [&](std::size_t w) {
      auto const lo = static_cast<element_index>(s.size() * w / workers);
      auto const hi = static_cast<element_index>(s.size() * (w + 1) / workers);
      found[w]      = detail::scan_range(s, compiled, lo, hi, stop_above);
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(run, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    // Ranges are ordered, so the first worker with a witness holds the least.
    for (auto& f : found) {
      if (f) {
        result.holds   = false;
        result.witness = std::move(f);
        break;
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded isoterm check
  ////////////////////////////////////////////////////////////////////////

  struct IsotermResult {
    // True means: no word v != u over alf(u) of length <= max_length gives an
    // identity u == v of S. It does not certify that u is an isoterm.
    bool                isoterm_up_to_bound = true;
    std::optional<Word> witness;
    std::size_t         candidates_checked = 0;
  };

  // Candidates v are all nonempty words over alf(u) of length <= max_length,
  // shortest first and then lexicographic in u's first-occurrence order; the
  // witness is the first v with S |= u == v.
  inline IsotermResult is_isoterm_bounded(FiniteSemigroup const&  s,
                                          Word const&             u,
                                          std::size_t             max_length,
                                          SatisfiesOptions const& options = {}) {
    if (!s.is_monoid()) {
      throw Error(ErrorKind::precondition,
                  "precondition: isoterm check needs a monoid");
    }
    if (u.empty()) {
      throw Error(ErrorKind::precondition, "precondition: word must be nonempty");
    }
    if (max_length < u.size()) {
      throw Error(ErrorKind::precondition,
                  "precondition: length bound " + std::to_string(max_length)
                      + " is shorter than the word");
    }
    auto const    letters = ordered_alphabet(u);
    IsotermResult result;
    std::mt19937_64 rng(0x15071e5ULL);
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        std::vector<Variable> v;
        for (auto d : digits) {
          v.push_back(letters[d]);
        }
        Word candidate(std::move(v));
        if (candidate != u) {
          ++result.candidates_checked;
          Identity                 id(u, candidate);
          detail::CompiledIdentity compiled(id);
          // A few random substitutions refute most candidates long before the
          // ordered sweep reaches a mismatch.
          detail::Evaluator eval(s, compiled);
          std::uniform_int_distribution<element_index> pick(0, s.size() - 1);
          std::vector<element_index> digits_s(compiled.variables.size());
          bool                       refuted = false;
          for (int trial = 0; trial < 64 && !refuted; ++trial) {
            for (auto& x : digits_s) {
              x = pick(rng);
            }
            refuted = !eval.sides_equal(digits_s, 0);
          }
          if (!refuted && satisfies(s, id, options).holds) {
            result.isoterm_up_to_bound = false;
            result.witness             = std::move(candidate);
            return result;
          }
        }
        std::size_t pos = len;
        while (pos > 0 && digits[pos - 1] + 1 == letters.size()) {
          digits[--pos] = 0;
        }
        if (pos == 0) {
          break;
        }
        ++digits[pos - 1];
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  using WordSubstitution = std::map<Variable, Word>;

  inline Word substitute(Word const& w, WordSubstitution const& phi) {
    Word result;
    for (auto const& v : w.letters()) {
      auto it = phi.find(v);
      if (it == phi.end()) {
        throw Error(ErrorKind::invalid_argument,
                    "substitution does not cover variable " + v);
      }
      if (it->second.empty()) {
        throw Error(ErrorKind::invalid_argument,
                    "substitution maps " + v + " to the empty word");
      }
      result += it->second;
    }
    return result;
  }

  // w = prefix phi(lhs) suffix becomes prefix phi(rhs) suffix.
  inline Word apply_identity(Word const&             w,
                             Identity const&         id,
                             WordSubstitution const& phi,
                             Word const&             prefix,
                             Word const&             suffix) {
    Word const image = substitute(id.lhs, phi);
    if (prefix + image + suffix != w) {
      throw Error(ErrorKind::rule_does_not_apply,
                  "rule does not apply here: " + w.to_string() + " is not "
                      + prefix.to_string() + " [" + image.to_string() + "] "
                      + suffix.to_string());
    }
    return prefix + substitute(id.rhs, phi) + suffix;
  }

  // One line per rewrite step, for traces:
  //   a b a b -> a a b b  by x y == y x with x := b, y := a at 1
  inline std::string describe_step(Word const&             before,
                                   Word const&             after,
                                   Identity const&         id,
                                   WordSubstitution const& phi,
                                   Word const&             prefix) {
    std::string result = before.to_string() + " -> " + after.to_string()
                         + "  by " + id.to_string() + " with ";
    bool first = true;
    for (auto const& v : id.variables()) {
      result += (first ? "" : ", ") + v + " := " + phi.at(v).to_string();
      first = false;
    }
    return result + " at " + std::to_string(prefix.size());
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_WORDS_HPP_
