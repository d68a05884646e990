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

// The identities u_n == v_n = u_n^{m+1} with their variable sets X_n, the
// combinatorial properties P0-P2 of the projections u_n(X_n), the checks
// that an identity of this family holds in a given finite semigroup, and a
// text certificate recording an instance and its verdicts.
//
//   a_n[t] = x^k x_{0t} x^k y_1 x^k x_{1t} x^k ... x^k y_n x^k x_{nt} x^k
//   b_n[t] = x^k z_{0t} x^k y_1 x^k z_{1t} x^k ... x^k y_n x^k z_{nt} x^k
//   u_n    = prod_{i=0..n} a_n[p^i] b_n[p^i],  p = the cycle (0 1 ... n)
//   X_n    = {x_0, y_0, z_0, ..., x_n, y_n, z_n}
//
// y_0 belongs to X_n but occurs nowhere in u_n.

#ifndef SEMIGROUP_LAB_NFB_HPP_
#define SEMIGROUP_LAB_NFB_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "green.hpp"
#include "words.hpp"

namespace semigroup_lab {

  struct NfbInstance {
    std::size_t n = 1;
    std::size_t k = 1;
    std::size_t m = 1;
    Word        u;
    Word        v;
    // X_n in the order x_0, y_0, z_0, x_1, ...
    std::vector<Variable> X;
    // a_n[p^0], b_n[p^0], a_n[p^1], ...
    std::vector<Word>        blocks;
    std::vector<std::string> block_names;

    [[nodiscard]] VariableSet X_set() const {
      return VariableSet(X.begin(), X.end());
    }

    [[nodiscard]] Word projection() const {
      return project(u, X_set());
    }
  };

  inline NfbInstance build_instance(std::size_t n, std::size_t k, std::size_t m) {
    if (n == 0 || k == 0 || m == 0) {
      throw Error(ErrorKind::invalid_argument,
                  "n, k and m must all be positive");
    }
    auto var = [](char family, std::size_t i) {
      return std::string(1, family) + std::to_string(i);
    };
    NfbInstance inst;
    inst.n = n;
    inst.k = k;
    inst.m = m;
    for (std::size_t i = 0; i <= n; ++i) {
      inst.X.push_back(var('x', i));
      inst.X.push_back(var('y', i));
      inst.X.push_back(var('z', i));
    }
    Word const xk = Word({"x"}).power(k);
    auto block = [&](char family, std::size_t shift) {
      // subscript j of the permuted family becomes j p^shift
      auto permuted = [&](std::size_t j) {
        return Word({var(family, (j + shift) % (n + 1))});
      };
      Word w = xk + permuted(0) + xk;
      for (std::size_t j = 1; j <= n; ++j) {
        w += Word({var('y', j)}) + xk + permuted(j) + xk;
      }
      return w;
    };
    for (std::size_t i = 0; i <= n; ++i) {
      for (char family : {'x', 'z'}) {
        inst.blocks.push_back(block(family, i));
        inst.block_names.push_back(std::string(family == 'x' ? "a" : "b")
                                   + "[pi^" + std::to_string(i) + "]");
        inst.u += inst.blocks.back();
      }
    }
    inst.v = inst.u.power(m + 1);
    return inst;
  }

  inline std::size_t expected_u_length(std::size_t n, std::size_t k) {
    return 2 * (n + 1) * ((2 * n + 2) * k + 2 * n + 1);
  }

  struct PropertyCheck {
    bool        ok = true;
    std::string detail;
  };

  inline PropertyCheck check_P0(NfbInstance const& inst) {
    auto const X = inst.X_set();
    if (project(inst.u, X) != project(inst.v, X)) {
      return {true, ""};
    }
    return {false, "u(X) and v(X) coincide"};
  }

  // Every two-letter word yz occurs at most once as a factor of w.
  inline PropertyCheck check_P1_word(Word const& w) {
    std::map<std::pair<Variable, Variable>, std::size_t> first_at;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto [it, fresh] = first_at.emplace(std::pair{w[i], w[i + 1]}, i);
      if (!fresh) {
        return {false,
                "factor \"" + w[i] + " " + w[i + 1] + "\" occurs at positions "
                    + std::to_string(it->second) + " and " + std::to_string(i)};
      }
    }
    return {true, ""};
  }

  inline PropertyCheck check_P1(NfbInstance const& inst) {
    return check_P1_word(inst.projection());
  }

  // For every variable and every pair of its occurrences p < q (not only
  // consecutive ones), at least min_distinct distinct variables occur
  // strictly between positions p and q.
  inline PropertyCheck check_P2_word(Word const& w, std::size_t min_distinct) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      std::map<Variable, std::size_t> between;
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        if (w[q] == w[p] && between.size() < min_distinct) {
          return {false,
                  "only " + std::to_string(between.size())
                      + " distinct variables between occurrences of " + w[p]
                      + " at positions " + std::to_string(p) + " and "
                      + std::to_string(q)};
        }
        ++between[w[q]];
      }
    }
    return {true, ""};
  }

  inline PropertyCheck check_P2(NfbInstance const& inst) {
    return check_P2_word(inst.projection(), inst.n);
  }

  // Checks that k and m meet the assumptions under which u_n == v_n holds in
  // s: x^k idempotent for all x, and every subgroup exponent divides m.
  inline void check_power_parameters(FiniteSemigroup const& s,
                                     std::size_t            k,
                                     std::size_t            m) {
    if (!is_idempotent_power(s, k)) {
      throw Error(ErrorKind::precondition,
                  "precondition: x^" + std::to_string(k)
                      + " is not idempotent for every x");
    }
    auto const pd = power_data(s);
    if (m % pd.subgroup_lcm_m != 0) {
      throw Error(ErrorKind::precondition,
                  "precondition: m = " + std::to_string(m)
                      + " is not a multiple of the subgroup exponent lcm "
                      + std::to_string(pd.subgroup_lcm_m));
    }
  }

  // Exhaustive check of u_n == v_n in s over all |s|^(3n+3) substitutions.
  inline SatisfiesResult verify_holds(FiniteSemigroup const&  s,
                                      NfbInstance const&      inst,
                                      SatisfiesOptions const& options = {}) {
    check_power_parameters(s, inst.k, inst.m);
    return satisfies(s, Identity(inst.u, inst.v), options);
  }

  // u == u^{m+1} for u the concatenation of the factors and m the subgroup
  // exponent lcm of s, where s is in DS, all factors share one alphabet, and
  // there are at least |s| + 2 of them.
  inline SatisfiesResult ds_power_identity_check(FiniteSemigroup const&   s,
                                                 std::vector<Word> const& factors,
                                                 SatisfiesOptions const&  options
                                                 = {}) {
    if (!in_DS(s)) {
      throw Error(ErrorKind::precondition, "not in DS");
    }
    if (factors.empty() || factors.front().empty()) {
      throw Error(ErrorKind::precondition, "too few factors");
    }
    auto const letters = alphabet(factors.front());
    for (auto const& f : factors) {
      if (alphabet(f) != letters) {
        throw Error(ErrorKind::precondition, "alphabets differ");
      }
    }
    if (factors.size() < s.size() + 2) {
      throw Error(ErrorKind::precondition,
                  "too few factors: " + std::to_string(factors.size()) + " < "
                      + std::to_string(s.size() + 2));
    }
    Word u;
    for (auto const& f : factors) {
      u += f;
    }
    auto const m = power_data(s).subgroup_lcm_m;
    return satisfies(s, Identity(u, u.power(m + 1)), options);
  }

  // Variables z with alf(phi(z)) meeting X.
  inline VariableSet substitution_support(WordSubstitution const& phi,
                                          VariableSet const&      X) {
    VariableSet result;
    for (auto const& [z, image] : phi) {
      for (auto const& v : image.letters()) {
        if (X.contains(v)) {
          result.insert(z);
          break;
        }
      }
    }
    return result;
  }

  // The property theta of a word w: w(X_n) = u_n(X_n).
  inline bool has_theta(NfbInstance const& inst, Word const& w) {
    return project(w, inst.X_set()) == inst.projection();
  }

  struct ThetaStep {
    Word after;
    bool preserved = false;
  };

  // Applies an identity of s in fewer than max_rule_variables variables to a
  // word with theta and reports whether theta survives. max_rule_variables is
  // left to the caller: n or n - 2 depending on which bookkeeping is used.
  inline ThetaStep theta_step(FiniteSemigroup const&  s,
                              NfbInstance const&      inst,
                              Word const&             w,
                              Identity const&         rule,
                              WordSubstitution const& phi,
                              Word const&             prefix,
                              Word const&             suffix,
                              std::size_t             max_rule_variables,
                              SatisfiesOptions const& options = {}) {
    if (!has_theta(inst, w)) {
      throw Error(ErrorKind::precondition,
                  "precondition: word does not project onto u(X)");
    }
    if (rule.variables().size() >= max_rule_variables) {
      throw Error(ErrorKind::precondition,
                  "precondition: rule has too many variables");
    }
    if (!satisfies(s, rule, options).holds) {
      throw Error(ErrorKind::precondition,
                  "precondition: rule is not an identity of the semigroup");
    }
    ThetaStep step;
    step.after     = apply_identity(w, rule, phi, prefix, suffix);
    step.preserved = has_theta(inst, step.after);
    return step;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_certificate(NfbInstance const& inst) {
    std::ostringstream out;
    auto               verdict = [](PropertyCheck const& c) {
      return c.ok ? std::string("true") : "false " + c.detail;
    };
    out << "format semigroup-lab-nfb 1\n"
        << "n " << inst.n << "\n"
        << "k " << inst.k << "\n"
        << "m " << inst.m << "\n"
        << "X";
    for (auto const& x : inst.X) {
      out << ' ' << x;
    }
    out << "\n";
    for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
      out << "block " << inst.block_names[i] << ' ' << inst.blocks[i].to_string()
          << "\n";
    }
    out << "u " << inst.u.to_string() << "\n"
        << "v " << inst.v.to_string() << "\n"
        << "projection " << inst.projection().to_string() << "\n"
        << "P0 " << verdict(check_P0(inst)) << "\n"
        << "P1 " << verdict(check_P1(inst)) << "\n"
        << "P2 " << verdict(check_P2(inst)) << "\n";
    return out.str();
  }

  struct CertificateCheck {
    NfbInstance instance;
    bool        matches = false;  // stored words and verdicts reproduce
    std::string detail;
  };

  // Parses a certificate, rebuilds the instance from its n, k, m and compares
  // every stored line against the rebuilt one.
  inline CertificateCheck check_certificate(std::string const& text) {
    std::istringstream                 in(text);
    std::string                        line;
    std::map<std::string, std::string> fields;
    std::vector<std::pair<std::string, std::string>> blocks;
    std::size_t                                      line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto const  space = line.find(' ');
      std::string key   = line.substr(0, space);
      std::string rest  = space == std::string::npos ? "" : line.substr(space + 1);
      if (key == "block") {
        auto const s2 = rest.find(' ');
        if (s2 == std::string::npos) {
          throw Error(ErrorKind::parse_error,
                      "parse error at line " + std::to_string(line_no)
                          + ": malformed block line");
        }
        blocks.emplace_back(rest.substr(0, s2), rest.substr(s2 + 1));
      } else if (!fields.emplace(key, rest).second) {
        throw Error(ErrorKind::parse_error,
                    "parse error at line " + std::to_string(line_no)
                        + ": duplicate field " + key);
      }
    }
    if (fields["format"] != "semigroup-lab-nfb 1") {
      throw Error(ErrorKind::parse_error,
                  "parse error at line 1: not a semigroup-lab-nfb 1 certificate");
    }
    auto number = [&](std::string const& key) {
      auto value = detail::parse_size(fields[key]);
      if (!value || *value == 0) {
        throw Error(ErrorKind::parse_error,
                    "parse error: field " + key + " must be a positive integer");
      }
      return *value;
    };
    CertificateCheck result;
    result.instance = build_instance(number("n"), number("k"), number("m"));
    std::istringstream expected(to_certificate(result.instance));
    std::map<std::string, std::string>               want;
    std::vector<std::pair<std::string, std::string>> want_blocks;
    while (std::getline(expected, line)) {
      auto const  space = line.find(' ');
      std::string key   = line.substr(0, space);
      std::string rest  = line.substr(space + 1);
      if (key == "block") {
        auto const s2 = rest.find(' ');
        want_blocks.emplace_back(rest.substr(0, s2), rest.substr(s2 + 1));
      } else {
        want[key] = rest;
      }
    }
    for (auto const& [key, value] : want) {
      auto it = fields.find(key);
      if (it == fields.end()) {
        result.detail = "missing field " + key;
        return result;
      }
      if (it->second != value) {
        result.detail = "field " + key + " does not reproduce";
        return result;
      }
    }
    if (blocks != want_blocks) {
      result.detail = "blocks do not reproduce";
      return result;
    }
    result.matches = true;
    return result;
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_NFB_HPP_
