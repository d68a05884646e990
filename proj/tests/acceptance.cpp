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

// Acceptance run: one PASS/FAIL line per criterion, each with its own time
// limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semigroup_lab/constructions.hpp"
#include "semigroup_lab/core.hpp"
#include "semigroup_lab/divisor.hpp"
#include "semigroup_lab/error.hpp"
#include "semigroup_lab/green.hpp"
#include "semigroup_lab/nfb.hpp"
#include "semigroup_lab/words.hpp"

using namespace semigroup_lab;

namespace {

  // Time limits in seconds.
  constexpr double catalan_limit    = 5.0;
  constexpr double green_limit      = 1.0;  // per semigroup
  constexpr double isoterm_limit    = 60.0;
  constexpr double nfb_build_limit  = 1.0;
  constexpr double verify_limit     = 30.0;  // per semigroup
  constexpr double embedding_limit  = 5.0;
  constexpr double divisor_limit    = 120.0;
  constexpr double property_limit   = 120.0;

  // The substitution count of u_3 == v_3 over a 2-element semigroup:
  // u_n has 3n + 3 variables (y_0 never occurs), so 2^12.
  constexpr std::uint64_t nfb_n3_substitutions = 4096;

  struct Failure {
    std::string what;
  };

  void require(bool condition, std::string const& what) {
    if (!condition) {
      throw Failure{what};
    }
  }

  double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  // Runs body, which returns a short note; reports PASS/FAIL with timing.
  bool criterion(int number,
                 std::string const&                 title,
                 double                             limit,
                 std::function<std::string()> const& body) {
    auto const  start = std::chrono::steady_clock::now();
    std::string note;
    bool        ok = true;
    try {
      note = body();
    } catch (Failure const& f) {
      ok   = false;
      note = f.what;
    } catch (std::exception const& e) {
      ok   = false;
      note = std::string("exception: ") + e.what();
    }
    double const elapsed = seconds_since(start);
    if (ok && elapsed > limit) {
      ok   = false;
      note = "took longer than the limit";
    }
    std::printf("%s criterion %d: %s [%.3f s, limit %.0f s] %s\n",
                ok ? "PASS" : "FAIL",
                number,
                title.c_str(),
                elapsed,
                limit,
                note.c_str());
    std::fflush(stdout);
    return ok;
  }

  template <typename F>
  void within(double limit, std::string const& what, F&& f) {
    auto const start = std::chrono::steady_clock::now();
    f();
    require(seconds_since(start) <= limit, what + " exceeded its time limit");
  }

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::vector<std::size_t> d_sizes_top_down(FiniteSemigroup const& s) {
    auto const               g = green(s);
    std::vector<std::size_t> sizes;
    for (auto c : top_down_d_classes(s, g)) {
      sizes.push_back(g.d_classes[c].elements.size());
    }
    return sizes;
  }

}  // namespace

int main() {
  int failures = 0;
  auto tally   = [&](bool ok) { failures += ok ? 0 : 1; };

  tally(criterion(1, "IC_m sizes are Catalan numbers for m = 1..6", catalan_limit, [] {
    std::string sizes;
    for (std::size_t m = 1; m <= 6; ++m) {
      auto const size = build_ic(m).semigroup.size();
      require(size == oracle::catalan(m + 1),
              "|IC_" + std::to_string(m) + "| = " + std::to_string(size));
      sizes += (m == 1 ? "" : ",") + std::to_string(size);
    }
    return "sizes " + sizes;
  }));

  tally(criterion(2, "Green structure of IC_4 and B_2^1", 2 * green_limit, [] {
    auto const ic4 = build_ic(4).semigroup;
    auto const b21 = build_b21().semigroup;
    within(green_limit, "IC_4", [&] {
      auto const g = green(ic4);
      require(g.D.count == 42, "IC_4 D-class count " + std::to_string(g.D.count));
      for (auto size : g.D.class_sizes()) {
        require(size == 1, "IC_4 has a D-class of size " + std::to_string(size));
      }
      require(in_LDS(ic4), "IC_4 not in LDS");
    });
    within(green_limit, "B_2^1", [&] {
      require(d_sizes_top_down(b21) == std::vector<std::size_t>{1, 4, 1},
              "B_2^1 D-class sizes differ from 1,4,1");
      require(!in_DS(b21), "B_2^1 in DS");
      require(!in_LDS(b21), "B_2^1 in LDS");
    });
    return std::string("IC_4: 42 singleton D-classes, in LDS; B_2^1: 1,4,1, not in DS/LDS");
  }));

  tally(criterion(3, "sparse words are isoterms of IC_4; x^4 == x^5 holds, x^3 == x^4 fails",
                  isoterm_limit, [] {
    auto const  ic4 = build_ic(4).semigroup;
    std::size_t checked = 0;
    for (auto const& u : oracle::canonical_words(5, 3)) {
      if (!oracle::sparse(u)) {
        continue;
      }
      ++checked;
      auto const r = is_isoterm_bounded(ic4, u, 6, {.threads = 0});
      require(r.isoterm_up_to_bound,
              u.to_string() + " is not an isoterm: witness "
                  + (r.witness ? r.witness->to_string() : "?"));
    }
    require(satisfies(ic4, Identity::parse("x^4 == x^5")).holds, "x^4 == x^5 fails");
    auto const cube = satisfies(ic4, Identity::parse("x^3 == x^4"));
    require(!cube.holds && cube.witness, "x^3 == x^4 holds");
    auto const x = (*cube.witness)[0];
    require(oracle::naive_power(ic4, x, 3) != oracle::naive_power(ic4, x, 4),
            "witness does not refute x^3 == x^4");
    return std::to_string(checked) + " sparse words up to length 6; x^3 == x^4 witness x := "
           + ic4.label(x);
  }));

  tally(criterion(4, "NFB instances pass P0, P1, P2", nfb_build_limit, [] {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t m = 1; m <= 2; ++m) {
          auto const inst = build_instance(n, k, m);
          std::string const at = " at (" + std::to_string(n) + "," + std::to_string(k) + ","
                                 + std::to_string(m) + ")";
          require(check_P0(inst).ok, "P0" + at);
          require(check_P1(inst).ok, "P1" + at + ": " + check_P1(inst).detail);
          require(check_P2(inst).ok, "P2" + at + ": " + check_P2(inst).detail);
        }
      }
    }
    auto const inst = build_instance(1, 1, 1);
    require(inst.u.size() == 28, "|u_1| = " + std::to_string(inst.u.size()));
    require(inst.projection() == Word::parse("x0 y1 x1 z0 y1 z1 x1 y1 x0 z1 y1 z0"),
            "projection " + inst.projection().to_string());
    return std::string("16 instances; |u_1| = 28, projection matches");
  }));

  tally(criterion(5, "u_3 == v_3 holds in the 2-element semilattice and the group of order 2",
                  2 * verify_limit + 1, [] {
    std::string note;
    auto run = [&](char const* name, FiniteSemigroup const& s, std::size_t k, std::size_t m) {
      within(verify_limit, name, [&] {
        auto const r = verify_holds(s, build_instance(3, k, m));
        require(r.holds, std::string(name) + ": identity fails");
        require(r.substitution_space == nfb_n3_substitutions,
                std::string(name) + ": " + std::to_string(r.substitution_space)
                    + " substitutions");
      });
      note += std::string(name) + " ok; ";
    };
    run("semilattice", build_semilattice_chain(2), 1, 1);
    run("C_2", build_cyclic(2), 2, 2);
    require(ds_power_identity_check(build_semilattice_chain(2),
                                    std::vector<Word>(4, Word::parse("x y")))
                .holds,
            "(xy)^4 == (xy)^8 fails in the semilattice");
    require(ds_power_identity_check(build_cyclic(2), std::vector<Word>(4, Word::parse("x"))).holds,
            "x^4 == x^8 fails in C_2");
    try {
      ds_power_identity_check(build_b2().semigroup, std::vector<Word>(7, Word::parse("x")));
      require(false, "B_2 accepted");
    } catch (Error const& e) {
      require(std::string(e.what()) == "not in DS", std::string("B_2: ") + e.what());
    }
    return note + "4096 substitutions each (12 variables); B_2 rejected: not in DS";
  }));

  tally(criterion(6, "IC_4 embeds into T_4(2)", embedding_limit, [] {
    auto const e = embed_ic4();
    std::set<element_index> distinct(e.map.begin(), e.map.end());
    require(distinct.size() == 42, "not injective");
    for (auto const& a : e.images) {
      require(a.is_upper_triangular() && a.is_row_monomial(), "image " + a.to_string());
    }
    auto const check = verify_homomorphism(e.map, e.source.semigroup, e.target.semigroup);
    require(check.ok && check.pairs_checked == 1764, "homomorphism check failed");
    require(oracle::is_homomorphism(e.map, e.source.semigroup, e.target.semigroup),
            "oracle homomorphism check failed");
    return std::string("injective, triangular, row-monomial; 1764 pairs");
  }));

  tally(criterion(7, "divisor search agrees with LDS membership", divisor_limit, [] {
    std::string note;
    for (auto const& name :
         {"b21", "b2", "semilattice:2", "semilattice:3", "cyclic:2", "cyclic:3"}) {
      auto const s = builtin(name);
      auto const r = cross_validate_lds(s, {.max_gens = 3, .threads = 0});
      require(r.verdict != CrossVerdict::hard_failure,
              std::string(name) + ": " + r.explanation);
      note += std::string(name) + ":" + to_string(r.verdict) + " ";
    }
    auto const b2  = build_b2().semigroup;
    auto const b21 = build_b21().semigroup;
    auto const h1  = direct_product(b2, b2);
    auto const w1  = has_divisor(h1, b2, {.max_gens = 2});
    require(w1 && revalidate(h1, b2, *w1), "no re-validated B_2 divisor of B_2 x B_2");
    auto const h2 = direct_product(b21, b21);
    auto const w2 = has_divisor(h2, b21, {.max_gens = 3});
    require(w2 && revalidate(h2, b21, *w2), "no re-validated B_2^1 divisor of B_2^1 x B_2^1");
    return note + "; both product witnesses re-validated";
  }));

  tally(criterion(8, "(ab)^2 to a^2 b^2 replays as one commutativity step", 1.0, [] {
    auto const             comm = Identity::parse("x y == y x");
    WordSubstitution const phi{{"x", Word::parse("b")}, {"y", Word::parse("a")}};
    auto const             before = Word::parse("a b a b");
    auto const after = apply_identity(before, comm, phi, Word::parse("a"), Word::parse("b"));
    require(after == Word::parse("a a b b"), "result " + after.to_string());
    auto const line = describe_step(before, after, comm, phi, Word::parse("a")) + "\n";
    auto const want = slurp(SEMIGROUP_LAB_GOLDEN "/rewrite_abab.txt");
    require(!want.empty(), "golden file missing");
    require(line == want, "trace differs from the golden file: " + line);
    return line.substr(0, line.size() - 1);
  }));

  tally(criterion(9, "property suites on all builtins", property_limit, [] {
    std::size_t semigroups = 0;
    for (auto const& name : oracle::property_builtins()) {
      auto const s = builtin(name);
      auto const g = green(s);
      ++semigroups;
      require(g.H == intersect(g.R, g.L), name + ": H != R meet L");
      require(g.D == g.J, name + ": D != J");
      require(composition_equals(g.R, g.L, g.D) && composition_equals(g.L, g.R, g.D),
              name + ": D != RL or LR");
      // Associativity, identity and power data against the oracles.
      require(oracle::associative(s) || s.size() > 300, name + ": not associative");
      auto const pd = power_data(s);
      for (element_index x = 0; x < s.size(); ++x) {
        require(oracle::naive_power(s, x, pd.index[x] + pd.period[x])
                    == oracle::naive_power(s, x, pd.index[x]),
                name + ": power data");
        require(s.is_idempotent(oracle::naive_power(s, x, pd.uniform_k)),
                name + ": uniform_k");
      }
    }
    // Projection idempotence.
    for (auto const& u : oracle::canonical_words(6, 3)) {
      VariableSet const keep{"x", "z"};
      require(project(project(u, keep), keep) == project(u, keep), "project not idempotent");
    }
    // Thread-count determinism of satisfies and has_divisor.
    auto const ic4 = build_ic(4).semigroup;
    auto const id  = Identity::parse("x y z x == x z y x");
    auto const one = satisfies(ic4, id, {.threads = 1});
    for (std::size_t t : {2, 4, 8}) {
      require(satisfies(ic4, id, {.threads = t}).witness == one.witness,
              "satisfies witness depends on threads");
    }
    auto const b21 = build_b21().semigroup;
    auto const h   = direct_product(b21, b21);
    auto const w1  = has_divisor(h, build_b2().semigroup, {.threads = 1});
    require(w1 && revalidate(h, build_b2().semigroup, *w1), "B_2 witness re-validation");
    for (std::size_t t : {2, 4}) {
      require(has_divisor(h, build_b2().semigroup, {.threads = t}) == w1,
              "divisor witness depends on threads");
    }
    return std::to_string(semigroups) + " builtins; determinism and re-validation hold";
  }));

  std::printf("%s: %d criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
