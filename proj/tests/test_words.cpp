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

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "semigroup_lab/constructions.hpp"
#include "semigroup_lab/error.hpp"
#include "semigroup_lab/words.hpp"

using namespace semigroup_lab;

namespace {

  Word w(char const* text) {
    return Word::parse(text);
  }

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace

TEST_CASE("Word parsing", "[words]") {
  CHECK(w("x y x").size() == 3);
  CHECK(w("x0 y1").letters() == std::vector<Variable>{"x0", "y1"});
  CHECK(w("x^3 y") == w("x x x y"));
  CHECK(w("  x\ty  ").to_string() == "x y");
  CHECK(w("").empty());
  CHECK_THROWS_WITH(Word::parse("x Y"),
                    Catch::Matchers::StartsWith("parse error at position 2"));
  CHECK_THROWS_WITH(Word::parse("x^0"),
                    Catch::Matchers::StartsWith("parse error at position 2"));
  CHECK_THROWS_WITH(Word::parse("x^"),
                    Catch::Matchers::StartsWith("parse error at position 2"));
  CHECK_THROWS_AS(Word::parse("x^3y"), Error);
  CHECK(w("a b").power(3) == w("a b a b a b"));
}

TEST_CASE("Identity parsing", "[words]") {
  auto id = Identity::parse("x y == y x");
  CHECK(id.lhs == w("x y"));
  CHECK(id.rhs == w("y x"));
  CHECK(id.to_string() == "x y == y x");
  CHECK(id.variables() == std::vector<Variable>{"x", "y"});
  CHECK_THROWS_AS(Identity::parse("x y"), Error);
  CHECK_THROWS_AS(Identity::parse("x == "), Error);
  CHECK_THROWS_AS(Identity::parse("x == y == z"), Error);
}

TEST_CASE("alphabet, project and factor_occurrences", "[words]") {
  CHECK(project(w("x y x"), {"x"}) == w("x x"));
  CHECK(project(w("x y z x"), alphabet(w("x y z x"))) == w("x y z x"));
  CHECK(ordered_alphabet(w("y x y z")) == std::vector<Variable>{"y", "x", "z"});
  CHECK(alphabet(Word()).empty());
  CHECK(factor_occurrences(w("a b"), w("a b a b")) == 2);
  CHECK(factor_occurrences(w("x x"), w("x x x")) == 2);
  CHECK(factor_occurrences(w("q"), w("x y x")) == 0);
  CHECK_THROWS_AS(factor_occurrences(Word(), w("x")), Error);

  SECTION("project is idempotent and cuts the alphabet") {
    std::mt19937_64 rng(7);
    for (auto const& u : oracle::canonical_words(6, 4)) {
      VariableSet keep;
      for (auto const& v : {"x", "y", "z", "t"}) {
        if (rng() % 2 == 0) {
          keep.insert(v);
        }
      }
      auto const once = project(u, keep);
      CHECK(project(once, keep) == once);
      VariableSet expected;
      for (auto const& v : alphabet(u)) {
        if (keep.contains(v)) {
          expected.insert(v);
        }
      }
      CHECK(alphabet(once) == expected);
      CHECK(project(u, alphabet(u)) == u);
    }
  }
}

TEST_CASE("is_sparse", "[words]") {
  CHECK(is_sparse(w("x y x")));
  CHECK_FALSE(is_sparse(w("x x")));
  CHECK(is_sparse(w("x y z x y")));
  CHECK_FALSE(is_sparse(w("x y x y")));
  CHECK(is_sparse(w("x")));
  SECTION("agrees with the all-pairs definition") {
    for (auto const& u : oracle::canonical_words(7, 4)) {
      INFO(u.to_string());
      CHECK(is_sparse(u) == oracle::sparse(u));
    }
  }
}

TEST_CASE("satisfies", "[words]") {
  auto const ic4 = build_ic(4).semigroup;
  SECTION("examples") {
    CHECK(satisfies(build_semilattice_chain(2), Identity::parse("x y == y x")).holds);
    auto const r = satisfies(ic4, Identity::parse("x x x x == x x x x x"));
    CHECK(r.holds);
    CHECK(r.substitution_space == 42);
    auto const c = satisfies(ic4, Identity::parse("x y == y x"));
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness);
    auto const& v = *c.witness;
    CHECK(ic4.product(v[0], v[1]) != ic4.product(v[1], v[0]));
    auto const cube = satisfies(ic4, Identity::parse("x^3 == x^4"));
    CHECK_FALSE(cube.holds);
  }
  SECTION("witness is the least counterexample") {
    for (auto const& text : {"x y == y x", "x y x == x x y", "x^3 == x^4",
                             "x y z == z y x", "x y x z == x z x y"}) {
      auto const id  = Identity::parse(text);
      auto const r   = satisfies(ic4, id);
      auto const ref = oracle::naive_counterexample(ic4, id);
      CHECK(r.holds == !ref.has_value());
      CHECK(r.witness == ref);
    }
  }
  SECTION("budget") {
    CHECK_THROWS_WITH(satisfies(ic4, Identity::parse("x y z == z y x"), {.budget = 1000}),
                      Catch::Matchers::StartsWith("search too large"));
  }
  SECTION("invariant under renaming") {
    std::mt19937_64 rng(42);
    std::vector<std::string> pool{"a", "b", "c", "p", "q", "r", "s", "t", "u0", "v1"};
    for (auto const& text : {"x y == y x", "x x x x == x x x x x", "x y x == y x y",
                             "x y x z x == x z x y x", "x y z x == x z y x"}) {
      auto const id = Identity::parse(text);
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        WordSubstitution rename;
        std::size_t      next = 0;
        for (auto const& v : id.variables()) {
          rename[v] = Word({pool[next++]});
        }
        Identity const renamed(substitute(id.lhs, rename), substitute(id.rhs, rename));
        for (auto const& name : {"ic:3", "b21", "cyclic:3"}) {
          auto const s = builtin(name);
          CHECK(satisfies(s, id).holds == satisfies(s, renamed).holds);
        }
      }
    }
  }
  SECTION("witness does not depend on the thread count") {
    auto const id   = Identity::parse("x y z x == x z y x");
    auto const base = satisfies(ic4, id, {.threads = 1});
    REQUIRE_FALSE(base.holds);
    for (std::size_t t : {2, 3, 4, 8, 0}) {
      auto const r = satisfies(ic4, id, {.threads = t});
      CHECK(r.holds == base.holds);
      CHECK(r.witness == base.witness);
    }
    auto const holds = Identity::parse("x^4 y == x^5 y");
    for (std::size_t t : {1, 4}) {
      CHECK(satisfies(ic4, holds, {.threads = t}).holds);
    }
  }
}

TEST_CASE("is_isoterm_bounded", "[words]") {
  auto const ic4 = build_ic(4).semigroup;
  CHECK(is_isoterm_bounded(ic4, w("x y x"), 5).isoterm_up_to_bound);
  auto const p = is_isoterm_bounded(ic4, w("x x x x"), 5);
  CHECK_FALSE(p.isoterm_up_to_bound);
  REQUIRE(p.witness);
  CHECK(*p.witness == w("x x x x x"));

  auto const one = FiniteSemigroup({"1"}, {0});
  auto const t   = is_isoterm_bounded(one, w("x"), 2);
  CHECK_FALSE(t.isoterm_up_to_bound);
  REQUIRE(t.witness);
  CHECK(*t.witness == w("x x"));

  CHECK_THROWS_AS(is_isoterm_bounded(build_b2().semigroup, w("x"), 2), Error);
  CHECK_THROWS_AS(is_isoterm_bounded(ic4, w("x y x"), 2), Error);

  SECTION("witnesses are genuine identities") {
    for (auto const& u : oracle::canonical_words(4, 2)) {
      auto const r = is_isoterm_bounded(builtin("ic:2"), u, 5);
      if (r.witness) {
        CHECK(*r.witness != u);
        CHECK_FALSE(oracle::naive_counterexample(builtin("ic:2"), Identity(u, *r.witness)));
      }
    }
  }
}

TEST_CASE("apply_identity", "[words]") {
  auto const comm = Identity::parse("x y == y x");
  WordSubstitution const phi{{"x", w("b")}, {"y", w("a")}};
  auto const after = apply_identity(w("a b a b"), comm, phi, w("a"), w("b"));
  CHECK(after == w("a a b b"));

  SECTION("the trace line matches the golden file") {
    auto const line = describe_step(w("a b a b"), after, comm, phi, w("a")) + "\n";
    CHECK(line == slurp(SEMIGROUP_LAB_GOLDEN "/rewrite_abab.txt"));
  }
  SECTION("trivial identity leaves the word alone") {
    auto const triv = Identity::parse("x y == x y");
    CHECK(apply_identity(w("a b a b"), triv, phi, w("a"), w("b")) == w("a b a b"));
  }
  SECTION("length-growing step") {
    CHECK(apply_identity(w("x x"), Identity::parse("x == x x"), {{"x", w("x")}}, Word(),
                         w("x"))
          == w("x x x"));
  }
  SECTION("rule that does not match") {
    CHECK_THROWS_WITH(apply_identity(w("a b a b"), comm, phi, Word(), w("b")),
                      Catch::Matchers::StartsWith("rule does not apply here"));
    CHECK_THROWS_AS(substitute(w("x z"), phi), Error);
  }
  SECTION("swapping the sides undoes a step") {
    std::mt19937_64 rng(3);
    std::vector<Identity> rules{comm, Identity::parse("x x == x"),
                                Identity::parse("x y x == x x y"),
                                Identity::parse("x y z == z y x")};
    auto const words = oracle::canonical_words(3, 2);
    for (int trial = 0; trial < 300; ++trial) {
      auto const& rule = rules[rng() % rules.size()];
      WordSubstitution sub;
      for (auto const& v : rule.variables()) {
        sub[v] = words[rng() % words.size()];
      }
      Word const pre  = rng() % 2 ? words[rng() % words.size()] : Word();
      Word const post = rng() % 2 ? words[rng() % words.size()] : Word();
      Word const before = pre + substitute(rule.lhs, sub) + post;
      Word const out    = apply_identity(before, rule, sub, pre, post);
      CHECK(apply_identity(out, Identity(rule.rhs, rule.lhs), sub, pre, post) == before);
    }
  }
}

TEST_CASE("sparse words are isoterms of IC_4 up to length 6", "[words][property]") {
  auto const ic4   = build_ic(4).semigroup;
  std::size_t count = 0;
  for (auto const& u : oracle::canonical_words(5, 3)) {
    if (!oracle::sparse(u)) {
      continue;
    }
    ++count;
    INFO(u.to_string());
    CHECK(is_isoterm_bounded(ic4, u, 6, {.threads = 0}).isoterm_up_to_bound);
  }
  CHECK(count > 0);
}
