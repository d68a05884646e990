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

// The semigroup_lab command line. run() does all the work and writes to the
// given streams, so tests drive it exactly as the executable does.
//
// Exit codes: 0 verified / true, 1 refuted / false (witness printed),
// 2 inconclusive (bounded search or budget), 3 input error.

#ifndef SEMIGROUP_LAB_CLI_HPP_
#define SEMIGROUP_LAB_CLI_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "constructions.hpp"
#include "core.hpp"
#include "divisor.hpp"
#include "error.hpp"
#include "green.hpp"
#include "nfb.hpp"
#include "spec_loader.hpp"
#include "words.hpp"

namespace semigroup_lab::cli {

  using json = nlohmann::ordered_json;

  enum ExitCode : int {
    verified     = 0,
    refuted      = 1,
    inconclusive = 2,
    input_error  = 3
  };

  inline char const* verdict_name(int code) {
    switch (code) {
      case verified:
        return "verified";
      case refuted:
        return "refuted";
      case inconclusive:
        return "inconclusive";
      default:
        return "input_error";
    }
  }

  // SEMIGROUP_LAB_CAP overrides the default element cap.
  inline std::size_t element_cap_from_env() {
    if (char const* value = std::getenv("SEMIGROUP_LAB_CAP")) {
      if (auto cap = detail::parse_size(value); cap && *cap > 0) {
        return *cap;
      }
      throw Error(ErrorKind::invalid_argument,
                  std::string("SEMIGROUP_LAB_CAP must be a positive integer, got \"")
                      + value + "\"");
    }
    return default_element_cap;
  }

  struct Options {
    bool        json       = false;
    bool        no_timings = false;
    std::size_t threads    = 0;
  };

  // Everything one command produces: a JSON report with a fixed top-level
  // shape and the human-readable text.
  class Report {
   public:
    explicit Report(std::string command) {
      _json["command"]    = std::move(command);
      _json["spec"]       = nullptr;
      _json["verdict"]    = nullptr;
      _json["result"]     = json::object();
      _json["witnesses"]  = json::array();
      _json["bounds"]     = json::object();
      _json["timings"]    = json::object();
    }

    json& operator[](char const* key) {
      return _json[key];
    }

    std::ostringstream& text() {
      return _text;
    }

    void emit(std::ostream& out, Options const& options, int code, double ms) {
      _json["verdict"] = verdict_name(code);
      if (!options.no_timings) {
        _json["timings"]["total_ms"] = std::round(ms * 1000.0) / 1000.0;
      }
      if (options.json) {
        out << _json.dump(2) << "\n";
      } else {
        out << _text.str();
      }
    }

   private:
    json               _json;
    std::ostringstream _text;
  };

  inline std::string join(std::vector<std::size_t> const& values) {
    std::string result;
    for (std::size_t i = 0; i < values.size(); ++i) {
      result += (i == 0 ? "" : ",") + std::to_string(values[i]);
    }
    return result;
  }

  inline json spec_json(LoadedSpec const& spec) {
    return json{{"source", spec.source},
                {"kind", spec.kind},
                {"order", spec.semigroup.size()},
                {"validation", to_string(spec.semigroup.validation())}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  inline int cmd_info(Report& r, LoadedSpec const& spec) {
    auto const& s  = spec.semigroup;
    auto const  pd = power_data(s);
    auto const  es = s.idempotents();
    json        idempotents = json::array();
    for (auto e : es) {
      idempotents.push_back(s.label(e));
    }
    r["spec"]   = spec_json(spec);
    r["result"] = json{{"order", s.size()},
                       {"idempotents", idempotents},
                       {"identity", s.identity() ? json(s.label(*s.identity())) : json()},
                       {"uniform_k", pd.uniform_k},
                       {"subgroup_lcm_m", pd.subgroup_lcm_m}};
    auto& t = r.text();
    t << "spec: " << spec.source << " (" << spec.kind << ")\n"
      << "order: " << s.size() << "\n"
      << "idempotents: " << es.size() << "\n"
      << "identity: " << (s.identity() ? s.label(*s.identity()) : "none") << "\n"
      << "uniform_k: " << pd.uniform_k << "\n"
      << "subgroup_lcm_m: " << pd.subgroup_lcm_m << "\n"
      << "associativity check: " << to_string(s.validation()) << "\n";
    return verified;
  }

  inline int cmd_green(Report& r, LoadedSpec const& spec) {
    auto const& s = spec.semigroup;
    auto const  g = green(s);
    auto const  order = top_down_d_classes(s, g);
    std::vector<std::size_t> d_sizes;
    for (auto c : order) {
      d_sizes.push_back(g.d_classes[c].elements.size());
    }
    bool const ds  = in_DS(g);
    bool const lds = in_LDS(s);
    json       counts;
    auto&      t = r.text();
    t << "spec: " << spec.source << " (order " << s.size() << ")\n";
    for (auto [name, p] : {std::pair{"R", &g.R},
                           std::pair{"L", &g.L},
                           std::pair{"J", &g.J},
                           std::pair{"H", &g.H}}) {
      counts[name] = p->count;
      t << name << "-classes: " << p->count << "\n";
    }
    counts["D"] = g.D.count;
    t << "D-classes: " << g.D.count << "\n"
      << "D-class sizes: " << join(d_sizes) << "\n"
      << "DS: " << (ds ? "true" : "false") << "\n"
      << "LDS: " << (lds ? "true" : "false") << "\n";
    r["spec"]   = spec_json(spec);
    r["result"] = json{{"class_counts", counts},
                       {"d_class_sizes", d_sizes},
                       {"in_DS", ds},
                       {"in_LDS", lds}};
    return verified;
  }

  inline json substitution_json(FiniteSemigroup const&            s,
                                std::vector<Variable> const&      vars,
                                std::vector<element_index> const& values) {
    json w = json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      w[vars[i]] = s.label(values[i]);
    }
    return w;
  }

  inline element_index evaluate(FiniteSemigroup const&            s,
                                Word const&                       w,
                                std::vector<Variable> const&      vars,
                                std::vector<element_index> const& values) {
    std::optional<element_index> acc;
    for (auto const& v : w.letters()) {
      auto const  i = std::find(vars.begin(), vars.end(), v) - vars.begin();
      auto const  x = values[static_cast<std::size_t>(i)];
      acc           = acc ? s.product(*acc, x) : x;
    }
    return *acc;
  }

  inline int cmd_check_id(Report&                 r,
                          LoadedSpec const&       spec,
                          std::string const&      text,
                          SatisfiesOptions const& options) {
    auto const id = Identity::parse(text);
    auto const& s = spec.semigroup;
    r["spec"]     = spec_json(spec);
    r["bounds"]   = json{{"budget", options.budget}};
    auto& t       = r.text();
    t << "identity: " << id.to_string() << "\n";
    auto const res = satisfies(s, id, options);
    r["result"]    = json{{"identity", id.to_string()},
                          {"holds", res.holds},
                          {"substitutions", res.substitution_space}};
    if (res.holds) {
      t << "holds: true (all " << res.substitution_space
        << " substitutions checked)\n";
      return verified;
    }
    auto const& w = *res.witness;
    r["witnesses"].push_back(
        json{{"substitution", substitution_json(s, res.variables, w)},
             {"lhs_value", s.label(evaluate(s, id.lhs, res.variables, w))},
             {"rhs_value", s.label(evaluate(s, id.rhs, res.variables, w))}});
    t << "holds: false\nwitness:";
    for (std::size_t i = 0; i < res.variables.size(); ++i) {
      t << (i == 0 ? " " : ", ") << res.variables[i] << " := " << s.label(w[i]);
    }
    t << "\nlhs = " << s.label(evaluate(s, id.lhs, res.variables, w))
      << ", rhs = " << s.label(evaluate(s, id.rhs, res.variables, w)) << "\n";
    return refuted;
  }

  inline int cmd_isoterm(Report&                 r,
                         LoadedSpec const&       spec,
                         std::string const&      text,
                         std::size_t             max_len,
                         SatisfiesOptions const& options) {
    auto const  u   = Word::parse(text);
    auto const& s   = spec.semigroup;
    auto const  res = is_isoterm_bounded(s, u, max_len, options);
    r["spec"]       = spec_json(spec);
    r["bounds"]     = json{{"max_length", max_len}, {"budget", options.budget}};
    r["result"]     = json{{"word", u.to_string()},
                           {"isoterm_up_to_bound", res.isoterm_up_to_bound},
                           {"candidates_checked", res.candidates_checked}};
    auto& t         = r.text();
    if (res.witness) {
      r["witnesses"].push_back(json{{"identity", u.to_string() + " == " + res.witness->to_string()}});
      t << "not an isoterm: " << u.to_string() << " == " << res.witness->to_string()
        << " holds\n";
      return refuted;
    }
    t << "isoterm up to length " << max_len << ": true (" << res.candidates_checked
      << " candidates checked)\n"
      << "note: bounded check; longer words v are not examined\n";
    return verified;
  }

  inline json checks_json(NfbInstance const& inst) {
    json j;
    for (auto [name, c] : {std::pair{"P0", check_P0(inst)},
                           std::pair{"P1", check_P1(inst)},
                           std::pair{"P2", check_P2(inst)}}) {
      j[name] = c.ok;
      if (!c.ok) {
        j[std::string(name) + "_detail"] = c.detail;
      }
    }
    return j;
  }

  inline bool all_checks_pass(NfbInstance const& inst) {
    return check_P0(inst).ok && check_P1(inst).ok && check_P2(inst).ok;
  }

  inline json instance_json(NfbInstance const& inst) {
    return json{{"n", inst.n},
                {"k", inst.k},
                {"m", inst.m},
                {"u_length", inst.u.size()},
                {"v_length", inst.v.size()},
                {"X_size", inst.X.size()},
                {"projection", inst.projection().to_string()}};
  }

  inline int cmd_nfb_gen(Report&                   r,
                         std::size_t               n,
                         std::size_t               k,
                         std::size_t               m,
                         std::optional<std::string> const& out_path) {
    auto const inst = build_instance(n, k, m);
    auto const cert = to_certificate(inst);
    r["result"]     = instance_json(inst);
    r["result"]["checks"] = checks_json(inst);
    if (out_path) {
      std::ofstream file(*out_path);
      if (!file) {
        throw Error(ErrorKind::invalid_argument, "cannot write " + *out_path);
      }
      file << cert;
      r["result"]["certificate"] = *out_path;
      r.text() << "certificate written to " << *out_path << "\n";
    } else {
      r.text() << cert;
    }
    return all_checks_pass(inst) ? verified : refuted;
  }

  inline int cmd_nfb_verify(Report&                           r,
                            std::optional<LoadedSpec> const&  spec,
                            std::optional<std::size_t>        n,
                            std::optional<std::size_t>        k,
                            std::optional<std::size_t>        m,
                            std::optional<std::string> const& cert_path,
                            SatisfiesOptions const&           options) {
    auto& t = r.text();
    NfbInstance inst;
    if (cert_path) {
      std::ifstream in(*cert_path);
      if (!in) {
        throw Error(ErrorKind::invalid_argument, "cannot read " + *cert_path);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      auto const check = check_certificate(buffer.str());
      r["result"]["certificate"] = json{{"path", *cert_path},
                                        {"reproduces", check.matches}};
      if (!check.matches) {
        r["result"]["certificate"]["detail"] = check.detail;
        t << "certificate " << *cert_path << " does not reproduce: " << check.detail
          << "\n";
        return refuted;
      }
      t << "certificate " << *cert_path << " reproduces\n";
      inst = check.instance;
    } else {
      if (!spec || !n) {
        throw Error(ErrorKind::invalid_argument,
                    "nfb verify needs SPEC and --n, or --cert");
      }
      auto const pd = power_data(spec->semigroup);
      inst          = build_instance(*n, k.value_or(pd.uniform_k), m.value_or(pd.subgroup_lcm_m));
    }
    r["result"]["instance"] = instance_json(inst);
    auto const checks       = checks_json(inst);
    r["result"]["checks"]   = checks;
    t << "n = " << inst.n << ", k = " << inst.k << ", m = " << inst.m
      << ", |u| = " << inst.u.size() << "\n";
    for (char const* p : {"P0", "P1", "P2"}) {
      t << p << ": " << (checks[p].get<bool>() ? "true" : "false") << "\n";
    }
    if (!all_checks_pass(inst)) {
      return refuted;
    }
    if (!spec) {
      return verified;
    }
    r["spec"]   = spec_json(*spec);
    r["bounds"] = json{{"budget", options.budget}};
    SatisfiesResult res;
    try {
      res = verify_holds(spec->semigroup, inst, options);
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::search_too_large) {
        r["result"]["holds"] = nullptr;
        t << "u == v: " << e.what() << "\n";
        return inconclusive;
      }
      throw;
    }
    r["result"]["holds"]         = res.holds;
    r["result"]["variables"]     = res.variables.size();
    r["result"]["substitutions"] = res.substitution_space;
    if (res.holds) {
      t << "u == v holds: true (" << res.variables.size() << " variables, "
        << res.substitution_space << " substitutions)\n";
      return verified;
    }
    r["witnesses"].push_back(
        json{{"substitution",
              substitution_json(spec->semigroup, res.variables, *res.witness)}});
    t << "u == v holds: false\n";
    return refuted;
  }

  inline json witness_json(FiniteSemigroup const& host,
                           FiniteSemigroup const& target,
                           DivisorWitness const&  w) {
    json gens = json::array();
    for (auto g : w.generators) {
      gens.push_back(host.label(g));
    }
    json map = json::array();
    for (std::size_t i = 0; i < w.subsemigroup.size(); ++i) {
      map.push_back(json::array({host.label(w.subsemigroup[i]), target.label(w.images[i])}));
    }
    return json{{"generators", gens},
                {"subsemigroup_order", w.subsemigroup.size()},
                {"adjoined_identity",
                 w.adjoined_identity ? json(host.label(*w.adjoined_identity)) : json()},
                {"map", map}};
  }

  inline int cmd_divisor(Report&               r,
                         LoadedSpec const&     spec,
                         std::string const&    target_name,
                         bool                  square,
                         DivisorOptions const& options) {
    if (target_name != "b2" && target_name != "b21") {
      throw Error(ErrorKind::invalid_argument, "--target must be b2 or b21");
    }
    auto const target = builtin(target_name);
    auto&      t      = r.text();
    r["spec"]         = spec_json(spec);
    r["bounds"]       = json{{"max_gens", options.max_gens}, {"cap", options.cap}};
    if (square) {
      auto const cv = target_name == "b2" ? cross_validate_ds(spec.semigroup, options)
                                          : cross_validate_lds(spec.semigroup, options);
      char const* pv = target_name == "b2" ? "DS" : "LDS";
      r["result"]    = json{{"host", "S x S"},
                            {std::string("in_") + pv, cv.structural_member},
                            {"divisor_found", cv.witness.has_value()},
                            {"search_capped", cv.search_capped},
                            {"cross_validation", to_string(cv.verdict)},
                            {"explanation", cv.explanation}};
      t << "structural " << pv << ": " << (cv.structural_member ? "true" : "false")
        << "\n"
        << target_name << " divides S x S: "
        << (cv.witness ? "yes" : "not found within bound") << "\n"
        << "cross-validation: " << to_string(cv.verdict) << " (" << cv.explanation
        << ")\n";
      if (cv.witness) {
        auto const host = direct_product(spec.semigroup, spec.semigroup);
        r["witnesses"].push_back(witness_json(host, target, *cv.witness));
      }
      if (cv.verdict == CrossVerdict::hard_failure) {
        return refuted;
      }
      return cv.witness ? verified : inconclusive;
    }
    std::optional<DivisorWitness> w;
    try {
      w = has_divisor(spec.semigroup, target, options);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::inconclusive) {
        throw;
      }
      r["result"] = json{{"divisor_found", false}, {"search_capped", true}};
      t << e.what() << "\n";
      return inconclusive;
    }
    r["result"] = json{{"divisor_found", w.has_value()}, {"search_capped", false}};
    if (!w) {
      t << target_name << " divisor: none with at most " << options.max_gens
        << " generators (bounded search, inconclusive)\n";
      return inconclusive;
    }
    bool const ok                  = revalidate(spec.semigroup, target, *w);
    r["result"]["revalidated"]     = ok;
    r["witnesses"].push_back(witness_json(spec.semigroup, target, *w));
    t << target_name << " divisor: found, generated by";
    for (auto g : w->generators) {
      t << " " << spec.semigroup.label(g);
    }
    t << " (|U| = " << w->subsemigroup.size() << ", re-validated: "
      << (ok ? "yes" : "NO") << ")\n";
    return ok ? verified : refuted;
  }

  inline int cmd_embed_ic4(Report& r) {
    auto const e          = embed_ic4();
    auto const check      = verify_homomorphism(e.map, e.source.semigroup, e.target.semigroup);
    bool       monomial   = true;
    bool       triangular = true;
    for (auto const& a : e.images) {
      monomial   = monomial && a.is_row_monomial();
      triangular = triangular && a.is_upper_triangular();
    }
    std::vector<element_index> sorted(e.map);
    std::sort(sorted.begin(), sorted.end());
    bool const injective
        = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    r["result"] = json{{"source_order", e.source.semigroup.size()},
                       {"target_order", e.target.semigroup.size()},
                       {"homomorphism", check.ok},
                       {"pairs_checked", check.pairs_checked},
                       {"row_monomial", monomial},
                       {"upper_triangular", triangular},
                       {"injective", injective}};
    auto& t = r.text();
    if (check.ok && monomial && triangular && injective) {
      t << "homomorphism verified over " << check.pairs_checked
        << " pairs; image row-monomial; injective\n";
      return verified;
    }
    if (!check.ok) {
      auto [a, b] = *check.counterexample;
      r["witnesses"].push_back(json{{"a", e.source.semigroup.label(a)},
                                    {"b", e.source.semigroup.label(b)}});
      t << "homomorphism fails at (" << e.source.semigroup.label(a) << ", "
        << e.source.semigroup.label(b) << ")\n";
    }
    t << "row-monomial: " << monomial << ", upper triangular: " << triangular
      << ", injective: " << injective << "\n";
    return refuted;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    CLI::App app{"Finite semigroup workbench", "semigroup_lab"};
    app.require_subcommand(1);
    app.fallthrough();
    Options options;
    app.add_flag("--json", options.json, "Emit a JSON report");
    app.add_flag("--no-timings", options.no_timings, "Leave timings out of reports");
    app.add_option("--threads", options.threads, "Worker threads (0 = all cores)");

    std::string   spec_arg, text_arg, target = "b21";
    std::size_t   max_len = 0, max_gens = 2;
    std::uint64_t budget = default_budget, cap = default_divisor_cap;
    std::optional<std::size_t> n_opt, k_opt, m_opt;
    std::optional<std::string> out_opt, cert_opt;
    bool                       square = false, check_flag = false;

    std::function<int(Report&)> action;
    std::string                 command;
    auto load = [&]() { return load_spec(spec_arg, element_cap_from_env()); };
    auto sat_options = [&]() { return SatisfiesOptions{budget, options.threads}; };

    auto* info = app.add_subcommand("info", "Order, idempotents, identity, power data");
    info->add_option("SPEC", spec_arg, "Builtin name or spec file")->required();
    info->callback([&] {
      command = "info";
      action  = [&](Report& r) { return cmd_info(r, load()); };
    });

    auto* green_cmd = app.add_subcommand("green", "Green's relations and DS/LDS membership");
    green_cmd->add_option("SPEC", spec_arg, "Builtin name or spec file")->required();
    green_cmd->callback([&] {
      command = "green";
      action  = [&](Report& r) { return cmd_green(r, load()); };
    });

    auto* check_id = app.add_subcommand("check-id", "Check an identity \"U == V\"");
    check_id->add_option("SPEC", spec_arg, "Builtin name or spec file")->required();
    check_id->add_option("IDENTITY", text_arg, "Identity, e.g. \"x y == y x\"")->required();
    check_id->add_option("--budget", budget, "Maximum number of substitutions");
    check_id->callback([&] {
      command = "check-id";
      action  = [&](Report& r) { return cmd_check_id(r, load(), text_arg, sat_options()); };
    });

    auto* isoterm = app.add_subcommand("isoterm", "Bounded isoterm check");
    isoterm->add_option("SPEC", spec_arg, "Builtin name or spec file (a monoid)")->required();
    isoterm->add_option("WORD", text_arg, "Word, e.g. \"x y x\"")->required();
    isoterm->add_option("--max-len", max_len, "Longest candidate word")->required();
    isoterm->add_option("--budget", budget, "Maximum substitutions per candidate");
    isoterm->callback([&] {
      command = "isoterm";
      action  = [&](Report& r) {
        return cmd_isoterm(r, load(), text_arg, max_len, sat_options());
      };
    });

    auto* nfb = app.add_subcommand("nfb", "The identities u_n == v_n");
    nfb->require_subcommand(1);
    nfb->fallthrough();
    auto* gen = nfb->add_subcommand("gen", "Build an instance and print its certificate");
    gen->add_option("--n", n_opt, "Index n >= 1")->required();
    gen->add_option("--k", k_opt, "Power k of x between letters")->required();
    gen->add_option("--m", m_opt, "v is u^(m+1)")->required();
    gen->add_option("--out", out_opt, "Write the certificate here");
    gen->callback([&] {
      command = "nfb gen";
      action  = [&](Report& r) { return cmd_nfb_gen(r, *n_opt, *k_opt, *m_opt, out_opt); };
    });
    auto* verify = nfb->add_subcommand(
        "verify", "Check P0-P2 and, given SPEC, that u_n == v_n holds in it");
    verify->add_option("SPEC", spec_arg, "Builtin name or spec file");
    verify->add_option("--n", n_opt, "Index n >= 1");
    verify->add_option("--k", k_opt, "Default: least idempotent power of SPEC");
    verify->add_option("--m", m_opt, "Default: subgroup exponent lcm of SPEC");
    verify->add_option("--cert", cert_opt, "Re-verify a certificate from nfb gen");
    verify->add_option("--budget", budget, "Maximum number of substitutions");
    verify->callback([&] {
      command = "nfb verify";
      action  = [&](Report& r) {
        std::optional<LoadedSpec> spec;
        if (!spec_arg.empty()) {
          spec = load();
        }
        return cmd_nfb_verify(r, spec, n_opt, k_opt, m_opt, cert_opt, sat_options());
      };
    });

    auto* divisor = app.add_subcommand("divisor", "Bounded search for a B_2 / B_2^1 divisor");
    divisor->add_option("SPEC", spec_arg, "Builtin name or spec file")->required();
    divisor->add_option("--target", target, "b2 or b21 (default)")->check(CLI::IsMember({"b2", "b21"}));
    divisor->add_option("--max-gens", max_gens, "Largest generator tuple (default 2)")->check(CLI::PositiveNumber);
    divisor->add_option("--cap", cap, "Largest number of (generators, images) candidates");
    divisor->add_flag("--square", square, "Search S x S and cross-check DS / LDS");
    divisor->callback([&] {
      command = "divisor";
      action  = [&](Report& r) {
        return cmd_divisor(r, load(), target, square, DivisorOptions{max_gens, cap, options.threads});
      };
    });

    auto* embed = app.add_subcommand("embed-ic4", "Check the embedding of IC_4 into T_4(2)");
    embed->add_flag("--check", check_flag, "Verify the embedding (the default action)");
    embed->callback([&] {
      command = "embed-ic4";
      action  = [&](Report& r) { return cmd_embed_ic4(r); };
    });

    std::vector<char const*> argv{"semigroup_lab"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::Success const& e) {
      // --help on the application or on a subcommand.
      app.exit(e, out, err);
      return verified;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }

    Report     report(command);
    auto const start = std::chrono::steady_clock::now();
    int        code;
    try {
      code = action(report);
    } catch (Error const& e) {
      switch (e.kind()) {
        case ErrorKind::search_too_large:
        case ErrorKind::inconclusive:
          code = inconclusive;
          break;
        case ErrorKind::internal:
          code = refuted;
          break;
        default:
          code = input_error;
      }
      report["error"] = e.what();
      err << "error: " << e.what() << "\n";
      if (!options.json) {
        return code;
      }
    }
    std::chrono::duration<double, std::milli> const ms
        = std::chrono::steady_clock::now() - start;
    report.emit(out, options, code, ms.count());
    return code;
  }

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
  }

}  // namespace semigroup_lab::cli

#endif  // SEMIGROUP_LAB_CLI_HPP_
