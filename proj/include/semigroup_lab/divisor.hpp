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

// Bounded search for divisors (onto homomorphisms from subsemigroups) of a
// small target inside a host semigroup, and the cross-check of structural
// DS / LDS membership against B_2 / B_2^1 divisors of S x S.
//
// A candidate is a set of generators in the host plus an image in the target
// for each. It extends to a homomorphism iff the subsemigroup of host x target
// generated by the (generator, image) pairs is the graph of a function; that
// closure is computed directly, so no homomorphism is ever assumed.

#ifndef SEMIGROUP_LAB_DIVISOR_HPP_
#define SEMIGROUP_LAB_DIVISOR_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "core.hpp"
#include "error.hpp"
#include "green.hpp"
#include "words.hpp"

namespace semigroup_lab {

  struct DivisorWitness {
    std::vector<element_index> generators;  // in the host
    // U, in the order the closure discovered it; images[i] is the target
    // element that subsemigroup[i] maps to.
    std::vector<element_index> subsemigroup;
    std::vector<element_index> images;
    // The idempotent f adjoined to a witness found inside the local submonoid
    // fSf, mapped to the target's identity. Also listed among generators.
    std::optional<element_index> adjoined_identity;

    bool operator==(DivisorWitness const&) const = default;
  };

  inline constexpr std::uint64_t default_divisor_cap = 50'000'000;

  // Closure of gens under the host multiplication: gens first (duplicates
  // dropped), then products in breadth-first order.
  inline std::vector<element_index>
  generated_subsemigroup(FiniteSemigroup const&            host,
                         std::vector<element_index> const& gens) {
    if (gens.empty()) {
      throw Error(ErrorKind::invalid_argument, "no generators");
    }
    std::vector<bool>          seen(host.size(), false);
    std::vector<element_index> result;
    for (auto g : gens) {
      if (!seen[g]) {
        seen[g] = true;
        result.push_back(g);
      }
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (auto g : gens) {
        element_index const p = host.product(result[i], g);
        if (!seen[p]) {
          seen[p] = true;
          result.push_back(p);
        }
      }
    }
    return result;
  }

  namespace detail {

    inline constexpr element_index no_image
        = std::numeric_limits<element_index>::max();

    // Paired closure of (gens[i], images[i]); nullopt if it is not
    // single-valued on the host coordinate. `image` must be a host-sized
    // scratch buffer filled with no_image; it is restored before returning.
    inline std::optional<DivisorWitness>
    paired_closure(FiniteSemigroup const&            host,
                   FiniteSemigroup const&            target,
                   std::vector<element_index> const& gens,
                   std::vector<element_index> const& imgs,
                   std::vector<element_index>&       image) {
      DivisorWitness w;
      w.generators = gens;
      bool ok      = true;
      auto visit   = [&](element_index u, element_index t) {
        if (image[u] == no_image) {
          image[u] = t;
          w.subsemigroup.push_back(u);
          w.images.push_back(t);
        } else if (image[u] != t) {
          ok = false;
        }
      };
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        visit(gens[i], imgs[i]);
      }
      for (std::size_t i = 0; i < w.subsemigroup.size() && ok; ++i) {
        for (std::size_t j = 0; j < gens.size() && ok; ++j) {
          visit(host.product(w.subsemigroup[i], gens[j]),
                target.product(w.images[i], imgs[j]));
        }
      }
      for (auto u : w.subsemigroup) {
        image[u] = no_image;
      }
      if (!ok) {
        return std::nullopt;
      }
      return w;
    }

    inline bool covers(std::vector<element_index> const& images,
                       std::size_t                       target_size) {
      std::vector<bool> hit(target_size, false);
      std::size_t       count = 0;
      for (auto t : images) {
        if (!hit[t]) {
          hit[t] = true;
          ++count;
        }
      }
      return count == target_size;
    }

    // First surjective assignment in lexicographic order (image of gens[0]
    // most significant) for a fixed generator tuple.
    inline std::optional<DivisorWitness>
    onto_for_tuple(FiniteSemigroup const&            host,
                   FiniteSemigroup const&            target,
                   std::vector<element_index> const& gens,
                   std::vector<element_index>&       scratch) {
      std::vector<element_index> imgs(gens.size(), 0);
      auto const                 tn = static_cast<element_index>(target.size());
      while (true) {
        if (auto w = paired_closure(host, target, gens, imgs, scratch)) {
          if (covers(w->images, target.size())) {
            return w;
          }
        }
        std::size_t pos = imgs.size();
        while (pos > 0 && imgs[pos - 1] + 1 == tn) {
          imgs[--pos] = 0;
        }
        if (pos == 0) {
          return std::nullopt;
        }
        ++imgs[pos - 1];
      }
    }

    inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
      return a > std::numeric_limits<std::uint64_t>::max() - b
                 ? std::numeric_limits<std::uint64_t>::max()
                 : a + b;
    }

    inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      return a * b;
    }

    // sum over g = 1..max_gens of C(host, g) * |target|^g
    inline std::uint64_t search_space(std::size_t host_size,
                                      std::size_t target_size,
                                      std::size_t max_gens) {
      std::uint64_t total = 0, binom = 1, assignments = 1;
      for (std::size_t g = 1; g <= max_gens && g <= host_size; ++g) {
        binom       = saturating_mul(binom, host_size - g + 1) / g;
        assignments = saturating_mul(assignments, target_size);
        total       = saturating_add(total, saturating_mul(binom, assignments));
      }
      return total;
    }

    // Generator tuples are strictly increasing index sequences of length
    // 1..max_gens, shortest first and lexicographic within a length; the
    // first tuple with a surjective assignment wins. Tuples of one length are
    // split among workers by first generator.
    inline std::optional<DivisorWitness>
    direct_search(FiniteSemigroup const& host,
                  FiniteSemigroup const& target,
                  std::size_t            max_gens,
                  std::size_t            threads) {
      std::size_t const n = host.size();
      for (std::size_t len = 1; len <= max_gens && len <= n; ++len) {
        std::size_t const workers = std::min(resolve_threads(threads), n);
        std::atomic<std::size_t> stop_above(n);
        std::vector<std::optional<DivisorWitness>> found(workers);
        auto run = [&](std::size_t w) {
          std::size_t const lo = n * w / workers, hi = n * (w + 1) / workers;
          std::vector<element_index> scratch(n, no_image);
          std::vector<element_index> gens(len);
          for (std::size_t first = lo; first < hi; ++first) {
            if (first > stop_above.load() || first + len > n) {
              return;
            }
            for (std::size_t i = 0; i < len; ++i) {
              gens[i] = static_cast<element_index>(first + i);
            }
            while (true) {
              if (generated_subsemigroup(host, gens).size() >= target.size()) {
                if (auto wit = onto_for_tuple(host, target, gens, scratch)) {
                  std::size_t current = stop_above.load();
                  while (first < current
                         && !stop_above.compare_exchange_weak(current, first)) {
                  }
                  found[w] = std::move(wit);
                  return;
                }
              }
              // next increasing tuple with gens[0] fixed
              std::size_t pos = len;
              while (pos > 1 && gens[pos - 1] == n - (len - pos) - 1) {
                --pos;
              }
              if (pos == 1) {
                break;
              }
              ++gens[pos - 1];
              for (std::size_t i = pos; i < len; ++i) {
                gens[i] = gens[i - 1] + 1;
              }
            }
          }
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
        for (auto& f : found) {
          if (f) {
            return f;
          }
        }
      }
      return std::nullopt;
    }

    // target = T0 with an identity adjoined: index of that identity, if the
    // non-identity elements form a subsemigroup.
    inline std::optional<element_index>
    adjoined_identity_of(FiniteSemigroup const& target) {
      auto const one = target.identity();
      if (!one) {
        return std::nullopt;
      }
      for (element_index a = 0; a < target.size(); ++a) {
        for (element_index b = 0; b < target.size(); ++b) {
          if (a != *one && b != *one && target.product(a, b) == *one) {
            return std::nullopt;
          }
        }
      }
      return one;
    }

  }  // namespace detail

  // First surjective homomorphism from the subsemigroup generated by gens
  // onto target, trying image assignments in lexicographic order.
  inline std::optional<DivisorWitness>
  find_onto_morphism(FiniteSemigroup const&            host,
                     std::vector<element_index> const& gens,
                     FiniteSemigroup const&            target) {
    if (target.size() > 8) {
      throw Error(ErrorKind::precondition,
                  "precondition: divisor targets are limited to 8 elements");
    }
    std::vector<element_index> scratch(host.size(), detail::no_image);
    return detail::onto_for_tuple(host, target, gens, scratch);
  }

  struct DivisorOptions {
    std::size_t   max_gens = 2;
    std::uint64_t cap      = default_divisor_cap;
    std::size_t   threads  = 1;
  };

  // Does target divide host, using at most max_gens generators? When target is
  // a monoid T0 with identity adjoined, the local submonoids fHf at idempotents
  // f are searched first for a T0-divisor U with at most max_gens - 1
  // generators; U with f adjoined, f mapped to the identity, is a divisor
  // onto target. The plain search over host follows if that finds nothing.
  //
  // Throws "bounded search inconclusive" when the plain search space
  // exceeds options.cap.
  inline std::optional<DivisorWitness> has_divisor(FiniteSemigroup const& host,
                                                   FiniteSemigroup const& target,
                                                   DivisorOptions const& options
                                                   = {}) {
    if (target.size() > 8) {
      throw Error(ErrorKind::precondition,
                  "precondition: divisor targets are limited to 8 elements");
    }
    if (options.max_gens == 0) {
      throw Error(ErrorKind::precondition, "precondition: max_gens must be positive");
    }
    auto const one = detail::adjoined_identity_of(target);
    if (one && options.max_gens >= 2 && target.size() > 1) {
      std::vector<element_index> rest;
      for (element_index t = 0; t < target.size(); ++t) {
        if (t != *one) {
          rest.push_back(t);
        }
      }
      auto const core = induced_subsemigroup(target, rest);
      for (auto f : host.idempotents()) {
        auto const local = local_submonoid_elements(host, f);
        if (local.size() <= core.size()) {
          continue;
        }
        auto const sub = induced_subsemigroup(host, local);
        if (detail::search_space(sub.size(), core.size(), options.max_gens - 1)
            > options.cap) {
          continue;
        }
        auto found = detail::direct_search(sub, core, options.max_gens - 1, options.threads);
        if (!found) {
          continue;
        }
        // U sits inside fHf, whose identity is f; f in U would make the image
        // of f an identity of T0.
        bool contains_f = false;
        for (auto u : found->subsemigroup) {
          contains_f = contains_f || local[u] == f;
        }
        if (contains_f) {
          continue;
        }
        DivisorWitness w;
        for (auto g : found->generators) {
          w.generators.push_back(local[g]);
        }
        w.generators.push_back(f);
        for (std::size_t i = 0; i < found->subsemigroup.size(); ++i) {
          w.subsemigroup.push_back(local[found->subsemigroup[i]]);
          w.images.push_back(rest[found->images[i]]);
        }
        w.subsemigroup.push_back(f);
        w.images.push_back(*one);
        w.adjoined_identity = f;
        return w;
      }
    }
    if (detail::search_space(host.size(), target.size(), options.max_gens)
        > options.cap) {
      throw Error(ErrorKind::inconclusive,
                  "bounded search inconclusive: search space exceeds cap "
                      + std::to_string(options.cap));
    }
    return detail::direct_search(host, target, options.max_gens, options.threads);
  }

  // Re-checks a witness from scratch: U is the closure of the generators and
  // is closed, the map is a homomorphism onto target.
  inline bool revalidate(FiniteSemigroup const& host,
                         FiniteSemigroup const& target,
                         DivisorWitness const&  w) {
    if (w.subsemigroup.size() != w.images.size() || w.subsemigroup.empty()) {
      return false;
    }
    auto closure = generated_subsemigroup(host, w.generators);
    auto listed  = w.subsemigroup;
    std::sort(closure.begin(), closure.end());
    std::sort(listed.begin(), listed.end());
    if (closure != listed
        || std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
      return false;
    }
    try {
      auto const u = induced_subsemigroup(host, w.subsemigroup);
      return verify_homomorphism(w.images, u, target).ok
             && detail::covers(w.images, target.size());
    } catch (Error const&) {
      return false;
    }
  }

  enum class CrossVerdict { consistent, inconclusive, hard_failure };

  inline char const* to_string(CrossVerdict v) {
    switch (v) {
      case CrossVerdict::consistent:
        return "consistent";
      case CrossVerdict::inconclusive:
        return "inconclusive";
      default:
        return "hard failure";
    }
  }

  struct CrossValidation {
    bool                          structural_member = false;
    std::optional<DivisorWitness> witness;
    bool                          witness_revalidated = false;
    bool                          search_capped       = false;
    CrossVerdict                  verdict = CrossVerdict::consistent;
    std::string                   explanation;
  };

  namespace detail {
    inline CrossValidation cross_validate(FiniteSemigroup const& s,
                                          bool                   member,
                                          FiniteSemigroup const& target,
                                          char const*            pseudovariety,
                                          DivisorOptions const&  options) {
      CrossValidation result;
      result.structural_member = member;
      auto const host          = direct_product(s, s);
      try {
        result.witness = has_divisor(host, target, options);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::inconclusive) {
          throw;
        }
        result.search_capped = true;
      }
      std::string const in = std::string("in ") + pseudovariety;
      if (result.witness) {
        result.witness_revalidated = revalidate(host, target, *result.witness);
        if (member || !result.witness_revalidated) {
          result.verdict     = CrossVerdict::hard_failure;
          result.explanation = member ? in + " but S x S has the divisor"
                                      : "witness failed re-validation";
        } else {
          result.verdict     = CrossVerdict::consistent;
          result.explanation = "not " + in + " and S x S has the divisor";
        }
      } else if (member) {
        result.verdict     = CrossVerdict::consistent;
        result.explanation = in + " and no divisor found";
        if (result.search_capped) {
          result.explanation += " (search capped)";
        }
      } else {
        result.verdict     = CrossVerdict::inconclusive;
        result.explanation = "not " + in + " but no divisor within the bound "
                             "(bound too small)";
      }
      return result;
    }
  }  // namespace detail

  // in_LDS(S) against a B_2^1 divisor of S x S.
  inline CrossValidation cross_validate_lds(FiniteSemigroup const& s,
                                            DivisorOptions const&  options = {}) {
    return detail::cross_validate(
        s, in_LDS(s), build_b21().semigroup, "LDS", options);
  }

  // in_DS(S) against a B_2 divisor of S x S.
  inline CrossValidation cross_validate_ds(FiniteSemigroup const& s,
                                           DivisorOptions const&  options = {}) {
    return detail::cross_validate(
        s, in_DS(s), build_b2().semigroup, "DS", options);
  }

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_DIVISOR_HPP_
