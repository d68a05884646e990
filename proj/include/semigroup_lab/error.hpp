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

#ifndef SEMIGROUP_LAB_ERROR_HPP_
#define SEMIGROUP_LAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semigroup_lab {

  enum class ErrorKind {
    closure_overflow,
    not_a_semigroup,
    not_closed,
    invalid_argument,
    not_an_idempotent,
    search_too_large,
    rule_does_not_apply,
    precondition,
    inconclusive,
    parse_error,
    internal
  };

  // Every failure raised by the library. The message always starts with a
  // short fixed phrase ("closure overflow", "not a semigroup", ...) so callers
  // can match on it; kind() is the structured equivalent.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace semigroup_lab

#endif  // SEMIGROUP_LAB_ERROR_HPP_
