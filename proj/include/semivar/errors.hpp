// Copyright 2026 The semivar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exception types shared by every module, and the resource budgets that the
// search and closure kernels are bounded by.

#ifndef SEMIVAR_ERRORS_HPP_
#define SEMIVAR_ERRORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semivar {

  //! Malformed word expression. `position()` is the byte offset of the
  //! offending character in the input.
  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::string const& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)),
          pos_(pos) {}

    std::size_t position() const noexcept {
      return pos_;
    }

   private:
    std::size_t pos_;
  };

  //! A parameter outside the documented range (e.g. Jackson words with n <= 3).
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! A Cayley table that fails one of the monoid axioms. For associativity
  //! failures `triple()` holds (a, b, c) with (ab)c != a(bc).
  class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(std::string const& what)
        : std::invalid_argument(what), has_triple_(false), triple_{} {}

    ValidationError(std::string const&            what,
                    std::array<std::size_t, 3> const& t)
        : std::invalid_argument(what), has_triple_(true), triple_(t) {}

    bool has_triple() const noexcept {
      return has_triple_;
    }

    std::array<std::size_t, 3> const& triple() const noexcept {
      return triple_;
    }

   private:
    bool                       has_triple_;
    std::array<std::size_t, 3> triple_;
  };

  //! A configured budget (nodes, elements, bytes) was exhausted. Never a
  //! verdict.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Hard limits for the exhaustive kernels.
  struct Budget {
    std::uint64_t nodes        = 4'000'000'000ULL;
    std::uint64_t elements     = 2'000'000ULL;
    std::uint64_t memory_bytes = 2ULL << 30;
  };

}  // namespace semivar

#endif  // SEMIVAR_ERRORS_HPP_
