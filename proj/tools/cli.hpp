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

#ifndef SEMIVAR_TOOLS_CLI_HPP_
#define SEMIVAR_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "semivar/algebra.hpp"
#include "semivar/eqcheck.hpp"

namespace semivar::cli {

  enum ExitCode : int {
    kPass      = 0,
    kFail      = 1,
    kInput     = 2,
    kResources = 3,
    kInternal  = 4,  // a cross-check between two deciders disagreed
  };

  enum class Format { json, table };

  struct RunConfig {
    Budget        budget;
    unsigned      workers       = 0;
    Format        format        = Format::json;
    bool          deterministic = false;
    std::uint64_t seed          = 20260101;

    SearchOptions search() const {
      SearchOptions o;
      o.budget  = budget;
      o.workers = workers;
      return o;
    }
  };

  //! `lee:<l>`, `perkins`, `dilworth:perkins`, `dilworth:<file of words>`,
  //! `table:<file.json>` or `trivial`. Throws std::invalid_argument (or one
  //! of its subclasses) on bad input.
  FiniteMonoid load_monoid(std::string const& spec);
  //! The l of a `lee:<l>` spec, or 0.
  std::size_t lee_parameter(std::string const& spec);

  //! Runs one command line (without the program name). Everything is written
  //! to `out` and `err`; the return value is the process exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace semivar::cli

#endif  // SEMIVAR_TOOLS_CLI_HPP_
