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


// Helpers shared by the unit tests.

#ifndef SEMIVAR_TESTS_SUPPORT_HPP_
#define SEMIVAR_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "semivar/algebra.hpp"
#include "semivar/words.hpp"

namespace testing {

  inline semivar::Word w(std::string const& text) {
    return semivar::parse_word(text);
  }

  inline semivar::var_t var(std::string const& name) {
    return semivar::Variables::intern(name);
  }

  //! Random word over the first `letters` of x, y, z, t, s.
  inline semivar::Word random_word(std::mt19937_64& rng,
                                   std::size_t      letters,
                                   std::size_t      max_len) {
    static char const* const names[] = {"x", "y", "z", "t", "s"};
    std::vector<semivar::var_t> out(1 + rng() % max_len);
    for (auto& x : out) {
      x = var(names[rng() % letters]);
    }
    return semivar::Word::from_letters(out);
  }

  //! The letters of u as a plain string (single-letter variables only).
  inline std::string spelled(semivar::Word const& u) {
    std::string s;
    for (auto x : u.letters()) {
      s += semivar::Variables::name(x);
    }
    return s;
  }

}  // namespace testing

#endif  // SEMIVAR_TESTS_SUPPORT_HPP_
