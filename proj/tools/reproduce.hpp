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

// The reproduction ledger: every machine-checkable fact about the monoid
// families, grouped into suites, each settled by the exact deciders.

#ifndef SEMIVAR_TOOLS_REPRODUCE_HPP_
#define SEMIVAR_TOOLS_REPRODUCE_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "semivar/termcheck.hpp"

namespace semivar::cli {

  struct LedgerEntry {
    std::string fact_id;
    std::string claim;  // what the fact says, in words
    std::string status;     // "pass", "fail" or "skipped: resources"
    double      millis = 0;
  };

  std::vector<std::string> const& suite_names();

  //! Runs one suite or "all". Throws DomainError for an unknown suite.
  std::vector<LedgerEntry> reproduce(std::string const& suite,
                                     RunConfig const&   config);

  //! JSON array of {fact_id, paper_ref, status, millis}; millis are 0 when
  //! `with_timing` is false.
  nlohmann::ordered_json ledger_json(std::vector<LedgerEntry> const& ledger,
                                     bool                            with_timing);

  //! Random transformation monoid of degree <= 4 with at most max_size
  //! elements, sometimes with an adjoined zero.
  FiniteMonoid random_monoid(std::mt19937_64& rng, std::size_t max_size);

  struct OracleReport {
    std::size_t instances     = 0;
    std::size_t holds         = 0;
    std::size_t disagreements = 0;
  };

  //! Pruned search, unpruned search and word-function comparison on random
  //! identities over random small monoids.
  OracleReport oracle_campaign(std::size_t          instances,
                               std::uint64_t        seed,
                               SearchOptions const& opts);

  //! Fixed words with at least one linear variable, each over three
  //! variables: x, y nonlinear with one linear t, or x nonlinear with linear
  //! t and s.
  std::vector<Word> block_corpus();

  //! Number of (u, v) with M |= u = v, |v| <= |u| + 2, where v breaks the
  //! linear-variable order, the block contents, or (for two nonlinear
  //! variables of projected height <= l, l > 2) the first and last letters
  //! of corresponding blocks.
  std::size_t block_invariant_violations(FiniteMonoid const&   m,
                                     std::size_t           l,
                                     std::span<Word const> corpus,
                                     SearchOptions const&  opts);

}  // namespace semivar::cli

#endif  // SEMIVAR_TOOLS_REPRODUCE_HPP_
