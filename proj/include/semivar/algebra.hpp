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

// Finite monoids given by validated Cayley tables, and the three
// constructions used throughout: the Rees quotient S^1(W) of the free monoid
// by the non-factors of W, its same-type analogue S^1_tau(W), and the Lee
// monoids L_l^1 = S^1_tau(W_l).

#ifndef SEMIVAR_ALGEBRA_HPP_
#define SEMIVAR_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semivar/words.hpp"

namespace semivar {

  //! Index of an element of a FiniteMonoid.
  using elem_t = std::uint32_t;

  //! A finite monoid, immutable after construction.
  //!
  //! Elements are 0, ..., size() - 1; `product(a, b)` is row a, column b of
  //! the table. Construction checks associativity, the identity law and, when
  //! a zero is named, the zero law.
  class FiniteMonoid {
   public:
    //! Throws ValidationError (with a witness triple for associativity).
    static FiniteMonoid from_table(std::vector<std::string>         labels,
                                   std::vector<std::vector<elem_t>> table,
                                   elem_t                           identity,
                                   std::optional<elem_t>            zero);

    std::size_t size() const noexcept {
      return n_;
    }

    elem_t product(elem_t a, elem_t b) const noexcept {
      return table_[static_cast<std::size_t>(a) * n_ + b];
    }

    elem_t identity() const noexcept {
      return identity_;
    }

    std::optional<elem_t> zero() const noexcept {
      return zero_;
    }

    std::string const& label(elem_t a) const {
      return labels_.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    //! Element with the given label, if any.
    std::optional<elem_t> find(std::string const& label) const;

    //! Row-major n * n table.
    std::vector<elem_t> const& flat_table() const noexcept {
      return table_;
    }

    bool is_aperiodic() const noexcept {
      return aperiodic_;
    }

    //! m^e for e >= 0 by repeated squaring.
    elem_t power(elem_t m, std::uint64_t e) const noexcept;

    bool operator==(FiniteMonoid const&) const = default;

   private:
    FiniteMonoid() = default;

    std::size_t              n_ = 0;
    std::vector<elem_t>      table_;
    elem_t                   identity_ = 0;
    std::optional<elem_t>    zero_;
    std::vector<std::string> labels_;
    bool                     aperiodic_ = true;
  };

  //! An element z with zx = xz = z for all x, if one exists.
  std::optional<elem_t> find_zero(std::size_t                n,
                                  std::vector<elem_t> const& flat_table);

  //! Smallest (index, period) with m^{index + period} = m^index for every m.
  struct IndexPeriod {
    std::uint64_t index;
    std::uint64_t period;

    bool operator==(IndexPeriod const&) const = default;
  };

  IndexPeriod index_period(FiniteMonoid const& m);

  //! A bijection f with f(ab) = f(a)f(b), or nothing. Backtracking; intended
  //! for the small monoids in this library.
  std::optional<std::vector<elem_t>> find_isomorphism(FiniteMonoid const& m,
                                                      FiniteMonoid const& n);

  // Constructions

  //! S^1(W): factors of words in W, plus 1 and 0; products that leave the
  //! factor set are 0. Element order: 1, factors by (length, letters), 0.
  FiniteMonoid dilworth(std::span<Word const> words);

  //! S^1_tau(W) for the same-type congruence: shapes in W, plus 1 and 0.
  //! W must be closed under factors; throws DomainError naming the first
  //! missing factor otherwise. Element order: 1, shapes by (length, letters),
  //! 0.
  FiniteMonoid s1_tau_sametype(std::span<Shape const> shapes);

  //! L_l^1, l >= 2, with 2l + 1 elements labelled 1, a, b, ab, ba, ..., 0.
  FiniteMonoid        lee_monoid(std::size_t l);
  //! Non-identity elements of lee_monoid(l) (the semigroup L_l).
  std::vector<elem_t> lee_semigroup_elements(std::size_t l);

  // Evaluation

  using Assignment = std::map<var_t, elem_t>;

  //! Value of u under theta; runs are raised by repeated squaring. Throws
  //! DomainError for an unmapped variable.
  elem_t evaluate(FiniteMonoid const& m, Word const& u, Assignment const& theta);
  //! Letter-by-letter left fold, for cross-checking evaluate().
  elem_t evaluate_naive(FiniteMonoid const& m,
                        Word const&         u,
                        Assignment const&   theta);

  // JSON: {"labels":[...], "identity":i, "zero":j|null, "table":[[...],...]}

  nlohmann::ordered_json to_json(FiniteMonoid const& m);
  //! Throws ValidationError on schema or axiom violations.
  FiniteMonoid monoid_from_json(nlohmann::ordered_json const& j);

  //! Human-readable Cayley table.
  std::string format_table(FiniteMonoid const& m);

}  // namespace semivar

#endif  // SEMIVAR_ALGEBRA_HPP_
