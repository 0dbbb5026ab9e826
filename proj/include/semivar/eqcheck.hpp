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

// Deciding M |= u = v for a finite monoid M.
//
// Two routes are provided. satisfies() is a depth-first search over all
// assignments of the variables of uv; satisfies_lee() is the same search
// with the domain of heavily repeated variables cut down to {1, a, b} on Lee
// monoids. free_algebra() builds the relatively free monoid F_M(n) of
// n-variable word functions, which decides identities by comparing
// word_function() values.
//
// The search and the closure each have an OpenMP kernel (used when
// `workers != 1`) and a serial reference kernel in namespace `detail`. The
// kernels agree on verdicts, witnesses, node counts and element numbering.

#ifndef SEMIVAR_EQCHECK_HPP_
#define SEMIVAR_EQCHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semivar/algebra.hpp"
#include "semivar/errors.hpp"
#include "semivar/words.hpp"

namespace semivar {

  struct SearchOptions {
    Budget budget;
    //! Skip subtrees whose u- and v-prefixes are both already zero. Ignored
    //! when the monoid has no zero.
    bool prune = true;
    //! Expand pruned subtrees anyway and throw std::logic_error if one
    //! contains a counterexample. Debug aid; implies no speedup.
    bool audit_pruning = false;
    //! 0 = OpenMP default, 1 = serial reference kernel.
    unsigned workers = 1;
  };

  //! Result of a satisfaction check.
  struct Verdict {
    bool holds = true;
    //! Lexicographically least counterexample (variables in first-occurrence
    //! order, elements by index). Present iff !holds.
    std::optional<Assignment> witness;
    //! Assignments visited by the sequential search up to the verdict.
    std::uint64_t nodes  = 0;
    double        millis = 0;
  };

  //! Variables of uv ordered by first occurrence in u, then in v.
  std::vector<var_t> search_order(Word const& u, Word const& v);

  //! Throws ResourceError when the node budget is exhausted.
  Verdict satisfies(FiniteMonoid const&  m,
                    Word const&          u,
                    Word const&          v,
                    SearchOptions const& opts = {});

  //! satisfies(lee_monoid(l), u, v) with every variable that occurs at least
  //! floor(l/2) + 1 times on both sides restricted to {1, a, b}. An element
  //! containing both a and b contributes at least 2m - 1 letter changes when
  //! it is substituted m times, so such a variable forces an alternating
  //! product of length >= 2(floor(l/2) + 1) > l, which is zero on both sides.
  //! Falls back to satisfies() when no variable reaches the threshold.
  Verdict satisfies_lee(std::size_t          l,
                        Word const&          u,
                        Word const&          v,
                        SearchOptions const& opts = {});

  //! Re-checks the zeroing hypothesis behind satisfies_lee() by closure in
  //! lee_monoid(l): every product e g_1 e g_2 ... g_t e with t = floor(l/2)
  //! and e containing both letters is zero.
  bool lee_mixed_elements_vanish(std::size_t l);

  nlohmann::ordered_json to_json(Verdict const&      v,
                                 FiniteMonoid const& m,
                                 bool                with_timing = true);

  //! Append-only array of equal-length byte vectors, kept in fixed-size
  //! slabs so growth never copies what is already stored.
  class VectorStore {
   public:
    explicit VectorStore(std::size_t width);

    std::size_t width() const noexcept {
      return width_;
    }
    std::size_t size() const noexcept {
      return size_;
    }
    std::uint8_t const* operator[](std::size_t i) const noexcept {
      return slabs_[i / per_slab_].data() + (i % per_slab_) * width_;
    }
    //! Copies `width()` bytes from p and returns the new index.
    std::size_t push_back(std::uint8_t const* p);
    //! Removes the last vector.
    void pop_back() noexcept;

    bool operator==(VectorStore const&) const = default;

   private:
    std::size_t                            width_;
    std::size_t                            per_slab_;
    std::size_t                            size_ = 0;
    std::vector<std::vector<std::uint8_t>> slabs_;
  };

  //! Relatively free monoid F_M(n) over an explicit alphabet.
  //!
  //! Element e is the word function M^n -> M stored as a vector indexed by
  //! tuples (t_0 + |M| t_1 + ...). Element 0 is the constant identity (the
  //! empty word); elements are numbered in breadth-first order, generators
  //! in alphabet order.
  class FreeAlgebra {
   public:
    FreeAlgebra(FiniteMonoid                base,
                std::vector<var_t>          alphabet,
                std::size_t                 tuple_count,
                VectorStore                 values,
                std::vector<std::uint32_t>  transitions);

    FiniteMonoid const& base() const noexcept {
      return base_;
    }

    std::size_t rank() const noexcept {
      return alphabet_.size();
    }

    std::vector<var_t> const& alphabet() const noexcept {
      return alphabet_;
    }

    std::size_t size() const noexcept {
      return transitions_.size() / rank();
    }

    //! Number of tuples, |M|^n.
    std::size_t tuple_count() const noexcept {
      return tuples_;
    }

    std::uint32_t identity() const noexcept {
      return 0;
    }

    std::uint32_t transition(std::uint32_t e, std::size_t letter) const noexcept {
      return transitions_[static_cast<std::size_t>(e) * rank() + letter];
    }

    //! Value of element e at tuple t.
    elem_t value(std::uint32_t e, std::size_t t) const noexcept {
      return values_[e][t];
    }

    //! Position of v in the alphabet. Throws DomainError when absent.
    std::size_t letter_index(var_t v) const;

    std::vector<std::uint32_t> const& transitions() const noexcept {
      return transitions_;
    }

    bool operator==(FreeAlgebra const&) const = default;

   private:
    FiniteMonoid               base_;
    std::vector<var_t>         alphabet_;
    std::size_t                tuples_;
    VectorStore                values_;
    std::vector<std::uint32_t> transitions_;
  };

  //! Throws ResourceError on the element or memory budget; DomainError when
  //! |M| > 256 or the alphabet is empty.
  FreeAlgebra free_algebra(FiniteMonoid const&  m,
                           std::vector<var_t>   alphabet,
                           SearchOptions const& opts = {});
  //! Alphabet x, y, z, w, then x5, x6, ...
  FreeAlgebra free_algebra(FiniteMonoid const&  m,
                           std::size_t          n,
                           SearchOptions const& opts = {});
  std::vector<var_t> default_alphabet(std::size_t n);

  //! Element of f reached from the identity by reading u. Throws DomainError
  //! for letters outside the alphabet.
  std::uint32_t word_function(FreeAlgebra const& f, Word const& u);

  //! Checks that every transition target is an element and that each target
  //! really is the product of its source with the generator.
  bool verify_closure(FreeAlgebra const& f);

  namespace detail {
    //! Serial reference kernels.
    Verdict     satisfies_serial(FiniteMonoid const&                    m,
                                 Word const&                            u,
                                 Word const&                            v,
                                 std::vector<std::vector<elem_t>> const& domains,
                                 SearchOptions const&                   opts);
    FreeAlgebra free_algebra_serial(FiniteMonoid const& m,
                                    std::vector<var_t>  alphabet,
                                    Budget const&       budget);

    //! OpenMP kernels.
    Verdict satisfies_parallel(FiniteMonoid const&                    m,
                               Word const&                            u,
                               Word const&                            v,
                               std::vector<std::vector<elem_t>> const& domains,
                               SearchOptions const&                   opts);
    FreeAlgebra free_algebra_parallel(FiniteMonoid const& m,
                                      std::vector<var_t>  alphabet,
                                      Budget const&       budget,
                                      unsigned            workers);
  }  // namespace detail

}  // namespace semivar

#endif  // SEMIVAR_EQCHECK_HPP_
