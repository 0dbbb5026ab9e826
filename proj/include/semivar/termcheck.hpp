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

// Exact deciders for isoterms, same-type tau-terms and Property (C_l).
//
// Everything here runs on the Cayley graph of a relatively free monoid
// F_M(n): reading a word from the identity lands on its word function, so the
// words v with M |= u = v are exactly the words accepted by the graph with
// word_function(u) as the only accepting state. Questions about that
// language become reachability questions in products with small DFAs.
//
// Completeness over arbitrary alphabets. Suppose M |= u = v where v uses
// variables outside content(u). Sending all of them but one, y, to the
// identity of M gives M |= u = v', where v' contains y and so still differs
// from u (and has a different shape). Conversely any such v' is itself a
// violation. Hence it is enough to search content(u) plus one fresh
// variable.

#ifndef SEMIVAR_TERMCHECK_HPP_
#define SEMIVAR_TERMCHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semivar/algebra.hpp"
#include "semivar/eqcheck.hpp"
#include "semivar/words.hpp"

namespace semivar {

  //! Complete DFA over letters 0, ..., letters - 1.
  class Dfa {
   public:
    Dfa(std::size_t states, std::size_t letters, std::uint32_t start);

    std::size_t states() const noexcept {
      return accepting_.size();
    }
    std::size_t letters() const noexcept {
      return letters_;
    }
    std::uint32_t start() const noexcept {
      return start_;
    }
    std::uint32_t next(std::uint32_t q, std::size_t a) const noexcept {
      return delta_[q * letters_ + a];
    }
    bool accepting(std::uint32_t q) const noexcept {
      return accepting_[q];
    }

    void set(std::uint32_t q, std::size_t a, std::uint32_t target) {
      delta_[q * letters_ + a] = target;
    }
    void set_accepting(std::uint32_t q, bool on = true) {
      accepting_[q] = on;
    }

   private:
    std::size_t                letters_;
    std::uint32_t              start_;
    std::vector<std::uint32_t> delta_;
    std::vector<bool>          accepting_;
  };

  //! Accepts exactly the given letter sequence. Letters are alphabet
  //! positions.
  Dfa exact_word_dfa(std::span<std::size_t const> word, std::size_t letters);
  //! Accepts c_1^+ c_2^+ ... c_r^+ for the shape c_1 ... c_r (r + 2 states).
  Dfa same_type_dfa(std::span<std::size_t const> shape, std::size_t letters);

  //! The language {v : M |= u = v} over the alphabet of `algebra`.
  struct EquivAutomaton {
    std::shared_ptr<FreeAlgebra const> algebra;
    std::uint32_t                      accept;
    Word                               probe;

    std::size_t states() const noexcept {
      return algebra->size();
    }
    bool accepts(Word const& v) const;
  };

  //! Alphabet is content(u) in first-occurrence order, plus one fresh
  //! variable when extra_fresh is set.
  EquivAutomaton equiv_language(FiniteMonoid const&  m,
                                Word const&          u,
                                bool                 extra_fresh,
                                SearchOptions const& opts = {});
  //! Reuses a prebuilt algebra; content(u) must lie in its alphabet.
  EquivAutomaton equiv_language(std::shared_ptr<FreeAlgebra const> f,
                                Word const&                        u);

  //! The unique word accepted when only the first `letters` letters of the
  //! alphabet are used, or nothing when the language is empty or has more
  //! than one word. Trims to accessible and co-accessible states, rejects a
  //! cycle, then counts paths in the remaining DAG.
  std::optional<Word> singleton_word(EquivAutomaton const& a,
                                     std::size_t           letters);

  //! Shortlex-least v accepted by `a` with v rejected by `allowed`, which
  //! runs over the full alphabet of the algebra.
  std::optional<Word> shortest_violation(EquivAutomaton const& a,
                                         Dfa const&            allowed);

  enum class TermMode { isoterm, sametype };

  struct TermVerdict {
    bool                is_term = true;
    TermMode            mode    = TermMode::isoterm;
    //! Shortlex-least word equivalent to u that breaks the relation.
    std::optional<Word> witness;
    std::size_t         algebra_size   = 0;
    std::size_t         product_states = 0;
  };

  TermVerdict is_isoterm(FiniteMonoid const&  m,
                         Word const&          u,
                         SearchOptions const& opts = {});
  TermVerdict is_tau_term_sametype(FiniteMonoid const&  m,
                                   Word const&          u,
                                   SearchOptions const& opts = {});
  //! Both deciders against a prebuilt algebra whose alphabet contains
  //! content(u) and at least one further variable.
  TermVerdict decide_term(std::shared_ptr<FreeAlgebra const> f,
                          Word const&                        u,
                          TermMode                           mode);

  nlohmann::ordered_json to_json(TermVerdict const& v, Word const& u);

  struct PropertyCResult {
    bool holds = true;
    //! First failing (u, v): u by height, shape, then exponents.
    std::optional<std::pair<Word, Word>> witness;
    std::size_t                          words_checked = 0;
    std::size_t                          shapes        = 0;
    IndexPeriod                          index_period{1, 1};
    std::size_t                          algebra_size = 0;
  };

  //! Every u in {x, y}^+ of height <= l forms identities of M only with
  //! words of its own type. Run exponents are enumerated in [1, N + p - 1]
  //! for (N, p) = index_period(M): M |= x^{N+p} = x^N, so larger exponents
  //! change neither the word function nor the shape.
  PropertyCResult property_c(FiniteMonoid const&  m,
                             std::size_t          l,
                             SearchOptions const& opts = {});

  struct ContainmentResult {
    bool                                  holds = true;
    std::vector<std::pair<Word, TermVerdict>> evidence;  // S^1(W) targets
    std::optional<PropertyCResult>        lee;           // L_l^1 targets
  };

  //! var M contains S^1(W) iff every word of W is an isoterm for M.
  ContainmentResult contains_dilworth(FiniteMonoid const&   m,
                                      std::span<Word const> words,
                                      SearchOptions const&  opts = {});
  //! var M contains L_l^1 iff M has Property (C_l).
  ContainmentResult contains_lee(FiniteMonoid const&  m,
                                 std::size_t          l,
                                 SearchOptions const& opts = {});

  //! Every v over content(u) with |v| <= max_len and M |= u = v, by length
  //! then letters (content(u) in first-occurrence order).
  std::vector<Word> enumerate_equivalent(FiniteMonoid const&  m,
                                         Word const&          u,
                                         std::size_t          max_len,
                                         SearchOptions const& opts = {});
  std::vector<Word> enumerate_equivalent(EquivAutomaton const& a,
                                         std::size_t           max_len,
                                         std::uint64_t         node_budget);

  //! Each variable occurs at most k times.
  bool klimited(Word const& u, std::size_t k);
  //! Largest occurrence count of a variable.
  std::size_t max_occurrence(Word const& u);

  struct ScanRow {
    Word                word;
    bool                isoterm;
    std::optional<Word> witness;
    std::size_t         max_occ;
  };

  struct ScanReport {
    std::vector<ScanRow> rows;
    std::size_t          algebra_size = 0;

    std::vector<Word> isoterms() const;
    //! Every isoterm found is k-limited.
    bool isoterms_klimited(std::size_t k) const;
  };

  //! Classifies every word of length 1..max_len over the first
  //! alphabet_size letters a, b, c, ...
  ScanReport isoterm_scan(FiniteMonoid const&  m,
                          std::size_t          max_len,
                          std::size_t          alphabet_size,
                          SearchOptions const& opts = {});

  nlohmann::ordered_json to_json(ScanReport const& r, std::size_t k);
  std::string            to_csv(ScanReport const& r, std::size_t k);

}  // namespace semivar

#endif  // SEMIVAR_TERMCHECK_HPP_
