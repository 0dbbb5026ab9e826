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

// This file contains the free-monoid word combinatorics: run-length words,
// shapes (same-type classes), substitutions, and the generators for the word
// families used by the rest of the library.

#ifndef SEMIVAR_WORDS_HPP_
#define SEMIVAR_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semivar {

  //! Interned variable id.
  using var_t = std::uint32_t;

  //! Process-wide variable name table.
  //!
  //! The single letters `a` to `z` are interned first, in alphabetical order,
  //! so their ids compare like their names. Every other name gets the next id
  //! on first use. Safe to call from several threads.
  class Variables {
   public:
    static var_t              intern(std::string_view name);
    static std::string const& name(var_t v);
    //! A variable whose name is not in `avoid`, derived from `stem`.
    static var_t fresh(std::string_view stem, std::set<var_t> const& avoid);
  };

  //! One island: a maximal power of a single variable.
  struct Run {
    var_t         var;
    std::uint32_t exp;

    auto operator<=>(Run const&) const = default;
  };

  //! A nonempty word of the free monoid, stored as its islands.
  //!
  //! The constructor normalizes: equal neighbours are merged by summing their
  //! exponents, so adjacent runs always carry distinct variables.
  class Word {
   public:
    explicit Word(std::vector<Run> runs);
    static Word letter(var_t v, std::uint32_t exp = 1);
    static Word from_letters(std::span<var_t const> letters);

    std::vector<Run> const& runs() const noexcept {
      return runs_;
    }
    //! Number of letter occurrences.
    std::size_t length() const noexcept;
    //! Number of islands (runs).
    std::size_t height() const noexcept {
      return runs_.size();
    }
    std::vector<var_t> letters() const;
    //! Variables ordered by first occurrence.
    std::vector<var_t> content() const;

    Word operator*(Word const& other) const;

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const  = default;

   private:
    std::vector<Run> runs_;
  };

  //! Same-type canonical form: the variable of each island, in order.
  struct Shape {
    std::vector<var_t> letters;

    auto operator<=>(Shape const&) const = default;
    bool operator==(Shape const&) const  = default;
  };

  using Substitution = std::map<var_t, Word>;
  using VarSet       = std::set<var_t>;

  // Parsing and printing

  //! Parse `xyyx^5yx^3`, `x y^2 x` or `[x12]^2 [x3]`. Throws ParseError.
  Word parse_word(std::string_view text);
  //! Run form, e.g. `x y^2 x`; multi-character names are bracketed.
  std::string to_string(Word const& u);
  //! Letters written out without separators, e.g. `xyyx`. Intended for
  //! single-character variables; multi-character names are bracketed.
  std::string to_compact(Word const& u);
  std::string to_string(Shape const& s);

  // Statistics

  struct WordStats {
    VarSet                       content;
    VarSet                       linear;
    VarSet                       nonlinear;
    std::map<var_t, std::size_t> occ;
  };

  WordStats   word_stats(Word const& u);
  std::size_t occurrences(Word const& u, var_t x);

  struct Islands {
    std::map<var_t, std::size_t> islands;
    //! Total run count. On two-letter words this is the usual height.
    std::size_t height;
  };

  Islands islands_and_height(Word const& u);

  //! u = a_0 t_1 a_1 ... t_m a_m with the t_i the linear variables of u in
  //! order and the a_i possibly empty.
  struct Blocks {
    std::vector<std::optional<Word>> blocks;  // m + 1 entries
    std::vector<var_t>               linear;  // m entries
  };

  Blocks blocks(Word const& u);
  //! Inverse of blocks().
  Word join_blocks(Blocks const& b);

  // Same type

  Shape shape_of(Word const& u);
  Word  shape_word(Shape const& s);
  bool  same_type(Word const& u, Word const& v);

  // Transformations

  Word reverse(Word const& u);
  //! Delete every variable not in `vars`. Throws DomainError if nothing
  //! survives.
  Word project(Word const& u, VarSet const& vars);
  //! Variables missing from `theta` map to themselves.
  Word substitute(Word const& u, Substitution const& theta);
  //! True when the letter sequence of `u` contains `factor` contiguously.
  bool has_factor(Word const& u, std::span<var_t const> factor);

  struct Equalization {
    Word                               word;
    std::vector<std::pair<var_t, var_t>> merges;  // (kept, removed)
  };

  //! Rename variables whose images under `theta` are powers of one variable
  //! until no two distinct remaining variables have that property. The
  //! earlier variable (by first occurrence) is kept.
  Equalization equalize(Word const& u, Substitution const& theta);

  // Word families

  //! The variable named `x<i>` (1-based).
  var_t indexed_var(std::size_t i);
  //! (x_1^k x_{1+n}^k ... x_{1+n^2-n}^k) ... (x_n^k x_{2n}^k ... x_{n^2}^k).
  Word jackson(std::size_t n, std::size_t k);
  //! Z_1 = x1, Z_{k+1} = Z_k x_{k+1} Z_k.
  Word              zimin(std::size_t k);
  std::vector<Word> perkins_words();
  //! All factors of b+a+b+a+... of height l, as shapes over {a, b}: every
  //! alternating shape of height < l, plus the one of height l starting with
  //! b. Sorted by length, then `a` before `b`.
  std::vector<Shape> lee_shape_set(std::size_t l);

  //! (x_1 ... x_{n^2}) J_{n,k} (x_{n^2} ... x_1) and the same frame around the
  //! reversed Jackson word.
  std::pair<Word, Word> identity_pair_unvn(std::size_t n, std::size_t k);

  struct JacksonProperties {
    //! Each two-letter factor x_i x_j (i != j) occurs at most once.
    bool p1;
    //! Between any two islands of the same variable there are at least n
    //! distinct variables.
    bool p2;
    //! Smallest number of distinct variables found between two islands of
    //! one variable.
    std::size_t min_gap;
  };

  JacksonProperties verify_jackson_properties(std::size_t n, std::size_t k);

  //! Distinct variables strictly between the `first` and `second` islands
  //! (0-based) of `x` in `u`.
  std::size_t distinct_between_islands(Word const& u,
                                       var_t       x,
                                       std::size_t first,
                                       std::size_t second);

}  // namespace semivar

#endif  // SEMIVAR_WORDS_HPP_
