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

#include "semivar/termcheck.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semivar/errors.hpp"

namespace semivar {

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  Dfa::Dfa(std::size_t states, std::size_t letters, std::uint32_t start)
      : letters_(letters),
        start_(start),
        delta_(states * letters, 0),
        accepting_(states, false) {}

  Dfa exact_word_dfa(std::span<std::size_t const> word, std::size_t letters) {
    std::size_t const   len  = word.size();
    std::uint32_t const dead = static_cast<std::uint32_t>(len + 1);
    Dfa                 d(len + 2, letters, 0);
    for (std::uint32_t q = 0; q <= dead; ++q) {
      for (std::size_t a = 0; a < letters; ++a) {
        d.set(q, a, q < len && word[q] == a ? q + 1 : dead);
      }
    }
    d.set_accepting(static_cast<std::uint32_t>(len));
    return d;
  }

  Dfa same_type_dfa(std::span<std::size_t const> shape, std::size_t letters) {
    // State i in 1..r: currently inside the i-th island.
    std::size_t const   r    = shape.size();
    std::uint32_t const dead = static_cast<std::uint32_t>(r + 1);
    Dfa                 d(r + 2, letters, 0);
    for (std::uint32_t q = 0; q <= dead; ++q) {
      for (std::size_t a = 0; a < letters; ++a) {
        std::uint32_t target = dead;
        if (q != dead) {
          if (q >= 1 && shape[q - 1] == a) {
            target = q;
          } else if (q < r && shape[q] == a) {
            target = q + 1;
          }
        }
        d.set(q, a, target);
      }
    }
    d.set_accepting(static_cast<std::uint32_t>(r));
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // EquivAutomaton
  ////////////////////////////////////////////////////////////////////////

  bool EquivAutomaton::accepts(Word const& v) const {
    for (Run const& r : v.runs()) {
      auto const& alpha = algebra->alphabet();
      if (std::find(alpha.begin(), alpha.end(), r.var) == alpha.end()) {
        return false;
      }
    }
    return word_function(*algebra, v) == accept;
  }

  EquivAutomaton equiv_language(FiniteMonoid const&  m,
                                Word const&          u,
                                bool                 extra_fresh,
                                SearchOptions const& opts) {
    std::vector<var_t> alphabet = u.content();
    if (extra_fresh) {
      alphabet.push_back(Variables::fresh(
          "fresh", VarSet(alphabet.begin(), alphabet.end())));
    }
    auto f = std::make_shared<FreeAlgebra const>(
        free_algebra(m, std::move(alphabet), opts));
    return equiv_language(std::move(f), u);
  }

  EquivAutomaton equiv_language(std::shared_ptr<FreeAlgebra const> f,
                                Word const&                        u) {
    std::uint32_t const acc = word_function(*f, u);
    return EquivAutomaton{std::move(f), acc, u};
  }

  namespace {
    std::vector<std::size_t> positions(FreeAlgebra const&        f,
                                       std::vector<var_t> const& letters) {
      std::vector<std::size_t> out;
      out.reserve(letters.size());
      for (var_t x : letters) {
        out.push_back(f.letter_index(x));
      }
      return out;
    }

    Word word_from_positions(FreeAlgebra const&              f,
                             std::vector<std::size_t> const& letters) {
      std::vector<var_t> vars;
      vars.reserve(letters.size());
      for (std::size_t a : letters) {
        vars.push_back(f.alphabet()[a]);
      }
      return Word::from_letters(vars);
    }

    // Breadth-first search of the product of the Cayley graph with `dfa`,
    // reading only letters with allowed[a]. Finds the shortlex-least
    // nonempty word v with word function `accept` that `dfa` rejects.
    std::optional<Word> product_search(FreeAlgebra const&       f,
                                       std::uint32_t            accept,
                                       Dfa const&               dfa,
                                       std::vector<bool> const& allowed) {
      std::size_t const   q_count = dfa.states();
      std::size_t const   total   = f.size() * q_count;
      std::uint32_t const unseen  = std::numeric_limits<std::uint32_t>::max();
      std::uint32_t const root    = unseen - 1;
      std::vector<std::uint32_t> parent(total, unseen);
      std::vector<std::uint8_t>  via(total, 0);
      std::deque<std::uint32_t>  queue;

      auto expand = [&](std::uint32_t from, std::uint32_t fe,
                        std::uint32_t q) -> std::optional<std::uint32_t> {
        for (std::size_t a = 0; a < f.rank(); ++a) {
          if (!allowed[a]) {
            continue;
          }
          std::uint32_t const fe2 = f.transition(fe, a);
          std::uint32_t const q2  = dfa.next(q, a);
          std::uint32_t const id  = static_cast<std::uint32_t>(fe2 * q_count + q2);
          if (parent[id] != unseen) {
            continue;
          }
          parent[id] = from;
          via[id]    = static_cast<std::uint8_t>(a);
          if (fe2 == accept && !dfa.accepting(q2)) {
            return id;
          }
          queue.push_back(id);
        }
        return std::nullopt;
      };

      std::optional<std::uint32_t> hit
          = expand(root, f.identity(), dfa.start());
      while (!hit && !queue.empty()) {
        std::uint32_t const id = queue.front();
        queue.pop_front();
        hit = expand(id, static_cast<std::uint32_t>(id / q_count),
                     static_cast<std::uint32_t>(id % q_count));
      }
      if (!hit) {
        return std::nullopt;
      }
      std::vector<std::size_t> letters;
      for (std::uint32_t id = *hit; id != root; id = parent[id]) {
        letters.push_back(via[id]);
      }
      std::reverse(letters.begin(), letters.end());
      return word_from_positions(f, letters);
    }

    std::vector<bool> letter_mask(FreeAlgebra const&        f,
                                  std::vector<var_t> const& vars) {
      std::vector<bool> mask(f.rank(), false);
      for (var_t x : vars) {
        mask[f.letter_index(x)] = true;
      }
      return mask;
    }

    // Two states: 0 = only letters of `mask` read so far (accepting).
    Dfa no_fresh_dfa(std::vector<bool> const& mask) {
      Dfa d(2, mask.size(), 0);
      for (std::size_t a = 0; a < mask.size(); ++a) {
        d.set(0, a, mask[a] ? 0 : 1);
        d.set(1, a, 1);
      }
      d.set_accepting(0);
      return d;
    }
  }  // namespace

  std::optional<Word> singleton_word(EquivAutomaton const& a,
                                     std::size_t           letters) {
    FreeAlgebra const&  f     = *a.algebra;
    std::size_t const   size  = f.size();
    std::uint32_t const start = f.identity();
    letters                   = std::min(letters, f.rank());

    std::vector<bool> acc(size, false), coacc(size, false);
    std::vector<std::uint32_t> stack{start};
    acc[start] = true;
    while (!stack.empty()) {
      std::uint32_t e = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < letters; ++j) {
        std::uint32_t t = f.transition(e, j);
        if (!acc[t]) {
          acc[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::vector<std::vector<std::uint32_t>> rev(size);
    for (std::uint32_t e = 0; e < size; ++e) {
      for (std::size_t j = 0; j < letters; ++j) {
        rev[f.transition(e, j)].push_back(e);
      }
    }
    stack      = {a.accept};
    coacc[a.accept] = true;
    while (!stack.empty()) {
      std::uint32_t e = stack.back();
      stack.pop_back();
      for (std::uint32_t p : rev[e]) {
        if (!coacc[p]) {
          coacc[p] = true;
          stack.push_back(p);
        }
      }
    }
    auto trimmed = [&](std::uint32_t e) { return acc[e] && coacc[e]; };
    if (!trimmed(start)) {
      return std::nullopt;
    }

    // Cycle check and post-order over the trimmed part.
    std::vector<std::uint8_t> colour(size, 0);  // 0 new, 1 open, 2 done
    std::vector<std::uint32_t> post;
    std::vector<std::pair<std::uint32_t, std::size_t>> dfs{{start, 0}};
    colour[start] = 1;
    while (!dfs.empty()) {
      auto& [e, j] = dfs.back();
      if (j == letters) {
        colour[e] = 2;
        post.push_back(e);
        dfs.pop_back();
        continue;
      }
      std::uint32_t t = f.transition(e, j++);
      if (!trimmed(t)) {
        continue;
      }
      if (colour[t] == 1) {
        return std::nullopt;  // infinite language
      }
      if (colour[t] == 0) {
        colour[t] = 1;
        dfs.emplace_back(t, 0);
      }
    }

    // paths[e] = number of words leading from e to accept, capped at 2.
    std::vector<std::uint8_t> paths(size, 0);
    for (std::uint32_t e : post) {
      unsigned p = e == a.accept ? 1 : 0;
      for (std::size_t j = 0; j < letters; ++j) {
        std::uint32_t t = f.transition(e, j);
        if (trimmed(t)) {
          p += paths[t];
        }
      }
      paths[e] = static_cast<std::uint8_t>(std::min(p, 2u));
    }
    // The empty word is not a word; in a DAG it is only counted when the
    // start state accepts, and then nothing else can be accepted.
    if (start == a.accept || paths[start] != 1) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (std::uint32_t e = start; e != a.accept;) {
      for (std::size_t j = 0; j < letters; ++j) {
        std::uint32_t t = f.transition(e, j);
        if (trimmed(t) && paths[t] > 0) {
          word.push_back(j);
          e = t;
          break;
        }
      }
    }
    return word_from_positions(f, word);
  }

  std::optional<Word> shortest_violation(EquivAutomaton const& a,
                                         Dfa const&            allowed) {
    return product_search(*a.algebra, a.accept, allowed,
                          std::vector<bool>(a.algebra->rank(), true));
  }

  ////////////////////////////////////////////////////////////////////////
  // Term deciders
  ////////////////////////////////////////////////////////////////////////

  TermVerdict decide_term(std::shared_ptr<FreeAlgebra const> f,
                          Word const&                        u,
                          TermMode                           mode) {
    auto const content = u.content();
    if (f->rank() <= content.size()) {
      throw DomainError("the algebra needs a variable outside content(u)");
    }
    EquivAutomaton const a     = equiv_language(f, u);
    auto const           inner = letter_mask(*f, content);
    std::vector<bool> const all(f->rank(), true);

    Dfa allowed = mode == TermMode::isoterm
                      ? exact_word_dfa(positions(*f, u.letters()), f->rank())
                      : same_type_dfa(positions(*f, shape_of(u).letters),
                                      f->rank());

    // (a) over content(u) alone.
    bool inner_ok;
    if (mode == TermMode::isoterm) {
      // singleton_word reads the first letters of the alphabet, so the
      // content has to come first there.
      bool const prefix = std::all_of(
          content.begin(), content.end(),
          [&](var_t x) { return f->letter_index(x) < content.size(); });
      if (prefix) {
        auto const only = singleton_word(a, content.size());
        inner_ok        = only && *only == u;
      } else {
        inner_ok = !product_search(*f, a.accept, allowed, inner);
      }
    } else {
      inner_ok = !product_search(*f, a.accept, allowed, inner);
    }
    // (b) nothing containing another variable.
    bool const fresh_ok
        = !product_search(*f, a.accept, no_fresh_dfa(inner), all);

    TermVerdict out;
    out.mode           = mode;
    out.is_term        = inner_ok && fresh_ok;
    out.witness        = product_search(*f, a.accept, allowed, all);
    out.algebra_size   = f->size();
    out.product_states = f->size() * allowed.states();
    if (out.is_term == out.witness.has_value()) {
      throw std::logic_error("term deciders disagree on " + to_string(u));
    }
    return out;
  }

  namespace {
    std::shared_ptr<FreeAlgebra const> algebra_with_fresh(
        FiniteMonoid const&  m,
        std::vector<var_t>   alphabet,
        SearchOptions const& opts) {
      alphabet.push_back(
          Variables::fresh("fresh", VarSet(alphabet.begin(), alphabet.end())));
      return std::make_shared<FreeAlgebra const>(
          free_algebra(m, std::move(alphabet), opts));
    }
  }  // namespace

  TermVerdict is_isoterm(FiniteMonoid const&  m,
                         Word const&          u,
                         SearchOptions const& opts) {
    return decide_term(algebra_with_fresh(m, u.content(), opts), u,
                       TermMode::isoterm);
  }

  TermVerdict is_tau_term_sametype(FiniteMonoid const&  m,
                                   Word const&          u,
                                   SearchOptions const& opts) {
    return decide_term(algebra_with_fresh(m, u.content(), opts), u,
                       TermMode::sametype);
  }

  nlohmann::ordered_json to_json(TermVerdict const& v, Word const& u) {
    nlohmann::ordered_json j;
    j["query"] = {{"word", to_string(u)},
                  {"mode", v.mode == TermMode::isoterm ? "isoterm" : "sametype"}};
    j["status"] = v.is_term ? "is_term" : "not_term";
    if (v.witness) {
      j["witness"] = to_string(*v.witness);
    } else {
      j["witness"] = nullptr;
    }
    j["automaton_sizes"] = {{"algebra", v.algebra_size},
                            {"product", v.product_states}};
    j["budget_used"]     = {{"elements", v.algebra_size}};
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Property (C_l)
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct ShapeOutcome {
      std::size_t                          words = 0;
      std::optional<std::pair<Word, Word>> witness;
    };

    // All words of the given shape with run exponents in [1, max_exp], in
    // lexicographic order of the exponent vector.
    ShapeOutcome check_shape(FreeAlgebra const&        f,
                             std::vector<var_t> const& shape,
                             std::uint32_t             max_exp) {
      ShapeOutcome    out;
      std::size_t const q_count = shape.size() + 2;
      Dfa const dfa = same_type_dfa(positions(f, shape), f.rank());

      // violation[fe] = product state of the first (shortlex) violating
      // word with word function fe.
      std::uint32_t const unseen = std::numeric_limits<std::uint32_t>::max();
      std::uint32_t const root   = unseen - 1;
      std::size_t const   total  = f.size() * q_count;
      std::vector<std::uint32_t> parent(total, unseen), violation(f.size(), unseen);
      std::vector<std::uint8_t>  via(total, 0);
      std::deque<std::uint32_t>  queue;
      auto expand = [&](std::uint32_t from, std::uint32_t fe, std::uint32_t q) {
        for (std::size_t a = 0; a < f.rank(); ++a) {
          std::uint32_t const fe2 = f.transition(fe, a);
          std::uint32_t const q2  = dfa.next(q, a);
          std::uint32_t const id  = static_cast<std::uint32_t>(fe2 * q_count + q2);
          if (parent[id] != unseen) {
            continue;
          }
          parent[id] = from;
          via[id]    = static_cast<std::uint8_t>(a);
          if (!dfa.accepting(q2) && violation[fe2] == unseen) {
            violation[fe2] = id;
          }
          queue.push_back(id);
        }
      };
      expand(root, f.identity(), dfa.start());
      while (!queue.empty()) {
        std::uint32_t const id = queue.front();
        queue.pop_front();
        expand(id, static_cast<std::uint32_t>(id / q_count),
               static_cast<std::uint32_t>(id % q_count));
      }

      std::vector<std::uint32_t> exps(shape.size(), 1);
      while (true) {
        std::vector<Run> runs;
        for (std::size_t i = 0; i < shape.size(); ++i) {
          runs.push_back({shape[i], exps[i]});
        }
        Word const          u  = Word(std::move(runs));
        std::uint32_t const fe = word_function(f, u);
        ++out.words;
        if (violation[fe] != unseen) {
          std::vector<std::size_t> letters;
          for (std::uint32_t id = violation[fe]; id != root; id = parent[id]) {
            letters.push_back(via[id]);
          }
          std::reverse(letters.begin(), letters.end());
          out.witness.emplace(u, word_from_positions(f, letters));
          return out;
        }
        std::size_t i = shape.size();
        while (i > 0 && exps[i - 1] == max_exp) {
          exps[--i] = 1;
        }
        if (i == 0) {
          return out;
        }
        ++exps[i - 1];
      }
    }
  }  // namespace

  PropertyCResult property_c(FiniteMonoid const&  m,
                             std::size_t          l,
                             SearchOptions const& opts) {
    if (l < 1) {
      throw DomainError("Property (C_l) needs l >= 1");
    }
    var_t const x = Variables::intern("x");
    var_t const y = Variables::intern("y");
    PropertyCResult out;
    out.index_period = index_period(m);
    auto const max_exp = static_cast<std::uint32_t>(
        out.index_period.index + out.index_period.period - 1);

    auto const f    = algebra_with_fresh(m, {x, y}, opts);
    out.algebra_size = f->size();

    std::vector<std::vector<var_t>> shapes;
    for (std::size_t h = 1; h <= l; ++h) {
      for (var_t first : {x, y}) {
        std::vector<var_t> s;
        for (std::size_t i = 0; i < h; ++i) {
          s.push_back(i % 2 == 0 ? first : (first == x ? y : x));
        }
        shapes.push_back(std::move(s));
      }
    }
    out.shapes = shapes.size();

    std::vector<ShapeOutcome> results(shapes.size());
    int const threads = opts.workers == 0 ? omp_get_max_threads()
                                          : static_cast<int>(opts.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      results[i] = check_shape(*f, shapes[i], max_exp);
    }
    for (auto& r : results) {
      if (out.holds) {
        out.words_checked += r.words;
        if (r.witness) {
          out.holds   = false;
          out.witness = std::move(r.witness);
        }
      }
    }
    return out;
  }

  ContainmentResult contains_dilworth(FiniteMonoid const&   m,
                                      std::span<Word const> words,
                                      SearchOptions const&  opts) {
    ContainmentResult out;
    for (Word const& w : words) {
      TermVerdict v = is_isoterm(m, w, opts);
      out.holds     = out.holds && v.is_term;
      out.evidence.emplace_back(w, std::move(v));
    }
    return out;
  }

  ContainmentResult contains_lee(FiniteMonoid const&  m,
                                 std::size_t          l,
                                 SearchOptions const& opts) {
    ContainmentResult out;
    out.lee   = property_c(m, l, opts);
    out.holds = out.lee->holds;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and scans
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> enumerate_equivalent(EquivAutomaton const& a,
                                         std::size_t           max_len,
                                         std::uint64_t         node_budget) {
    FreeAlgebra const& f    = *a.algebra;
    std::size_t const  size = f.size();
    std::size_t const  inf  = std::numeric_limits<std::size_t>::max();

    // dist[e] = length of the shortest word leading from e to accept.
    std::vector<std::vector<std::uint32_t>> rev(size);
    for (std::uint32_t e = 0; e < size; ++e) {
      for (std::size_t j = 0; j < f.rank(); ++j) {
        rev[f.transition(e, j)].push_back(e);
      }
    }
    std::vector<std::size_t>  dist(size, inf);
    std::deque<std::uint32_t> queue{a.accept};
    dist[a.accept] = 0;
    while (!queue.empty()) {
      std::uint32_t e = queue.front();
      queue.pop_front();
      for (std::uint32_t p : rev[e]) {
        if (dist[p] == inf) {
          dist[p] = dist[e] + 1;
          queue.push_back(p);
        }
      }
    }

    std::vector<Word>        out;
    std::vector<std::size_t> word;
    std::uint64_t            nodes = 0;
    // Depth-first over words of exactly `len` letters.
    auto walk = [&](auto&& self, std::uint32_t e, std::size_t len) -> void {
      if (++nodes > node_budget) {
        throw ResourceError("enumeration exceeds the node budget");
      }
      if (word.size() == len) {
        if (e == a.accept) {
          out.push_back(word_from_positions(f, word));
        }
        return;
      }
      for (std::size_t j = 0; j < f.rank(); ++j) {
        std::uint32_t t = f.transition(e, j);
        if (dist[t] == inf || word.size() + 1 + dist[t] > len) {
          continue;
        }
        word.push_back(j);
        self(self, t, len);
        word.pop_back();
      }
    };
    for (std::size_t len = 1; len <= max_len; ++len) {
      walk(walk, f.identity(), len);
    }
    return out;
  }

  std::vector<Word> enumerate_equivalent(FiniteMonoid const&  m,
                                         Word const&          u,
                                         std::size_t          max_len,
                                         SearchOptions const& opts) {
    return enumerate_equivalent(equiv_language(m, u, false, opts), max_len,
                                opts.budget.nodes);
  }

  bool klimited(Word const& u, std::size_t k) {
    return max_occurrence(u) <= k;
  }

  std::size_t max_occurrence(Word const& u) {
    std::size_t best = 0;
    for (auto const& [x, n] : word_stats(u).occ) {
      best = std::max(best, n);
    }
    return best;
  }

  std::vector<Word> ScanReport::isoterms() const {
    std::vector<Word> out;
    for (auto const& r : rows) {
      if (r.isoterm) {
        out.push_back(r.word);
      }
    }
    return out;
  }

  bool ScanReport::isoterms_klimited(std::size_t k) const {
    return std::all_of(rows.begin(), rows.end(), [k](ScanRow const& r) {
      return !r.isoterm || r.max_occ <= k;
    });
  }

  ScanReport isoterm_scan(FiniteMonoid const&  m,
                          std::size_t          max_len,
                          std::size_t          alphabet_size,
                          SearchOptions const& opts) {
    if (alphabet_size < 1 || alphabet_size > 26) {
      throw DomainError("isoterm_scan needs 1 <= alphabet_size <= 26");
    }
    std::vector<var_t> letters;
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      letters.push_back(Variables::intern(std::string(1, static_cast<char>('a' + i))));
    }
    auto const f = algebra_with_fresh(m, letters, opts);

    ScanReport out;
    out.algebra_size = f->size();
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        std::vector<var_t> w;
        for (std::size_t d : digits) {
          w.push_back(letters[d]);
        }
        Word const  u = Word::from_letters(w);
        TermVerdict v = decide_term(f, u, TermMode::isoterm);
        out.rows.push_back({u, v.is_term, v.witness, max_occurrence(u)});

        std::size_t i = len;
        while (i > 0 && digits[i - 1] + 1 == alphabet_size) {
          digits[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++digits[i - 1];
      }
    }
    return out;
  }

  nlohmann::ordered_json to_json(ScanReport const& r, std::size_t k) {
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : r.rows) {
      nlohmann::ordered_json j;
      j["word"]                         = to_compact(row.word);
      j["isoterm"]                      = row.isoterm;
      j["klimited(" + std::to_string(k) + ")"] = row.max_occ <= k;
      if (row.witness) {
        j["witness"] = to_compact(*row.witness);
      } else {
        j["witness"] = nullptr;
      }
      rows.push_back(std::move(j));
    }
    return rows;
  }

  std::string to_csv(ScanReport const& r, std::size_t k) {
    std::ostringstream os;
    os << "word,isoterm,klimited(" << k << "),witness\n";
    for (auto const& row : r.rows) {
      os << to_compact(row.word) << ',' << (row.isoterm ? 1 : 0) << ','
         << (row.max_occ <= k ? 1 : 0) << ','
         << (row.witness ? to_compact(*row.witness) : "") << '\n';
    }
    return os.str();
  }

}  // namespace semivar
