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

#include "semivar/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "semivar/errors.hpp"

namespace semivar {

  ////////////////////////////////////////////////////////////////////////
  // Variables
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct NameTable {
      std::shared_mutex                      mtx;
      std::deque<std::string>                names;
      std::unordered_map<std::string, var_t> ids;

      NameTable() {
        for (char c = 'a'; c <= 'z'; ++c) {
          std::string s(1, c);
          ids.emplace(s, static_cast<var_t>(names.size()));
          names.push_back(std::move(s));
        }
      }
    };

    NameTable& table() {
      static NameTable t;
      return t;
    }
  }  // namespace

  var_t Variables::intern(std::string_view name) {
    auto& t = table();
    {
      std::shared_lock lock(t.mtx);
      auto             it = t.ids.find(std::string(name));
      if (it != t.ids.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(t.mtx);
    auto [it, inserted]
        = t.ids.emplace(std::string(name), static_cast<var_t>(t.names.size()));
    if (inserted) {
      t.names.emplace_back(name);
    }
    return it->second;
  }

  std::string const& Variables::name(var_t v) {
    auto&            t = table();
    std::shared_lock lock(t.mtx);
    if (v >= t.names.size()) {
      throw DomainError("unknown variable id " + std::to_string(v));
    }
    return t.names[v];
  }

  var_t Variables::fresh(std::string_view stem, std::set<var_t> const& avoid) {
    for (std::size_t i = 0;; ++i) {
      std::string name(stem);
      if (i > 0) {
        name += std::to_string(i);
      }
      var_t v = intern(name);
      if (!avoid.contains(v)) {
        return v;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Run> runs) {
    runs_.reserve(runs.size());
    for (Run const& r : runs) {
      if (r.exp == 0) {
        throw DomainError("word exponents must be positive");
      }
      if (!runs_.empty() && runs_.back().var == r.var) {
        runs_.back().exp += r.exp;
      } else {
        runs_.push_back(r);
      }
    }
    if (runs_.empty()) {
      throw DomainError("the empty word is not a Word");
    }
  }

  Word Word::letter(var_t v, std::uint32_t exp) {
    return Word({Run{v, exp}});
  }

  Word Word::from_letters(std::span<var_t const> letters) {
    std::vector<Run> runs;
    runs.reserve(letters.size());
    for (var_t v : letters) {
      runs.push_back({v, 1});
    }
    return Word(std::move(runs));
  }

  std::size_t Word::length() const noexcept {
    std::size_t n = 0;
    for (Run const& r : runs_) {
      n += r.exp;
    }
    return n;
  }

  std::vector<var_t> Word::letters() const {
    std::vector<var_t> out;
    out.reserve(length());
    for (Run const& r : runs_) {
      out.insert(out.end(), r.exp, r.var);
    }
    return out;
  }

  std::vector<var_t> Word::content() const {
    std::vector<var_t> out;
    for (Run const& r : runs_) {
      if (std::find(out.begin(), out.end(), r.var) == out.end()) {
        out.push_back(r.var);
      }
    }
    return out;
  }

  Word Word::operator*(Word const& other) const {
    std::vector<Run> runs(runs_);
    runs.insert(runs.end(), other.runs_.begin(), other.runs_.end());
    return Word(std::move(runs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and printing
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text) {
    std::vector<Run> runs;
    std::size_t      i    = 0;
    auto             skip = [&] {
      while (i < text.size()
             && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip();
    if (i == text.size()) {
      throw ParseError("empty word", i);
    }
    while (i < text.size()) {
      var_t v;
      char  c = text[i];
      if (c == '[') {
        std::size_t close = text.find(']', i + 1);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated '['", i);
        }
        std::string_view id = text.substr(i + 1, close - i - 1);
        if (id.empty()) {
          throw ParseError("empty variable name", i);
        }
        for (std::size_t j = 0; j < id.size(); ++j) {
          unsigned char ch = static_cast<unsigned char>(id[j]);
          if (!std::isalnum(ch) && ch != '_') {
            throw ParseError("invalid character in variable name", i + 1 + j);
          }
        }
        v = Variables::intern(id);
        i = close + 1;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        v = Variables::intern(text.substr(i, 1));
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      std::uint32_t exp = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t start = ++i;
        std::uint64_t e   = 0;
        while (i < text.size()
               && std::isdigit(static_cast<unsigned char>(text[i]))) {
          e = 10 * e + static_cast<std::uint64_t>(text[i] - '0');
          if (e > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError("exponent too large", start);
          }
          ++i;
        }
        if (i == start) {
          throw ParseError("expected exponent after '^'", start);
        }
        if (e == 0) {
          throw ParseError("zero exponent", start);
        }
        exp = static_cast<std::uint32_t>(e);
      }
      runs.push_back({v, exp});
      skip();
    }
    return Word(std::move(runs));
  }

  namespace {
    void append_name(std::string& out, var_t v) {
      std::string const& n = Variables::name(v);
      if (n.size() == 1) {
        out += n;
      } else {
        out += '[';
        out += n;
        out += ']';
      }
    }
  }  // namespace

  std::string to_string(Word const& u) {
    std::string out;
    for (Run const& r : u.runs()) {
      if (!out.empty()) {
        out += ' ';
      }
      append_name(out, r.var);
      if (r.exp > 1) {
        out += '^';
        out += std::to_string(r.exp);
      }
    }
    return out;
  }

  std::string to_compact(Word const& u) {
    std::string out;
    for (var_t v : u.letters()) {
      append_name(out, v);
    }
    return out;
  }

  std::string to_string(Shape const& s) {
    std::string out;
    for (var_t v : s.letters) {
      append_name(out, v);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Statistics
  ////////////////////////////////////////////////////////////////////////

  WordStats word_stats(Word const& u) {
    WordStats st;
    for (Run const& r : u.runs()) {
      st.occ[r.var] += r.exp;
      st.content.insert(r.var);
    }
    for (auto const& [x, n] : st.occ) {
      (n == 1 ? st.linear : st.nonlinear).insert(x);
    }
    return st;
  }

  std::size_t occurrences(Word const& u, var_t x) {
    std::size_t n = 0;
    for (Run const& r : u.runs()) {
      if (r.var == x) {
        n += r.exp;
      }
    }
    return n;
  }

  Islands islands_and_height(Word const& u) {
    Islands out{{}, u.height()};
    for (Run const& r : u.runs()) {
      ++out.islands[r.var];
    }
    return out;
  }

  Blocks blocks(Word const& u) {
    WordStats const  st = word_stats(u);
    Blocks           out;
    std::vector<Run> current;
    auto             close = [&] {
      if (current.empty()) {
        out.blocks.emplace_back(std::nullopt);
      } else {
        out.blocks.emplace_back(Word(std::move(current)));
        current.clear();
      }
    };
    for (Run const& r : u.runs()) {
      if (st.linear.contains(r.var)) {
        close();
        out.linear.push_back(r.var);
      } else {
        current.push_back(r);
      }
    }
    close();
    return out;
  }

  Word join_blocks(Blocks const& b) {
    std::vector<Run> runs;
    for (std::size_t q = 0; q < b.blocks.size(); ++q) {
      if (b.blocks[q]) {
        auto const& r = b.blocks[q]->runs();
        runs.insert(runs.end(), r.begin(), r.end());
      }
      if (q < b.linear.size()) {
        runs.push_back({b.linear[q], 1});
      }
    }
    return Word(std::move(runs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Same type
  ////////////////////////////////////////////////////////////////////////

  Shape shape_of(Word const& u) {
    Shape s;
    s.letters.reserve(u.height());
    for (Run const& r : u.runs()) {
      s.letters.push_back(r.var);
    }
    return s;
  }

  Word shape_word(Shape const& s) {
    return Word::from_letters(s.letters);
  }

  bool same_type(Word const& u, Word const& v) {
    return shape_of(u) == shape_of(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformations
  ////////////////////////////////////////////////////////////////////////

  Word reverse(Word const& u) {
    std::vector<Run> runs(u.runs().rbegin(), u.runs().rend());
    return Word(std::move(runs));
  }

  Word project(Word const& u, VarSet const& vars) {
    std::vector<Run> runs;
    for (Run const& r : u.runs()) {
      if (vars.contains(r.var)) {
        runs.push_back(r);
      }
    }
    if (runs.empty()) {
      throw DomainError("projection deletes every letter of " + to_string(u));
    }
    return Word(std::move(runs));
  }

  Word substitute(Word const& u, Substitution const& theta) {
    std::vector<Run> runs;
    for (Run const& r : u.runs()) {
      auto it = theta.find(r.var);
      if (it == theta.end()) {
        runs.push_back(r);
        continue;
      }
      for (std::uint32_t i = 0; i < r.exp; ++i) {
        runs.insert(runs.end(), it->second.runs().begin(),
                    it->second.runs().end());
      }
    }
    return Word(std::move(runs));
  }

  bool has_factor(Word const& u, std::span<var_t const> factor) {
    if (factor.empty()) {
      return true;
    }
    auto const letters = u.letters();
    return std::search(letters.begin(), letters.end(), factor.begin(),
                       factor.end())
           != letters.end();
  }

  Equalization equalize(Word const& u, Substitution const& theta) {
    auto base_of = [&](var_t x) -> std::optional<var_t> {
      auto it = theta.find(x);
      if (it == theta.end()) {
        throw DomainError("substitution is not defined on "
                          + Variables::name(x));
      }
      if (it->second.height() != 1) {
        return std::nullopt;
      }
      return it->second.runs().front().var;
    };

    Equalization out{u, {}};
    for (var_t x : u.content()) {
      base_of(x);
    }
    while (true) {
      auto const content = out.word.content();
      bool       merged  = false;
      for (std::size_t i = 0; i < content.size() && !merged; ++i) {
        auto bi = base_of(content[i]);
        if (!bi) {
          continue;
        }
        for (std::size_t j = i + 1; j < content.size(); ++j) {
          auto bj = base_of(content[j]);
          if (bj && *bi == *bj) {
            out.word = substitute(out.word, {{content[j], Word::letter(content[i])}});
            out.merges.emplace_back(content[i], content[j]);
            merged = true;
            break;
          }
        }
      }
      if (!merged) {
        return out;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Word families
  ////////////////////////////////////////////////////////////////////////

  var_t indexed_var(std::size_t i) {
    return Variables::intern("x" + std::to_string(i));
  }

  Word jackson(std::size_t n, std::size_t k) {
    if (n <= 3) {
      throw DomainError("Jackson words need n > 3");
    }
    if (k < 1) {
      throw DomainError("Jackson words need k >= 1");
    }
    std::vector<Run> runs;
    runs.reserve(n * n);
    for (std::size_t col = 1; col <= n; ++col) {
      for (std::size_t i = col; i <= n * n; i += n) {
        runs.push_back({indexed_var(i), static_cast<std::uint32_t>(k)});
      }
    }
    return Word(std::move(runs));
  }

  Word zimin(std::size_t k) {
    if (k < 1) {
      throw DomainError("Zimin words need k >= 1");
    }
    std::vector<var_t> z{indexed_var(1)};
    for (std::size_t i = 2; i <= k; ++i) {
      std::vector<var_t> next(z);
      next.push_back(indexed_var(i));
      next.insert(next.end(), z.begin(), z.end());
      z = std::move(next);
    }
    return Word::from_letters(z);
  }

  std::vector<Word> perkins_words() {
    return {parse_word("abtba"), parse_word("atbab"), parse_word("abab"),
            parse_word("aat")};
  }

  std::vector<Shape> lee_shape_set(std::size_t l) {
    if (l < 2) {
      throw DomainError("Lee shape sets need l >= 2");
    }
    var_t const        a = Variables::intern("a");
    var_t const        b = Variables::intern("b");
    std::vector<Shape> out;
    auto alternating = [&](var_t first, std::size_t len) {
      Shape s;
      for (std::size_t i = 0; i < len; ++i) {
        s.letters.push_back(i % 2 == 0 ? first : (first == a ? b : a));
      }
      return s;
    };
    for (std::size_t len = 1; len < l; ++len) {
      out.push_back(alternating(a, len));
      out.push_back(alternating(b, len));
    }
    out.push_back(alternating(b, l));
    return out;
  }

  std::pair<Word, Word> identity_pair_unvn(std::size_t n, std::size_t k) {
    Word const         j = jackson(n, k);
    std::vector<var_t> up, down;
    for (std::size_t i = 1; i <= n * n; ++i) {
      up.push_back(indexed_var(i));
    }
    down.assign(up.rbegin(), up.rend());
    Word const prefix = Word::from_letters(up);
    Word const suffix = Word::from_letters(down);
    return {prefix * j * suffix, prefix * reverse(j) * suffix};
  }

  std::size_t distinct_between_islands(Word const& u,
                                       var_t       x,
                                       std::size_t first,
                                       std::size_t second) {
    std::set<var_t> seen;
    std::size_t     island = 0;  // islands of x passed so far
    for (Run const& r : u.runs()) {
      if (r.var == x) {
        if (island == second) {
          return seen.size();
        }
        ++island;
        continue;
      }
      if (island > first) {
        seen.insert(r.var);
      }
    }
    throw DomainError("word has fewer islands of " + Variables::name(x)
                      + " than requested");
  }

  JacksonProperties verify_jackson_properties(std::size_t n, std::size_t k) {
    auto const [U, V] = identity_pair_unvn(n, k);
    (void) V;
    JacksonProperties out{true, true, std::numeric_limits<std::size_t>::max()};

    // Adjacent distinct letters are exactly adjacent runs.
    std::set<std::pair<var_t, var_t>> pairs;
    auto const&                       runs = U.runs();
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
      if (!pairs.emplace(runs[i].var, runs[i + 1].var).second) {
        out.p1 = false;
      }
    }

    auto const isl = islands_and_height(U);
    for (auto const& [x, count] : isl.islands) {
      for (std::size_t i = 0; i + 1 < count; ++i) {
        std::size_t gap = distinct_between_islands(U, x, i, i + 1);
        out.min_gap     = std::min(out.min_gap, gap);
        if (gap < n) {
          out.p2 = false;
        }
      }
    }
    return out;
  }

}  // namespace semivar
