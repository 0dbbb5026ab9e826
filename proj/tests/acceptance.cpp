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


// Acceptance gate. Each criterion prints one PASS or FAIL line with its
// runtime; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "semivar/errors.hpp"
#include "semivar/termcheck.hpp"

using namespace semivar;

namespace {

  Word w(std::string const& s) {
    return parse_word(s);
  }
  var_t var(std::string const& s) {
    return Variables::intern(s);
  }

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void expect(bool cond, std::string const& what) {
      if (!cond) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // 1. Sizes
  ////////////////////////////////////////////////////////////////////////

  Outcome sizes() {
    Outcome o;
    o.expect(lee_monoid(2).size() == 5, "|L2| != 5");
    o.expect(lee_monoid(3).size() == 7, "|L3| != 7");
    o.expect(lee_monoid(4).size() == 9, "|L4| != 9");
    for (std::size_t l = 2; l <= 10; ++l) {
      o.expect(lee_monoid(l).size() == 2 * l + 1, "|L" + std::to_string(l) + "| != 2l+1");
    }
    o.expect(dilworth(perkins_words()).size() == 25, "|S(W)| != 25 for Perkins");
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. Property (C_l) on L_l
  ////////////////////////////////////////////////////////////////////////

  Outcome property_c_lee() {
    Outcome o;
    for (std::size_t l = 2; l <= 5; ++l) {
      auto const r = property_c(lee_monoid(l), l);
      o.expect(r.holds, "C_" + std::to_string(l) + " fails on L" + std::to_string(l));
      o.expect(r.words_checked > 0, "no words checked");
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. The L6 example
  ////////////////////////////////////////////////////////////////////////

  Outcome l6_example() {
    Outcome    o;
    auto const m6 = lee_monoid(6);
    Word const u  = w("xyyxyx");
    o.expect(satisfies(m6, u, w("xyxyyx")).holds, "identity fails");
    auto const iso = is_isoterm(m6, u);
    o.expect(!iso.is_term, "reported as isoterm");
    o.expect(iso.witness == w("xyxyyx"), "wrong isoterm witness");
    o.expect(is_tau_term_sametype(m6, u).is_term, "not a same-type term");
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. U_4 = V_4 on L4..L7
  ////////////////////////////////////////////////////////////////////////

  // Each monoid must finish within five minutes.
  Outcome unvn() {
    Outcome o;
    for (auto [l, k] : {std::pair{4, 1}, {5, 1}, {6, 2}, {7, 2}}) {
      std::string const tag   = "L" + std::to_string(l) + " k=" + std::to_string(k);
      auto const [u, v]       = identity_pair_unvn(4, k);
      auto const        start = std::chrono::steady_clock::now();
      auto const        r     = satisfies_lee(l, u, v);
      double const      secs
          = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.expect(r.holds, "U4 = V4 fails on " + tag);
      o.expect(secs <= 300, tag + " over time limit");
      o.expect(!same_type(u, v), "U4 and V4 have the same type");
      // x16 x1 is a factor of U4, where the frame meets J, and not of V4.
      std::vector<var_t> const seam{indexed_var(16), indexed_var(1)};
      o.expect(has_factor(u, seam), "x16 x1 missing from U4");
      o.expect(!has_factor(v, seam), "x16 x1 present in V4");
      std::ostringstream note;
      note << tag << " " << r.nodes << " nodes " << secs << " s";
      o.detail += (o.detail.empty() ? "" : "; ") + note.str();
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Jackson words
  ////////////////////////////////////////////////////////////////////////

  Outcome jackson_props() {
    Outcome o;
    for (std::size_t n = 4; n <= 8; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        auto const p = verify_jackson_properties(n, k);
        o.expect(p.p1 && p.p2, "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Isoterms
  ////////////////////////////////////////////////////////////////////////

  Outcome isoterms() {
    Outcome o;
    for (std::size_t l : {2, 3}) {
      o.expect(is_isoterm(lee_monoid(l), w("ab")).is_term, "ab on L" + std::to_string(l));
    }
    for (std::size_t l : {4, 5}) {
      for (auto const* u : {"abab", "a^2b^2", "ab^2a"}) {
        o.expect(is_isoterm(lee_monoid(l), w(u)).is_term,
                 std::string(u) + " on L" + std::to_string(l));
      }
    }
    auto const s3 = isoterm_scan(lee_monoid(3), 4, 2);
    o.expect(!s3.isoterms().empty() && s3.isoterms_klimited(1), "L3 scan not 1-limited");
    auto const s5 = isoterm_scan(lee_monoid(5), 4, 2);
    o.expect(!s5.isoterms().empty() && s5.isoterms_klimited(2), "L5 scan not 2-limited");
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Oracle equivalence
  ////////////////////////////////////////////////////////////////////////

  // Monoid of transformations of {0, .., d-1} generated by random maps,
  // composed left to right, with an adjoined zero on odd draws.
  std::optional<FiniteMonoid> transformation_monoid(std::mt19937_64& rng) {
    std::size_t const d    = 2 + rng() % 2;
    std::size_t const gens = 1 + rng() % 2;
    bool const        zero = rng() % 2 == 1;
    using Map              = std::vector<std::uint8_t>;
    Map id(d);
    for (std::size_t i = 0; i < d; ++i) {
      id[i] = static_cast<std::uint8_t>(i);
    }
    std::vector<Map> gs(gens, Map(d));
    for (auto& g : gs) {
      for (auto& x : g) {
        x = static_cast<std::uint8_t>(rng() % d);
      }
    }
    std::vector<Map>        elems{id};
    std::map<Map, elem_t>   index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gs) {
        Map next(d);
        for (std::size_t p = 0; p < d; ++p) {
          next[p] = g[elems[i][p]];
        }
        if (!index.contains(next)) {
          index.emplace(next, static_cast<elem_t>(elems.size()));
          elems.push_back(next);
        }
      }
    }
    std::size_t const n = elems.size() + (zero ? 1 : 0);
    if (n > 7) {
      return std::nullopt;
    }
    std::vector<std::vector<elem_t>> table(n, std::vector<elem_t>(n));
    std::vector<std::string>         labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(zero && a + 1 == n ? "0" : "t" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        if (zero && (a + 1 == n || b + 1 == n)) {
          table[a][b] = static_cast<elem_t>(n - 1);
          continue;
        }
        Map ab(d);
        for (std::size_t p = 0; p < d; ++p) {
          ab[p] = elems[b][elems[a][p]];
        }
        table[a][b] = index.at(ab);
      }
    }
    return FiniteMonoid::from_table(labels, table, 0,
                                    zero ? std::optional<elem_t>(static_cast<elem_t>(n - 1))
                                         : std::nullopt);
  }

  Word random_word(std::mt19937_64& rng, std::size_t vars) {
    static char const* const names[] = {"x", "y", "z"};
    std::vector<var_t>       letters(1 + rng() % 8);
    for (auto& x : letters) {
      x = var(names[rng() % vars]);
    }
    return Word::from_letters(letters);
  }

  // Every assignment in lexicographic order, letter-by-letter evaluation.
  std::optional<Assignment> brute_force(FiniteMonoid const& m, Word const& u, Word const& v) {
    auto const         order = search_order(u, v);
    std::vector<elem_t> digits(order.size(), 0);
    while (true) {
      Assignment a;
      for (std::size_t i = 0; i < order.size(); ++i) {
        a[order[i]] = digits[i];
      }
      if (evaluate_naive(m, u, a) != evaluate_naive(m, v, a)) {
        return a;
      }
      std::size_t i = order.size();
      while (i > 0 && digits[i - 1] + 1 == m.size()) {
        digits[--i] = 0;
      }
      if (i == 0) {
        return std::nullopt;
      }
      ++digits[i - 1];
    }
  }

  Outcome oracle_equivalence() {
    Outcome         o;
    std::mt19937_64 rng(0xacce97);
    std::size_t     instances = 0, holds = 0, disagreements = 0;
    SearchOptions   unpruned;
    unpruned.prune = false;
    while (instances < 1200) {
      auto const m = transformation_monoid(rng);
      if (!m) {
        continue;
      }
      std::size_t const vars = 1 + rng() % 3;
      for (int rep = 0; rep < 6; ++rep, ++instances) {
        Word const u = random_word(rng, vars);
        Word       v = random_word(rng, vars);
        if (rep % 3 == 0) {
          // Raise one island of u; such pairs hold far more often.
          std::vector<Run> runs = u.runs();
          runs[rng() % runs.size()].exp += 1 + static_cast<std::uint32_t>(rng() % 3);
          v = Word(runs);
        }
        auto const        order = search_order(u, v);
        FreeAlgebra const f     = free_algebra(*m, order);
        auto const a      = satisfies(*m, u, v);
        auto const b      = satisfies(*m, u, v, unpruned);
        bool const c      = word_function(f, u) == word_function(f, v);
        auto const d      = brute_force(*m, u, v);
        bool const agrees = a.holds == b.holds && a.holds == c && a.holds == !d.has_value()
                            && a.witness == d && b.witness == d;
        disagreements += agrees ? 0 : 1;
        holds += a.holds ? 1 : 0;
      }
    }
    o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.expect(holds > 0 && holds < instances, "degenerate sample");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(instances) + " instances, "
                + std::to_string(holds) + " hold";
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. Linear variables and blocks
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> corpus() {
    std::vector<Word> out;
    auto const        x = var("x"), y = var("y"), t = var("t"), s = var("s");
    // Every word of length 4 or 5 over {x, y} with both letters at least
    // twice, with t inserted: anywhere for length 4, in the middle for 5.
    for (std::size_t len : {4, 5}) {
      for (std::size_t bits = 0; bits < (1u << len); ++bits) {
        std::vector<var_t> letters;
        for (std::size_t i = 0; i < len; ++i) {
          letters.push_back((bits >> i) & 1 ? y : x);
        }
        auto const ys = static_cast<std::size_t>(std::count(letters.begin(), letters.end(), y));
        if (ys < 2 || len - ys < 2) {
          continue;
        }
        for (std::size_t p = 0; p <= len; ++p) {
          if (len == 5 && p != 2) {
            continue;
          }
          auto with = letters;
          with.insert(with.begin() + static_cast<std::ptrdiff_t>(p), t);
          out.push_back(Word::from_letters(with));
        }
      }
    }
    // x^a t x^b s x^c with a + b + c in {2, 3}.
    for (std::uint32_t sum : {2u, 3u}) {
      for (std::uint32_t a = 0; a <= sum; ++a) {
        for (std::uint32_t b = 0; a + b <= sum; ++b) {
          std::vector<Run> runs;
          for (auto [v, e] : {std::pair{x, a}, {t, 1u}, {x, b}, {s, 1u}, {x, sum - a - b}}) {
            if (e > 0) {
              runs.push_back({v, e});
            }
          }
          out.push_back(Word(runs));
        }
      }
    }
    return out;
  }

  // Linear letters of u in order, and the content of each block between them.
  struct Blocks {
    std::vector<var_t>           linear;
    std::vector<std::set<var_t>> contents;
  };

  Blocks blocks_of(Word const& u, std::set<var_t> const& linear) {
    Blocks b;
    b.contents.emplace_back();
    for (var_t x : u.letters()) {
      if (linear.contains(x)) {
        b.linear.push_back(x);
        b.contents.emplace_back();
      } else {
        b.contents.back().insert(x);
      }
    }
    return b;
  }

  Outcome block_invariants() {
    Outcome           o;
    auto const        words      = corpus();
    std::size_t       violations = 0, compared = 0;
    for (std::size_t l : {3, 4, 5}) {
      auto const m = lee_monoid(l);
      for (Word const& u : words) {
        std::map<var_t, std::size_t> occ;
        for (var_t x : u.letters()) {
          ++occ[x];
        }
        std::set<var_t> linear;
        for (auto const& [x, c] : occ) {
          if (c == 1) {
            linear.insert(x);
          }
        }
        Blocks const bu = blocks_of(u, linear);
        for (Word const& v : enumerate_equivalent(m, u, u.length() + 2)) {
          ++compared;
          std::map<var_t, std::size_t> vocc;
          for (var_t x : v.letters()) {
            ++vocc[x];
          }
          bool bad = false;
          for (var_t x : linear) {
            bad = bad || vocc[x] != 1;
          }
          Blocks const bv = blocks_of(v, linear);
          bad             = bad || bv.linear != bu.linear || bv.contents != bu.contents;
          violations += bad ? 1 : 0;
        }
      }
    }
    o.expect(words.size() >= 50, "corpus too small");
    o.expect(violations == 0, std::to_string(violations) + " violations");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(words.size()) + " words, "
                + std::to_string(compared) + " equivalents";
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Free-algebra sizes
  ////////////////////////////////////////////////////////////////////////

  Outcome regression() {
    Outcome o;
    o.expect(free_algebra(lee_monoid(2), 1).size() == 3, "|F_L2(1)| != 3");
    o.expect(free_algebra(lee_monoid(5), 2).size() == 50, "|F_L5(2)| != 50");
    o.expect(free_algebra(lee_monoid(6), 2).size() == 106, "|F_L6(2)| != 106");
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 10. Deterministic ledger
  ////////////////////////////////////////////////////////////////////////

  std::string ledger(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const code = cli::run(args, out, err);
    if (code != cli::kPass) {
      return "exit " + std::to_string(code) + ": " + err.str();
    }
    return out.str();
  }

  Outcome determinism() {
    Outcome                        o;
    std::vector<std::string> const base{"--deterministic", "reproduce", "all"};
    std::string const              first = ledger(base);
    o.expect(first.rfind("exit", 0) != 0, first.substr(0, 80));
    o.expect(ledger(base) == first, "second run differs");
    o.expect(ledger(base) == first, "third run differs");
    for (auto const* n : {"1", "4"}) {
      o.expect(ledger({"--workers", n, "--deterministic", "reproduce", "all"}) == first,
               std::string("workers ") + n + " differs");
    }
    return o;
  }

  struct Criterion {
    int                      id;
    std::string              name;
    double                   limit_seconds;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "monoid sizes", 1, sizes},
      {2, "Property (C_l) on L_l, l = 2..5", 120, property_c_lee},
      {3, "xyyxyx on L6", 10, l6_example},
      {4, "U4 = V4 on L4, L5 (k=1) and L6, L7 (k=2)", 1200, unvn},
      {5, "Jackson word properties", 1, jackson_props},
      {6, "isoterms and scans", 300, isoterms},
      {7, "pruned = unpruned = word function = brute force", 600, oracle_equivalence},
      {8, "linear variables and block contents", 600, block_invariants},
      {9, "free algebra sizes", 60, regression},
      {10, "deterministic ledger", 1800, determinism},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r.ok     = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      r.ok = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    all = all && r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
              << secs << " s, limit " << c.limit_seconds << " s)"
              << (r.detail.empty() ? "" : ": " + r.detail) << std::endl;
  }
  return all ? 0 : 1;
}
