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

#include "reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "semivar/errors.hpp"

namespace semivar::cli {

  namespace {
    struct Fact {
      std::string           id;
      std::string           ref;
      std::function<bool()> check;
    };

    using Suite = std::vector<Fact>;

    Word w(char const* text) {
      return parse_word(text);
    }

    std::string label_of(FiniteMonoid const& m, Assignment const& a, char const* var) {
      return m.label(a.at(Variables::intern(var)));
    }

    Suite sizes_suite() {
      Suite s;
      for (std::size_t l = 2; l <= 10; ++l) {
        s.push_back({"sizes.lee." + std::to_string(l),
                     "the Lee monoid L_" + std::to_string(l) + "^1 has "
                         + std::to_string(2 * l + 1) + " elements",
                     [l] { return lee_monoid(l).size() == 2 * l + 1; }});
      }
      s.push_back({"sizes.lee.semigroup",
                   "L_l without its identity has 2l elements, l = 2..10", [] {
                     for (std::size_t l = 2; l <= 10; ++l) {
                       if (lee_semigroup_elements(l).size() != 2 * l) {
                         return false;
                       }
                     }
                     return true;
                   }});
      s.push_back({"sizes.perkins",
                   "the Dilworth monoid of {abtba, atbab, abab, aat} has 25 "
                   "elements",
                   [] { return dilworth(perkins_words()).size() == 25; }});
      s.push_back({"sizes.dilworth.ab", "S^1({ab}) = {1, a, b, ab, 0}", [] {
                     std::vector<Word> const ws{w("ab")};
                     return dilworth(ws).labels()
                            == std::vector<std::string>{"1", "a", "b", "ab", "0"};
                   }});
      s.push_back({"sizes.dilworth.abab", "S^1({abab}) has 9 elements", [] {
                     std::vector<Word> const ws{w("abab")};
                     return dilworth(ws).size() == 9;
                   }});
      return s;
    }

    Suite jackson_suite() {
      Suite s;
      for (std::size_t n = 4; n <= 8; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
          std::string const tag = std::to_string(n) + "." + std::to_string(k);
          s.push_back({"jackson.p1p2." + tag,
                       "U_n for n=" + std::to_string(n) + ", k="
                           + std::to_string(k)
                           + ": each factor x_i x_j occurs at most once and "
                             "n distinct variables separate any two islands",
                       [n, k] {
                         auto const p = verify_jackson_properties(n, k);
                         return p.p1 && p.p2;
                       }});
          s.push_back({"jackson.frame." + tag,
                       "U_n and V_n for n=" + std::to_string(n) + ", k="
                           + std::to_string(k)
                           + ": every variable occurs k+2 times and the two "
                             "words differ in type",
                       [n, k] {
                         auto const [u, v] = identity_pair_unvn(n, k);
                         for (std::size_t i = 1; i <= n * n; ++i) {
                           if (occurrences(u, indexed_var(i)) != k + 2
                               || occurrences(v, indexed_var(i)) != k + 2) {
                             return false;
                           }
                         }
                         return !same_type(u, v);
                       }});
        }
      }
      s.push_back({"jackson.last_first_factor",
                   "U_4 contains the factor x16 x1 and V_4 does not", [] {
                     auto const [u, v] = identity_pair_unvn(4, 1);
                     std::vector<var_t> const f{indexed_var(16), indexed_var(1)};
                     return has_factor(u, f) && !has_factor(v, f);
                   }});
      s.push_back({"jackson.islands",
                   "in U_4 the last variable forms 2 islands, every other 3",
                   [] {
                     auto const is = islands_and_height(identity_pair_unvn(4, 1).first);
                     for (std::size_t i = 1; i <= 16; ++i) {
                       if (is.islands.at(indexed_var(i)) != (i == 16 ? 2u : 3u)) {
                         return false;
                       }
                     }
                     return true;
                   }});
      s.push_back({"jackson.gap.x16",
                   "15 distinct variables lie between the two islands of x16 "
                   "in U_4",
                   [] {
                     return distinct_between_islands(identity_pair_unvn(4, 1).first,
                                                     indexed_var(16), 0, 1)
                            == 15;
                   }});
      s.push_back({"jackson.shape.j4", "J_4 lists x1 x5 x9 x13 x2 ... x16", [] {
                     std::vector<var_t> expect;
                     for (std::size_t c = 1; c <= 4; ++c) {
                       for (std::size_t r = 0; r < 4; ++r) {
                         expect.push_back(indexed_var(c + 4 * r));
                       }
                     }
                     return jackson(4, 1).letters() == expect;
                   }});
      return s;
    }

    Suite identities_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      Suite               s;
      s.push_back({"identities.lee6.xyyxyx",
                   "L_6^1 satisfies xyyxyx = xyxyyx", [opts] {
                     return satisfies(lee_monoid(6), w("xyyxyx"), w("xyxyyx"), opts)
                         .holds;
                   }});
      s.push_back({"identities.lee6.xyyxyx.reduced",
                   "the Lee-specialised search agrees on xyyxyx = xyxyyx", [opts] {
                     return satisfies_lee(6, w("xyyxyx"), w("xyxyyx"), opts).holds;
                   }});
      s.push_back({"identities.lee2.xyxy", "L_2^1 satisfies xyxy = yxyx",
                   [opts] {
                     return satisfies(lee_monoid(2), w("xyxy"), w("yxyx"), opts)
                         .holds;
                   }});
      s.push_back({"identities.lee2.xy",
                   "L_2^1 fails xy = yx at x -> a, y -> b", [opts] {
                     auto const m = lee_monoid(2);
                     auto const r = satisfies(m, w("xy"), w("yx"), opts);
                     return !r.holds && label_of(m, *r.witness, "x") == "a"
                            && label_of(m, *r.witness, "y") == "b";
                   }});
      for (auto const& [l, k] : {std::pair<std::size_t, std::size_t>{4, 1},
                                {5, 1},
                                {6, 2},
                                {7, 2}}) {
        s.push_back({"identities.unvn.lee" + std::to_string(l),
                     "L_" + std::to_string(l) + "^1 satisfies U_4 = V_4 with k="
                         + std::to_string(k),
                     [opts, l, k] {
                       auto const [u, v] = identity_pair_unvn(4, k);
                       return satisfies_lee(l, u, v, opts).holds;
                     }});
      }
      s.push_back({"identities.lee.mixed_vanish",
                   "mixed elements of L_l^1 vanish after floor(l/2)+1 "
                   "occurrences, l = 2..10",
                   [] {
                     for (std::size_t l = 2; l <= 10; ++l) {
                       if (!lee_mixed_elements_vanish(l)) {
                         return false;
                       }
                     }
                     return true;
                   }});
      s.push_back({"identities.lee6.word_function",
                   "xyyxyx and xyxyyx have the same word function over L_6^1",
                   [opts] {
                     auto const f = free_algebra(lee_monoid(6), 2, opts);
                     return word_function(f, w("xyyxyx"))
                            == word_function(f, w("xyxyyx"));
                   }});
      return s;
    }

    bool scan_contains(ScanReport const& r, std::vector<Word> const& words) {
      auto const iso = r.isoterms();
      return std::all_of(words.begin(), words.end(), [&](Word const& x) {
        return std::find(iso.begin(), iso.end(), x) != iso.end();
      });
    }

    Suite isoterms_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      Suite               s;
      for (std::size_t l : {2, 3}) {
        s.push_back({"isoterms.ab.lee" + std::to_string(l),
                     "ab is an isoterm for L_" + std::to_string(l) + "^1",
                     [opts, l] { return is_isoterm(lee_monoid(l), w("ab"), opts).is_term; }});
      }
      for (std::size_t l : {4, 5}) {
        for (char const* word : {"abab", "a^2b^2", "ab^2a"}) {
          s.push_back({"isoterms." + to_compact(w(word)) + ".lee" + std::to_string(l),
                       to_compact(w(word)) + " is an isoterm for L_"
                           + std::to_string(l) + "^1",
                       [opts, l, word] {
                         return is_isoterm(lee_monoid(l), w(word), opts).is_term;
                       }});
        }
      }
      s.push_back({"isoterms.lee6.xyyxyx",
                   "xyyxyx is not an isoterm for L_6^1, witness xyxyyx", [opts] {
                     auto const r = is_isoterm(lee_monoid(6), w("xyyxyx"), opts);
                     return !r.is_term && r.witness == w("xyxyyx");
                   }});
      s.push_back({"isoterms.lee6.xyyxyx.sametype",
                   "xyyxyx is a same-type term for L_6^1", [opts] {
                     return is_tau_term_sametype(lee_monoid(6), w("xyyxyx"), opts)
                         .is_term;
                   }});
      s.push_back({"isoterms.klimited.xyyxyx", "xyyxyx is 3-limited",
                   [] { return klimited(w("xyyxyx"), 3) && !klimited(w("xyyxyx"), 2); }});
      s.push_back({"isoterms.scan.lee3",
                   "every isoterm for L_3^1 over {a, b} of length <= 4 is "
                   "1-limited",
                   [opts] {
                     auto const r = isoterm_scan(lee_monoid(3), 4, 2, opts);
                     return r.isoterms_klimited(1) && scan_contains(r, {w("ab")});
                   }});
      s.push_back({"isoterms.scan.lee5",
                   "every isoterm for L_5^1 over {a, b} of length <= 4 is "
                   "2-limited, including abab, a^2b^2, ab^2a",
                   [opts] {
                     auto const r = isoterm_scan(lee_monoid(5), 4, 2, opts);
                     return r.isoterms_klimited(2)
                            && scan_contains(r, {w("abab"), w("aabb"), w("abba")});
                   }});
      s.push_back({"isoterms.scan.lee4_lee5",
                   "L_4^1 and L_5^1 have the same isoterms over {a, b} up to "
                   "length 5",
                   [opts] {
                     return isoterm_scan(lee_monoid(4), 5, 2, opts).isoterms()
                            == isoterm_scan(lee_monoid(5), 5, 2, opts).isoterms();
                   }});
      s.push_back({"isoterms.perkins.self",
                   "every Perkins word is an isoterm for its Dilworth monoid",
                   [opts] {
                     auto const ws = perkins_words();
                     return contains_dilworth(dilworth(ws), ws, opts).holds;
                   }});
      s.push_back({"isoterms.dilworth.ab.lee2",
                   "the variety of L_2^1 contains S^1({ab})", [opts] {
                     std::vector<Word> const ws{w("ab")};
                     return contains_dilworth(lee_monoid(2), ws, opts).holds;
                   }});
      return s;
    }

    Suite containment_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      Suite               s;
      for (std::size_t l = 2; l <= 5; ++l) {
        s.push_back({"containment.c" + std::to_string(l) + ".lee" + std::to_string(l),
                     "L_" + std::to_string(l) + "^1 has Property (C_"
                         + std::to_string(l) + ")",
                     [opts, l] { return property_c(lee_monoid(l), l, opts).holds; }});
      }
      s.push_back({"containment.downward",
                   "L_l^1 has Property (C_l') for all l' <= l <= 5", [opts] {
                     for (std::size_t l = 2; l <= 5; ++l) {
                       auto const m = lee_monoid(l);
                       for (std::size_t lp = 1; lp <= l; ++lp) {
                         if (!property_c(m, lp, opts).holds) {
                           return false;
                         }
                       }
                     }
                     return true;
                   }});
      s.push_back({"containment.lee6.contains_lee5",
                   "the variety of L_6^1 contains L_5^1", [opts] {
                     return contains_lee(lee_monoid(6), 5, opts).holds;
                   }});
      s.push_back({"containment.lee2.c4",
                   "L_2^1 lacks Property (C_4); the reported witness is a "
                   "genuine identity between words of different type",
                   [opts] {
                     auto const m = lee_monoid(2);
                     auto const r = property_c(m, 4, opts);
                     return !r.holds
                            && satisfies(m, r.witness->first, r.witness->second, opts)
                                   .holds
                            && !same_type(r.witness->first, r.witness->second)
                            && satisfies(m, w("xyxy"), w("yxyx"), opts).holds;
                   }});
      s.push_back({"containment.lee2.c3",
                   "L_2^1 lacks Property (C_3): it satisfies xy^2x = xyxy",
                   [opts] {
                     auto const m = lee_monoid(2);
                     auto const r = property_c(m, 3, opts);
                     return !r.holds && r.witness->first == w("xy^2x")
                            && r.witness->second == w("xyxy")
                            && satisfies(m, w("xy^2x"), w("xyxy"), opts).holds;
                   }});
      s.push_back({"containment.nfb_premises.lee5",
                   "L_5^1 has Property (C_5) and satisfies U_4 = V_4 (k=1), "
                   "with U_4 and V_4 of different type",
                   [opts] {
                     auto const [u, v] = identity_pair_unvn(4, 1);
                     return property_c(lee_monoid(5), 5, opts).holds
                            && satisfies_lee(5, u, v, opts).holds && !same_type(u, v);
                   }});
      return s;
    }

    Suite regression_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      Suite               s;
      for (auto const& [l, n, size] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 1, 3},
                                      {5, 2, 50},
                                      {6, 2, 106}}) {
        s.push_back({"regression.free.lee" + std::to_string(l) + ".n" + std::to_string(n),
                     "the relatively free monoid of L_" + std::to_string(l)
                         + "^1 on " + std::to_string(n) + " generators has "
                         + std::to_string(size) + " elements",
                     [opts, l, n, size] {
                       auto const f = free_algebra(lee_monoid(l), n, opts);
                       return f.size() == size && verify_closure(f);
                     }});
      }
      s.push_back({"regression.index_period",
                   "index and period: (2,1) for L_2^1, (3,1) for L_5^1, period "
                   "1 for every Lee monoid up to l = 10",
                   [] {
                     if (index_period(lee_monoid(2)) != IndexPeriod{2, 1}
                         || index_period(lee_monoid(5)) != IndexPeriod{3, 1}) {
                       return false;
                     }
                     for (std::size_t l = 2; l <= 10; ++l) {
                       if (index_period(lee_monoid(l)).period != 1) {
                         return false;
                       }
                     }
                     return true;
                   }});
      return s;
    }

    Suite oracle_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      std::uint64_t const seed = cfg.seed;
      return {{"oracle.random.1000",
               "pruned search, unpruned search and word functions agree on "
               "1000 random identities over monoids of at most 7 elements",
               [opts, seed] {
                 auto const r = oracle_campaign(1000, seed, opts);
                 return r.instances == 1000 && r.disagreements == 0;
               }}};
    }

    Suite blocks_suite(RunConfig const& cfg) {
      SearchOptions const opts = cfg.search();
      Suite               s;
      for (std::size_t l : {3, 4, 5}) {
        s.push_back({"blocks.lee" + std::to_string(l),
                     "identities of L_" + std::to_string(l)
                         + "^1 keep linear-variable order, block contents and "
                           "block boundary letters on the fixed corpus",
                     [opts, l] {
                       auto const corpus = block_corpus();
                       return corpus.size() >= 50
                              && block_invariant_violations(lee_monoid(l), l, corpus, opts)
                                     == 0;
                     }});
      }
      return s;
    }

    Suite build_suite(std::string const& name, RunConfig const& cfg) {
      if (name == "sizes") {
        return sizes_suite();
      }
      if (name == "jackson") {
        return jackson_suite();
      }
      if (name == "identities") {
        return identities_suite(cfg);
      }
      if (name == "isoterms") {
        return isoterms_suite(cfg);
      }
      if (name == "containment") {
        return containment_suite(cfg);
      }
      if (name == "regression") {
        return regression_suite(cfg);
      }
      if (name == "oracle") {
        return oracle_suite(cfg);
      }
      if (name == "blocks") {
        return blocks_suite(cfg);
      }
      throw DomainError("unknown suite '" + name + "'");
    }
  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "sizes",      "jackson", "identities", "isoterms",
        "containment", "regression", "oracle", "blocks"};
    return names;
  }

  std::vector<LedgerEntry> reproduce(std::string const& suite,
                                     RunConfig const&   config) {
    Suite facts;
    if (suite == "all") {
      for (auto const& name : suite_names()) {
        auto part = build_suite(name, config);
        facts.insert(facts.end(), part.begin(), part.end());
      }
    } else {
      facts = build_suite(suite, config);
    }

    std::vector<LedgerEntry> out;
    for (auto const& f : facts) {
      auto const  start = std::chrono::steady_clock::now();
      std::string status;
      try {
        status = f.check() ? "pass" : "fail";
      } catch (ResourceError const&) {
        status = "skipped: resources";
      }
      double const ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      out.push_back({f.id, f.ref, status, ms});
    }
    return out;
  }

  nlohmann::ordered_json ledger_json(std::vector<LedgerEntry> const& ledger,
                                     bool                            with_timing) {
    auto j = nlohmann::ordered_json::array();
    for (auto const& e : ledger) {
      j.push_back({{"fact_id", e.fact_id},
                   {"paper_ref", e.claim},
                   {"status", e.status},
                   {"millis", with_timing ? static_cast<std::int64_t>(e.millis) : 0}});
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random oracle campaign
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid random_monoid(std::mt19937_64& rng, std::size_t max_size) {
    using Map = std::vector<std::uint8_t>;
    while (true) {
      std::size_t const degree = 2 + rng() % 3;
      std::size_t const gens   = 1 + rng() % 2;
      bool const        zero   = rng() % 2 == 0;
      std::size_t const limit  = zero ? max_size - 1 : max_size;

      std::vector<Map> g(gens, Map(degree));
      for (auto& f : g) {
        for (auto& x : f) {
          x = static_cast<std::uint8_t>(rng() % degree);
        }
      }
      Map id(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        id[i] = static_cast<std::uint8_t>(i);
      }
      auto compose = [](Map const& a, Map const& b) {  // apply a, then b
        Map c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          c[i] = b[a[i]];
        }
        return c;
      };
      std::vector<Map>        elems{id};
      std::map<Map, elem_t>   index{{id, 0}};
      for (std::size_t i = 0; i < elems.size() && elems.size() <= limit; ++i) {
        for (auto const& f : g) {
          Map c = compose(elems[i], f);
          if (index.emplace(c, static_cast<elem_t>(elems.size())).second) {
            elems.push_back(std::move(c));
          }
        }
      }
      if (elems.size() > limit) {
        continue;
      }
      std::size_t const n = elems.size() + (zero ? 1 : 0);
      std::vector<std::vector<elem_t>> table(n, std::vector<elem_t>(n));
      std::vector<std::string>         labels{"1"};
      for (std::size_t i = 1; i < elems.size(); ++i) {
        labels.push_back("t" + std::to_string(i));
      }
      for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
          table[a][b] = index.at(compose(elems[a], elems[b]));
        }
      }
      std::optional<elem_t> z;
      if (zero) {
        z = static_cast<elem_t>(n - 1);
        labels.push_back("0");
        for (std::size_t a = 0; a < n; ++a) {
          table[a][n - 1] = table[n - 1][a] = *z;
        }
      }
      return FiniteMonoid::from_table(std::move(labels), std::move(table), 0, z);
    }
  }

  OracleReport oracle_campaign(std::size_t          instances,
                               std::uint64_t        seed,
                               SearchOptions const& opts) {
    std::mt19937_64          rng(seed);
    std::vector<var_t> const vars{Variables::intern("x"), Variables::intern("y"),
                                  Variables::intern("z")};
    auto random_word = [&](std::size_t nv) {
      std::vector<var_t> letters(1 + rng() % 8);
      for (auto& x : letters) {
        x = vars[rng() % nv];
      }
      return Word::from_letters(letters);
    };

    SearchOptions pruned = opts, unpruned = opts;
    pruned.prune         = true;
    unpruned.prune       = false;

    OracleReport out;
    while (out.instances < instances) {
      FiniteMonoid const m = random_monoid(rng, 7);
      FreeAlgebra const  f = free_algebra(m, vars, opts);
      for (int i = 0; i < 10 && out.instances < instances; ++i) {
        std::size_t const nv = 1 + rng() % 3;
        Word const        u  = random_word(nv);
        // A third of the pairs are built to hold: v = u^(N+p) against u^N.
        Word v = random_word(nv);
        Word lhs = u;
        if (rng() % 3 == 0) {
          auto const ip = index_period(m);
          if (u.length() * (ip.index + ip.period) <= 8) {
            std::vector<Run> a, b;
            for (std::uint64_t r = 0; r < ip.index; ++r) {
              a.insert(a.end(), u.runs().begin(), u.runs().end());
            }
            b = a;
            for (std::uint64_t r = 0; r < ip.period; ++r) {
              b.insert(b.end(), u.runs().begin(), u.runs().end());
            }
            lhs = Word(std::move(a));
            v   = Word(std::move(b));
          }
        }
        Verdict const a = satisfies(m, lhs, v, pruned);
        Verdict const b = satisfies(m, lhs, v, unpruned);
        bool const    c = word_function(f, lhs) == word_function(f, v);
        bool ok = a.holds == b.holds && a.holds == c && a.witness == b.witness;
        if (ok && a.witness) {
          ok = evaluate(m, lhs, *a.witness) != evaluate(m, v, *a.witness);
        }
        ++out.instances;
        out.holds += a.holds ? 1 : 0;
        out.disagreements += ok ? 0 : 1;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block invariants
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> block_corpus() {
    std::vector<Word> out;
    auto add_all = [&](std::vector<var_t> const& alphabet, std::size_t len,
                       auto const& accept) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        std::vector<var_t> letters;
        for (std::size_t d : digits) {
          letters.push_back(alphabet[d]);
        }
        if (accept(letters)) {
          out.push_back(Word::from_letters(letters));
        }
        std::size_t i = len;
        while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
          digits[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++digits[i - 1];
      }
    };
    var_t const x = Variables::intern("x"), y = Variables::intern("y"),
                t = Variables::intern("t"), s = Variables::intern("s");
    auto count = [](std::vector<var_t> const& ls, var_t v) {
      return static_cast<std::size_t>(std::count(ls.begin(), ls.end(), v));
    };
    for (std::size_t len : {5, 6}) {
      add_all({x, y, t}, len, [&](std::vector<var_t> const& ls) {
        return count(ls, t) == 1 && count(ls, x) >= 2 && count(ls, y) >= 2;
      });
    }
    for (std::size_t len : {4, 5, 6}) {
      add_all({x, t, s}, len, [&](std::vector<var_t> const& ls) {
        return count(ls, t) == 1 && count(ls, s) == 1 && count(ls, x) >= 2;
      });
    }
    return out;
  }

  namespace {
    VarSet content_set(std::optional<Word> const& b) {
      if (!b) {
        return {};
      }
      auto const c = b->content();
      return VarSet(c.begin(), c.end());
    }

    bool blocks_agree(Word const& u, Word const& v, std::size_t l) {
      auto const su = word_stats(u), sv = word_stats(v);
      if (su.linear != sv.linear || su.nonlinear != sv.nonlinear) {
        return false;
      }
      Blocks const bu = blocks(u), bv = blocks(v);
      if (bu.linear != bv.linear) {
        return false;
      }
      for (std::size_t q = 0; q < bu.blocks.size(); ++q) {
        if (content_set(bu.blocks[q]) != content_set(bv.blocks[q])) {
          return false;
        }
      }
      bool const two = su.nonlinear.size() == 2;
      if (!two || l <= 2 || project(u, su.nonlinear).height() > l) {
        return true;
      }
      for (std::size_t q = 0; q < bu.blocks.size(); ++q) {
        if (!bu.blocks[q]) {
          continue;
        }
        auto const& ru = bu.blocks[q]->runs();
        auto const& rv = bv.blocks[q]->runs();
        if (ru.front().var != rv.front().var || ru.back().var != rv.back().var) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::size_t block_invariant_violations(FiniteMonoid const&   m,
                                     std::size_t           l,
                                     std::span<Word const> corpus,
                                     SearchOptions const&  opts) {
    std::map<std::vector<var_t>, std::shared_ptr<FreeAlgebra const>> cache;
    std::size_t violations = 0;
    for (Word const& u : corpus) {
      auto alphabet = u.content();
      std::sort(alphabet.begin(), alphabet.end());
      auto& f = cache[alphabet];
      if (!f) {
        f = std::make_shared<FreeAlgebra const>(free_algebra(m, alphabet, opts));
      }
      auto const a = equiv_language(f, u);
      for (Word const& v : enumerate_equivalent(a, u.length() + 2, opts.budget.nodes)) {
        violations += blocks_agree(u, v, l) ? 0 : 1;
      }
    }
    return violations;
  }

}  // namespace semivar::cli
