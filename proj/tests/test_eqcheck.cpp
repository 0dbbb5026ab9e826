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


#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "semivar/eqcheck.hpp"
#include "semivar/errors.hpp"
#include "support.hpp"

using namespace semivar;
using testing::var;
using testing::w;

namespace {
  // Every assignment in lexicographic order (variables by first occurrence,
  // elements by index); the first one that separates u and v, if any.
  std::optional<Assignment> brute_force(FiniteMonoid const& m, Word const& u,
                                        Word const& v) {
    auto const          order = search_order(u, v);
    std::vector<elem_t> vals(order.size(), 0);
    while (true) {
      Assignment a;
      for (std::size_t i = 0; i < order.size(); ++i) {
        a[order[i]] = vals[i];
      }
      if (evaluate_naive(m, u, a) != evaluate_naive(m, v, a)) {
        return a;
      }
      std::size_t i = order.size();
      while (i > 0 && vals[i - 1] + 1 == m.size()) {
        vals[--i] = 0;
      }
      if (i == 0) {
        return std::nullopt;
      }
      ++vals[i - 1];
    }
  }

  SearchOptions with_workers(unsigned n) {
    SearchOptions o;
    o.workers = n;
    return o;
  }
}  // namespace

TEST_CASE("satisfies on small identities", "[eqcheck]") {
  auto const l2 = lee_monoid(2);
  auto const r  = satisfies(l2, w("xy"), w("yx"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(l2.label(r.witness->at(var("x"))) == "a");
  CHECK(l2.label(r.witness->at(var("y"))) == "b");

  CHECK(satisfies(lee_monoid(6), w("xyyxyx"), w("xyxyyx")).holds);
  CHECK(satisfies(l2, w("xyxy"), w("yxyx")).holds);
  CHECK_FALSE(brute_force(l2, w("xyxy"), w("yxyx")).has_value());
  CHECK(satisfies(l2, w("xyyx"), w("xyxy")).holds);
  CHECK_FALSE(satisfies(l2, w("xyx"), w("xyxy")).holds);
}

TEST_CASE("satisfies agrees with brute force, witness included", "[eqcheck][property]") {
  std::mt19937_64 rng(31);
  std::vector<FiniteMonoid> const ms{lee_monoid(2), lee_monoid(3), lee_monoid(4),
                                     dilworth(perkins_words())};
  int holds = 0;
  for (int i = 0; i < 400; ++i) {
    auto const& m = ms[i % ms.size()];
    Word const  u = testing::random_word(rng, 3, 7);
    Word const  v = rng() % 2 ? testing::random_word(rng, 3, 7) : reverse(u);
    auto const  expect = brute_force(m, u, v);
    SearchOptions pruned, plain;
    plain.prune = false;
    auto const a = satisfies(m, u, v, pruned);
    auto const b = satisfies(m, u, v, plain);
    CHECK(a.holds == !expect.has_value());
    CHECK(a.witness == expect);
    CHECK(b.witness == expect);
    CHECK(a.nodes <= b.nodes);
    holds += a.holds ? 1 : 0;
  }
  CHECK(holds > 0);
}

TEST_CASE("pruned subtrees never hide a counterexample", "[eqcheck][property]") {
  std::mt19937_64 rng(37);
  for (unsigned workers : {1u, 3u}) {
    SearchOptions o = with_workers(workers);
    o.audit_pruning = true;
    for (int i = 0; i < 150; ++i) {
      auto const m = lee_monoid(2 + i % 4);
      Word const u = testing::random_word(rng, 3, 8);
      Word const v = testing::random_word(rng, 3, 8);
      CHECK_NOTHROW(satisfies(m, u, v, o));
    }
  }
}

TEST_CASE("serial and parallel searches report identical verdicts", "[eqcheck][parallel]") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 120; ++i) {
    auto const m = lee_monoid(2 + i % 5);
    Word const u = testing::random_word(rng, 3, 9);
    Word const v = i % 3 == 0 ? u * w("x") : testing::random_word(rng, 3, 9);
    auto const s = satisfies(m, u, v, with_workers(1));
    for (unsigned t : {2u, 4u}) {
      auto const p = satisfies(m, u, v, with_workers(t));
      CHECK(p.holds == s.holds);
      CHECK(p.witness == s.witness);
      CHECK(p.nodes == s.nodes);
    }
  }
  auto const [u, v] = identity_pair_unvn(4, 1);
  auto const s      = satisfies_lee(4, u, v, with_workers(1));
  auto const p      = satisfies_lee(4, u, v, with_workers(4));
  CHECK(s.holds);
  CHECK(p.holds);
  CHECK(p.nodes == s.nodes);

  // A failing instance deep in the tree.
  Word const u2 = u * w("x");
  auto const s2 = satisfies_lee(4, u2, v, with_workers(1));
  auto const p2 = satisfies_lee(4, u2, v, with_workers(4));
  CHECK_FALSE(s2.holds);
  CHECK(p2.witness == s2.witness);
  CHECK(p2.nodes == s2.nodes);
}

TEST_CASE("satisfies_lee matches the generic search", "[eqcheck][property]") {
  std::mt19937_64 rng(43);
  for (std::size_t l = 2; l <= 6; ++l) {
    CHECK(lee_mixed_elements_vanish(l));
    auto const m = lee_monoid(l);
    for (int i = 0; i < 120; ++i) {
      Word const u = testing::random_word(rng, 3, 10);
      Word       v = testing::random_word(rng, 3, 10);
      if (i % 4 == 0) {
        v = reverse(u);
      }
      auto const a = satisfies_lee(l, u, v);
      auto const b = satisfies(m, u, v);
      CHECK(a.holds == b.holds);
      if (a.witness) {
        CHECK(evaluate(m, u, *a.witness) != evaluate(m, v, *a.witness));
      }
    }
  }
  CHECK(satisfies_lee(6, w("xyyxyx"), w("xyxyyx")).holds);
  // Below the threshold nothing is restricted and the generic search runs.
  auto const a = satisfies_lee(5, w("xy"), w("yx"));
  auto const b = satisfies(lee_monoid(5), w("xy"), w("yx"));
  CHECK(a.nodes == b.nodes);
  CHECK(a.witness == b.witness);
}

TEST_CASE("budgets raise ResourceError", "[eqcheck]") {
  SearchOptions o;
  o.budget.nodes = 50;
  auto const [u, v] = identity_pair_unvn(4, 1);
  CHECK_THROWS_AS(satisfies(lee_monoid(4), u, v, o), ResourceError);
  o.workers = 4;
  CHECK_THROWS_AS(satisfies(lee_monoid(4), u, v, o), ResourceError);

  SearchOptions small;
  small.budget.elements = 10;
  CHECK_THROWS_AS(free_algebra(lee_monoid(4), 2, small), ResourceError);
  small.workers = 1;
  CHECK_THROWS_AS(free_algebra(lee_monoid(4), 2, small), ResourceError);
  SearchOptions tight;
  tight.budget.memory_bytes = 1000;
  CHECK_THROWS_AS(free_algebra(lee_monoid(4), 3, tight), ResourceError);
}

TEST_CASE("free algebra of L_2^1 on one generator", "[eqcheck]") {
  auto const m = lee_monoid(2);
  // The word x^e as a function M -> M, e = 0..8.
  std::set<std::vector<elem_t>> functions;
  for (std::uint64_t e = 0; e <= 8; ++e) {
    std::vector<elem_t> f;
    for (elem_t x = 0; x < m.size(); ++x) {
      f.push_back(m.power(x, e));
    }
    functions.insert(f);
  }
  CHECK(functions.size() == 3);
  auto const f = free_algebra(m, 1);
  CHECK(f.size() == 3);
  CHECK(word_function(f, w("x^3")) == word_function(f, w("x^2")));
  CHECK(word_function(f, w("x")) != word_function(f, w("x^2")));
}

TEST_CASE("free algebra regression sizes", "[eqcheck]") {
  CHECK(free_algebra(FiniteMonoid::from_table({"1"}, {{0}}, 0, std::nullopt), 3).size() == 1);
  CHECK(free_algebra(lee_monoid(5), 2).size() == 50);
  CHECK(free_algebra(lee_monoid(6), 2).size() == 106);
  CHECK(free_algebra(lee_monoid(2), 2).size() == 16);
  CHECK(free_algebra(lee_monoid(4), 3).size() == 2060);
}

TEST_CASE("serial and parallel closures number elements identically", "[eqcheck][parallel]") {
  std::vector<FiniteMonoid> const ms{lee_monoid(2), lee_monoid(3), lee_monoid(5),
                                     dilworth(perkins_words())};
  for (auto const& m : ms) {
    for (std::size_t n : {1, 2, 3}) {
      if (m.size() > 20 && n == 3) {
        continue;
      }
      auto const s = free_algebra(m, n, with_workers(1));
      auto const p = free_algebra(m, n, with_workers(4));
      CHECK(s == p);
      CHECK(verify_closure(s));
    }
  }
}

TEST_CASE("word functions decide identities", "[eqcheck][property]") {
  std::mt19937_64 rng(47);
  for (std::size_t l : {2, 3, 6}) {
    auto const m = lee_monoid(l);
    auto const f = free_algebra(m, default_alphabet(2));
    for (int i = 0; i < 200; ++i) {
      Word const u = testing::random_word(rng, 2, 8);
      Word const v = i % 3 == 0 ? reverse(u) : testing::random_word(rng, 2, 8);
      CHECK((word_function(f, u) == word_function(f, v)) == satisfies(m, u, v).holds);
      CHECK(word_function(f, u * v)
            == [&] {
                 std::uint32_t e = word_function(f, u);
                 for (var_t x : v.letters()) {
                   e = f.transition(e, f.letter_index(x));
                 }
                 return e;
               }());
    }
  }
  auto const f6 = free_algebra(lee_monoid(6), 2);
  CHECK(word_function(f6, w("xyyxyx")) == word_function(f6, w("xyxyyx")));
  CHECK_THROWS_AS(word_function(f6, w("xz")), DomainError);
}

TEST_CASE("verdict JSON", "[eqcheck]") {
  auto const l2 = lee_monoid(2);
  auto const r  = satisfies(l2, w("xy"), w("yx"));
  CHECK(to_json(r, l2, false).dump()
        == R"({"holds":false,"witness":{"x":"a","y":"b"},"nodes":)"
               + std::to_string(r.nodes) + R"(,"millis":0})");
  CHECK(to_json(satisfies(l2, w("x"), w("x")), l2, false)["witness"].is_null());
}
