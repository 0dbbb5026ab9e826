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

// Serial reference kernels for the satisfaction search and the free-algebra
// closure.

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "search_kernel.hpp"
#include "semivar/errors.hpp"

namespace semivar::detail {

  namespace {
    void compile_side(Word const&                            w,
                      std::map<var_t, std::uint32_t> const&  slot,
                      std::vector<std::uint32_t> const&      exps,
                      std::size_t                            depth,
                      CompiledSide&                          out) {
      for (Run const& r : w.runs()) {
        out.var.push_back(slot.at(r.var));
        out.exp_slot.push_back(static_cast<std::uint32_t>(
            std::lower_bound(exps.begin(), exps.end(), r.exp) - exps.begin()));
      }
      out.cut.assign(depth + 1, w.runs().size());
      for (std::size_t d = 0; d <= depth; ++d) {
        for (std::size_t p = 0; p < out.var.size(); ++p) {
          if (out.var[p] >= d) {
            out.cut[d] = p;
            break;
          }
        }
      }
    }
  }  // namespace

  CompiledIdentity compile(FiniteMonoid const&                     m,
                           Word const&                             u,
                           Word const&                             v,
                           std::vector<std::vector<elem_t>> const& domains,
                           SearchOptions const&                    opts) {
    CompiledIdentity c;
    c.order = search_order(u, v);
    if (domains.size() != c.order.size()) {
      throw DomainError("one domain per variable is required");
    }
    c.domains = domains;
    std::map<var_t, std::uint32_t> slot;
    for (std::uint32_t i = 0; i < c.order.size(); ++i) {
      slot[c.order[i]] = i;
    }
    std::vector<std::uint32_t> exps;
    for (Word const* w : {&u, &v}) {
      for (Run const& r : w->runs()) {
        exps.push_back(r.exp);
      }
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    compile_side(u, slot, exps, c.depth(), c.u);
    compile_side(v, slot, exps, c.depth(), c.v);

    c.n     = m.size();
    c.table = m.flat_table();
    c.nexp  = exps.size();
    c.pow.resize(c.n * c.nexp);
    for (elem_t x = 0; x < c.n; ++x) {
      for (std::size_t s = 0; s < c.nexp; ++s) {
        c.pow[x * c.nexp + s] = m.power(x, exps[s]);
      }
    }
    c.identity = m.identity();
    c.zero     = m.zero();
    c.prune    = opts.prune && m.zero().has_value();
    c.audit    = opts.audit_pruning;
    return c;
  }

  Assignment to_assignment(CompiledIdentity const&    c,
                           std::vector<elem_t> const& values) {
    Assignment a;
    for (std::size_t i = 0; i < c.order.size(); ++i) {
      a[c.order[i]] = values[i];
    }
    return a;
  }

  Verdict satisfies_serial(FiniteMonoid const&                     m,
                           Word const&                             u,
                           Word const&                             v,
                           std::vector<std::vector<elem_t>> const& domains,
                           SearchOptions const&                    opts) {
    CompiledIdentity const c = compile(m, u, v, domains, opts);
    SubtreeSearch          search(c, opts.budget.nodes);
    bool const found = search.run({}, 0, c.identity, c.identity);
    if (search.exhausted()) {
      throw ResourceError("node budget of "
                          + std::to_string(opts.budget.nodes)
                          + " exhausted");
    }
    Verdict out;
    out.holds = !found;
    out.nodes = search.nodes();
    if (found) {
      out.witness = to_assignment(c, search.assignment());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free algebra
  ////////////////////////////////////////////////////////////////////////

  FreeAlgebra free_algebra_serial(FiniteMonoid const& m,
                                  std::vector<var_t>  alphabet,
                                  Budget const&       budget) {
    std::size_t const r      = alphabet.size();
    std::size_t const n      = m.size();
    std::size_t       tuples = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (tuples > budget.memory_bytes / n) {
        throw ResourceError("word-function vectors exceed the memory budget");
      }
      tuples *= n;
    }

    VectorStore                values(tuples);
    std::vector<std::uint32_t> trans;
    auto view = [&](std::size_t e) {
      return std::string_view(reinterpret_cast<char const*>(values[e]), tuples);
    };
    auto hash = [&](std::uint32_t e) {
      return std::hash<std::string_view>{}(view(e));
    };
    auto eq = [&](std::uint32_t a, std::uint32_t b) { return view(a) == view(b); };
    std::unordered_set<std::uint32_t, decltype(hash), decltype(eq)> seen(
        64, hash, eq);

    std::vector<std::uint8_t> cand(tuples, static_cast<std::uint8_t>(m.identity()));
    values.push_back(cand.data());
    seen.insert(0);
    std::size_t count = 1;

    // gens[j][t] = component j of tuple t.
    std::vector<std::vector<std::uint8_t>> gens(r, std::vector<std::uint8_t>(tuples));
    for (std::size_t j = 0, stride = 1; j < r; ++j, stride *= n) {
      for (std::size_t t = 0; t < tuples; ++t) {
        gens[j][t] = static_cast<std::uint8_t>((t / stride) % n);
      }
    }
    std::vector<elem_t> const& table = m.flat_table();

    for (std::size_t e = 0; e < count; ++e) {
      for (std::size_t j = 0; j < r; ++j) {
        std::uint8_t const* src = values[e];
        for (std::size_t t = 0; t < tuples; ++t) {
          cand[t] = static_cast<std::uint8_t>(table[src[t] * n + gens[j][t]]);
        }
        values.push_back(cand.data());
        auto [it, inserted] = seen.insert(static_cast<std::uint32_t>(count));
        if (inserted) {
          ++count;
          if (count > budget.elements) {
            throw ResourceError("free algebra exceeds the element budget of "
                                + std::to_string(budget.elements));
          }
          if (count * tuples > budget.memory_bytes) {
            throw ResourceError("free algebra exceeds the memory budget");
          }
        } else {
          values.pop_back();
        }
        trans.push_back(*it);
      }
    }
    return FreeAlgebra(m, std::move(alphabet), tuples, std::move(values),
                       std::move(trans));
  }

}  // namespace semivar::detail
