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

// Internal: the compiled form of an identity and the depth-first subtree
// search shared by the serial and OpenMP satisfaction kernels.

#ifndef SEMIVAR_SRC_SEARCH_KERNEL_HPP_
#define SEMIVAR_SRC_SEARCH_KERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semivar/algebra.hpp"
#include "semivar/eqcheck.hpp"

namespace semivar::detail {

  //! One side of an identity: runs as (variable slot, exponent slot), and
  //! cut[d] = first run whose variable slot is >= d.
  struct CompiledSide {
    std::vector<std::uint32_t> var;
    std::vector<std::uint32_t> exp_slot;
    std::vector<std::size_t>   cut;
  };

  struct CompiledIdentity {
    std::vector<var_t>               order;
    std::vector<std::vector<elem_t>> domains;
    CompiledSide                     u, v;
    std::size_t                      n = 0;  // |M|
    std::vector<elem_t>              table;
    std::size_t                      nexp = 0;
    std::vector<elem_t>              pow;    // pow[x * nexp + slot]
    elem_t                           identity = 0;
    std::optional<elem_t>            zero;
    bool                             prune = false;
    bool                             audit = false;

    std::size_t depth() const noexcept {
      return order.size();
    }
  };

  CompiledIdentity compile(FiniteMonoid const&                     m,
                           Word const&                             u,
                           Word const&                             v,
                           std::vector<std::vector<elem_t>> const& domains,
                           SearchOptions const&                    opts);

  //! Depth-first search below a fixed prefix. `assign` holds the values of
  //! slots < start on entry and the counterexample on success.
  class SubtreeSearch {
   public:
    SubtreeSearch(CompiledIdentity const& c, std::uint64_t node_limit)
        : c_(c),
          limit_(node_limit),
          assign_(c.depth(), 0),
          pu_(c.depth() + 1, c.identity),
          pv_(c.depth() + 1, c.identity) {}

    //! Prefix values at depth `start`. Returns true when a counterexample
    //! was found. Sets exhausted() and stops when the node limit is passed.
    bool run(std::vector<elem_t> const& prefix,
             std::size_t                start,
             elem_t                     pu,
             elem_t                     pv) {
      for (std::size_t d = 0; d < start; ++d) {
        assign_[d] = prefix[d];
      }
      pu_[start] = pu;
      pv_[start] = pv;
      return dfs(start);
    }

    std::uint64_t nodes() const noexcept {
      return nodes_;
    }

    bool exhausted() const noexcept {
      return exhausted_;
    }

    std::vector<elem_t> const& assignment() const noexcept {
      return assign_;
    }

    //! Product of the runs of `side` in [cut[d], cut[d+1]) appended to acc.
    static elem_t extend(CompiledIdentity const&    c,
                         CompiledSide const&        side,
                         std::vector<elem_t> const& assign,
                         std::size_t                d,
                         elem_t                     acc) noexcept {
      std::size_t const end = side.cut[d + 1];
      for (std::size_t p = side.cut[d]; p < end; ++p) {
        if (c.zero && acc == *c.zero) {
          return acc;
        }
        elem_t const x = c.pow[assign[side.var[p]] * c.nexp + side.exp_slot[p]];
        acc            = c.table[acc * c.n + x];
      }
      return acc;
    }

   private:
    bool prunable(std::size_t d) const noexcept {
      return c_.prune && c_.zero && pu_[d] == *c_.zero && pv_[d] == *c_.zero;
    }

    bool dfs(std::size_t d) {
      if (d == c_.depth()) {
        return pu_[d] != pv_[d];
      }
      if (prunable(d)) {
        if (c_.audit) {
          audit(d);
        }
        return false;
      }
      for (elem_t x : c_.domains[d]) {
        if (++nodes_ > limit_) {
          exhausted_ = true;
          return false;
        }
        assign_[d] = x;
        pu_[d + 1] = extend(c_, c_.u, assign_, d, pu_[d]);
        pv_[d + 1] = extend(c_, c_.v, assign_, d, pv_[d]);
        if (dfs(d + 1) || exhausted_) {
          return !exhausted_;
        }
      }
      return false;
    }

    // Unpruned, uncounted re-expansion of a pruned subtree.
    void audit(std::size_t d) {
      if (d == c_.depth()) {
        if (pu_[d] != pv_[d]) {
          throw std::logic_error("pruned subtree contains a counterexample");
        }
        return;
      }
      for (elem_t x : c_.domains[d]) {
        assign_[d] = x;
        pu_[d + 1] = extend(c_, c_.u, assign_, d, pu_[d]);
        pv_[d + 1] = extend(c_, c_.v, assign_, d, pv_[d]);
        audit(d + 1);
      }
    }

    CompiledIdentity const& c_;
    std::uint64_t           limit_;
    std::uint64_t           nodes_     = 0;
    bool                    exhausted_ = false;
    std::vector<elem_t>     assign_;
    std::vector<elem_t>     pu_, pv_;
  };

  Assignment to_assignment(CompiledIdentity const&    c,
                           std::vector<elem_t> const& values);

}  // namespace semivar::detail

#endif  // SEMIVAR_SRC_SEARCH_KERNEL_HPP_
