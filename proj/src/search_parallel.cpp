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

// OpenMP kernels. Both reproduce the serial kernels exactly: the search
// reports the same witness and the same sequential node count, and the
// closure numbers elements in the same breadth-first order.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <limits>
#include <string_view>

#include "search_kernel.hpp"
#include "semivar/errors.hpp"

namespace semivar::detail {

  namespace {
    int thread_count(unsigned workers) {
      return workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);
    }

    struct Task {
      std::vector<elem_t> prefix;
      elem_t              pu, pv;
      // Prefix-phase nodes visited up to and including this task's root.
      std::uint64_t prefix_nodes;
    };

    // Enumerates the search tree down to `split`, in the same order and with
    // the same pruning as the serial search.
    class TaskBuilder {
     public:
      TaskBuilder(CompiledIdentity const& c, std::size_t split)
          : c_(c),
            split_(split),
            assign_(c.depth(), 0),
            pu_(c.depth() + 1, c.identity),
            pv_(c.depth() + 1, c.identity) {}

      void build(std::size_t d) {
        if (d == split_) {
          tasks.push_back({assign_, pu_[d], pv_[d], nodes});
          return;
        }
        if (c_.prune && c_.zero && pu_[d] == *c_.zero && pv_[d] == *c_.zero) {
          if (c_.audit) {
            CompiledIdentity unpruned = c_;
            unpruned.prune            = false;
            SubtreeSearch full(unpruned, std::numeric_limits<std::uint64_t>::max());
            if (full.run(assign_, d, pu_[d], pv_[d])) {
              throw std::logic_error("pruned subtree contains a counterexample");
            }
          }
          return;
        }
        for (elem_t x : c_.domains[d]) {
          ++nodes;
          assign_[d] = x;
          pu_[d + 1] = SubtreeSearch::extend(c_, c_.u, assign_, d, pu_[d]);
          pv_[d + 1] = SubtreeSearch::extend(c_, c_.v, assign_, d, pv_[d]);
          build(d + 1);
        }
      }

      std::vector<Task> tasks;
      std::uint64_t     nodes = 0;

     private:
      CompiledIdentity const& c_;
      std::size_t             split_;
      std::vector<elem_t>     assign_;
      std::vector<elem_t>     pu_, pv_;
    };
  }  // namespace

  Verdict satisfies_parallel(FiniteMonoid const&                     m,
                             Word const&                             u,
                             Word const&                             v,
                             std::vector<std::vector<elem_t>> const& domains,
                             SearchOptions const&                    opts) {
    CompiledIdentity const c       = compile(m, u, v, domains, opts);
    int const              threads = thread_count(opts.workers);

    std::size_t   split = 0;
    std::uint64_t width = 1;
    while (split < c.depth() && width < 64ULL * static_cast<unsigned>(threads)) {
      width *= c.domains[split].size();
      ++split;
    }

    TaskBuilder builder(c, split);
    builder.build(0);
    if (builder.nodes > opts.budget.nodes) {
      return satisfies_serial(m, u, v, domains, opts);
    }
    auto const&       tasks = builder.tasks;
    std::size_t const count = tasks.size();

    std::vector<std::uint64_t>       task_nodes(count, 0);
    std::vector<std::vector<elem_t>> witnesses(count);
    std::atomic<std::size_t>         best{count};
    std::atomic<std::uint64_t>       spent{builder.nodes};
    std::atomic<bool>                exhausted{false};
    std::uint64_t const              budget = opts.budget.nodes;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < count; ++i) {
      if (i > best.load(std::memory_order_relaxed)
          || exhausted.load(std::memory_order_relaxed)) {
        continue;
      }
      std::uint64_t const used  = spent.load(std::memory_order_relaxed);
      std::uint64_t const limit = used >= budget ? 0 : budget - used;
      SubtreeSearch       search(c, limit);
      bool const found = search.run(tasks[i].prefix, split, tasks[i].pu,
                                    tasks[i].pv);
      spent.fetch_add(search.nodes(), std::memory_order_relaxed);
      if (search.exhausted()) {
        exhausted.store(true, std::memory_order_relaxed);
        continue;
      }
      task_nodes[i] = search.nodes();
      if (found) {
        witnesses[i]      = search.assignment();
        std::size_t prev = best.load();
        while (i < prev && !best.compare_exchange_weak(prev, i)) {
        }
      }
    }

    // The shared budget is shared across schedule-dependent work, so an
    // exhausted run is settled by the serial kernel, which is exact.
    if (exhausted.load()) {
      return satisfies_serial(m, u, v, domains, opts);
    }

    Verdict           out;
    std::size_t const w = best.load();
    if (w < count) {
      out.holds   = false;
      out.witness = to_assignment(c, witnesses[w]);
      out.nodes   = tasks[w].prefix_nodes;
      for (std::size_t i = 0; i <= w; ++i) {
        out.nodes += task_nodes[i];
      }
    } else {
      out.nodes = builder.nodes;
      for (std::uint64_t x : task_nodes) {
        out.nodes += x;
      }
    }
    if (out.nodes > budget) {
      throw ResourceError("node budget of " + std::to_string(budget)
                          + " exhausted");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free algebra
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Open-addressing set of element indices keyed by their value vectors.
    class VectorIndex {
     public:
      explicit VectorIndex(std::size_t tuples) : tuples_(tuples), slots_(1024, 0) {}

      static std::uint64_t hash(std::uint8_t const* p, std::size_t len) {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<char const*>(p), len));
      }

      // Index of the vector at `p` among `values`, or npos.
      std::size_t find(VectorStore const&               values,
                       std::uint8_t const*              p,
                       std::uint64_t                    h) const {
        std::size_t mask = slots_.size() - 1;
        for (std::size_t s = h & mask;; s = (s + 1) & mask) {
          std::uint32_t e = slots_[s];
          if (e == 0) {
            return npos;
          }
          --e;
          if (hashes_[e] == h
              && std::memcmp(values[e], p, tuples_) == 0) {
            return e;
          }
        }
      }

      void insert(std::uint32_t e, std::uint64_t h) {
        hashes_.push_back(h);
        if (2 * hashes_.size() > slots_.size()) {
          std::vector<std::uint32_t> old(slots_.size() * 2, 0);
          old.swap(slots_);
          for (std::uint32_t x = 0; x < hashes_.size(); ++x) {
            place(x);
          }
        } else {
          place(e);
        }
      }

      static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

     private:
      void place(std::uint32_t e) {
        std::size_t mask = slots_.size() - 1;
        for (std::size_t s = hashes_[e] & mask;; s = (s + 1) & mask) {
          if (slots_[s] == 0) {
            slots_[s] = e + 1;
            return;
          }
        }
      }

      std::size_t                tuples_;
      std::vector<std::uint32_t> slots_;
      std::vector<std::uint64_t> hashes_;
    };
  }  // namespace

  FreeAlgebra free_algebra_parallel(FiniteMonoid const& m,
                                    std::vector<var_t>  alphabet,
                                    Budget const&       budget,
                                    unsigned            workers) {
    int const         threads = thread_count(workers);
    std::size_t const r       = alphabet.size();
    std::size_t const n       = m.size();
    std::size_t       tuples  = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (tuples > budget.memory_bytes / n) {
        throw ResourceError("word-function vectors exceed the memory budget");
      }
      tuples *= n;
    }

    // gens[j][t] = component j of tuple t.
    std::vector<std::vector<std::uint8_t>> gens(r, std::vector<std::uint8_t>(tuples));
    for (std::size_t j = 0, stride = 1; j < r; ++j, stride *= n) {
      for (std::size_t t = 0; t < tuples; ++t) {
        gens[j][t] = static_cast<std::uint8_t>((t / stride) % n);
      }
    }
    std::vector<std::uint8_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<std::uint8_t>(m.product(
            static_cast<elem_t>(a), static_cast<elem_t>(b)));
      }
    }

    VectorStore                values(tuples);
    std::vector<std::uint32_t> trans;
    VectorIndex                index(tuples);
    {
      std::vector<std::uint8_t> const one(tuples, static_cast<std::uint8_t>(m.identity()));
      values.push_back(one.data());
      index.insert(0, VectorIndex::hash(one.data(), tuples));
    }
    std::size_t count = 1;

    std::size_t const         chunk = std::max<std::size_t>(
        1, std::min<std::size_t>(4096, (std::size_t{64} << 20) / (tuples * r)));
    std::vector<std::uint8_t>  buf;
    std::vector<std::uint64_t> hashes;

    for (std::size_t head = 0; head < count;) {
      std::size_t const stop = std::min(count, head + chunk);
      std::size_t const jobs = (stop - head) * r;
      buf.resize(jobs * tuples);
      hashes.resize(jobs);

#pragma omp parallel for schedule(static) num_threads(threads)
      for (std::size_t q = 0; q < jobs; ++q) {
        std::size_t const   e   = head + q / r;
        std::size_t const   j   = q % r;
        std::uint8_t const* src = values[e];
        std::uint8_t const* g   = gens[j].data();
        std::uint8_t*       dst = buf.data() + q * tuples;
        for (std::size_t t = 0; t < tuples; ++t) {
          dst[t] = table[src[t] * n + g[t]];
        }
        hashes[q] = VectorIndex::hash(dst, tuples);
      }

      for (std::size_t q = 0; q < jobs; ++q) {
        std::uint8_t const* p     = buf.data() + q * tuples;
        std::size_t         found = index.find(values, p, hashes[q]);
        if (found == VectorIndex::npos) {
          if (count + 1 > budget.elements) {
            throw ResourceError("free algebra exceeds the element budget of "
                                + std::to_string(budget.elements));
          }
          if ((count + 1) * tuples > budget.memory_bytes) {
            throw ResourceError("free algebra exceeds the memory budget");
          }
          values.push_back(p);
          index.insert(static_cast<std::uint32_t>(count), hashes[q]);
          found = count++;
        }
        trans.push_back(static_cast<std::uint32_t>(found));
      }
      head = stop;
    }
    return FreeAlgebra(m, std::move(alphabet), tuples, std::move(values),
                       std::move(trans));
  }

}  // namespace semivar::detail
