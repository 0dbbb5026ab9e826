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


// Serial reference kernels against the OpenMP kernels. The range argument is
// the worker count; 1 selects the serial kernel.

#include <benchmark/benchmark.h>

#include "semivar/eqcheck.hpp"

namespace {

  using namespace semivar;

  // Full search of an identity that holds, so both kernels visit every node.
  void BM_satisfies(benchmark::State& state) {
    auto const    [u, v] = identity_pair_unvn(4, 1);
    SearchOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
      auto const r = satisfies_lee(4, u, v, opts);
      nodes        = r.nodes;
      benchmark::DoNotOptimize(r.holds);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
  }
  BENCHMARK(BM_satisfies)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

  void BM_satisfies_generic(benchmark::State& state) {
    auto const    m = lee_monoid(3);
    Word const    u = parse_word("xyzxzy");
    Word const    v = parse_word("xyzxyz");
    SearchOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(satisfies(m, u, v, opts).holds);
    }
  }
  BENCHMARK(BM_satisfies_generic)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

  void BM_free_algebra(benchmark::State& state) {
    auto const     m        = lee_monoid(6);
    auto const     alphabet = default_alphabet(3);
    unsigned const workers  = static_cast<unsigned>(state.range(0));
    std::size_t    size     = 0;
    for (auto _ : state) {
      FreeAlgebra const f = workers == 1
                                ? detail::free_algebra_serial(m, alphabet, Budget{})
                                : detail::free_algebra_parallel(m, alphabet, Budget{}, workers);
      size = f.size();
    }
    state.counters["elements"] = static_cast<double>(size);
  }
  BENCHMARK(BM_free_algebra)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
