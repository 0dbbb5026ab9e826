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

#include "semivar/eqcheck.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "semivar/errors.hpp"

namespace semivar {

  std::vector<var_t> search_order(Word const& u, Word const& v) {
    std::vector<var_t> order = u.content();
    for (var_t x : v.content()) {
      if (std::find(order.begin(), order.end(), x) == order.end()) {
        order.push_back(x);
      }
    }
    return order;
  }

  namespace {
    using Clock = std::chrono::steady_clock;

    double millis_since(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start)
          .count();
    }

    Verdict run_search(FiniteMonoid const&                     m,
                       Word const&                             u,
                       Word const&                             v,
                       std::vector<std::vector<elem_t>> const& domains,
                       SearchOptions const&                    opts) {
      auto const start = Clock::now();
      Verdict    out   = opts.workers == 1
                             ? detail::satisfies_serial(m, u, v, domains, opts)
                             : detail::satisfies_parallel(m, u, v, domains, opts);
      out.millis       = millis_since(start);
      return out;
    }
  }  // namespace

  Verdict satisfies(FiniteMonoid const&  m,
                    Word const&          u,
                    Word const&          v,
                    SearchOptions const& opts) {
    std::vector<elem_t> all(m.size());
    for (elem_t x = 0; x < m.size(); ++x) {
      all[x] = x;
    }
    std::vector<std::vector<elem_t>> domains(search_order(u, v).size(), all);
    return run_search(m, u, v, domains, opts);
  }

  bool lee_mixed_elements_vanish(std::size_t l) {
    FiniteMonoid const m    = lee_monoid(l);
    std::size_t const  k    = l / 2;
    elem_t const       zero = *m.zero();
    for (elem_t e = 0; e < m.size(); ++e) {
      std::string const& lab = m.label(e);
      bool const mixed = lab.find('a') != std::string::npos
                         && lab.find('b') != std::string::npos;
      if (!mixed) {
        continue;
      }
      // reach = { e g_1 e ... g_i e }
      std::set<elem_t> reach{e};
      for (std::size_t i = 0; i < k; ++i) {
        std::set<elem_t> next;
        for (elem_t s : reach) {
          for (elem_t g = 0; g < m.size(); ++g) {
            next.insert(m.product(m.product(s, g), e));
          }
        }
        reach = std::move(next);
      }
      if (reach != std::set<elem_t>{zero}) {
        return false;
      }
    }
    return true;
  }

  Verdict satisfies_lee(std::size_t          l,
                        Word const&          u,
                        Word const&          v,
                        SearchOptions const& opts) {
    FiniteMonoid const m = lee_monoid(l);
    if (!lee_mixed_elements_vanish(l)) {
      throw std::logic_error("mixed elements of L_" + std::to_string(l)
                             + "^1 do not vanish as required");
    }
    std::size_t const threshold = l / 2 + 1;
    std::vector<elem_t> all(m.size());
    for (elem_t x = 0; x < m.size(); ++x) {
      all[x] = x;
    }
    std::vector<elem_t> small{m.identity(), *m.find("a"), *m.find("b")};
    std::sort(small.begin(), small.end());

    auto const                       order = search_order(u, v);
    std::vector<std::vector<elem_t>> domains;
    bool                             reduced = false;
    for (var_t x : order) {
      if (std::min(occurrences(u, x), occurrences(v, x)) >= threshold) {
        domains.push_back(small);
        reduced = true;
      } else {
        domains.push_back(all);
      }
    }
    if (!reduced) {
      return satisfies(m, u, v, opts);
    }
    return run_search(m, u, v, domains, opts);
  }

  nlohmann::ordered_json to_json(Verdict const&      v,
                                 FiniteMonoid const& m,
                                 bool                with_timing) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds;
    if (v.witness) {
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (auto const& [x, e] : *v.witness) {
        w[Variables::name(x)] = m.label(e);
      }
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    j["nodes"]  = v.nodes;
    j["millis"] = with_timing ? static_cast<std::int64_t>(v.millis) : 0;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeAlgebra
  ////////////////////////////////////////////////////////////////////////

  VectorStore::VectorStore(std::size_t width)
      : width_(width),
        per_slab_(std::max<std::size_t>(1, (std::size_t{32} << 20) / width)) {}

  std::size_t VectorStore::push_back(std::uint8_t const* p) {
    if (size_ % per_slab_ == 0) {
      slabs_.emplace_back();
      slabs_.back().reserve(per_slab_ * width_);
    }
    auto& slab = slabs_.back();
    slab.insert(slab.end(), p, p + width_);
    return size_++;
  }

  void VectorStore::pop_back() noexcept {
    auto& slab = slabs_.back();
    slab.resize(slab.size() - width_);
    if (slab.empty()) {
      slabs_.pop_back();
    }
    --size_;
  }

  FreeAlgebra::FreeAlgebra(FiniteMonoid               base,
                           std::vector<var_t>         alphabet,
                           std::size_t                tuple_count,
                           VectorStore                values,
                           std::vector<std::uint32_t> transitions)
      : base_(std::move(base)),
        alphabet_(std::move(alphabet)),
        tuples_(tuple_count),
        values_(std::move(values)),
        transitions_(std::move(transitions)) {}

  std::size_t FreeAlgebra::letter_index(var_t v) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), v);
    if (it == alphabet_.end()) {
      throw DomainError("variable " + Variables::name(v)
                        + " is not in the free algebra's alphabet");
    }
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  FreeAlgebra free_algebra(FiniteMonoid const&  m,
                           std::vector<var_t>   alphabet,
                           SearchOptions const& opts) {
    if (alphabet.empty()) {
      throw DomainError("free algebra needs at least one generator");
    }
    if (std::set<var_t>(alphabet.begin(), alphabet.end()).size()
        != alphabet.size()) {
      throw DomainError("free algebra alphabet has repeated variables");
    }
    if (m.size() > 256) {
      throw DomainError("free algebra supports monoids of at most 256 elements");
    }
    if (opts.workers == 1) {
      return detail::free_algebra_serial(m, std::move(alphabet), opts.budget);
    }
    return detail::free_algebra_parallel(m, std::move(alphabet), opts.budget,
                                         opts.workers);
  }

  std::vector<var_t> default_alphabet(std::size_t n) {
    static constexpr char const* names[] = {"x", "y", "z", "w"};
    std::vector<var_t>           out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(i < 4 ? Variables::intern(names[i]) : indexed_var(i + 1));
    }
    return out;
  }

  FreeAlgebra free_algebra(FiniteMonoid const&  m,
                           std::size_t          n,
                           SearchOptions const& opts) {
    return free_algebra(m, default_alphabet(n), opts);
  }

  std::uint32_t word_function(FreeAlgebra const& f, Word const& u) {
    std::uint32_t e = f.identity();
    for (Run const& r : u.runs()) {
      std::size_t const j = f.letter_index(r.var);
      for (std::uint32_t i = 0; i < r.exp; ++i) {
        e = f.transition(e, j);
      }
    }
    return e;
  }

  bool verify_closure(FreeAlgebra const& f) {
    FiniteMonoid const& m    = f.base();
    std::size_t const   n    = m.size();
    std::size_t const   size = f.size();
    if (f.transitions().size() != size * f.rank()) {
      return false;
    }
    for (std::uint32_t e = 0; e < size; ++e) {
      for (std::size_t j = 0; j < f.rank(); ++j) {
        std::uint32_t const target = f.transition(e, j);
        if (target >= size) {
          return false;
        }
        std::size_t stride = 1;
        for (std::size_t i = 0; i < j; ++i) {
          stride *= n;
        }
        for (std::size_t t = 0; t < f.tuple_count(); ++t) {
          elem_t const g = static_cast<elem_t>((t / stride) % n);
          if (f.value(target, t) != m.product(f.value(e, t), g)) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace semivar
