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

#include "semivar/algebra.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "semivar/errors.hpp"

namespace semivar {

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid FiniteMonoid::from_table(std::vector<std::string>         labels,
                                        std::vector<std::vector<elem_t>> table,
                                        elem_t                identity,
                                        std::optional<elem_t> zero) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw ValidationError("a monoid needs at least one element");
    }
    if (labels.size() != n) {
      throw ValidationError("expected " + std::to_string(n) + " labels, got "
                            + std::to_string(labels.size()));
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
      throw ValidationError("element labels must be distinct");
    }
    FiniteMonoid m;
    m.n_ = n;
    m.table_.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (table[r].size() != n) {
        throw ValidationError("table row " + std::to_string(r)
                              + " has the wrong length");
      }
      for (elem_t x : table[r]) {
        if (x >= n) {
          throw ValidationError("table entry " + std::to_string(x)
                                + " out of range in row " + std::to_string(r));
        }
        m.table_.push_back(x);
      }
    }
    if (identity >= n) {
      throw ValidationError("identity index out of range");
    }
    if (zero && *zero >= n) {
      throw ValidationError("zero index out of range");
    }

    for (elem_t x = 0; x < n; ++x) {
      if (m.product(identity, x) != x || m.product(x, identity) != x) {
        throw ValidationError("identity law fails for element "
                              + std::to_string(x));
      }
      if (zero
          && (m.product(*zero, x) != *zero || m.product(x, *zero) != *zero)) {
        throw ValidationError("zero law fails for element "
                              + std::to_string(x));
      }
    }
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        elem_t const ab = m.product(a, b);
        for (elem_t c = 0; c < n; ++c) {
          if (m.product(ab, c) != m.product(a, m.product(b, c))) {
            throw ValidationError("associativity fails for (" + std::to_string(a)
                                      + ", " + std::to_string(b) + ", "
                                      + std::to_string(c) + ")",
                                  {a, b, c});
          }
        }
      }
    }
    m.identity_  = identity;
    m.zero_      = zero;
    m.labels_    = std::move(labels);
    m.aperiodic_ = true;
    m.aperiodic_ = index_period(m).period == 1;
    return m;
  }

  std::optional<elem_t> FiniteMonoid::find(std::string const& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<elem_t>(it - labels_.begin());
  }

  elem_t FiniteMonoid::power(elem_t m, std::uint64_t e) const noexcept {
    elem_t result = identity_;
    elem_t base   = m;
    while (e > 0) {
      if (e & 1) {
        result = product(result, base);
      }
      e >>= 1;
      if (e > 0) {
        base = product(base, base);
      }
    }
    return result;
  }

  std::optional<elem_t> find_zero(std::size_t                n,
                                  std::vector<elem_t> const& flat_table) {
    for (elem_t z = 0; z < n; ++z) {
      bool ok = true;
      for (elem_t x = 0; x < n && ok; ++x) {
        ok = flat_table[z * n + x] == z && flat_table[x * n + z] == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  IndexPeriod index_period(FiniteMonoid const& m) {
    IndexPeriod out{1, 1};
    for (elem_t x = 0; x < m.size(); ++x) {
      // first[y] = smallest i with x^i = y, for i >= 1
      std::vector<std::uint64_t> first(m.size(), 0);
      elem_t                     y = x;
      for (std::uint64_t i = 1;; ++i) {
        if (first[y] != 0) {
          out.index  = std::max(out.index, first[y]);
          out.period = std::lcm(out.period, i - first[y]);
          break;
        }
        first[y] = i;
        y        = m.product(y, x);
      }
    }
    return out;
  }

  namespace {
    bool extend_iso(FiniteMonoid const&  m,
                    FiniteMonoid const&  n,
                    std::vector<elem_t>& f,
                    std::vector<bool>&   used,
                    elem_t               next) {
      std::size_t const size = m.size();
      if (next == size) {
        for (elem_t a = 0; a < size; ++a) {
          for (elem_t b = 0; b < size; ++b) {
            if (f[m.product(a, b)] != n.product(f[a], f[b])) {
              return false;
            }
          }
        }
        return true;
      }
      for (elem_t img = 0; img < size; ++img) {
        if (used[img]) {
          continue;
        }
        f[next]   = img;
        used[img] = true;
        // Partial check on the already-assigned elements.
        bool ok = true;
        for (elem_t a = 0; a <= next && ok; ++a) {
          for (elem_t b = 0; b <= next && ok; ++b) {
            elem_t const ab = m.product(a, b);
            if (ab <= next) {
              ok = f[ab] == n.product(f[a], f[b]);
            }
          }
        }
        if (ok && extend_iso(m, n, f, used, next + 1)) {
          return true;
        }
        used[img] = false;
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<elem_t>> find_isomorphism(FiniteMonoid const& m,
                                                      FiniteMonoid const& n) {
    if (m.size() != n.size()) {
      return std::nullopt;
    }
    std::vector<elem_t> f(m.size(), 0);
    std::vector<bool>   used(m.size(), false);
    if (extend_iso(m, n, f, used, 0)) {
      return f;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Letters = std::vector<var_t>;

    bool shortlex_less(Letters const& x, Letters const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x < y;
    }

    std::string letters_label(Letters const& w) {
      return to_compact(Word::from_letters(w));
    }

    // Rees quotient of a monoid of letter sequences: elements are `elems`
    // (already sorted), reduce() maps a concatenation to its canonical form,
    // and anything not in `elems` is zero.
    template <typename Reduce>
    FiniteMonoid rees_quotient(std::vector<Letters> const& elems,
                               Reduce&&                    reduce) {
      std::size_t const        k    = elems.size();
      std::size_t const        n    = k + 2;
      elem_t const             one  = 0;
      elem_t const             zero = static_cast<elem_t>(n - 1);
      std::map<Letters, elem_t> index;
      std::vector<std::string> labels{"1"};
      for (std::size_t i = 0; i < k; ++i) {
        index.emplace(elems[i], static_cast<elem_t>(i + 1));
        labels.push_back(letters_label(elems[i]));
      }
      labels.emplace_back("0");

      std::vector<std::vector<elem_t>> table(n, std::vector<elem_t>(n, zero));
      for (elem_t x = 0; x < n; ++x) {
        table[one][x] = x;
        table[x][one] = x;
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Letters w(elems[i]);
          w.insert(w.end(), elems[j].begin(), elems[j].end());
          auto it = index.find(reduce(std::move(w)));
          table[i + 1][j + 1] = it == index.end() ? zero : it->second;
        }
      }
      return FiniteMonoid::from_table(std::move(labels), std::move(table), one,
                                      zero);
    }
  }  // namespace

  FiniteMonoid dilworth(std::span<Word const> words) {
    if (words.empty()) {
      throw DomainError("dilworth needs a nonempty word set");
    }
    std::set<Letters> factors;
    for (Word const& w : words) {
      Letters const l = w.letters();
      for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = i + 1; j <= l.size(); ++j) {
          factors.emplace(l.begin() + i, l.begin() + j);
        }
      }
    }
    std::vector<Letters> elems(factors.begin(), factors.end());
    std::sort(elems.begin(), elems.end(), shortlex_less);
    return rees_quotient(elems, [](Letters&& w) { return std::move(w); });
  }

  FiniteMonoid s1_tau_sametype(std::span<Shape const> shapes) {
    if (shapes.empty()) {
      throw DomainError("S^1_tau(W) needs a nonempty shape set");
    }
    std::set<Letters> members;
    for (Shape const& s : shapes) {
      for (std::size_t i = 0; i + 1 < s.letters.size(); ++i) {
        if (s.letters[i] == s.letters[i + 1]) {
          throw DomainError("not a shape: " + to_string(s));
        }
      }
      if (s.letters.empty()) {
        throw DomainError("empty shape");
      }
      members.insert(s.letters);
    }
    for (Letters const& l : members) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = i + 1; j <= l.size(); ++j) {
          Letters f(l.begin() + i, l.begin() + j);
          if (!members.contains(f)) {
            throw DomainError("shape set is not closed under factors: "
                              + letters_label(f) + " is missing");
          }
        }
      }
    }
    std::vector<Letters> elems(members.begin(), members.end());
    std::sort(elems.begin(), elems.end(), shortlex_less);
    return rees_quotient(elems, [](Letters&& w) {
      w.erase(std::unique(w.begin(), w.end()), w.end());
      return std::move(w);
    });
  }

  FiniteMonoid lee_monoid(std::size_t l) {
    auto const shapes = lee_shape_set(l);
    return s1_tau_sametype(shapes);
  }

  std::vector<elem_t> lee_semigroup_elements(std::size_t l) {
    FiniteMonoid const  m = lee_monoid(l);
    std::vector<elem_t> out;
    for (elem_t x = 0; x < m.size(); ++x) {
      if (x != m.identity()) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    elem_t lookup(Assignment const& theta, var_t x) {
      auto it = theta.find(x);
      if (it == theta.end()) {
        throw DomainError("assignment does not map " + Variables::name(x));
      }
      return it->second;
    }
  }  // namespace

  elem_t evaluate(FiniteMonoid const& m, Word const& u, Assignment const& theta) {
    elem_t acc = m.identity();
    for (Run const& r : u.runs()) {
      elem_t const x = lookup(theta, r.var);
      if (x >= m.size()) {
        throw DomainError("assignment value out of range");
      }
      acc = m.product(acc, m.power(x, r.exp));
    }
    return acc;
  }

  elem_t evaluate_naive(FiniteMonoid const& m,
                        Word const&         u,
                        Assignment const&   theta) {
    elem_t acc = m.identity();
    for (var_t x : u.letters()) {
      acc = m.product(acc, lookup(theta, x));
    }
    return acc;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON and printing
  ////////////////////////////////////////////////////////////////////////

  nlohmann::ordered_json to_json(FiniteMonoid const& m) {
    nlohmann::ordered_json j;
    j["labels"]   = m.labels();
    j["identity"] = m.identity();
    if (m.zero()) {
      j["zero"] = *m.zero();
    } else {
      j["zero"] = nullptr;
    }
    auto rows = nlohmann::ordered_json::array();
    for (elem_t a = 0; a < m.size(); ++a) {
      auto row = nlohmann::ordered_json::array();
      for (elem_t b = 0; b < m.size(); ++b) {
        row.push_back(m.product(a, b));
      }
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
  }

  FiniteMonoid monoid_from_json(nlohmann::ordered_json const& j) {
    try {
      auto labels   = j.at("labels").get<std::vector<std::string>>();
      auto identity = j.at("identity").get<elem_t>();
      std::optional<elem_t> zero;
      if (j.contains("zero") && !j.at("zero").is_null()) {
        zero = j.at("zero").get<elem_t>();
      }
      auto table = j.at("table").get<std::vector<std::vector<elem_t>>>();
      return FiniteMonoid::from_table(std::move(labels), std::move(table),
                                      identity, zero);
    } catch (nlohmann::json::exception const& e) {
      throw ValidationError(std::string("malformed monoid JSON: ") + e.what());
    }
  }

  std::string format_table(FiniteMonoid const& m) {
    std::size_t width = 1;
    for (auto const& l : m.labels()) {
      width = std::max(width, l.size());
    }
    std::ostringstream os;
    os << std::setw(static_cast<int>(width)) << "" << " |";
    for (elem_t b = 0; b < m.size(); ++b) {
      os << ' ' << std::setw(static_cast<int>(width)) << m.label(b);
    }
    os << '\n' << std::string(width + 2 + (width + 1) * m.size(), '-') << '\n';
    for (elem_t a = 0; a < m.size(); ++a) {
      os << std::setw(static_cast<int>(width)) << m.label(a) << " |";
      for (elem_t b = 0; b < m.size(); ++b) {
        os << ' ' << std::setw(static_cast<int>(width))
           << m.label(m.product(a, b));
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace semivar
