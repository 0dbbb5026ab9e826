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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reproduce.hpp"
#include "semivar/errors.hpp"
#include "semivar/termcheck.hpp"

namespace semivar::cli {

  namespace {
    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw std::invalid_argument("cannot open " + path);
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }

    std::vector<Word> read_words(std::string const& path) {
      std::vector<Word>  out;
      std::istringstream in(read_file(path));
      std::string        line;
      while (std::getline(in, line)) {
        auto const hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
          continue;
        }
        out.push_back(parse_word(line));
      }
      if (out.empty()) {
        throw std::invalid_argument(path + " contains no words");
      }
      return out;
    }

    std::size_t parse_count(std::string const& text, std::string const& what) {
      std::size_t pos = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(text, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != text.size()) {
        throw std::invalid_argument("bad " + what + " '" + text + "'");
      }
      return static_cast<std::size_t>(v);
    }
  }  // namespace

  std::size_t lee_parameter(std::string const& spec) {
    if (spec.rfind("lee:", 0) != 0) {
      return 0;
    }
    return parse_count(spec.substr(4), "Lee parameter");
  }

  FiniteMonoid load_monoid(std::string const& spec) {
    if (spec.rfind("lee:", 0) == 0) {
      return lee_monoid(lee_parameter(spec));
    }
    if (spec == "perkins" || spec == "dilworth:perkins") {
      return dilworth(perkins_words());
    }
    if (spec.rfind("dilworth:", 0) == 0) {
      auto const words = read_words(spec.substr(9));
      return dilworth(words);
    }
    if (spec.rfind("table:", 0) == 0) {
      nlohmann::ordered_json j;
      try {
        j = nlohmann::ordered_json::parse(read_file(spec.substr(6)));
      } catch (nlohmann::json::parse_error const& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
      }
      return monoid_from_json(j);
    }
    if (spec == "trivial") {
      return FiniteMonoid::from_table({"1"}, {{0}}, 0, std::nullopt);
    }
    throw std::invalid_argument("unknown monoid '" + spec
                                + "' (expected lee:<l>, perkins, "
                                  "dilworth:<file>, table:<file> or trivial)");
  }

  namespace {
    std::string assignment_text(FiniteMonoid const& m, Assignment const& a) {
      std::string s;
      for (auto const& [x, e] : a) {
        s += (s.empty() ? "" : " ") + Variables::name(x) + "=" + m.label(e);
      }
      return s;
    }

    void emit(std::ostream& out, RunConfig const& cfg,
              nlohmann::ordered_json const& j, std::string const& table) {
      if (cfg.format == Format::json) {
        out << j.dump(2) << '\n';
      } else {
        out << table;
      }
    }

    int cmd_monoid(RunConfig const& cfg, std::string const& spec, std::ostream& out) {
      FiniteMonoid const m = load_monoid(spec);
      std::ostringstream t;
      t << "size: " << m.size() << '\n'
        << "identity: " << m.label(m.identity()) << '\n'
        << "zero: " << (m.zero() ? m.label(*m.zero()) : "none") << '\n'
        << format_table(m) << '\n'
        << to_json(m).dump() << '\n';
      emit(out, cfg, to_json(m), t.str());
      return kPass;
    }

    int cmd_check(RunConfig const&                cfg,
                  std::string const&              spec,
                  std::vector<std::string> const& words,
                  std::vector<std::size_t> const& unvn,
                  std::string const&              engine,
                  bool                            no_prune,
                  std::ostream&                   out) {
      Word u = Word::letter(0), v = Word::letter(0);
      if (!unvn.empty()) {
        if (!words.empty()) {
          throw std::invalid_argument("give either two words or --unvn, not both");
        }
        std::tie(u, v) = identity_pair_unvn(unvn[0], unvn[1]);
      } else if (words.size() == 2) {
        u = parse_word(words[0]);
        v = parse_word(words[1]);
      } else {
        throw std::invalid_argument("check needs two words or --unvn n k");
      }
      SearchOptions opts = cfg.search();
      opts.prune         = !no_prune;

      FiniteMonoid const m = load_monoid(spec);
      Verdict            r;
      if (engine == "lee") {
        std::size_t const l = lee_parameter(spec);
        if (l == 0) {
          throw std::invalid_argument("--engine lee needs a lee:<l> monoid");
        }
        r = satisfies_lee(l, u, v, opts);
      } else {
        r = satisfies(m, u, v, opts);
      }
      std::ostringstream t;
      t << "holds: " << (r.holds ? "true" : "false") << '\n';
      if (r.witness) {
        t << "witness: " << assignment_text(m, *r.witness) << '\n';
      }
      t << "nodes: " << r.nodes << '\n';
      emit(out, cfg, to_json(r, m, !cfg.deterministic), t.str());
      return r.holds ? kPass : kFail;
    }

    int cmd_term(RunConfig const& cfg, std::string const& spec,
                 std::string const& word, std::string const& mode,
                 std::ostream& out) {
      FiniteMonoid const m = load_monoid(spec);
      Word const         u = parse_word(word);
      TermVerdict const  r = mode == "isoterm"
                                 ? is_isoterm(m, u, cfg.search())
                                 : is_tau_term_sametype(m, u, cfg.search());
      auto j              = to_json(r, u);
      j["query"]["monoid"] = spec;
      std::ostringstream t;
      t << to_string(u) << ": " << (r.is_term ? "is_term" : "not_term") << " ("
        << mode << ")\n";
      if (r.witness) {
        t << "witness: " << to_string(*r.witness) << '\n';
      }
      emit(out, cfg, j, t.str());
      return r.is_term ? kPass : kFail;
    }

    nlohmann::ordered_json property_c_json(std::string const&     spec,
                                           std::size_t            l,
                                           PropertyCResult const& r) {
      nlohmann::ordered_json j;
      j["query"]  = {{"monoid", spec}, {"l", l}};
      j["status"] = r.holds ? "holds" : "fails";
      if (r.witness) {
        j["witness"] = {{"u", to_string(r.witness->first)},
                        {"v", to_string(r.witness->second)}};
      } else {
        j["witness"] = nullptr;
      }
      j["automaton_sizes"] = {{"algebra", r.algebra_size}, {"shapes", r.shapes}};
      j["budget_used"]     = {{"words", r.words_checked}};
      j["index_period"]    = {r.index_period.index, r.index_period.period};
      return j;
    }

    int cmd_property_c(RunConfig const& cfg, std::string const& spec,
                       std::size_t l, std::ostream& out) {
      auto const r = property_c(load_monoid(spec), l, cfg.search());
      std::ostringstream t;
      t << "Property (C_" << l << ") on " << spec << ": "
        << (r.holds ? "holds" : "fails") << " (" << r.words_checked
        << " words)\n";
      if (r.witness) {
        t << "witness: " << to_string(r.witness->first) << " = "
          << to_string(r.witness->second) << '\n';
      }
      emit(out, cfg, property_c_json(spec, l, r), t.str());
      return r.holds ? kPass : kFail;
    }

    int cmd_nfb_premises(RunConfig const& cfg, std::string const& spec,
                         std::vector<std::size_t> const& ns, std::size_t k,
                         std::ostream& out) {
      FiniteMonoid const  m    = load_monoid(spec);
      std::size_t const   l    = lee_parameter(spec);
      SearchOptions const opts = cfg.search();

      auto const c5 = property_c(m, 5, opts);
      bool       ok = c5.holds;
      nlohmann::ordered_json j;
      j["monoid"]        = spec;
      j["property_c5"]   = property_c_json(spec, 5, c5);
      j["instances"]     = nlohmann::ordered_json::array();
      std::ostringstream t;
      t << "Property (C_5): " << (c5.holds ? "holds" : "fails") << '\n';
      for (std::size_t n : ns) {
        auto const [u, v] = identity_pair_unvn(n, k);
        Verdict const r   = l != 0 ? satisfies_lee(l, u, v, opts) : satisfies(m, u, v, opts);
        bool const    dt  = !same_type(u, v);
        ok                = ok && r.holds && dt;
        j["instances"].push_back({{"n", n},
                                  {"k", k},
                                  {"satisfies", to_json(r, m, !cfg.deterministic)},
                                  {"different_type", dt}});
        t << "n=" << n << " k=" << k << ": U_n = V_n "
          << (r.holds ? "holds" : "fails") << ", types "
          << (dt ? "differ" : "agree") << '\n';
      }
      std::string ns_text;
      for (std::size_t n : ns) {
        ns_text += (ns_text.empty() ? "" : ", ") + std::to_string(n);
      }
      std::string const summary
          = std::string("non-finite-basis premises ")
            + (ok ? "verified" : "NOT verified") + " for n in {" + ns_text
            + "}: finite-instance evidence only, not a proof for all n > 3";
      j["all_pass"] = ok;
      j["summary"]  = summary;
      t << summary << '\n';
      emit(out, cfg, j, t.str());
      return ok ? kPass : kFail;
    }

    int cmd_scan(RunConfig const& cfg, std::string const& spec,
                 std::size_t max_len, std::size_t alphabet, std::size_t k,
                 std::ostream& out) {
      auto const r = isoterm_scan(load_monoid(spec), max_len, alphabet, cfg.search());
      nlohmann::ordered_json j;
      j["query"] = {{"monoid", spec}, {"max_len", max_len}, {"alphabet", alphabet}};
      j["rows"]  = to_json(r, k);
      auto iso   = nlohmann::ordered_json::array();
      for (auto const& x : r.isoterms()) {
        iso.push_back(to_compact(x));
      }
      j["isoterms"] = iso;
      j["isoterms_klimited"] = r.isoterms_klimited(k);
      emit(out, cfg, j, to_csv(r, k));
      return kPass;
    }

    int cmd_enumerate(RunConfig const& cfg, std::string const& spec,
                      std::string const& word, std::size_t max_len,
                      std::ostream& out) {
      auto const list = enumerate_equivalent(load_monoid(spec), parse_word(word),
                                             max_len, cfg.search());
      auto        j = nlohmann::ordered_json::array();
      std::string t;
      for (auto const& v : list) {
        j.push_back(to_string(v));
        t += to_string(v) + '\n';
      }
      emit(out, cfg, j, t);
      return kPass;
    }

    int cmd_reproduce(RunConfig const& cfg, std::string const& suite,
                      std::ostream& out) {
      auto const ledger = reproduce(suite, cfg);
      bool fail = false, skipped = false;
      std::ostringstream t;
      for (auto const& e : ledger) {
        fail    = fail || e.status == "fail";
        skipped = skipped || e.status.rfind("skipped", 0) == 0;
        t << e.status << "  " << e.fact_id << "  "
          << (cfg.deterministic ? 0 : static_cast<long long>(e.millis)) << " ms\n";
      }
      emit(out, cfg, ledger_json(ledger, !cfg.deterministic), t.str());
      return fail ? kFail : skipped ? kResources : kPass;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-monoid identities, isoterms and same-type terms", "semivar"};
    app.require_subcommand(1);

    RunConfig   cfg;
    std::string format = "json";
    std::uint64_t memory_mb = cfg.budget.memory_bytes >> 20;
    app.add_option("--budget-nodes", cfg.budget.nodes, "Search node budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-elements", cfg.budget.elements,
                   "Free-algebra element budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-memory-mb", memory_mb, "Free-algebra memory budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "Worker threads (0 = all, 1 = serial)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_flag("--deterministic", cfg.deterministic,
                 "Byte-stable output: timings are reported as 0");
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");

    std::string spec, word, mode = "isoterm", engine = "generic", suite = "all";
    std::vector<std::string> words;
    std::vector<std::size_t> unvn, ns{4};
    std::size_t l = 0, k = 1, max_len = 4, alphabet = 2, klim = 2;
    bool        no_prune = false;

    auto* monoid = app.add_subcommand("monoid", "Print a monoid's Cayley table");
    monoid->add_option("monoid", spec, "lee:<l>, perkins, dilworth:<file>, table:<file>")
        ->required();

    auto* check = app.add_subcommand("check", "Decide M |= u = v");
    check->add_option("monoid", spec)->required();
    check->add_option("words", words, "u v");
    check->add_option("--unvn", unvn, "Use the pair (U_n, V_n) for n k")
        ->expected(2);
    check->add_option("--engine", engine)->check(CLI::IsMember({"generic", "lee"}));
    check->add_flag("--no-prune", no_prune, "Disable zero-prefix pruning");

    auto* term = app.add_subcommand("term", "Isoterm or same-type term status");
    term->add_option("monoid", spec)->required();
    term->add_option("word", word)->required();
    term->add_option("--mode", mode)->check(CLI::IsMember({"isoterm", "sametype"}));

    auto* pc = app.add_subcommand("property-c", "Decide Property (C_l)");
    pc->add_option("monoid", spec)->required();
    pc->add_option("l", l)->required()->check(CLI::PositiveNumber);

    auto* nfb = app.add_subcommand(
        "nfb-premises", "Check the finite premises of the U_n = V_n family");
    nfb->add_option("monoid", spec)->required();
    nfb->add_option("--n", ns, "Values of n (> 3)")->delimiter(',');
    nfb->add_option("--k", k)->check(CLI::PositiveNumber);

    auto* scan = app.add_subcommand("scan", "Classify short words as isoterms");
    scan->add_option("monoid", spec)->required();
    scan->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
    scan->add_option("--alphabet", alphabet)->check(CLI::Range(1, 26));
    scan->add_option("--k", klim, "Report k-limitedness for this k");

    auto* en = app.add_subcommand("enumerate", "List words v with M |= u = v");
    en->add_option("monoid", spec)->required();
    en->add_option("word", word)->required();
    en->add_option("--max-len", max_len)->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("reproduce", "Run the reproduction ledger");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    rep->add_option("suite", suite)->check(CLI::IsMember(suites));

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kPass;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kPass;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kInput;
    }
    cfg.format             = format == "json" ? Format::json : Format::table;
    cfg.budget.memory_bytes = memory_mb << 20;

    try {
      if (*monoid) {
        return cmd_monoid(cfg, spec, out);
      }
      if (*check) {
        return cmd_check(cfg, spec, words, unvn, engine, no_prune, out);
      }
      if (*term) {
        return cmd_term(cfg, spec, word, mode, out);
      }
      if (*pc) {
        return cmd_property_c(cfg, spec, l, out);
      }
      if (*nfb) {
        return cmd_nfb_premises(cfg, spec, ns, k, out);
      }
      if (*scan) {
        return cmd_scan(cfg, spec, max_len, alphabet, klim, out);
      }
      if (*en) {
        return cmd_enumerate(cfg, spec, word, max_len, out);
      }
      return cmd_reproduce(cfg, suite, out);
    } catch (ResourceError const& e) {
      err << "resources: " << e.what() << '\n';
      return kResources;
    } catch (ValidationError const& e) {
      err << "invalid monoid: " << e.what();
      if (e.has_triple()) {
        err << " (triple " << e.triple()[0] << ", " << e.triple()[1] << ", "
            << e.triple()[2] << ")";
      }
      err << '\n';
      return kInput;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kInput;
    } catch (std::logic_error const& e) {
      err << "internal: " << e.what() << '\n';
      return kInternal;
    }
  }

}  // namespace semivar::cli
