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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "reproduce.hpp"

using semivar::cli::run;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
  }
}  // namespace

TEST_CASE("monoid command", "[cli]") {
  auto const r = call({"monoid", "lee:3"});
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["labels"].size() == 7);

  auto const p = call({"--format", "table", "monoid", "perkins"});
  REQUIRE(p.code == 0);
  CHECK(p.out.rfind("size: 25\n", 0) == 0);

  auto const words = temp_file("semivar_ab.txt", "# one word\nab\n");
  auto const d     = call({"monoid", "dilworth:" + words});
  REQUIRE(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["labels"].size() == 5);
}

TEST_CASE("bad input exits 2", "[cli]") {
  // (a a) a = 1 but a (a a) = a.
  auto const bad = temp_file("semivar_bad.json", R"({
    "labels": ["1", "a", "b"],
    "identity": 0,
    "table": [[0, 1, 2], [1, 2, 1], [2, 0, 2]]
  })");
  auto const r = call({"monoid", "table:" + bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("triple") != std::string::npos);

  CHECK(call({"monoid", "lee:x"}).code == 2);
  CHECK(call({"monoid", "nosuch"}).code == 2);
  CHECK(call({"check", "lee:2", "x(", "x"}).code == 2);
  CHECK(call({"check", "lee:2", "x"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"monoid", "table:/nonexistent/file.json"}).code == 2);
}

TEST_CASE("check command", "[cli]") {
  auto const ok = call({"check", "lee:2", "xyxy", "yxyx"});
  CHECK(ok.code == 0);
  auto const j = nlohmann::json::parse(ok.out);
  CHECK(j["holds"] == true);

  auto const no = call({"--format", "table", "check", "lee:2", "xy", "yx"});
  CHECK(no.code == 1);
  CHECK(no.out.find("holds: false") != std::string::npos);
  CHECK(no.out.find("witness: ") != std::string::npos);

  auto const unvn = call({"check", "lee:4", "--unvn", "4", "1", "--engine", "lee"});
  CHECK(unvn.code == 0);

  auto const tight = call({"--budget-nodes", "10", "check", "lee:4", "--unvn", "4", "1"});
  CHECK(tight.code == 3);
  CHECK(call({"check", "perkins", "--engine", "lee", "xy", "yx"}).code == 2);
}

TEST_CASE("term, property-c and enumerate commands", "[cli]") {
  auto const t = call({"term", "lee:4", "abab"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["status"] == "is_term");

  auto const s = call({"term", "lee:2", "xyxy", "--mode", "sametype"});
  CHECK(s.code == 1);
  CHECK(nlohmann::json::parse(s.out)["witness"] == "x y^2 x");

  auto const c = call({"property-c", "lee:2", "2"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["status"] == "holds");
  auto const c3 = call({"property-c", "lee:2", "3"});
  CHECK(c3.code == 1);

  auto const e = call({"enumerate", "lee:6", "xyyxyx", "--max-len", "6"});
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out) == nlohmann::json::parse(R"(["x y x y^2 x", "x y^2 x y x"])"));
}

TEST_CASE("nfb-premises command", "[cli]") {
  auto const r = call({"--format", "table", "nfb-premises", "lee:5", "--n", "4", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("finite-instance evidence") != std::string::npos);
  CHECK(r.out.find("n=4 k=1: U_n = V_n holds, types differ") != std::string::npos);
}

TEST_CASE("scan command writes CSV", "[cli]") {
  auto const r = call({"--format", "csv", "scan", "lee:3", "--max-len", "2", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("word,isoterm,klimited(1),witness\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 2 + 4);
}

TEST_CASE("reproduce is deterministic", "[cli]") {
  std::vector<std::string> const args{"--deterministic", "reproduce", "sizes"};
  auto const                     a = call(args);
  auto const                     b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (auto const& row : nlohmann::json::parse(a.out)) {
    CHECK(row["status"] == "pass");
    CHECK(row["millis"] == 0);
  }
  CHECK(call({"reproduce", "nosuch"}).code == 2);
}

TEST_CASE("random monoids are valid and seeded", "[cli]") {
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 20; ++i) {
    auto const a = semivar::cli::random_monoid(r1, 40);
    auto const b = semivar::cli::random_monoid(r2, 40);
    CHECK(a.size() <= 40);
    CHECK(a.size() == b.size());
  }
}
