// Copyright 2026 The hcgt Authors
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

// Runs the hcgt binary and checks exit codes and output.

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hcgt/homotopy/pipeline.hpp"
#include "hcgt/pc/consistency.hpp"
#include "hcgt/pc/text_format.hpp"

using json = nlohmann::ordered_json;
using namespace hcgt;

namespace {

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Run run(const std::string &args) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(HCGT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::filesystem::path temp_file(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("hcgt_test_" + name);
}

} // namespace

TEST_CASE("homotopy JSON for Z/2, n = 2", "[cli]") {
  const Run r = run("homotopy --A 2 --n 2");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"A", "n", "class_bound", "hirsch_length",
                                         "center_invariants", "center_free_rank",
                                         "oracle_invariants", "outside_theorem_scope"});
  CHECK(j["A"] == json::array({2}));
  CHECK(j["class_bound"] == 8);
  CHECK(j["center_invariants"] == json::array({2}));
  CHECK(j["center_free_rank"] == 0);
  CHECK(j["oracle_invariants"] == json::array({2}));
  CHECK(j["outside_theorem_scope"] == false);

  // byte-identical on a second run
  CHECK(run("homotopy --A 2 --n 2").out == r.out);
}

TEST_CASE("homotopy flags", "[cli]") {
  SECTION("n = 1 is flagged and has no oracle") {
    const Run r = run("homotopy --A 2 --n 1");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["outside_theorem_scope"] == true);
    CHECK(j["oracle_invariants"].is_null());
    CHECK(j["center_invariants"] == json::array({2, 2}));
  }
  SECTION("oracle comparison and consistency check") {
    const Run r = run("homotopy --A 2 --n 2 --with-oracle --verify");
    CHECK(r.code == 0);
  }
  SECTION("text and pc formats") {
    const Run t = run("homotopy --A 2 --n 2 --format text");
    REQUIRE(t.code == 0);
    CHECK(t.out.find("center       Z/2") != std::string::npos);
    const Run p = run("homotopy --A 2 --n 2 --format pc");
    REQUIRE(p.code == 0);
    CHECK(is_consistent(read_pc_string(p.out)));
  }
}

TEST_CASE("usage errors exit with 1", "[cli]") {
  CHECK(run("").code == 1);
  CHECK(run("homotopy --n 2").code == 1);
  CHECK(run("homotopy --A 1 --n 2").code == 1);
  CHECK(run("homotopy --A 2 --n 0").code == 1);
  CHECK(run("homotopy --A 2 --n 2 --format xml").code == 1);
  CHECK(run("homotopy --A 2 --n 2 --time-budget -1").code == 1);
  CHECK(run("braid nonsense --n 3").code == 1);
  CHECK(run("braid brun-gens --n 2").code == 1);
  CHECK(run("braid brun-gens --n 3 --format pc").code == 1);
  CHECK(run("braid check-brunnian --n 3 --word \"s4\"").code == 1);
  CHECK(run("emit s2-data --n 2").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("resource limits exit with 2 and report progress", "[cli]") {
  SECTION("Hirsch length limit") {
    const Run r = run("homotopy --A 2 --n 2 --limit-hirsch 2");
    REQUIRE(r.code == 2);
    const json j = json::parse(r.out);
    CHECK(j["aborted"] == true);
    CHECK(j.contains("last_completed_class"));
    CHECK(j["hirsch_length"].get<int>() > 2);
  }
  SECTION("time budget on an n = 3 run") {
    const Run r = run("homotopy --A 2 --n 3 --time-budget 3");
    REQUIRE(r.code == 2);
    CHECK(r.seconds < 30);
    const json j = json::parse(r.out);
    CHECK(j["last_completed_class"].get<int>() >= 1);
    CHECK(j["hirsch_length"].get<int>() >= 30);
  }
  SECTION("time budget on a larger A") {
    const Run r = run("homotopy --A 2,4 --n 2 --with-oracle --time-budget 2");
    CHECK(r.code == 2);
    CHECK(r.seconds < 30);
  }
}

TEST_CASE("braid commands", "[cli]") {
  SECTION("Brunnian generators") {
    const Run r = run("braid brun-gens --n 3");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["generators"].size() == 2);
    CHECK(j["count"] == 2);

    const Run v = run("braid brun-gens --n 4 --verify");
    REQUIRE(v.code == 0);
    const json k = json::parse(v.out);
    CHECK(k["count"] == 18);
    CHECK(k["checked"] == 18);
    CHECK(k["failures"].empty());
  }
  SECTION("boundary generators") {
    const Run r = run("braid bd-gens --n 3 --verify");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["count"] == 8);
    CHECK(j["failures"].empty());
    CHECK(j.contains("note"));
  }
  SECTION("face identities") {
    const Run r = run("braid verify-delta --n 3");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["failures"].empty());
    // from four strands on, d0 d0 and d0 d1 differ on A[1,2] by a central element
    const Run r4 = run("braid verify-delta --n 4");
    CHECK(r4.code == 3);
    CHECK(json::parse(r4.out)["failures"].size() == 1);
  }
  SECTION("membership") {
    const Run a = run("braid check-brunnian --n 3 --word \"A[1,3]^-1 A[2,3]^-1 A[1,3] A[2,3]\"");
    REQUIRE(a.code == 0);
    CHECK(json::parse(a.out)["brunnian"] == true);
    const Run b = run("braid check-brunnian --n 3 --word \"s2 s1 s1 s2^-1\"");
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["brunnian"] == false);
    CHECK(json::parse(b.out)["pure"] == true);
    const Run c = run("braid check-brunnian --n 3 --word \"s1\" --format text");
    CHECK(c.out == "not brunnian (not pure)\n");
  }
}

TEST_CASE("emitted presentations round-trip", "[cli]") {
  const auto path = temp_file("j2.pc");
  const Run r = run("emit jn-pc --A 2 --n 2 --verify -o " + path.string());
  REQUIRE(r.code == 0);
  std::ifstream is(path);
  const PcPresentation back = read_pc(is);
  CHECK(is_consistent(back));

  const NilStage direct = build_jn(TnContext(FiniteAbelianGroup::canonical({2}), 2));
  REQUIRE(back.size() == direct.pc.size());
  for (std::size_t g = 0; g < back.size(); ++g)
    CHECK(back.relative_order(g) == direct.pc.relative_order(g));
  const AbelianInvariants z = center_invariants(back);
  CHECK(z.torsion == std::vector<Integer>{2});
  CHECK(z.free_rank == 0);
  std::filesystem::remove(path);
}

TEST_CASE("symbolic description", "[cli]") {
  const Run r = run("emit s2-data --n 3");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["brackets"].size() == 24);
  CHECK(j["families"].size() == 4);
  CHECK(j["notice"].get<std::string>().find("no center") != std::string::npos);
  const Run t = run("emit s2-data --n 3 --format text");
  CHECK(t.out.rfind("# symbolic description only", 0) == 0);
}
