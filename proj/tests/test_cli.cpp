// Copyright 2026 The xsep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(XSEP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("psep emits exact and float values") {
  auto r = run_cli("--format csv psep --alpha 1");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "statistic,alpha,k,exact,float,method,error,seed\n"
        "sep,1,0,2/5,0.40000000000000002,closed,,\n");

  auto half = run_cli("--format csv psep --alpha 0.5");
  CHECK(half.out.find("16/3 * pi^-2,0.54037964609246814") != std::string::npos);

  auto ten = run_cli("psep --alpha 10");
  CHECK(ten.out.find("0.12683429693068") != std::string::npos);
}

TEST_CASE("induced and rel commands print both exact rationals") {
  auto r = run_cli("--format csv induced --alpha 1 --k 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("sep,1,0,2/5,") != std::string::npos);
  CHECK(r.out.find("nonsep,1,0,3/5,") != std::string::npos);

  auto r21 = run_cli("--format csv induced --alpha 2 --k 1");
  CHECK(r21.out.find("nonsep,2,1,49/99,") != std::string::npos);

  auto rel = run_cli("--format csv rel --alpha 1 --k 0");
  CHECK(rel.out.find("rel,1,0,1/5,") != std::string::npos);
  CHECK(rel.out.find("rel_nonsep,1,0,4/5,") != std::string::npos);
}

TEST_CASE("exit codes: 0 success, 1 check failure, 2 usage") {
  CHECK(run_cli("psep --alpha 1").status == 0);
  CHECK(run_cli("psep").status == 2);                       // missing required flag
  CHECK(run_cli("psep --alpha 1 --format yaml").status == 2);
  CHECK(run_cli("nope").status == 2);                       // unknown subcommand
  CHECK(run_cli("induced --alpha 1.5 --k 0").status == 2);  // unsupported alpha
  CHECK(run_cli("rel --alpha 1 --k 0.5").status == 2);
  CHECK(run_cli("psep --alpha -3").status == 2);            // domain error
  CHECK(run_cli("verify --suite nope").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("integral and quad agree") {
  auto closed = run_cli("--format json integral --m 2 --n 0");
  auto quad = run_cli("--format json quad --m 2 --n 0");
  CHECK(closed.status == 0);
  CHECK(quad.status == 0);
  auto jc = nlohmann::ordered_json::parse(closed.out);
  auto jq = nlohmann::ordered_json::parse(quad.out);
  CHECK(jc["exact"] == "1/50400");
  CHECK(jc["method"] == "closed");
  CHECK(jq["method"] == "quad");
  CHECK(jq.contains("error"));
  double diff = std::abs(jc["float_value"].get<double>() - jq["float_value"].get<double>());
  CHECK(diff <= 1e-9 / 50400);
}

TEST_CASE("mc output is reproducible and seeded") {
  std::string flags = "--format json mc --alpha 1 --k 0 --stat sep --samples 50000 --seed 42";
  auto a = run_cli(flags);
  auto b = run_cli(flags);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["method"] == "mc");
  CHECK(j.contains("error"));
  double mean = j["float_value"].get<double>();
  double se = j["error"].get<double>();
  CHECK(std::abs(mean - 0.4) <= 5 * se);
}

TEST_CASE("json lines re-render to identical bytes") {
  auto r = run_cli("--format json table --alphas 0.5,1,2 --ks 0,1");
  CHECK(r.status == 0);
  std::size_t start = 0;
  int lines = 0;
  while (start < r.out.size()) {
    std::size_t end = r.out.find('\n', start);
    REQUIRE(end != std::string::npos);
    std::string line = r.out.substr(start, end - start);
    CHECK(nlohmann::ordered_json::parse(line).dump() == line);
    start = end + 1;
    ++lines;
  }
  CHECK(lines >= 8);
}

TEST_CASE("table defaults to csv with the fixed header") {
  auto r = run_cli("table --alphas 0.5,1,2 --ks 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("statistic,alpha,k,exact,float,method,error,seed\n") == 0);
  CHECK(r.out.find("16/3 * pi^-2") != std::string::npos);
  CHECK(r.out.find("2/5") != std::string::npos);
  CHECK(r.out.find("2/7") != std::string::npos);

  auto k_sweep = run_cli("table --alphas 1 --ks 0,1,2");
  CHECK(k_sweep.out.find(",3/5,") != std::string::npos);
  CHECK(k_sweep.out.find(",5/14,") != std::string::npos);
  CHECK(k_sweep.out.find(",7/33,") != std::string::npos);

  // empty ranges give a header-only document
  auto empty = run_cli("table");
  CHECK(empty.status == 0);
  CHECK(empty.out == "statistic,alpha,k,exact,float,method,error,seed\n");

  // byte stability of the full table
  CHECK(run_cli("table --alphas 0.5,1,2 --ks 0,1,2").out ==
        run_cli("table --alphas 0.5,1,2 --ks 0,1,2").out);
}

TEST_CASE("verify suites run from the command line") {
  auto ok = run_cli("verify --suite identities");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  auto ext = run_cli("verify --suite extremes");
  CHECK(ext.status == 0);

  auto mc = run_cli("verify --suite closed-vs-mc --samples 200000 --seed 7");
  CHECK(mc.status == 0);
}
