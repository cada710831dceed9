// Copyright 2026 The symconv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#ifndef SYMCONV_CLI_BIN
#define SYMCONV_CLI_BIN "./symconv"
#endif

namespace {

using nlohmann::json;

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + SYMCONV_CLI_BIN " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("compute renders canonical values") {
  CHECK(run_cli("compute qbinom --n 4 --k 2").out == "1 + q + 2*q^2 + q^3 + q^4\n");
  CHECK(run_cli("compute symfun --kind e --k 0 --values 1,2,3").out == "1\n");
  CHECK(run_cli("compute rstirling --kind 2 --n 4 --k 2 --r 2").out == "4\n");
  CHECK(run_cli("compute rwhitney --kind 1 --p 2 --r 1 --n 2 --k 1").out == "-4\n");
  CHECK(run_cli("compute symfun --kind e --k 2 --values q-powers:3").out == "q + q^2 + q^3\n");
  CHECK(run_cli("compute symfun --kind e --k 2 --values symbolic:3").out ==
        "x1*x2 + x1*x3 + x2*x3\n");
  CHECK(run_cli("compute pochhammer --n 2").out == "1 - q - q^2 + q^3\n");
  CHECK(run_cli("compute falling --n 3").out == "2*x - 3*x^2 + x^3\n");
  CHECK(run_cli("compute binom --n 5 --k 2").out == "10\n");
}

TEST_CASE("compute guards and exit codes") {
  CHECK(run_cli("compute symfun --kind e --k 2 --values symbolic:9").exit_code == 2);
  CHECK(run_cli("compute symfun --kind z --k 2 --values 1,2").exit_code == 2);
  CHECK(run_cli("compute qbinom --n x --k 2").exit_code == 2);
  CHECK(run_cli("compute nosuch --n 1").exit_code == 2);
  CHECK(run_cli("compute rstirling --kind 3 --n 4 --k 2 --r 2").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("enumerate streams") {
  CHECK(lines_of(run_cli("enumerate bounded --k 3 --bounds 2,1,2").out).size() == 5);
  CHECK(run_cli("enumerate compositions --n 1 --m 1").out == "[1]\n");
  CHECK(run_cli("enumerate compositions --n 3 --m 2").out == "[1,2]\n[2,1]\n");
  // Oversized part count is an empty stream, not an error.
  const auto empty = run_cli("enumerate compositions --n 3 --m 4");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.empty());
  CHECK(lines_of(run_cli("enumerate partitions --k 4 --maxlen 3").out).size() == 4);
  CHECK(run_cli("enumerate partitions --k 0 --maxlen 1").exit_code == 2);
  CHECK(run_cli("enumerate bounded --k 1 --bounds 2,0").exit_code == 2);
  const auto js = run_cli("enumerate compositions --n 3 --m 2 --format json");
  CHECK(json::parse(js.out) == json::parse("[[1,2],[2,1]]"));
}

TEST_CASE("format selection: flag, environment, csv") {
  const auto js = run_cli("compute binom --n 4 --k 2 --format json");
  const json parsed = json::parse(js.out);
  CHECK(parsed["value"] == "6");
  CHECK(parsed["subject"] == "binom");

  const auto env_js = run_cli("compute binom --n 4 --k 2", "SYMCONV_FORMAT=json");
  CHECK(json::parse(env_js.out)["value"] == "6");

  const auto flag_beats_env = run_cli("compute binom --n 4 --k 2 --format text",
                                      "SYMCONV_FORMAT=json");
  CHECK(flag_beats_env.out == "6\n");

  const auto csv = run_cli("compute qbinom --n 2 --k 1 --format csv");
  CHECK(lines_of(csv.out)[0] == "subject,params,value");

  CHECK(run_cli("compute binom --n 4 --k 2 --format yaml").exit_code == 2);
}

TEST_CASE("verify command surface") {
  const auto bad = run_cli("verify nosuch");
  CHECK(bad.exit_code == 2);

  const auto ok = run_cli("verify eq1_2 --n-max 10 --format json");
  CHECK(ok.exit_code == 0);
  const json reports = json::parse(ok.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["identity"] == "eq1_2");
  CHECK(reports[0]["checked"].get<long long>() > 0);
  CHECK(reports[0]["failed"] == 0);
  CHECK(reports[0]["failures"].empty());

  CHECK(lines_of(run_cli("verify --list").out).size() == 29);
  CHECK(lines_of(run_cli("verify --show-grids").out).size() == 29);
  CHECK(run_cli("verify eq1_2 --n-max 99").exit_code == 2);

  const auto text = run_cli("verify qvandermonde --n-max 4");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("qvandermonde: pass") != std::string::npos);
  CHECK(text.out.find("all identities hold") != std::string::npos);

  const auto csv = run_cli("verify vandermonde --n-max 2 --format csv");
  const auto csv_lines = lines_of(csv.out);
  CHECK(csv_lines[0] == "identity,params,lhs,rhs,equal");
  CHECK(csv_lines.size() == 1 + 1 + 4 + 9);  // header + instances for n = 0..2
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* cmd : {"compute qbinom --n 6 --k 3", "compute symfun --kind h --k 4 --values 1,2,3",
                          "enumerate partitions --k 6 --maxlen 3 --format json",
                          "verify --show-grids"}) {
    CHECK(run_cli(cmd).out == run_cli(cmd).out);
  }
  // Timing lives only in the millis field; the rest of the body is stable.
  auto strip = [](const std::string& text) {
    json reports = json::parse(text);
    for (auto& r : reports) r.erase("millis");
    return reports.dump();
  };
  const auto first = run_cli("verify cor4_3 --format json");
  const auto second = run_cli("verify cor4_3 --format json");
  CHECK(strip(first.out) == strip(second.out));
}

TEST_CASE("verify workers produce identical bodies") {
  auto strip = [](const std::string& text) {
    json reports = json::parse(text);
    for (auto& r : reports) r.erase("millis");
    return reports.dump();
  };
  const auto one = run_cli("verify eq1_3 cor3_3 --n-max 6 --workers 1 --format json");
  const auto four = run_cli("verify eq1_3 cor3_3 --n-max 6 --workers 4 --format json");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(strip(one.out) == strip(four.out));
}

TEST_CASE("verify config file overrides, with CLI flags taking precedence") {
  const std::string path = "/tmp/symconv_cli_test_config.txt";
  {
    std::ofstream cfg(path);
    cfg << "# sweep size\n n_max = 6 \n format = json \n";
  }
  const auto from_config = run_cli("verify eq1_2 --config " + path);
  CHECK(from_config.exit_code == 0);
  const json cfg_reports = json::parse(from_config.out);

  const auto from_flag = run_cli("verify eq1_2 --n-max 6 --format json");
  const json flag_reports = json::parse(from_flag.out);
  CHECK(cfg_reports[0]["checked"] == flag_reports[0]["checked"]);

  // A CLI flag beats the config value.
  const auto overridden = run_cli("verify eq1_2 --config " + path + " --n-max 8");
  const auto wanted = run_cli("verify eq1_2 --n-max 8 --format json");
  CHECK(json::parse(overridden.out)[0]["checked"] == json::parse(wanted.out)[0]["checked"]);

  {
    std::ofstream cfg(path);
    cfg << "nonsense = 1\n";
  }
  CHECK(run_cli("verify eq1_2 --config " + path).exit_code == 2);
  CHECK(run_cli("verify eq1_2 --config /tmp/definitely_missing_config").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("mutation hook produces counterexamples and exit status 1") {
  const auto mutated = run_cli("verify vandermonde --n-max 4 --mutate sign --format json");
  CHECK(mutated.exit_code == 1);
  const json reports = json::parse(mutated.out);
  CHECK(reports[0]["failed"].get<long long>() > 0);
  CHECK(!reports[0]["failures"].empty());
  const auto& failure = reports[0]["failures"][0];
  CHECK(failure.contains("params"));
  CHECK(failure.contains("lhs"));
  CHECK(failure.contains("rhs"));

  CHECK(run_cli("verify vandermonde --mutate qshift").exit_code == 2);
  CHECK(run_cli("verify qvandermonde --n-max 3 --mutate qshift").exit_code == 1);
  CHECK(run_cli("verify vandermonde --mutate nosuch").exit_code == 2);
}
