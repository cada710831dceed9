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

// Acceptance suite: one criterion per section, one pass/fail line each.
// Criteria 7 and 8 drive the installed CLI binary, whose path is argv[1].

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symconv/engine.hpp"
#include "symconv/enumerate.hpp"
#include "symconv/identities.hpp"
#include "symconv/mpoly.hpp"
#include "symconv/special.hpp"
#include "symconv/symfun.hpp"
#include "symconv/upoly.hpp"

using nlohmann::json;
using namespace symconv;

namespace {

std::string g_cli_path;
int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string name)
      : number_(number), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok && problems_.size() < 5) problems_.push_back(detail);
    ok_ = ok_ && ok;
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void expect_runtime(double limit_seconds) {
    const double s = seconds();
    if (s >= limit_seconds) {
      ok_ = false;
      problems_.push_back("runtime " + std::to_string(s) + "s exceeds " +
                          std::to_string(limit_seconds) + "s");
    }
  }

  ~Criterion() {
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.1fs)", ok_ ? "PASS" : "FAIL",
                  number_, name_.c_str(), seconds());
    std::cout << line << "\n";
    for (const auto& p : problems_) std::cout << "         " << p << "\n";
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> problems_;
};

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  CmdResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[8192];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

CheckReport run_default(const std::string& id, Criterion& c) {
  const IdentitySpec* spec = find_identity(id);
  const CheckReport report = run_grid(*spec, spec->default_grid, 1);
  c.expect(report.failed == 0, id + ": " + std::to_string(report.failed) + " of " +
                                   std::to_string(report.checked) + " instances failed" +
                                   (report.failures.empty()
                                        ? ""
                                        : " (first: " + report.failures[0].params.str() +
                                              " lhs=" + report.failures[0].lhs +
                                              " rhs=" + report.failures[0].rhs + ")"));
  c.expect(report.checked > 0, id + ": empty sweep");
  return report;
}

void criterion_1() {
  Criterion c(1, "symbolic block-convolution sweep, every composition, n <= 6, both kinds");
  const CheckReport report = run_default("thm1", c);
  c.expect(report.checked == 768,
           "expected 768 instances, swept " + std::to_string(report.checked));
  c.expect_runtime(60.0);
}

void criterion_2() {
  Criterion c(2, "table kernels equal brute-force enumeration, n <= 7, k <= 9");
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<int> entry(-2, 3);
  long long compared = 0;
  for (std::int64_t n = 0; n <= 7; ++n) {
    for (int round = 0; round < 50; ++round) {
      std::vector<Integer> vals;
      for (std::int64_t i = 0; i < n; ++i) vals.emplace_back(entry(rng));
      for (std::int64_t k = 0; k <= 9; ++k) {
        if (symconv::elementary(k, vals) != symconv::elementary_bruteforce(k, vals)) {
          c.expect(false, "elementary mismatch at n=" + std::to_string(n));
          return;
        }
        if (symconv::complete(k, vals) != symconv::complete_bruteforce(k, vals)) {
          c.expect(false, "complete mismatch at n=" + std::to_string(n));
          return;
        }
        compared += 2;
      }
    }
    std::vector<UPoly> powers;
    for (std::int64_t i = 0; i < n; ++i) powers.push_back(UPoly::monomial("q", Integer(1), i));
    for (std::int64_t k = 0; k <= 9; ++k) {
      c.expect(symconv::elementary(k, powers) == symconv::elementary_bruteforce(k, powers),
               "elementary q-power mismatch at n=" + std::to_string(n));
      c.expect(symconv::complete(k, powers) == symconv::complete_bruteforce(k, powers),
               "complete q-power mismatch at n=" + std::to_string(n));
      compared += 2;
    }
  }
  c.expect(compared == 2 * (8 * 50 * 10 + 8 * 10), "comparison count off");
  c.expect_runtime(30.0);
}

void criterion_3() {
  Criterion c(3, "reference expansions: bounded tuple support and multinomial weights");
  std::vector<std::vector<std::int64_t>> tuples;
  for (const auto& t : BoundedTupleRange(3, {2, 1, 2})) tuples.push_back(t);
  const std::vector<std::vector<std::int64_t>> expected = {
      {0, 1, 2}, {1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 0}};
  c.expect(tuples == expected, "bounded tuple support of 3 within (2,1,2) is wrong");

  std::vector<std::pair<std::vector<std::int64_t>, long long>> weights = {
      {{4}, 3}, {{3, 1}, 6}, {{2, 2}, 3}, {{2, 1, 1}, 3}};
  std::size_t seen = 0;
  for (const auto& lambda : PartitionRange(4, 3)) {
    bool matched = false;
    for (const auto& [parts, coeff] : weights) {
      if (lambda.parts == parts) {
        matched = true;
        c.expect(multinomial_partition_coeff(3, lambda) == Integer(coeff),
                 "weight of " + lambda.str() + " is wrong");
      }
    }
    c.expect(matched, "unexpected partition " + lambda.str());
    ++seen;
  }
  c.expect(seen == 4, "partition stream of 4 with length <= 3 should have 4 members");
}

void criterion_4() {
  Criterion c(4, "two-parameter r-Stirling convolutions over 1 <= r < t <= k < n <= 10");
  long long domain = 0;
  for (std::int64_t r = 1; r <= 10; ++r)
    for (std::int64_t t = r + 1; t <= 10; ++t)
      for (std::int64_t k = t; k <= 10; ++k)
        for (std::int64_t n = k + 1; n <= 10; ++n) ++domain;
  for (const char* id : {"eq1_2", "eq1_3"}) {
    const CheckReport report = run_default(id, c);
    c.expect(report.checked == domain, std::string(id) + ": domain size mismatch");
  }
  c.expect_runtime(10.0);
}

void criterion_5() {
  Criterion c(5, "r-Whitney suite: composition/two-block/equal-block sweeps and reductions");
  for (const char* id : {"cor3_1", "cor3_2", "cor3_3", "cor3_4", "cor3_5", "cor3_6",
                         "rstirling_block_1", "rstirling_block_2"})
    run_default(id, c);

  // p = 1 reduction onto r-Stirling numbers, both kinds.
  for (std::int64_t r = 1; r <= 4; ++r) {
    for (std::int64_t n = 0; n <= 8; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        Integer first = r_stirling_first(n + r, k + r, r);
        if ((n - k) % 2 == 1) first = -first;
        c.expect(r_whitney_first(1, r, n, k) == first,
                 "first-kind p=1 reduction fails at r=" + std::to_string(r) +
                     " n=" + std::to_string(n) + " k=" + std::to_string(k));
        c.expect(r_whitney_second(1, r, n, k) == r_stirling_second(n + r, k + r, r),
                 "second-kind p=1 reduction fails at r=" + std::to_string(r) +
                     " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }

  // Defining polynomial identities over the full small box.
  for (std::int64_t p = 1; p <= 4; ++p)
    for (std::int64_t r = 1; r <= 4; ++r)
      for (std::int64_t n = 0; n <= 8; ++n) {
        const auto res = whitney_defining_check(p, r, n);
        c.expect(res.first_kind_ok, "first defining identity fails at p=" + std::to_string(p) +
                                        " r=" + std::to_string(r) + " n=" + std::to_string(n));
        c.expect(res.second_kind_ok, "second defining identity fails at p=" + std::to_string(p) +
                                         " r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
  c.expect_runtime(120.0);
}

void criterion_6() {
  Criterion c(6, "q-suite: q-convolutions, their integer forms, and the q-at-one linkage");
  for (const char* id : {"cor4_1", "cor4_2", "cor4_3", "cor4_4", "qvandermonde",
                         "qvandermonde_h", "cor4_5", "cor4_6", "eq4_1", "eq4_2", "cor4_7",
                         "cor4_8"})
    run_default(id, c);

  // Evaluating each q-instance at q = 1 must reproduce its integer form.
  long long linked = 0;
  auto link = [&](const InstanceResult& q_res, const InstanceResult& int_res) {
    const Integer lhs1 = UPoly::parse(q_res.lhs).eval_at_one();
    const Integer rhs1 = UPoly::parse(q_res.rhs).eval_at_one();
    const bool ok = lhs1 == Integer::from_string(int_res.lhs) &&
                    rhs1 == Integer::from_string(int_res.rhs);
    if (!ok)
      c.expect(false, q_res.identity + " at-one mismatch vs " + int_res.identity + " at " +
                          q_res.params.str());
    ++linked;
  };
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      for (const auto& comp : CompositionRange(n, m)) {
        for (std::int64_t k = 0; k <= n + 2; ++k) {
          Params p;
          p.scalars = {{"n", n}, {"k", k}};
          p.lambda = comp;
          link(check_instance("cor4_1", p), check_instance("cor4_5", p));
          link(check_instance("cor4_2", p), check_instance("cor4_6", p));
        }
      }
      for (std::int64_t k = 0; k <= n + 2; ++k) {
        Params p;
        p.scalars = {{"n", n}, {"m", m}, {"k", k}};
        link(check_instance("cor4_3", p), check_instance("eq4_1", p));
        link(check_instance("cor4_4", p), check_instance("eq4_2", p));
      }
    }
    for (std::int64_t t = 1; t <= n; ++t) {
      for (std::int64_t k = 0; k <= n; ++k) {
        Params p;
        p.scalars = {{"n", n}, {"t", t}, {"k", k}};
        if (t <= n - 1) link(check_instance("qvandermonde", p), check_instance("vandermonde", p));
        Params ph;
        ph.scalars = {{"n", n + 1}, {"k", k}};
        ph.lambda = Composition({t, n + 1 - t});
        link(check_instance("qvandermonde_h", p), check_instance("vandermonde_h", ph));
      }
    }
  }
  c.expect(linked > 1000, "q-at-one linkage swept too few instances");
  c.expect_runtime(120.0);
}

void criterion_7() {
  Criterion c(7, "mutation sensitivity: injected faults fail every identity's default grid");
  for (const auto& spec : identity_registry()) {
    std::vector<std::string> modes = {"sign"};
    if (spec.q_valued) modes.push_back("qshift");
    for (const auto& mode : modes) {
      const CmdResult res =
          run_cli("verify " + spec.id + " --mutate " + mode + " --format json");
      if (res.exit_code != 1) {
        c.expect(false, spec.id + " --mutate " + mode + ": exit " +
                            std::to_string(res.exit_code) + ", expected 1");
        continue;
      }
      json reports = json::parse(res.out, nullptr, false);
      if (reports.is_discarded() || reports.size() != 1) {
        c.expect(false, spec.id + " --mutate " + mode + ": unparseable report");
        continue;
      }
      c.expect(reports[0]["failed"].get<long long>() >= 1,
               spec.id + " --mutate " + mode + ": no counterexample");
    }
  }
}

void criterion_8() {
  Criterion c(8, "determinism: verify all with 1 and 4 workers emit identical JSON bodies");
  const CmdResult one = run_cli("verify all --workers 1 --format json");
  const CmdResult four = run_cli("verify all --workers 4 --format json");
  c.expect(one.exit_code == 0, "workers=1 exit " + std::to_string(one.exit_code));
  c.expect(four.exit_code == 0, "workers=4 exit " + std::to_string(four.exit_code));
  json a = json::parse(one.out, nullptr, false);
  json b = json::parse(four.out, nullptr, false);
  if (a.is_discarded() || b.is_discarded()) {
    c.expect(false, "unparseable verify output");
    return;
  }
  c.expect(a.size() == 29, "expected 29 report objects, got " + std::to_string(a.size()));
  for (auto& r : a) r.erase("millis");
  for (auto& r : b) r.erase("millis");
  c.expect(a.dump() == b.dump(), "worker counts disagree after excluding wall time");
}

}  // namespace

int main(int argc, char** argv) {
  g_cli_path = argc > 1 ? argv[1] : "./tools/symconv";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::cout << "all 8 criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
