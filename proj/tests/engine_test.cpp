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

#include <json.hpp>
#include <string>
#include <vector>

#include "symconv/engine.hpp"
#include "symconv/identities.hpp"

using nlohmann::json;
using namespace symconv;

namespace {

Params scalar_params(std::vector<std::pair<std::string, std::int64_t>> scalars) {
  Params p;
  p.scalars = std::move(scalars);
  return p;
}

json report_without_millis(const CheckReport& r) {
  json j = report_to_json(r);
  j.erase("millis");
  return j;
}

}  // namespace

TEST_CASE("registry is the closed 29-identity catalog") {
  const auto& reg = identity_registry();
  CHECK(reg.size() == 29);
  const std::vector<std::string> expected = {
      "thm1",   "cor1_1", "cor1_2", "vandermonde", "vandermonde_m", "vandermonde_h",
      "eq1_2",  "eq1_3",  "eq2_1",  "cor3_1",      "cor3_2",        "cor3_3",
      "cor3_4", "cor3_5", "cor3_6", "rstirling_block_1", "rstirling_block_2", "cor4_1",
      "cor4_2", "cor4_3", "cor4_4", "qvandermonde", "qvandermonde_h", "cor4_5",
      "cor4_6", "eq4_1",  "eq4_2",  "cor4_7",      "cor4_8"};
  REQUIRE(reg.size() == expected.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == expected[i]);
    CHECK(!reg[i].signature.empty());
    CHECK(!reg[i].description.empty());
    CHECK(!reg[i].constraints.empty());
    CHECK(reg[i].enumerate != nullptr);
    CHECK(reg[i].check != nullptr);
  }
  CHECK(find_identity("thm1") != nullptr);
  CHECK(find_identity("thm1")->signature == "(kind, n, k, lambda)");
  CHECK(find_identity("eq1_3")->constraints == "1 <= r < t <= k < n");
  CHECK(find_identity("nosuch") == nullptr);
}

TEST_CASE("instance checks reproduce hand-evaluated cases") {
  SUBCASE("first-kind two-parameter convolution at its smallest corner") {
    const auto res =
        check_instance("eq1_2", scalar_params({{"r", 1}, {"t", 2}, {"k", 2}, {"n", 3}}));
    CHECK(res.equal);
    CHECK(res.lhs == "3");
    CHECK(res.rhs == "3");
  }
  SUBCASE("second-kind two-parameter convolution hits the empty boundary column") {
    const auto res =
        check_instance("eq1_3", scalar_params({{"r", 1}, {"t", 2}, {"k", 2}, {"n", 3}}));
    CHECK(res.equal);
    CHECK(res.lhs == "3");
  }
  SUBCASE("symbolic block convolution over the reference composition") {
    Params p;
    p.kind = SymKind::elementary;
    p.scalars = {{"n", 5}, {"k", 3}};
    p.lambda = Composition({2, 1, 2});
    const auto res = check_instance("thm1", p);
    CHECK(res.equal);
    CHECK(res.lhs == res.rhs);
    CHECK(res.params.str() == "kind=e n=5 k=3 lambda=[2,1,2]");
  }
  SUBCASE("q-Vandermonde at n=2, t=1, k=1") {
    const auto res =
        check_instance("qvandermonde", scalar_params({{"n", 2}, {"t", 1}, {"k", 1}}));
    CHECK(res.equal);
    CHECK(res.lhs == "1 + q");
    CHECK(res.rhs == "1 + q");
  }
}

TEST_CASE("domain constraint violations name the constraint") {
  CHECK_THROWS_AS(
      check_instance("eq1_2", scalar_params({{"r", 2}, {"t", 2}, {"k", 3}, {"n", 4}})),
      usage_error);
  CHECK_THROWS_AS(check_instance("nosuch", Params{}), usage_error);
  try {
    check_instance("eq1_2", scalar_params({{"r", 2}, {"t", 2}, {"k", 3}, {"n", 4}}));
  } catch (const usage_error& e) {
    CHECK(std::string(e.what()).find("1 <= r < t <= k < n") != std::string::npos);
  }
}

TEST_CASE("empty grids pass with zero instances") {
  const IdentitySpec* spec = find_identity("vandermonde");
  Grid g = spec->default_grid;
  g.n_max = -1;
  const CheckReport report = run_grid(*spec, g, 1);
  CHECK(report.checked == 0);
  CHECK(report.failed == 0);
  CHECK(report.failures.empty());
}

TEST_CASE("grid reports are identical for one and four workers") {
  for (const char* id : {"cor3_3", "qvandermonde", "thm1"}) {
    const IdentitySpec* spec = find_identity(id);
    Grid g = spec->default_grid;
    if (g.n_max > 5) g.n_max = 5;
    const CheckReport one = run_grid(*spec, g, 1);
    const CheckReport four = run_grid(*spec, g, 4);
    CHECK(report_without_millis(one) == report_without_millis(four));
    CHECK(one.failed == 0);
  }
}

TEST_CASE("instance capture preserves sweep order and the equality invariant") {
  const IdentitySpec* spec = find_identity("vandermonde");
  Grid g = spec->default_grid;
  g.n_max = 4;
  std::vector<InstanceResult> all;
  const CheckReport report = run_grid(*spec, g, 3, {}, &all);
  CHECK(static_cast<std::int64_t>(all.size()) == report.checked);
  const auto instances = spec->enumerate(g);
  REQUIRE(instances.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].params.str() == instances[i].str());
    CHECK(all[i].equal == (all[i].lhs == all[i].rhs));
    CHECK(all[i].equal);
  }
}

TEST_CASE("sign mutation is caught on every identity's grid") {
  CheckOptions mutated;
  mutated.mutation = Mutation::flip_sign;
  for (const auto& spec : identity_registry()) {
    Grid g = spec.default_grid;
    // Shrink the sweeps; sensitivity must already show on small corners.
    if (g.n_max > 4) g.n_max = 4;
    if (g.k_max > 4) g.k_max = 4;
    if (g.m_max > 3) g.m_max = 3;
    if (g.p_max > 2) g.p_max = 2;
    if (g.r_max > 2) g.r_max = 2;
    if (g.t_max > 2) g.t_max = 2;
    const CheckReport clean = run_grid(spec, g, 1);
    CHECK(clean.failed == 0);
    const CheckReport report = run_grid(spec, g, 1, mutated);
    INFO(spec.id);
    CHECK(report.checked > 0);
    CHECK(report.failed > 0);
    CHECK(!report.failures.empty());
  }
}

TEST_CASE("q-exponent mutation is caught on every q-valued identity") {
  CheckOptions mutated;
  mutated.mutation = Mutation::shift_q;
  int q_ids = 0;
  for (const auto& spec : identity_registry()) {
    if (!spec.q_valued) continue;
    ++q_ids;
    Grid g = spec.default_grid;
    if (g.n_max > 4) g.n_max = 4;
    const CheckReport report = run_grid(spec, g, 1, mutated);
    INFO(spec.id);
    CHECK(report.failed > 0);
  }
  CHECK(q_ids == 6);
}

TEST_CASE("q-exponent mutation rejects integer identities") {
  CheckOptions mutated;
  mutated.mutation = Mutation::shift_q;
  CHECK_THROWS_AS(
      check_instance("vandermonde", scalar_params({{"n", 2}, {"t", 1}, {"k", 1}}), mutated),
      usage_error);
}

TEST_CASE("failure list caps at 100 with the total count preserved") {
  const IdentitySpec* spec = find_identity("vandermonde");
  CheckOptions mutated;
  mutated.mutation = Mutation::flip_sign;
  const CheckReport report = run_grid(*spec, spec->default_grid, 2, mutated);
  CHECK(report.failed > 100);
  CHECK(report.failures.size() == 100);
}

TEST_CASE("the partition and composition groupings cross-check") {
  // Same totals, regrouped: the partition-form sums equal the
  // composition-form sums term-group by term-group.
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t m = 1; m <= 5; ++m)
      for (std::int64_t k = 0; k <= 5; ++k) {
        const Params p = scalar_params({{"n", n}, {"m", m}, {"k", k}});
        CHECK(check_instance("eq4_1", p).lhs == check_instance("cor4_7", p).lhs);
        CHECK(check_instance("eq4_2", p).lhs == check_instance("cor4_8", p).lhs);
      }
}

TEST_CASE("grid overrides respect the documented caps") {
  const IdentitySpec* thm1 = find_identity("thm1");
  GridOverrides o;
  o.n_max = 7;
  CHECK(apply_overrides(*thm1, o).n_max == 7);
  o.n_max = 9;  // symbolic cap is 8
  CHECK_THROWS_AS(apply_overrides(*thm1, o), usage_error);
  const IdentitySpec* eq = find_identity("eq1_2");
  o.n_max = 12;
  CHECK(apply_overrides(*eq, o).n_max == 12);
  o.n_max = 99;
  CHECK_THROWS_AS(apply_overrides(*eq, o), usage_error);
}

TEST_CASE("composition policy: prefix limit trims the sweep") {
  const IdentitySpec* spec = find_identity("thm1");
  Grid g = spec->default_grid;
  g.n_max = 4;
  const auto full = spec->enumerate(g);
  g.composition_limit = 2;
  const auto trimmed = spec->enumerate(g);
  CHECK(trimmed.size() < full.size());
  const CheckReport report = run_grid(*spec, g, 1);
  CHECK(report.failed == 0);
  CHECK(report.checked == static_cast<std::int64_t>(trimmed.size()));
}

TEST_CASE("explicit composition lists are honored") {
  const IdentitySpec* spec = find_identity("cor4_1");
  Grid g = spec->default_grid;
  g.n_max = 5;
  g.explicit_compositions = std::vector<Composition>{Composition({2, 1, 2})};
  const auto instances = spec->enumerate(g);
  CHECK(instances.size() == 8);  // k = 0..5+2, single composition at n = 5
  for (const auto& p : instances) CHECK(p.lambda->parts == std::vector<std::int64_t>{2, 1, 2});
  CHECK(run_grid(*spec, g, 1).failed == 0);
}
