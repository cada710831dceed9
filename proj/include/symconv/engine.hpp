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

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "symconv/identities.hpp"

namespace symconv {

inline constexpr std::int64_t kFailureCap = 100;

struct CheckReport {
  std::string identity;
  std::string grid;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::vector<InstanceResult> failures;  // first kFailureCap, in sweep order
  std::int64_t millis = 0;
};

// Optional replacements for a grid's sweep maxima. Fields an identity does
// not use are ignored.
struct GridOverrides {
  std::optional<std::int64_t> n_max, k_max, m_max, p_max, r_max, t_max, composition_limit;
  bool any() const {
    return n_max || k_max || m_max || p_max || r_max || t_max || composition_limit;
  }
};

// Hard caps that keep override sweeps within desk scale; symbolic identities
// expand multivariate polynomials and get a tighter variable-count cap.
inline Grid apply_overrides(const IdentitySpec& spec, const GridOverrides& o) {
  Grid g = spec.default_grid;
  const std::int64_t n_cap = spec.symbolic ? 8 : 16;
  auto apply = [&](std::optional<std::int64_t> v, std::int64_t& slot, std::int64_t lo,
                   std::int64_t hi, const char* name) {
    if (!v) return;
    if (*v < lo || *v > hi)
      throw usage_error(std::string("grid override ") + name + "=" + std::to_string(*v) +
                        " outside documented range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] for " + spec.id);
    slot = *v;
  };
  apply(o.n_max, g.n_max, 0, n_cap, "n-max");
  apply(o.k_max, g.k_max, 0, 16, "k-max");
  apply(o.m_max, g.m_max, 0, 8, "m-max");
  apply(o.p_max, g.p_max, 0, 8, "p-max");
  apply(o.r_max, g.r_max, 0, 8, "r-max");
  apply(o.t_max, g.t_max, 0, 8, "t-max");
  apply(o.composition_limit, g.composition_limit, 0, 1000000, "comp-limit");
  return g;
}

inline std::string describe_grid(const IdentitySpec& spec, const Grid& g) {
  std::string out = spec.constraints;
  auto field = [&out](const char* name, std::int64_t v) {
    if (v > 0) out += std::string("; ") + name + "<=" + std::to_string(v);
  };
  field("n", g.n_max);
  field("k", g.k_max);
  field("m", g.m_max);
  field("p", g.p_max);
  field("r", g.r_max);
  field("t", g.t_max);
  if (g.composition_limit > 0)
    out += "; first " + std::to_string(g.composition_limit) + " compositions";
  return out;
}

// Sweeps the grid, comparing both sides of every instance. The instance
// order is the enumerator's canonical order, and results are keyed by index,
// so the report is identical for any worker count. When `all_instances` is
// given, every instance result is captured in order (used by the CSV dump).
inline CheckReport run_grid(const IdentitySpec& spec, const Grid& grid, int workers,
                            const CheckOptions& opts = {},
                            std::vector<InstanceResult>* all_instances = nullptr) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Params> instances = spec.enumerate(grid);
  std::vector<std::optional<InstanceResult>> results(instances.size());

  if (workers < 1) throw usage_error("workers must be >= 1");
  if (workers == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      results[i] = spec.check(instances[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        try {
          results[i] = spec.check(instances[i], opts);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  CheckReport report;
  report.identity = spec.id;
  report.grid = describe_grid(spec, grid);
  report.checked = static_cast<std::int64_t>(instances.size());
  for (auto& slot : results) {
    InstanceResult& res = *slot;
    if (!res.equal) {
      ++report.failed;
      if (static_cast<std::int64_t>(report.failures.size()) < kFailureCap)
        report.failures.push_back(res);
    }
    if (all_instances) all_instances->push_back(std::move(res));
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  return report;
}

inline nlohmann::json params_to_json(const Params& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.kind) j["kind"] = std::string(1, kind_char(*p.kind));
  for (const auto& [key, value] : p.scalars) j[key] = value;
  if (p.lambda) j["lambda"] = p.lambda->parts;
  return j;
}

inline nlohmann::json instance_to_json(const InstanceResult& r) {
  return nlohmann::json{
      {"params", params_to_json(r.params)}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

inline nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back(instance_to_json(f));
  return nlohmann::json{{"identity", r.identity}, {"grid", r.grid},     {"checked", r.checked},
                        {"failed", r.failed},     {"failures", failures}, {"millis", r.millis}};
}

}  // namespace symconv
