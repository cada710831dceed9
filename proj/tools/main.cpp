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

// Command-line surface: compute individual values, enumerate combinatorial
// streams, and run identity verification sweeps.
//
// Exit status: 0 = success / all identities hold, 1 = at least one
// counterexample, 2 = usage or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symconv/engine.hpp"
#include "symconv/enumerate.hpp"
#include "symconv/identities.hpp"
#include "symconv/mpoly.hpp"
#include "symconv/special.hpp"
#include "symconv/symfun.hpp"
#include "symconv/upoly.hpp"

namespace {

using nlohmann::json;
using namespace symconv;

enum class OutputFormat { text, json_fmt, csv };

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json_fmt;
  if (s == "csv") return OutputFormat::csv;
  throw usage_error("unknown output format '" + s + "' (use text, json or csv)");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw usage_error("empty entry in list '" + text + "'");
    out.push_back(Integer::from_string(item).to_int64());
  }
  if (out.empty()) throw usage_error("empty list");
  return out;
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

void print_compute(OutputFormat fmt, const std::string& subject, const json& params,
                   const std::string& value) {
  switch (fmt) {
    case OutputFormat::text:
      std::cout << value << "\n";
      break;
    case OutputFormat::json_fmt:
      std::cout << json{{"subject", subject}, {"params", params}, {"value", value}}.dump(2)
                << "\n";
      break;
    case OutputFormat::csv: {
      std::string flat;
      for (auto it = params.begin(); it != params.end(); ++it) {
        if (!flat.empty()) flat += " ";
        flat += it.key() + "=" +
                (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
      }
      std::cout << "subject,params,value\n"
                << subject << "," << csv_escape(flat) << "," << csv_escape(value) << "\n";
      break;
    }
  }
}

std::string compute_symfun_value(SymKind kind, std::int64_t k, const std::string& values) {
  constexpr std::string_view kQPowers = "q-powers:";
  constexpr std::string_view kSymbolic = "symbolic:";
  if (values.rfind(kQPowers, 0) == 0) {
    const std::int64_t n = Integer::from_string(values.substr(kQPowers.size())).to_int64();
    if (n < 0) throw usage_error("q-powers:n needs n >= 0");
    std::vector<UPoly> seq;
    for (std::int64_t i = 0; i < n; ++i) seq.push_back(UPoly::monomial("q", Integer(1), i));
    return sym(kind, k, seq).str();
  }
  if (values.rfind(kSymbolic, 0) == 0) {
    const std::int64_t n = Integer::from_string(values.substr(kSymbolic.size())).to_int64();
    if (n < 0) throw usage_error("symbolic:n needs n >= 0");
    if (n > 8) throw usage_error("symbolic:n supports at most n = 8 variables");
    std::vector<MPoly> vars;
    for (std::int64_t i = 1; i <= n; ++i) vars.push_back(MPoly::variable(i));
    return sym(kind, k, vars).str();
  }
  std::vector<Integer> vals;
  for (std::int64_t v : parse_int_list(values)) vals.emplace_back(v);
  return sym(kind, k, vals).to_string();
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

void print_enumeration(OutputFormat fmt, const std::vector<std::vector<std::int64_t>>& rows) {
  switch (fmt) {
    case OutputFormat::text:
      for (const auto& row : rows) std::cout << Composition::render_parts(row) << "\n";
      break;
    case OutputFormat::json_fmt: {
      json arr = json::array();
      for (const auto& row : rows) arr.push_back(row);
      std::cout << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      std::cout << "parts\n";
      for (const auto& row : rows) std::cout << csv_escape(Composition::render_parts(row)) << "\n";
      break;
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct ConfigFile {
  GridOverrides overrides;
  std::optional<int> workers;
  std::optional<std::string> format;
};

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open config file '" + path + "'");
  ConfigFile cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto as_int = [&] { return Integer::from_string(value).to_int64(); };
    if (key == "n_max") cfg.overrides.n_max = as_int();
    else if (key == "k_max") cfg.overrides.k_max = as_int();
    else if (key == "m_max") cfg.overrides.m_max = as_int();
    else if (key == "p_max") cfg.overrides.p_max = as_int();
    else if (key == "r_max") cfg.overrides.r_max = as_int();
    else if (key == "t_max") cfg.overrides.t_max = as_int();
    else if (key == "comp_limit") cfg.overrides.composition_limit = as_int();
    else if (key == "workers") cfg.workers = static_cast<int>(as_int());
    else if (key == "format") cfg.format = value;
    else throw usage_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

struct VerifyArgs {
  std::vector<std::string> ids;
  GridOverrides cli_overrides;
  std::optional<int> workers;
  std::string config_path;
  bool show_grids = false;
  bool list = false;
  std::string mutate;
};

std::vector<const IdentitySpec*> resolve_ids(const std::vector<std::string>& requested) {
  std::vector<const IdentitySpec*> specs;
  std::vector<std::string> ids = requested;
  if (ids.empty()) ids.push_back("all");
  if (ids.size() == 1 && ids[0] == "all") {
    for (const auto& spec : identity_registry()) specs.push_back(&spec);
    return specs;
  }
  for (const auto& id : ids) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) {
      std::string valid;
      for (const auto& s : identity_registry()) {
        if (!valid.empty()) valid += " ";
        valid += s.id;
      }
      throw usage_error("unknown identity '" + id + "'; valid ids: all " + valid);
    }
    specs.push_back(spec);
  }
  return specs;
}

int run_verify(const VerifyArgs& args, OutputFormat fmt, const ConfigFile& cfg) {
  if (args.list) {
    for (const auto& spec : identity_registry())
      std::cout << spec.id << " " << spec.signature << ": " << spec.description
                << " [" << spec.constraints << "]\n";
    return 0;
  }
  if (args.show_grids) {
    for (const auto& spec : identity_registry())
      std::cout << spec.id << ": " << describe_grid(spec, spec.default_grid) << "\n";
    return 0;
  }

  GridOverrides merged = cfg.overrides;
  auto prefer = [](std::optional<std::int64_t>& slot, const std::optional<std::int64_t>& cli) {
    if (cli) slot = cli;
  };
  prefer(merged.n_max, args.cli_overrides.n_max);
  prefer(merged.k_max, args.cli_overrides.k_max);
  prefer(merged.m_max, args.cli_overrides.m_max);
  prefer(merged.p_max, args.cli_overrides.p_max);
  prefer(merged.r_max, args.cli_overrides.r_max);
  prefer(merged.t_max, args.cli_overrides.t_max);
  prefer(merged.composition_limit, args.cli_overrides.composition_limit);

  const int workers = args.workers ? *args.workers : cfg.workers.value_or(1);
  if (workers < 1) throw usage_error("--workers must be >= 1");

  CheckOptions opts;
  if (!args.mutate.empty()) {
    if (args.mutate == "sign") opts.mutation = Mutation::flip_sign;
    else if (args.mutate == "qshift") opts.mutation = Mutation::shift_q;
    else throw usage_error("unknown mutation '" + args.mutate + "' (use sign or qshift)");
  }

  const auto specs = resolve_ids(args.ids);
  if (opts.mutation == Mutation::shift_q) {
    for (const auto* spec : specs)
      if (!spec->q_valued)
        throw usage_error("mutation qshift applies only to q-valued identities; '" + spec->id +
                          "' is not");
  }

  std::vector<CheckReport> reports;
  std::vector<std::vector<InstanceResult>> dumps;
  const bool want_all_instances = fmt == OutputFormat::csv;
  for (const auto* spec : specs) {
    const Grid grid = apply_overrides(*spec, merged);
    std::vector<InstanceResult> sink;
    reports.push_back(
        run_grid(*spec, grid, workers, opts, want_all_instances ? &sink : nullptr));
    if (want_all_instances) dumps.push_back(std::move(sink));
  }

  bool any_failed = false;
  for (const auto& r : reports) any_failed = any_failed || r.failed > 0;

  switch (fmt) {
    case OutputFormat::text:
      for (const auto& r : reports) {
        std::cout << r.identity << ": " << (r.failed == 0 ? "pass" : "FAIL")
                  << " checked=" << r.checked << " failed=" << r.failed
                  << " millis=" << r.millis << "\n";
        std::cout << "  grid: " << r.grid << "\n";
        for (const auto& f : r.failures)
          std::cout << "  counterexample " << f.params.str() << ": lhs=" << f.lhs
                    << " rhs=" << f.rhs << "\n";
      }
      std::cout << (any_failed ? "FAILURES FOUND" : "all identities hold") << "\n";
      break;
    case OutputFormat::json_fmt: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      std::cout << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      std::cout << "identity,params,lhs,rhs,equal\n";
      for (const auto& dump : dumps)
        for (const auto& inst : dump)
          std::cout << inst.identity << "," << csv_escape(inst.params.str()) << ","
                    << csv_escape(inst.lhs) << "," << csv_escape(inst.rhs) << ","
                    << (inst.equal ? "true" : "false") << "\n";
      break;
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetric-function toolkit: values, streams, identity sweeps"};
  app.require_subcommand(1);

  std::optional<std::string> format_flag;
  app.add_option("--format", format_flag, "output format: text, json or csv");

  int exit_code = 0;
  auto resolved_format = [&](const ConfigFile* cfg) {
    if (format_flag) return parse_format(*format_flag);
    if (cfg && cfg->format) return parse_format(*cfg->format);
    if (const char* env = std::getenv("SYMCONV_FORMAT")) return parse_format(env);
    return OutputFormat::text;
  };

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "compute a single value");
  compute->require_subcommand(1);
  compute->fallthrough();

  std::string symfun_kind = "e", symfun_values;
  std::int64_t symfun_k = 0;
  auto* symfun_cmd = compute->add_subcommand("symfun", "elementary/complete symmetric function");
  symfun_cmd->fallthrough();
  symfun_cmd->add_option("--kind", symfun_kind, "e or h")->required();
  symfun_cmd->add_option("--k", symfun_k, "degree k")->required();
  symfun_cmd
      ->add_option("--values", symfun_values,
                   "comma-separated integers, q-powers:n, or symbolic:n")
      ->required();
  symfun_cmd->callback([&] {
    const std::string value = compute_symfun_value(parse_kind(symfun_kind), symfun_k, symfun_values);
    print_compute(resolved_format(nullptr), "symfun",
                  json{{"kind", symfun_kind}, {"k", symfun_k}, {"values", symfun_values}}, value);
  });

  std::int64_t rs_kind = 2, rs_n = 0, rs_k = 0, rs_r = 1;
  auto* rstirling_cmd = compute->add_subcommand("rstirling", "r-Stirling number");
  rstirling_cmd->fallthrough();
  rstirling_cmd->add_option("--kind", rs_kind, "1 or 2")->required();
  rstirling_cmd->add_option("--n", rs_n)->required();
  rstirling_cmd->add_option("--k", rs_k)->required();
  rstirling_cmd->add_option("--r", rs_r)->required();
  rstirling_cmd->callback([&] {
    if (rs_kind != 1 && rs_kind != 2) throw usage_error("--kind must be 1 or 2");
    const Integer v = rs_kind == 1 ? r_stirling_first(rs_n, rs_k, rs_r)
                                   : r_stirling_second(rs_n, rs_k, rs_r);
    print_compute(resolved_format(nullptr), "rstirling",
                  json{{"kind", rs_kind}, {"n", rs_n}, {"k", rs_k}, {"r", rs_r}}, v.to_string());
  });

  std::int64_t rw_kind = 2, rw_p = 1, rw_r = 1, rw_n = 0, rw_k = 0;
  auto* rwhitney_cmd = compute->add_subcommand("rwhitney", "r-Whitney number");
  rwhitney_cmd->fallthrough();
  rwhitney_cmd->add_option("--kind", rw_kind, "1 or 2")->required();
  rwhitney_cmd->add_option("--p", rw_p)->required();
  rwhitney_cmd->add_option("--r", rw_r)->required();
  rwhitney_cmd->add_option("--n", rw_n)->required();
  rwhitney_cmd->add_option("--k", rw_k)->required();
  rwhitney_cmd->callback([&] {
    if (rw_kind != 1 && rw_kind != 2) throw usage_error("--kind must be 1 or 2");
    const Integer v = rw_kind == 1 ? r_whitney_first(rw_p, rw_r, rw_n, rw_k)
                                   : r_whitney_second(rw_p, rw_r, rw_n, rw_k);
    print_compute(
        resolved_format(nullptr), "rwhitney",
        json{{"kind", rw_kind}, {"p", rw_p}, {"r", rw_r}, {"n", rw_n}, {"k", rw_k}},
        v.to_string());
  });

  std::int64_t qb_n = 0, qb_k = 0;
  auto* qbinom_cmd = compute->add_subcommand("qbinom", "Gaussian binomial coefficient");
  qbinom_cmd->fallthrough();
  qbinom_cmd->add_option("--n", qb_n)->required();
  qbinom_cmd->add_option("--k", qb_k)->required();
  qbinom_cmd->callback([&] {
    print_compute(resolved_format(nullptr), "qbinom", json{{"n", qb_n}, {"k", qb_k}},
                  q_binomial(qb_n, qb_k).str());
  });

  std::int64_t b_n = 0, b_k = 0;
  auto* binom_cmd = compute->add_subcommand("binom", "binomial coefficient");
  binom_cmd->fallthrough();
  binom_cmd->add_option("--n", b_n)->required();
  binom_cmd->add_option("--k", b_k)->required();
  binom_cmd->callback([&] {
    print_compute(resolved_format(nullptr), "binom", json{{"n", b_n}, {"k", b_k}},
                  binomial(b_n, b_k).to_string());
  });

  std::int64_t poch_n = 0;
  auto* poch_cmd = compute->add_subcommand("pochhammer", "q-shifted factorial (q;q)_n");
  poch_cmd->fallthrough();
  poch_cmd->add_option("--n", poch_n)->required();
  poch_cmd->callback([&] {
    print_compute(resolved_format(nullptr), "pochhammer", json{{"n", poch_n}},
                  q_pochhammer(poch_n).str());
  });

  std::int64_t fall_n = 0;
  auto* fall_cmd = compute->add_subcommand("falling", "falling factorial (x)_n");
  fall_cmd->fallthrough();
  fall_cmd->add_option("--n", fall_n)->required();
  fall_cmd->callback([&] {
    print_compute(resolved_format(nullptr), "falling", json{{"n", fall_n}},
                  falling_factorial(fall_n).str());
  });

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand("enumerate", "enumerate a combinatorial stream");
  enumerate->require_subcommand(1);
  enumerate->fallthrough();

  std::int64_t comp_n = 0, comp_m = 0;
  auto* comp_cmd = enumerate->add_subcommand("compositions", "compositions of n into m parts");
  comp_cmd->fallthrough();
  comp_cmd->add_option("--n", comp_n)->required();
  comp_cmd->add_option("--m", comp_m)->required();
  comp_cmd->callback([&] {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& c : CompositionRange(comp_n, comp_m)) rows.push_back(c.parts);
    print_enumeration(resolved_format(nullptr), rows);
  });

  std::int64_t bt_k = 0;
  std::string bt_bounds;
  auto* bounded_cmd =
      enumerate->add_subcommand("bounded", "bounded tuples summing to k within per-index bounds");
  bounded_cmd->fallthrough();
  bounded_cmd->add_option("--k", bt_k)->required();
  bounded_cmd->add_option("--bounds", bt_bounds, "comma-separated bounds, entries >= 1")
      ->required();
  bounded_cmd->callback([&] {
    const auto bounds = parse_int_list(bt_bounds);
    for (std::int64_t b : bounds)
      if (b < 1) throw usage_error("bounds entries must be >= 1");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& t : BoundedTupleRange(bt_k, bounds)) rows.push_back(t);
    print_enumeration(resolved_format(nullptr), rows);
  });

  std::int64_t part_k = 0, part_maxlen = 0;
  auto* part_cmd = enumerate->add_subcommand("partitions", "partitions of k with at most maxlen parts");
  part_cmd->fallthrough();
  part_cmd->add_option("--k", part_k)->required();
  part_cmd->add_option("--maxlen", part_maxlen)->required();
  part_cmd->callback([&] {
    if (part_k < 1) throw usage_error("--k must be >= 1");
    if (part_maxlen < 1) throw usage_error("--maxlen must be >= 1");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& p : PartitionRange(part_k, part_maxlen)) rows.push_back(p.parts);
    print_enumeration(resolved_format(nullptr), rows);
  });

  // ---- verify ----
  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "sweep identities over parameter grids");
  verify->fallthrough();
  verify->add_option("ids", vargs.ids, "identity ids, or 'all'");
  verify->add_option("--n-max", vargs.cli_overrides.n_max, "override the grid's n maximum");
  verify->add_option("--k-max", vargs.cli_overrides.k_max, "override the grid's k maximum");
  verify->add_option("--m-max", vargs.cli_overrides.m_max, "override the grid's m maximum");
  verify->add_option("--p-max", vargs.cli_overrides.p_max, "override the grid's p maximum");
  verify->add_option("--r-max", vargs.cli_overrides.r_max, "override the grid's r maximum");
  verify->add_option("--t-max", vargs.cli_overrides.t_max, "override the grid's t maximum");
  verify->add_option("--comp-limit", vargs.cli_overrides.composition_limit,
                     "sweep only the first N compositions per total");
  verify->add_option("--workers", vargs.workers, "parallel workers (default 1)");
  verify->add_option("--config", vargs.config_path, "key = value file overriding grid maxima");
  verify->add_flag("--show-grids", vargs.show_grids, "print each identity's default grid");
  verify->add_flag("--list", vargs.list, "list registered identities");
  verify->add_option("--mutate", vargs.mutate, "self-test fault injection: sign or qshift")
      ->group("");
  verify->callback([&] {
    ConfigFile cfg;
    if (!vargs.config_path.empty()) cfg = load_config(vargs.config_path);
    exit_code = run_verify(vargs, resolved_format(&cfg), cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
