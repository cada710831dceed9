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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symconv/enumerate.hpp"
#include "symconv/errors.hpp"
#include "symconv/mpoly.hpp"
#include "symconv/special.hpp"
#include "symconv/symfun.hpp"
#include "symconv/upoly.hpp"

namespace symconv {

// One bound parameter set for an identity instance. Scalars keep their
// declaration order for canonical rendering.
struct Params {
  std::optional<SymKind> kind;
  std::vector<std::pair<std::string, std::int64_t>> scalars;
  std::optional<Composition> lambda;

  std::int64_t get(std::string_view name) const {
    for (const auto& [key, value] : scalars)
      if (key == name) return value;
    throw internal_error("missing parameter '" + std::string(name) + "'");
  }

  std::string str() const {
    std::string out;
    if (kind) out += std::string("kind=") + kind_char(*kind);
    for (const auto& [key, value] : scalars) {
      if (!out.empty()) out += " ";
      out += key + "=" + std::to_string(value);
    }
    if (lambda) {
      if (!out.empty()) out += " ";
      out += "lambda=" + lambda->str();
    }
    return out;
  }
};

// Test-harness fault injection: perturbs the first summand of the
// convolution side so grid sweeps demonstrably distinguish wrong sums.
// Not applied unless explicitly requested.
enum class Mutation { none, flip_sign, shift_q };

struct CheckOptions {
  Mutation mutation = Mutation::none;
};

struct InstanceResult {
  std::string identity;
  Params params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

// Inclusive sweep maxima plus the composition policy. Identities read only
// the fields their parameter signature mentions.
struct Grid {
  std::int64_t n_max = 0;
  std::int64_t k_max = 0;
  std::int64_t m_max = 0;
  std::int64_t p_max = 0;
  std::int64_t r_max = 0;
  std::int64_t t_max = 0;
  // 0 keeps every composition; otherwise only the first N in lexicographic
  // order per total are swept.
  std::int64_t composition_limit = 0;
  std::optional<std::vector<Composition>> explicit_compositions;
};

struct IdentitySpec {
  std::string id;
  std::string signature;
  std::string description;
  std::string constraints;
  bool symbolic = false;  // sides are multivariate polynomials
  bool q_valued = false;  // sides are q-polynomials
  Grid default_grid;
  std::vector<Params> (*enumerate)(const Grid&) = nullptr;
  InstanceResult (*check)(const Params&, const CheckOptions&) = nullptr;
};

namespace detail {

inline std::string render_value(const Integer& v) { return v.to_string(); }
inline std::string render_value(const UPoly& v) { return v.str(); }
inline std::string render_value(const MPoly& v) { return v.str(); }

template <class V>
InstanceResult finish(const char* id, const Params& params, const V& lhs, const V& rhs) {
  InstanceResult r;
  r.identity = id;
  r.params = params;
  r.lhs = render_value(lhs);
  r.rhs = render_value(rhs);
  r.equal = lhs == rhs;
  return r;
}

inline void require(bool cond, const char* id, const char* constraint) {
  if (!cond)
    throw usage_error(std::string(id) + ": parameters violate constraint: " + constraint);
}

// Accumulator for the convolution side of a check; the mutation, when armed,
// alters the first summand only.
template <commutative_ring R>
class ConvSum {
 public:
  explicit ConvSum(const CheckOptions& opts) : mutation_(opts.mutation) {}

  void add(R term) {
    if (first_) {
      first_ = false;
      if (mutation_ == Mutation::flip_sign) {
        term = -term;
      } else if (mutation_ == Mutation::shift_q) {
        if constexpr (std::same_as<R, UPoly>) {
          term = term * UPoly::variable("q");
        } else {
          throw usage_error("shift_q mutation applies only to q-valued identities");
        }
      }
    }
    total_ += term;
  }

  const R& value() const { return total_; }

 private:
  Mutation mutation_;
  bool first_ = true;
  R total_{};
};

inline std::vector<MPoly> symbolic_vars(std::int64_t n) {
  std::vector<MPoly> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) vars.push_back(MPoly::variable(i));
  return vars;
}

inline void validate_composition(const Composition& comp, std::int64_t total, const char* id) {
  if (comp.parts.empty()) throw usage_error(std::string(id) + ": composition must be nonempty");
  for (std::int64_t part : comp.parts)
    if (part < 1) throw usage_error(std::string(id) + ": composition parts must be positive");
  if (comp.total() != total)
    throw usage_error(std::string(id) + ": composition " + comp.str() + " must compose " +
                      std::to_string(total));
}

// Compositions of `total` with at most max_parts parts, honoring the grid's
// explicit list / prefix-limit policy. Lexicographic within each part count.
inline std::vector<Composition> grid_compositions(const Grid& grid, std::int64_t total,
                                                  std::int64_t max_parts) {
  std::vector<Composition> out;
  if (grid.explicit_compositions) {
    for (const auto& comp : *grid.explicit_compositions)
      if (comp.total() == total && comp.size() <= max_parts) out.push_back(comp);
    return out;
  }
  for (std::int64_t m = 1; m <= max_parts; ++m)
    for (const auto& comp : CompositionRange(total, m)) {
      if (grid.composition_limit > 0 &&
          static_cast<std::int64_t>(out.size()) >= grid.composition_limit)
        return out;
      out.push_back(comp);
    }
  return out;
}

inline std::vector<std::int64_t> elementary_bounds(const Composition& comp, std::int64_t k) {
  std::vector<std::int64_t> bounds;
  bounds.reserve(comp.parts.size());
  for (std::int64_t part : comp.parts) bounds.push_back(std::min(part, k));
  return bounds;
}

inline std::int64_t pair_products(const std::vector<std::int64_t>& tuple) {
  // e_2 of the tuple entries, evaluated through the generic kernel.
  std::vector<Integer> vals(tuple.begin(), tuple.end());
  return elementary(2, vals).to_int64();
}

inline Params make_params(std::optional<SymKind> kind,
                          std::vector<std::pair<std::string, std::int64_t>> scalars,
                          std::optional<Composition> lambda = std::nullopt) {
  Params p;
  p.kind = kind;
  p.scalars = std::move(scalars);
  p.lambda = std::move(lambda);
  return p;
}

// ---------------------------------------------------------------------------
// thm1: f_k(x_1..x_n) = sum over k_1+..+k_m=k of prod f_{k_i}(block_i)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_thm1(const Grid& g) {
  std::vector<Params> out;
  for (SymKind kind : {SymKind::elementary, SymKind::complete})
    for (std::int64_t n = 1; n <= g.n_max; ++n)
      for (const auto& comp : grid_compositions(g, n, n))
        for (std::int64_t k = 0; k <= n; ++k)
          out.push_back(make_params(kind, {{"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_thm1(const Params& p, const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), k = p.get("k");
  require(p.kind.has_value() && p.lambda.has_value() && n >= 1 && k >= 0, "thm1",
          "kind and composition required, n >= 1, k >= 0");
  validate_composition(*p.lambda, n, "thm1");
  const std::vector<MPoly> vars = symbolic_vars(n);
  const MPoly lhs = sym(*p.kind, k, vars);
  ConvSum<MPoly> rhs(opts);
  block_convolution_terms(*p.kind, k, *p.lambda, std::span<const MPoly>(vars),
                          [&](MPoly term) { rhs.add(std::move(term)); });
  return finish("thm1", p, lhs, rhs.value());
}

// ---------------------------------------------------------------------------
// cor1_1: f_k(vals repeated m times) = sum over partitions of k, length <= m,
// of multinomial(m, lambda) * prod f_i^(t_i)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor1_1(const Grid& g) {
  std::vector<Params> out;
  for (SymKind kind : {SymKind::elementary, SymKind::complete})
    for (std::int64_t n = 1; n <= g.n_max; ++n)
      for (std::int64_t m = 1; m <= g.m_max; ++m)
        for (std::int64_t k = 0; k <= g.k_max; ++k)
          out.push_back(make_params(kind, {{"n", n}, {"m", m}, {"k", k}}));
  return out;
}

inline InstanceResult check_cor1_1(const Params& p, const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), m = p.get("m"), k = p.get("k");
  require(p.kind.has_value() && n >= 1 && m >= 1 && k >= 0, "cor1_1",
          "kind required, n >= 1, m >= 1, k >= 0");
  const std::vector<MPoly> vars = symbolic_vars(n);
  std::vector<MPoly> repeated;
  repeated.reserve(static_cast<std::size_t>(n * m));
  for (std::int64_t i = 0; i < m; ++i) repeated.insert(repeated.end(), vars.begin(), vars.end());
  const MPoly lhs = sym(*p.kind, k, repeated);
  ConvSum<MPoly> rhs(opts);
  repeated_convolution_terms(*p.kind, k, m, std::span<const MPoly>(vars),
                             [&](MPoly term) { rhs.add(std::move(term)); });
  return finish("cor1_1", p, lhs, rhs.value());
}

// ---------------------------------------------------------------------------
// cor1_2: e_k(x_1^2..x_n^2) = sum_{i=-k..k} (-1)^i e_{k+i} e_{k-i}
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor1_2(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      out.push_back(make_params(std::nullopt, {{"n", n}, {"k", k}}));
  return out;
}

inline InstanceResult check_cor1_2(const Params& p, const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), k = p.get("k");
  require(n >= 1 && k >= 1, "cor1_2", "n >= 1, k >= 1");
  const std::vector<MPoly> vars = symbolic_vars(n);
  std::vector<MPoly> squares;
  squares.reserve(vars.size());
  for (const MPoly& x : vars) squares.push_back(x * x);
  const MPoly lhs = elementary(k, squares);
  ConvSum<MPoly> rhs(opts);
  girard_waring_terms(k, std::span<const MPoly>(vars),
                      [&](MPoly term) { rhs.add(std::move(term)); });
  return finish("cor1_2", p, lhs, rhs.value());
}

// ---------------------------------------------------------------------------
// vandermonde: sum_i C(t,i) C(n-t,k-i) = C(n,k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_vandermonde(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 0; n <= g.n_max; ++n)
    for (std::int64_t t = 0; t <= n; ++t)
      for (std::int64_t k = 0; k <= n; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_vandermonde(const Params& p, const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), t = p.get("t"), k = p.get("k");
  require(n >= 0 && t >= 0 && t <= n && k >= 0, "vandermonde", "0 <= t <= n, k >= 0");
  ConvSum<Integer> lhs(opts);
  for (std::int64_t i = 0; i <= k; ++i) lhs.add(binomial(t, i) * binomial(n - t, k - i));
  return finish("vandermonde", p, lhs.value(), binomial(n, k));
}

// ---------------------------------------------------------------------------
// vandermonde_m / cor4_5: sum over k_1+..+k_m=k of prod C(lambda_i, k_i)
//                         = C(n, k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_composition_k(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (const auto& comp : grid_compositions(g, n, std::min(n, g.m_max)))
      for (std::int64_t k = 0; k <= g.k_max; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_binomial_composition(const char* id, const Params& p,
                                                 const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), k = p.get("k");
  require(p.lambda.has_value() && k >= 0, id, "composition required, k >= 0");
  validate_composition(*p.lambda, n, id);
  const auto& parts = p.lambda->parts;
  std::vector<std::vector<Integer>> factor(parts.size());
  const auto bounds = elementary_bounds(*p.lambda, k);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::int64_t j = 0; j <= bounds[i]; ++j) factor[i].push_back(binomial(parts[i], j));
  ConvSum<Integer> lhs(opts);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= factor[i][static_cast<std::size_t>(tuple[i])];
    lhs.add(std::move(term));
  }
  return finish(id, p, lhs.value(), binomial(n, k));
}

inline InstanceResult check_vandermonde_m(const Params& p, const CheckOptions& opts) {
  return check_binomial_composition("vandermonde_m", p, opts);
}
inline InstanceResult check_cor4_5(const Params& p, const CheckOptions& opts) {
  return check_binomial_composition("cor4_5", p, opts);
}

// ---------------------------------------------------------------------------
// vandermonde_h / cor4_6: sum over k_1+..+k_m=k of
//   prod C(lambda_i + k_i - 1, k_i) = C(n + k - 1, k)
// ---------------------------------------------------------------------------

inline InstanceResult check_binomial_composition_h(const char* id, const Params& p,
                                                   const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), k = p.get("k");
  require(p.lambda.has_value() && k >= 0, id, "composition required, k >= 0");
  validate_composition(*p.lambda, n, id);
  const auto& parts = p.lambda->parts;
  std::vector<std::vector<Integer>> factor(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::int64_t j = 0; j <= k; ++j) factor[i].push_back(binomial(parts[i] + j - 1, j));
  ConvSum<Integer> lhs(opts);
  const std::vector<std::int64_t> bounds(parts.size(), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= factor[i][static_cast<std::size_t>(tuple[i])];
    lhs.add(std::move(term));
  }
  return finish(id, p, lhs.value(), binomial(n + k - 1, k));
}

inline InstanceResult check_vandermonde_h(const Params& p, const CheckOptions& opts) {
  return check_binomial_composition_h("vandermonde_h", p, opts);
}
inline InstanceResult check_cor4_6(const Params& p, const CheckOptions& opts) {
  return check_binomial_composition_h("cor4_6", p, opts);
}

// ---------------------------------------------------------------------------
// eq1_2 / eq1_3: two-parameter r-Stirling convolutions, 1 <= r < t <= k < n
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_broder(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t r = 1; r <= g.n_max; ++r)
    for (std::int64_t t = r + 1; t <= g.n_max; ++t)
      for (std::int64_t k = t; k <= g.n_max; ++k)
        for (std::int64_t n = k + 1; n <= g.n_max; ++n)
          out.push_back(make_params(std::nullopt, {{"r", r}, {"t", t}, {"k", k}, {"n", n}}));
  return out;
}

inline InstanceResult check_eq1_2(const Params& p, const CheckOptions& opts) {
  const std::int64_t r = p.get("r"), t = p.get("t"), k = p.get("k"), n = p.get("n");
  require(1 <= r && r < t && t <= k && k < n, "eq1_2", "1 <= r < t <= k < n");
  ConvSum<Integer> lhs(opts);
  for (std::int64_t i = 0; i <= n - k; ++i)
    lhs.add(r_stirling_first(t, t - i, r) * r_stirling_first(n, k + i, t));
  return finish("eq1_2", p, lhs.value(), r_stirling_first(n, k, r));
}

inline InstanceResult check_eq1_3(const Params& p, const CheckOptions& opts) {
  const std::int64_t r = p.get("r"), t = p.get("t"), k = p.get("k"), n = p.get("n");
  require(1 <= r && r < t && t <= k && k < n, "eq1_3", "1 <= r < t <= k < n");
  ConvSum<Integer> lhs(opts);
  for (std::int64_t i = 0; i <= n - k; ++i)
    lhs.add(r_stirling_second(t + i, t, r) * r_stirling_second(n - i, k, t + 1));
  return finish("eq1_3", p, lhs.value(), r_stirling_second(n, k, r));
}

// ---------------------------------------------------------------------------
// eq2_1: f_k(x_1..x_n, y_1..y_t) = sum_i f_{k-i}(x) f_i(y)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_eq2_1(const Grid& g) {
  std::vector<Params> out;
  for (SymKind kind : {SymKind::elementary, SymKind::complete})
    for (std::int64_t n = 1; n <= g.n_max; ++n)
      for (std::int64_t t = 1; t <= g.t_max; ++t)
        for (std::int64_t k = 0; k <= n + t + 1; ++k)
          out.push_back(make_params(kind, {{"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_eq2_1(const Params& p, const CheckOptions& opts) {
  const std::int64_t n = p.get("n"), t = p.get("t"), k = p.get("k");
  require(p.kind.has_value() && n >= 1 && t >= 1 && k >= 0, "eq2_1",
          "kind required, n >= 1, t >= 1, k >= 0");
  const std::vector<MPoly> all = symbolic_vars(n + t);
  const std::vector<MPoly> xs(all.begin(), all.begin() + n);
  const std::vector<MPoly> ys(all.begin() + n, all.end());
  const MPoly lhs = sym(*p.kind, k, all);
  const auto tx = sym_table(*p.kind, k, std::span<const MPoly>(xs));
  const auto ty = sym_table(*p.kind, k, std::span<const MPoly>(ys));
  ConvSum<MPoly> rhs(opts);
  for (std::int64_t i = 0; i <= k; ++i)
    rhs.add(tx[static_cast<std::size_t>(k - i)] * ty[static_cast<std::size_t>(i)]);
  return finish("eq2_1", p, lhs, rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_1: w_{p,r}(n, n-k) = sum over k_1+..+k_m=k of
//   prod w_{p, a_{i-1} p + r}(lambda_i, lambda_i - k_i)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_whitney_composition(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t p = 1; p <= g.p_max; ++p)
    for (std::int64_t r = 1; r <= g.r_max; ++r)
      for (std::int64_t n = 1; n <= g.n_max; ++n)
        for (const auto& comp : grid_compositions(g, n, std::min(n, g.m_max)))
          for (std::int64_t k = 0; k <= n; ++k)
            out.push_back(
                make_params(std::nullopt, {{"p", p}, {"r", r}, {"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_cor3_1(const Params& pr, const CheckOptions& opts) {
  const std::int64_t p = pr.get("p"), r = pr.get("r"), n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && p >= 1 && r >= 1 && n >= 1 && k >= 0, "cor3_1",
          "composition required, p >= 1, r >= 1, n >= 1, k >= 0");
  validate_composition(*pr.lambda, n, "cor3_1");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  ConvSum<Integer> rhs(opts);
  for (const auto& tuple : BoundedTupleRange(k, elementary_bounds(*pr.lambda, k))) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= r_whitney_first(p, anchors[i] * p + r, parts[i], parts[i] - tuple[i]);
    rhs.add(std::move(term));
  }
  return finish("cor3_1", pr, r_whitney_first(p, r, n, n - k), rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_2: W_{p,r}(n+k, n) = sum over k_1+..+k_m=k of
//   prod W_{p, a_{i-1} p + r}(lambda_i + k_i - 1, lambda_i - 1),
// lambda a composition of n+1
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor3_2(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t p = 1; p <= g.p_max; ++p)
    for (std::int64_t r = 1; r <= g.r_max; ++r)
      for (std::int64_t n = 1; n <= g.n_max; ++n)
        for (const auto& comp : grid_compositions(g, n + 1, std::min(n + 1, g.m_max)))
          for (std::int64_t k = 0; k <= n; ++k)
            out.push_back(
                make_params(std::nullopt, {{"p", p}, {"r", r}, {"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_cor3_2(const Params& pr, const CheckOptions& opts) {
  const std::int64_t p = pr.get("p"), r = pr.get("r"), n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && p >= 1 && r >= 1 && n >= 1 && k >= 0, "cor3_2",
          "composition required, p >= 1, r >= 1, n >= 1, k >= 0");
  validate_composition(*pr.lambda, n + 1, "cor3_2");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  ConvSum<Integer> rhs(opts);
  const std::vector<std::int64_t> bounds(parts.size(), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= r_whitney_second(p, anchors[i] * p + r, parts[i] + tuple[i] - 1, parts[i] - 1);
    rhs.add(std::move(term));
  }
  return finish("cor3_2", pr, r_whitney_second(p, r, n + k, n), rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_3: w_{p,r}(n,k) = sum_i w_{p,r}(t, t-i) w_{p, tp+r}(n-t, k-t+i)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_whitney_twoblock(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t p = 1; p <= g.p_max; ++p)
    for (std::int64_t r = 1; r <= g.r_max; ++r)
      for (std::int64_t n = 2; n <= g.n_max; ++n)
        for (std::int64_t t = 1; t <= n - 1; ++t)
          for (std::int64_t k = 0; k <= n; ++k)
            out.push_back(
                make_params(std::nullopt, {{"p", p}, {"r", r}, {"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_cor3_3(const Params& pr, const CheckOptions& opts) {
  const std::int64_t p = pr.get("p"), r = pr.get("r"), n = pr.get("n"), t = pr.get("t"),
                     k = pr.get("k");
  require(p >= 1 && r >= 1 && n >= 2 && t >= 1 && t <= n - 1 && k >= 0, "cor3_3",
          "p >= 1, r >= 1, 1 <= t <= n-1, k >= 0");
  ConvSum<Integer> rhs(opts);
  for (std::int64_t i = 0; i <= n - k; ++i)
    rhs.add(r_whitney_first(p, r, t, t - i) * r_whitney_first(p, t * p + r, n - t, k - t + i));
  return finish("cor3_3", pr, r_whitney_first(p, r, n, k), rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_4: W_{p,r}(n,k) = sum_i W_{p,r}(t-1+i, t-1) W_{p, tp+r}(n-t-i, k-t)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor3_4(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t p = 1; p <= g.p_max; ++p)
    for (std::int64_t r = 1; r <= g.r_max; ++r)
      for (std::int64_t n = 2; n <= g.n_max; ++n)
        for (std::int64_t t = 1; t <= n - 1; ++t)
          for (std::int64_t k = t; k <= n; ++k)
            out.push_back(
                make_params(std::nullopt, {{"p", p}, {"r", r}, {"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_cor3_4(const Params& pr, const CheckOptions& opts) {
  const std::int64_t p = pr.get("p"), r = pr.get("r"), n = pr.get("n"), t = pr.get("t"),
                     k = pr.get("k");
  require(p >= 1 && r >= 1 && n >= 2 && t >= 1 && t <= n - 1 && k >= t, "cor3_4",
          "p >= 1, r >= 1, 1 <= t <= n-1, t <= k");
  ConvSum<Integer> rhs(opts);
  for (std::int64_t i = 0; i <= n - k; ++i)
    rhs.add(r_whitney_second(p, r, t - 1 + i, t - 1) *
            r_whitney_second(p, t * p + r, n - t - i, k - t));
  return finish("cor3_4", pr, r_whitney_second(p, r, n, k), rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_5: [n, n-k]_r = sum over k_1+..+k_m=k of
//   prod [r+a_i, r+a_i-k_i]_{r+a_{i-1}}, lambda a composition of n-r, r < n
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor3_5(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t r = 1; r <= g.r_max; ++r)
    for (std::int64_t n = r + 1; n <= g.n_max; ++n)
      for (const auto& comp : grid_compositions(g, n - r, std::min(n - r, g.m_max)))
        for (std::int64_t k = 0; k <= n - r; ++k)
          out.push_back(make_params(std::nullopt, {{"r", r}, {"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_cor3_5(const Params& pr, const CheckOptions& opts) {
  const std::int64_t r = pr.get("r"), n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && r >= 1 && r < n && k >= 0, "cor3_5",
          "composition required, 1 <= r < n, k >= 0");
  validate_composition(*pr.lambda, n - r, "cor3_5");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  ConvSum<Integer> rhs(opts);
  for (const auto& tuple : BoundedTupleRange(k, elementary_bounds(*pr.lambda, k))) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= r_stirling_first(r + anchors[i + 1], r + anchors[i + 1] - tuple[i],
                               r + anchors[i]);
    rhs.add(std::move(term));
  }
  return finish("cor3_5", pr, r_stirling_first(n, n - k, r), rhs.value());
}

// ---------------------------------------------------------------------------
// cor3_6: {n+k, n}_r = sum over k_1+..+k_m=k of
//   prod {r+a_i-1+k_i, r+a_i-1}_{r+a_{i-1}}, lambda a composition of n+1-r
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_cor3_6(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t r = 1; r <= g.r_max; ++r)
    for (std::int64_t n = r; n <= g.n_max; ++n)
      for (const auto& comp : grid_compositions(g, n + 1 - r, std::min(n + 1 - r, g.m_max)))
        for (std::int64_t k = 0; k <= n; ++k)
          out.push_back(make_params(std::nullopt, {{"r", r}, {"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_cor3_6(const Params& pr, const CheckOptions& opts) {
  const std::int64_t r = pr.get("r"), n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && r >= 1 && r <= n && k >= 0, "cor3_6",
          "composition required, 1 <= r <= n, k >= 0");
  validate_composition(*pr.lambda, n + 1 - r, "cor3_6");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  ConvSum<Integer> rhs(opts);
  const std::vector<std::int64_t> bounds(parts.size(), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= r_stirling_second(r + anchors[i + 1] - 1 + tuple[i], r + anchors[i + 1] - 1,
                                r + anchors[i]);
    rhs.add(std::move(term));
  }
  return finish("cor3_6", pr, r_stirling_second(n + k, n, r), rhs.value());
}

// ---------------------------------------------------------------------------
// rstirling_block_1: [r+mn, r+mn-k]_r = sum over k_1+..+k_m=k of
//   prod [r+in, r+in-k_i]_{r+(i-1)n}
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_block(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t r = 1; r <= g.r_max; ++r)
    for (std::int64_t m = 1; m <= g.m_max; ++m)
      for (std::int64_t n = 1; n <= g.n_max; ++n)
        for (std::int64_t k = 0; k <= m * n; ++k)
          out.push_back(make_params(std::nullopt, {{"r", r}, {"m", m}, {"n", n}, {"k", k}}));
  return out;
}

inline InstanceResult check_block_1(const Params& pr, const CheckOptions& opts) {
  const std::int64_t r = pr.get("r"), m = pr.get("m"), n = pr.get("n"), k = pr.get("k");
  require(r >= 1 && m >= 1 && n >= 1 && k >= 0, "rstirling_block_1",
          "r >= 1, m >= 1, n >= 1, k >= 0");
  ConvSum<Integer> rhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), std::min(n, k));
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::int64_t i = 1; i <= m; ++i)
      term *= r_stirling_first(r + i * n, r + i * n - tuple[static_cast<std::size_t>(i - 1)],
                               r + (i - 1) * n);
    rhs.add(std::move(term));
  }
  return finish("rstirling_block_1", pr, r_stirling_first(r + m * n, r + m * n - k, r),
                rhs.value());
}

// ---------------------------------------------------------------------------
// rstirling_block_2: {r+mn+k, r+mn}_{r+1} = sum over k_1+..+k_m=k of
//   prod {r+in+k_i, r+in}_{r+1+(i-1)n}
// ---------------------------------------------------------------------------

inline InstanceResult check_block_2(const Params& pr, const CheckOptions& opts) {
  const std::int64_t r = pr.get("r"), m = pr.get("m"), n = pr.get("n"), k = pr.get("k");
  require(r >= 1 && m >= 1 && n >= 1 && k >= 0, "rstirling_block_2",
          "r >= 1, m >= 1, n >= 1, k >= 0");
  ConvSum<Integer> rhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::int64_t i = 1; i <= m; ++i)
      term *= r_stirling_second(r + i * n + tuple[static_cast<std::size_t>(i - 1)], r + i * n,
                                r + 1 + (i - 1) * n);
    rhs.add(std::move(term));
  }
  return finish("rstirling_block_2", pr, r_stirling_second(r + m * n + k, r + m * n, r + 1),
                rhs.value());
}

// ---------------------------------------------------------------------------
// cor4_1: sum over k_1+..+k_m=k of
//   q^(a_1 k_2 + .. + a_{m-1} k_m - e_2(k_1..k_m)) prod qbin(lambda_i, k_i)
//   = qbin(n, k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_q_composition(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (const auto& comp : grid_compositions(g, n, std::min(n, g.m_max)))
      for (std::int64_t k = 0; k <= n + 2; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"k", k}}, comp));
  return out;
}

inline InstanceResult check_cor4_1(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && n >= 1 && k >= 0, "cor4_1",
          "composition required, n >= 1, k >= 0");
  validate_composition(*pr.lambda, n, "cor4_1");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  const auto bounds = elementary_bounds(*pr.lambda, k);
  std::vector<std::vector<UPoly>> factor(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::int64_t j = 0; j <= bounds[i]; ++j) factor[i].push_back(q_binomial(parts[i], j));
  ConvSum<UPoly> lhs(opts);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    std::int64_t linear = 0;
    for (std::size_t j = 1; j < tuple.size(); ++j) linear += anchors[j] * tuple[j];
    const std::int64_t exponent = linear - pair_products(tuple);
    if (exponent < 0) throw internal_error("cor4_1: negative q-exponent");
    UPoly term = UPoly::monomial("q", Integer(1), exponent);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= factor[i][static_cast<std::size_t>(tuple[i])];
    lhs.add(std::move(term));
  }
  return finish("cor4_1", pr, lhs.value(), q_binomial(n, k));
}

// ---------------------------------------------------------------------------
// cor4_2: sum over k_1+..+k_m=k of
//   q^(a_1 k_2 + .. + a_{m-1} k_m) prod qbin(lambda_i + k_i - 1, k_i)
//   = qbin(n + k - 1, k)
// ---------------------------------------------------------------------------

inline InstanceResult check_cor4_2(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), k = pr.get("k");
  require(pr.lambda.has_value() && n >= 1 && k >= 0, "cor4_2",
          "composition required, n >= 1, k >= 0");
  validate_composition(*pr.lambda, n, "cor4_2");
  const auto anchors = pr.lambda->prefix_sums();
  const auto& parts = pr.lambda->parts;
  std::vector<std::vector<UPoly>> factor(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::int64_t j = 0; j <= k; ++j) factor[i].push_back(q_binomial(parts[i] + j - 1, j));
  ConvSum<UPoly> lhs(opts);
  const std::vector<std::int64_t> bounds(parts.size(), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    std::int64_t linear = 0;
    for (std::size_t j = 1; j < tuple.size(); ++j) linear += anchors[j] * tuple[j];
    UPoly term = UPoly::monomial("q", Integer(1), linear);
    for (std::size_t i = 0; i < parts.size(); ++i)
      term *= factor[i][static_cast<std::size_t>(tuple[i])];
    lhs.add(std::move(term));
  }
  return finish("cor4_2", pr, lhs.value(), q_binomial(n + k - 1, k));
}

// ---------------------------------------------------------------------------
// cor4_3: sum over k_1+..+k_m=k of
//   (q^(k_2 + 2 k_3 + .. + (m-1) k_m))^n / q^(e_2(k_1..k_m))
//   * prod qbin(n, k_i) = qbin(mn, k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_q_equal_blocks(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (std::int64_t m = 1; m <= g.m_max; ++m)
      for (std::int64_t k = 0; k <= n + 2; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"m", m}, {"k", k}}));
  return out;
}

inline InstanceResult check_cor4_3(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "cor4_3", "n >= 1, m >= 1, k >= 0");
  std::vector<UPoly> factor;
  for (std::int64_t j = 0; j <= std::min(n, k); ++j) factor.push_back(q_binomial(n, j));
  ConvSum<UPoly> lhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), std::min(n, k));
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    std::int64_t weighted = 0;
    for (std::size_t j = 1; j < tuple.size(); ++j)
      weighted += static_cast<std::int64_t>(j) * tuple[j];
    // The display divides by q^(e_2); the quotient is verified exact.
    UPoly term = UPoly::monomial("q", Integer(1), n * weighted)
                     .divide_exact(UPoly::monomial("q", Integer(1), pair_products(tuple)));
    for (std::int64_t v : tuple) term *= factor[static_cast<std::size_t>(v)];
    lhs.add(std::move(term));
  }
  return finish("cor4_3", pr, lhs.value(), q_binomial(m * n, k));
}

// ---------------------------------------------------------------------------
// cor4_4: sum over k_1+..+k_m=k of (q^(k_2 + 2 k_3 + .. + (m-1) k_m))^n
//   * prod qbin(n + k_i - 1, k_i) = qbin(mn + k - 1, k)
// ---------------------------------------------------------------------------

inline InstanceResult check_cor4_4(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "cor4_4", "n >= 1, m >= 1, k >= 0");
  std::vector<UPoly> factor;
  for (std::int64_t j = 0; j <= k; ++j) factor.push_back(q_binomial(n + j - 1, j));
  ConvSum<UPoly> lhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    std::int64_t weighted = 0;
    for (std::size_t j = 1; j < tuple.size(); ++j)
      weighted += static_cast<std::int64_t>(j) * tuple[j];
    UPoly term = UPoly::monomial("q", Integer(1), n * weighted);
    for (std::int64_t v : tuple) term *= factor[static_cast<std::size_t>(v)];
    lhs.add(std::move(term));
  }
  return finish("cor4_4", pr, lhs.value(), q_binomial(m * n + k - 1, k));
}

// ---------------------------------------------------------------------------
// qvandermonde: sum_i q^((k-i)(t-i)) qbin(t,i) qbin(n-t,k-i) = qbin(n,k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_qvandermonde(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 2; n <= g.n_max; ++n)
    for (std::int64_t t = 1; t <= n - 1; ++t)
      for (std::int64_t k = 0; k <= n + 2; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_qvandermonde(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), t = pr.get("t"), k = pr.get("k");
  require(n >= 2 && t >= 1 && t <= n - 1 && k >= 0, "qvandermonde", "1 <= t <= n-1, k >= 0");
  ConvSum<UPoly> lhs(opts);
  for (std::int64_t i = 0; i <= k; ++i) {
    const UPoly b1 = q_binomial(t, i);
    const UPoly b2 = q_binomial(n - t, k - i);
    // A vanishing factor annihilates the term before the q-power, whose
    // exponent would be negative outside the support.
    if (b1.is_zero() || b2.is_zero()) continue;
    lhs.add(UPoly::monomial("q", Integer(1), (k - i) * (t - i)) * b1 * b2);
  }
  return finish("qvandermonde", pr, lhs.value(), q_binomial(n, k));
}

// ---------------------------------------------------------------------------
// qvandermonde_h: sum_i q^((k-i)t) qbin(t-1+i, i) qbin(n-t+k-i, k-i)
//   = qbin(n+k, k)
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_qvandermonde_h(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (std::int64_t t = 1; t <= n; ++t)
      for (std::int64_t k = 0; k <= n + 2; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"t", t}, {"k", k}}));
  return out;
}

inline InstanceResult check_qvandermonde_h(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), t = pr.get("t"), k = pr.get("k");
  require(n >= 1 && t >= 1 && t <= n && k >= 0, "qvandermonde_h", "1 <= t <= n, k >= 0");
  ConvSum<UPoly> lhs(opts);
  for (std::int64_t i = 0; i <= k; ++i) {
    lhs.add(UPoly::monomial("q", Integer(1), (k - i) * t) * q_binomial(t - 1 + i, i) *
            q_binomial(n - t + k - i, k - i));
  }
  return finish("qvandermonde_h", pr, lhs.value(), q_binomial(n + k, k));
}

// ---------------------------------------------------------------------------
// eq4_1 / eq4_2: equal-block binomial convolutions, composition form
// ---------------------------------------------------------------------------

inline std::vector<Params> enum_equal_blocks(const Grid& g) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= g.n_max; ++n)
    for (std::int64_t m = 1; m <= g.m_max; ++m)
      for (std::int64_t k = 0; k <= g.k_max; ++k)
        out.push_back(make_params(std::nullopt, {{"n", n}, {"m", m}, {"k", k}}));
  return out;
}

inline InstanceResult check_eq4_1(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "eq4_1", "n >= 1, m >= 1, k >= 0");
  std::vector<Integer> factor;
  for (std::int64_t j = 0; j <= std::min(n, k); ++j) factor.push_back(binomial(n, j));
  ConvSum<Integer> lhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), std::min(n, k));
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::int64_t v : tuple) term *= factor[static_cast<std::size_t>(v)];
    lhs.add(std::move(term));
  }
  return finish("eq4_1", pr, lhs.value(), binomial(m * n, k));
}

inline InstanceResult check_eq4_2(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "eq4_2", "n >= 1, m >= 1, k >= 0");
  std::vector<Integer> factor;
  for (std::int64_t j = 0; j <= k; ++j) factor.push_back(binomial(n + j - 1, j));
  ConvSum<Integer> lhs(opts);
  const std::vector<std::int64_t> bounds(static_cast<std::size_t>(m), k);
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    Integer term(1);
    for (std::int64_t v : tuple) term *= factor[static_cast<std::size_t>(v)];
    lhs.add(std::move(term));
  }
  return finish("eq4_2", pr, lhs.value(), binomial(m * n + k - 1, k));
}

// ---------------------------------------------------------------------------
// cor4_7 / cor4_8: the same sums regrouped over partitions of k with
// multinomial weights
// ---------------------------------------------------------------------------

inline InstanceResult check_cor4_7(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "cor4_7", "n >= 1, m >= 1, k >= 0");
  ConvSum<Integer> lhs(opts);
  for (const auto& lambda : PartitionRange(k, std::min(k, m))) {
    Integer term = multinomial_partition_coeff(m, lambda);
    for (const auto& [part, count] : lambda.multiplicities)
      term *= ring_pow(binomial(n, part), static_cast<std::uint64_t>(count));
    lhs.add(std::move(term));
  }
  return finish("cor4_7", pr, lhs.value(), binomial(m * n, k));
}

inline InstanceResult check_cor4_8(const Params& pr, const CheckOptions& opts) {
  const std::int64_t n = pr.get("n"), m = pr.get("m"), k = pr.get("k");
  require(n >= 1 && m >= 1 && k >= 0, "cor4_8", "n >= 1, m >= 1, k >= 0");
  ConvSum<Integer> lhs(opts);
  for (const auto& lambda : PartitionRange(k, std::min(k, m))) {
    Integer term = multinomial_partition_coeff(m, lambda);
    for (const auto& [part, count] : lambda.multiplicities)
      term *= ring_pow(binomial(n + part - 1, part), static_cast<std::uint64_t>(count));
    lhs.add(std::move(term));
  }
  return finish("cor4_8", pr, lhs.value(), binomial(m * n + k - 1, k));
}

}  // namespace detail

// The closed identity catalog, in stable registry order.
inline const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> registry = [] {
    using namespace detail;
    std::vector<IdentitySpec> r;
    auto add = [&r](IdentitySpec spec) { r.push_back(std::move(spec)); };

    add({"thm1", "(kind, n, k, lambda)",
         "block convolution: f_k of a sequence assembles from per-block f over any composition",
         "lambda composes n; n >= 1; 0 <= k <= n", true, false,
         Grid{.n_max = 6}, enum_thm1, check_thm1});
    add({"cor1_1", "(kind, n, m, k)",
         "repeated-block form: f_k of m copies grouped by partitions with multinomial weights",
         "n >= 1; m >= 1; k >= 0", true, false,
         Grid{.n_max = 3, .k_max = 5, .m_max = 3}, enum_cor1_1, check_cor1_1});
    add({"cor1_2", "(n, k)",
         "square-variable convolution: e_k of squared values as an alternating e-product sum",
         "n >= 1; 1 <= k <= n", true, false,
         Grid{.n_max = 5}, enum_cor1_2, check_cor1_2});
    add({"vandermonde", "(n, t, k)", "binomial convolution over a two-way split",
         "0 <= t <= n; 0 <= k <= n", false, false,
         Grid{.n_max = 10}, enum_vandermonde, check_vandermonde});
    add({"vandermonde_m", "(n, k, lambda)", "m-fold binomial convolution over a composition",
         "lambda composes n; k >= 0", false, false,
         Grid{.n_max = 7, .k_max = 7, .m_max = 7}, enum_composition_k, check_vandermonde_m});
    add({"vandermonde_h", "(n, k, lambda)",
         "m-fold convolution for binomials with repetition over a composition",
         "lambda composes n; k >= 0", false, false,
         Grid{.n_max = 6, .k_max = 6, .m_max = 6}, enum_composition_k, check_vandermonde_h});
    add({"eq1_2", "(r, t, k, n)",
         "two-parameter convolution for r-Stirling numbers of the first kind",
         "1 <= r < t <= k < n", false, false,
         Grid{.n_max = 10}, enum_broder, check_eq1_2});
    add({"eq1_3", "(r, t, k, n)",
         "two-parameter convolution for r-Stirling numbers of the second kind",
         "1 <= r < t <= k < n", false, false,
         Grid{.n_max = 10}, enum_broder, check_eq1_3});
    add({"eq2_1", "(kind, n, t, k)",
         "pairwise merge: f_k of a two-block concatenation as a Cauchy product coefficient",
         "n >= 1; t >= 1; k >= 0", true, false,
         Grid{.n_max = 3, .t_max = 3}, enum_eq2_1, check_eq2_1});
    add({"cor3_1", "(p, r, n, k, lambda)",
         "composition convolution for r-Whitney numbers of the first kind",
         "lambda composes n; p >= 1; r >= 1; 0 <= k <= n", false, false,
         Grid{.n_max = 8, .m_max = 3, .p_max = 3, .r_max = 3}, enum_whitney_composition,
         check_cor3_1});
    add({"cor3_2", "(p, r, n, k, lambda)",
         "composition convolution for r-Whitney numbers of the second kind",
         "lambda composes n+1; p >= 1; r >= 1; 0 <= k <= n", false, false,
         Grid{.n_max = 8, .m_max = 3, .p_max = 3, .r_max = 3}, enum_cor3_2, check_cor3_2});
    add({"cor3_3", "(p, r, n, t, k)",
         "two-block convolution for r-Whitney numbers of the first kind",
         "p >= 1; r >= 1; 1 <= t <= n-1; 0 <= k <= n", false, false,
         Grid{.n_max = 8, .p_max = 3, .r_max = 3}, enum_whitney_twoblock, check_cor3_3});
    add({"cor3_4", "(p, r, n, t, k)",
         "two-block convolution for r-Whitney numbers of the second kind",
         "p >= 1; r >= 1; 1 <= t <= n-1; t <= k <= n", false, false,
         Grid{.n_max = 8, .p_max = 3, .r_max = 3}, enum_cor3_4, check_cor3_4});
    add({"cor3_5", "(r, n, k, lambda)",
         "composition convolution for r-Stirling numbers of the first kind",
         "lambda composes n-r; 1 <= r < n; 0 <= k <= n-r", false, false,
         Grid{.n_max = 8, .m_max = 3, .r_max = 3}, enum_cor3_5, check_cor3_5});
    add({"cor3_6", "(r, n, k, lambda)",
         "composition convolution for r-Stirling numbers of the second kind",
         "lambda composes n+1-r; 1 <= r <= n; k >= 0", false, false,
         Grid{.n_max = 8, .m_max = 3, .r_max = 3}, enum_cor3_6, check_cor3_6});
    add({"rstirling_block_1", "(r, m, n, k)",
         "equal-block convolution for r-Stirling numbers of the first kind",
         "r >= 1; m >= 1; n >= 1; 0 <= k <= m*n", false, false,
         Grid{.n_max = 3, .m_max = 3, .r_max = 3}, enum_block, check_block_1});
    add({"rstirling_block_2", "(r, m, n, k)",
         "equal-block convolution for r-Stirling numbers of the second kind",
         "r >= 1; m >= 1; n >= 1; k >= 0", false, false,
         Grid{.n_max = 3, .m_max = 3, .r_max = 3}, enum_block, check_block_2});
    add({"cor4_1", "(n, k, lambda)", "q-binomial convolution over a composition",
         "lambda composes n; k >= 0", false, true,
         Grid{.n_max = 8, .m_max = 3}, enum_q_composition, check_cor4_1});
    add({"cor4_2", "(n, k, lambda)",
         "q-analog convolution for binomials with repetition over a composition",
         "lambda composes n; k >= 0", false, true,
         Grid{.n_max = 8, .m_max = 3}, enum_q_composition, check_cor4_2});
    add({"cor4_3", "(n, m, k)", "equal-block q-binomial convolution",
         "n >= 1; m >= 1; k >= 0", false, true,
         Grid{.n_max = 8, .m_max = 3}, enum_q_equal_blocks, check_cor4_3});
    add({"cor4_4", "(n, m, k)", "equal-block q-binomial convolution, repetition form",
         "n >= 1; m >= 1; k >= 0", false, true,
         Grid{.n_max = 8, .m_max = 3}, enum_q_equal_blocks, check_cor4_4});
    add({"qvandermonde", "(n, t, k)", "q-Vandermonde convolution",
         "1 <= t <= n-1; k >= 0", false, true,
         Grid{.n_max = 8}, enum_qvandermonde, check_qvandermonde});
    add({"qvandermonde_h", "(n, t, k)", "q-Vandermonde convolution, repetition form",
         "1 <= t <= n; k >= 0", false, true,
         Grid{.n_max = 8}, enum_qvandermonde_h, check_qvandermonde_h});
    add({"cor4_5", "(n, k, lambda)",
         "composition convolution for binomial coefficients (q at one of cor4_1)",
         "lambda composes n; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_composition_k, check_cor4_5});
    add({"cor4_6", "(n, k, lambda)",
         "composition convolution for binomials with repetition (q at one of cor4_2)",
         "lambda composes n; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_composition_k, check_cor4_6});
    add({"eq4_1", "(n, m, k)", "equal-block binomial convolution, composition form",
         "n >= 1; m >= 1; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_equal_blocks, check_eq4_1});
    add({"eq4_2", "(n, m, k)",
         "equal-block convolution for binomials with repetition, composition form",
         "n >= 1; m >= 1; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_equal_blocks, check_eq4_2});
    add({"cor4_7", "(n, m, k)", "equal-block binomial convolution, partition form",
         "n >= 1; m >= 1; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_equal_blocks, check_cor4_7});
    add({"cor4_8", "(n, m, k)",
         "equal-block convolution for binomials with repetition, partition form",
         "n >= 1; m >= 1; k >= 0", false, false,
         Grid{.n_max = 8, .k_max = 8, .m_max = 8}, enum_equal_blocks, check_cor4_8});
    return r;
  }();
  return registry;
}

inline const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& spec : identity_registry())
    if (spec.id == id) return &spec;
  return nullptr;
}

inline InstanceResult check_instance(std::string_view id, const Params& params,
                                     const CheckOptions& opts = {}) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) throw usage_error("unknown identity '" + std::string(id) + "'");
  return spec->check(params, opts);
}

}  // namespace symconv
