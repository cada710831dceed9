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

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symconv/enumerate.hpp"
#include "symconv/errors.hpp"
#include "symconv/ring.hpp"

namespace symconv {

enum class SymKind { elementary, complete };

inline char kind_char(SymKind k) { return k == SymKind::elementary ? 'e' : 'h'; }

inline SymKind parse_kind(std::string_view s) {
  if (s == "e" || s == "elementary") return SymKind::elementary;
  if (s == "h" || s == "complete") return SymKind::complete;
  throw usage_error("unknown symmetric function kind '" + std::string(s) + "' (use e or h)");
}

// Table of e_0..e_max_k of the given values, by the product recurrence
// E[i] <- E[i] + x_j * E[i-1] processed per value with i descending.
// e_k vanishes for k > number of values.
template <commutative_ring R>
std::vector<R> elementary_table(std::int64_t max_k, std::span<const R> vals) {
  std::vector<R> table(static_cast<std::size_t>(std::max<std::int64_t>(max_k, 0)) + 1, R{});
  table[0] = R::one();
  for (const R& v : vals) {
    for (std::int64_t i = std::min<std::int64_t>(max_k, static_cast<std::int64_t>(table.size()) - 1);
         i >= 1; --i) {
      table[i] += v * table[i - 1];
    }
  }
  return table;
}

// Table of h_0..h_max_k by H[i] <- H[i] + x_j * H[i-1] with i ascending, so
// repeated picks of the same value are allowed. h_k is generally nonzero for
// k greater than the number of values; only the empty sequence gives
// h_k = 0 for all k >= 1.
template <commutative_ring R>
std::vector<R> complete_table(std::int64_t max_k, std::span<const R> vals) {
  std::vector<R> table(static_cast<std::size_t>(std::max<std::int64_t>(max_k, 0)) + 1, R{});
  table[0] = R::one();
  for (const R& v : vals) {
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(table.size()); ++i) {
      table[i] += v * table[i - 1];
    }
  }
  return table;
}

template <commutative_ring R>
std::vector<R> sym_table(SymKind kind, std::int64_t max_k, std::span<const R> vals) {
  return kind == SymKind::elementary ? elementary_table(max_k, vals)
                                     : complete_table(max_k, vals);
}

template <commutative_ring R>
R elementary(std::int64_t k, std::span<const R> vals) {
  if (k < 0 || k > static_cast<std::int64_t>(vals.size())) return R{};
  if (k == 0) return R::one();
  return elementary_table(k, vals)[static_cast<std::size_t>(k)];
}

template <commutative_ring R>
R complete(std::int64_t k, std::span<const R> vals) {
  if (k < 0) return R{};
  if (k == 0) return R::one();
  return complete_table(k, vals)[static_cast<std::size_t>(k)];
}

template <commutative_ring R>
R sym(SymKind kind, std::int64_t k, std::span<const R> vals) {
  return kind == SymKind::elementary ? elementary(k, vals) : complete(k, vals);
}

template <commutative_ring R>
R elementary(std::int64_t k, const std::vector<R>& vals) {
  return elementary(k, std::span<const R>(vals));
}
template <commutative_ring R>
R complete(std::int64_t k, const std::vector<R>& vals) {
  return complete(k, std::span<const R>(vals));
}
template <commutative_ring R>
R sym(SymKind kind, std::int64_t k, const std::vector<R>& vals) {
  return sym(kind, k, std::span<const R>(vals));
}

namespace detail {

template <commutative_ring R, class Fn>
void increasing_tuples(std::int64_t k, std::int64_t n, bool strict, std::int64_t from, R acc,
                       std::span<const R> vals, Fn&& visit) {
  if (k == 0) {
    visit(acc);
    return;
  }
  for (std::int64_t i = from; i < n; ++i) {
    increasing_tuples(k - 1, n, strict, strict ? i + 1 : i, acc * vals[static_cast<std::size_t>(i)],
                      vals, visit);
  }
}

}  // namespace detail

// Literal sum over strictly increasing index tuples. Exponential beyond
// small n and k; this is the independent cross-check of the table route.
template <commutative_ring R>
R elementary_bruteforce(std::int64_t k, std::span<const R> vals) {
  if (k < 0) return R{};
  if (k == 0) return R::one();
  R total{};
  detail::increasing_tuples(k, static_cast<std::int64_t>(vals.size()), /*strict=*/true, 0, R::one(),
                            vals, [&](const R& term) { total += term; });
  return total;
}

// Literal sum over weakly increasing index tuples.
template <commutative_ring R>
R complete_bruteforce(std::int64_t k, std::span<const R> vals) {
  if (k < 0) return R{};
  if (k == 0) return R::one();
  R total{};
  detail::increasing_tuples(k, static_cast<std::int64_t>(vals.size()), /*strict=*/false, 0,
                            R::one(), vals, [&](const R& term) { total += term; });
  return total;
}

template <commutative_ring R>
R elementary_bruteforce(std::int64_t k, const std::vector<R>& vals) {
  return elementary_bruteforce(k, std::span<const R>(vals));
}
template <commutative_ring R>
R complete_bruteforce(std::int64_t k, const std::vector<R>& vals) {
  return complete_bruteforce(k, std::span<const R>(vals));
}
template <commutative_ring R>
R sym_bruteforce(SymKind kind, std::int64_t k, std::span<const R> vals) {
  return kind == SymKind::elementary ? elementary_bruteforce(k, vals)
                                     : complete_bruteforce(k, vals);
}

// Coefficient-of-z^k form of the two-block product: sum over i of
// f_{k-i}(a) * f_i(b), which equals f_k of the concatenated sequence.
template <commutative_ring R>
R merge_convolution(SymKind kind, std::int64_t k, std::span<const R> a, std::span<const R> b) {
  if (k < 0) return R{};
  const std::vector<R> ta = sym_table(kind, k, a);
  const std::vector<R> tb = sym_table(kind, k, b);
  R total{};
  for (std::int64_t i = 0; i <= k; ++i) {
    total += ta[static_cast<std::size_t>(k - i)] * tb[static_cast<std::size_t>(i)];
  }
  return total;
}

template <commutative_ring R>
R merge_convolution(SymKind kind, std::int64_t k, const std::vector<R>& a,
                    const std::vector<R>& b) {
  return merge_convolution(kind, k, std::span<const R>(a), std::span<const R>(b));
}

// Emits every summand of the block-convolution sum: the composition cuts the
// value sequence into blocks, and each summand is a product of per-block
// f_{k_i} over one distribution of k. For the elementary kind the summand
// vanishes whenever some k_i exceeds its block length, so the enumeration is
// bounded per block; for the complete kind every k_i up to k contributes.
// Per-block tables are built once up front.
template <commutative_ring R, class Fn>
void block_convolution_terms(SymKind kind, std::int64_t k, const Composition& comp,
                             std::span<const R> vals, Fn&& emit) {
  if (comp.total() != static_cast<std::int64_t>(vals.size()))
    throw usage_error("composition total " + std::to_string(comp.total()) +
                      " does not match sequence length " + std::to_string(vals.size()));
  if (comp.size() == 0 || k < 0) return;
  const std::int64_t m = comp.size();
  const auto anchors = comp.prefix_sums();
  std::vector<std::int64_t> bounds(static_cast<std::size_t>(m));
  std::vector<std::vector<R>> tables(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    bounds[i] = kind == SymKind::elementary ? std::min(comp.parts[i], k) : k;
    tables[i] = sym_table(kind, bounds[i],
                          vals.subspan(static_cast<std::size_t>(anchors[i]),
                                       static_cast<std::size_t>(comp.parts[i])));
  }
  for (const auto& tuple : BoundedTupleRange(k, bounds)) {
    R term = R::one();
    for (std::int64_t i = 0; i < m; ++i) {
      if (tuple[i] == 0) continue;  // f_0 factors are the identity
      term = term * tables[i][static_cast<std::size_t>(tuple[i])];
    }
    emit(std::move(term));
  }
}

template <commutative_ring R>
R block_convolution(SymKind kind, std::int64_t k, const Composition& comp,
                    std::span<const R> vals) {
  R total{};
  block_convolution_terms(kind, k, comp, vals, [&](R term) { total += term; });
  return total;
}

template <commutative_ring R>
R block_convolution(SymKind kind, std::int64_t k, const Composition& comp,
                    const std::vector<R>& vals) {
  return block_convolution(kind, k, comp, std::span<const R>(vals));
}

// Emits every summand of the repeated-block sum: partitions of k with at
// most m parts, each weighted by its multinomial coefficient and evaluated
// as the product of f_i(vals)^(multiplicity of i).
template <commutative_ring R, class Fn>
void repeated_convolution_terms(SymKind kind, std::int64_t k, std::int64_t m,
                                std::span<const R> vals, Fn&& emit) {
  if (k < 0 || m < 1) return;
  const std::vector<R> table = sym_table(kind, k, vals);
  for (const auto& lambda : PartitionRange(k, std::min(k, m))) {
    R term = R(multinomial_partition_coeff(m, lambda));
    for (const auto& [part, count] : lambda.multiplicities) {
      term = term * ring_pow(table[static_cast<std::size_t>(part)],
                             static_cast<std::uint64_t>(count));
    }
    emit(std::move(term));
  }
}

template <commutative_ring R>
R repeated_convolution(SymKind kind, std::int64_t k, std::int64_t m, std::span<const R> vals) {
  R total{};
  repeated_convolution_terms(kind, k, m, vals, [&](R term) { total += term; });
  return total;
}

template <commutative_ring R>
R repeated_convolution(SymKind kind, std::int64_t k, std::int64_t m, const std::vector<R>& vals) {
  return repeated_convolution(kind, k, m, std::span<const R>(vals));
}

// Emits the summands of the square-variable convolution: (-1)^i times
// e_{k+i} * e_{k-i} for i = -k..k, whose total equals e_k of the squared
// values (Girard-Waring, two-factor case).
template <commutative_ring R, class Fn>
void girard_waring_terms(std::int64_t k, std::span<const R> vals, Fn&& emit) {
  if (k < 0) return;
  const std::vector<R> table = elementary_table(2 * k, vals);
  for (std::int64_t i = -k; i <= k; ++i) {
    R term = table[static_cast<std::size_t>(k + i)] * table[static_cast<std::size_t>(k - i)];
    if (((i % 2) + 2) % 2 == 1) term = -term;
    emit(std::move(term));
  }
}

template <commutative_ring R>
R girard_waring_sum(std::int64_t k, std::span<const R> vals) {
  R total{};
  girard_waring_terms(k, vals, [&](R term) { total += term; });
  return total;
}

template <commutative_ring R>
R girard_waring_sum(std::int64_t k, const std::vector<R>& vals) {
  return girard_waring_sum(k, std::span<const R>(vals));
}

}  // namespace symconv
