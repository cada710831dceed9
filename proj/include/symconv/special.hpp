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
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "symconv/errors.hpp"
#include "symconv/integer.hpp"
#include "symconv/symfun.hpp"
#include "symconv/upoly.hpp"

namespace symconv {
namespace detail {

// Transparent cache for repeated queries: safe under concurrent reads and
// concurrent first-writes (the fill is idempotent, values are equal).
template <class Key, class Value>
class ConcurrentCache {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& compute) const {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return it->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<Key, Value> map_;
};

// r, r+p, r+2p, ..., count entries.
inline std::vector<Integer> arithmetic_sequence(std::int64_t first, std::int64_t step,
                                                std::int64_t count) {
  std::vector<Integer> seq;
  seq.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) seq.emplace_back(first + i * step);
  return seq;
}

}  // namespace detail

// C(n, k), zero outside 0 <= k <= n. Incremental products keep every
// intermediate value integral.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Integer();
  static detail::ConcurrentCache<std::pair<std::int64_t, std::int64_t>, Integer> cache;
  if (k > n - k) k = n - k;
  return cache.get({n, k}, [&] {
    Integer result(1);
    for (std::int64_t i = 1; i <= k; ++i) {
      result *= Integer(n - k + i);
      result = exact_div(result, Integer(i));
    }
    return result;
  });
}

// Product (1 - q)(1 - q^2)...(1 - q^n); the empty product for n = 0.
inline UPoly q_pochhammer(std::int64_t n) {
  if (n < 0) throw usage_error("q_pochhammer needs n >= 0");
  UPoly result = UPoly::one();
  const UPoly q = UPoly::variable("q");
  for (std::int64_t j = 1; j <= n; ++j) {
    result *= UPoly::one() - ring_pow(q, static_cast<std::uint64_t>(j));
  }
  return result;
}

// Gaussian binomial coefficient as a polynomial in q, zero when k is outside
// [0, n]. Computed by the division-free recurrence
//   [n,k] = [n-1,k-1] + q^k [n-1,k].
inline UPoly q_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return UPoly();
  if (k == 0 || k == n) return UPoly::one();
  static detail::ConcurrentCache<std::pair<std::int64_t, std::int64_t>, UPoly> cache;
  return cache.get({n, k}, [&] {
    return q_binomial(n - 1, k - 1) +
           UPoly::monomial("q", Integer(1), k) * q_binomial(n - 1, k);
  });
}

// The symmetric-function route to the same coefficients:
//   e_k(1, q, ..., q^(n-1)) = q^(k(k-1)/2) * [n, k]
//   h_k(1, q, ..., q^(n-1)) = [n+k-1, k]
// The elementary case performs the verified exact division by the q-power;
// an inexact division signals a defect.
inline UPoly q_binomial_via_symfun(std::int64_t n, std::int64_t k, SymKind kind) {
  if (n < 0 || k < 0) return UPoly();
  std::vector<UPoly> powers;
  powers.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) powers.push_back(UPoly::monomial("q", Integer(1), i));
  if (kind == SymKind::elementary) {
    UPoly e = elementary(k, powers);
    if (e.is_zero()) return e;
    return e.divide_exact(UPoly::monomial("q", Integer(1), k * (k - 1) / 2));
  }
  return complete(k, powers);
}

// x(x-1)...(x-n+1) as a polynomial in x, with the empty product for n = 0.
inline UPoly falling_factorial(std::int64_t n) {
  if (n < 0) throw usage_error("falling_factorial needs n >= 0");
  UPoly result = UPoly::one();
  const UPoly x = UPoly::variable("x");
  for (std::int64_t j = 0; j < n; ++j) result *= x - UPoly(Integer(j));
  return result;
}

// r-Stirling number of the first kind: permutations of {1..n} with k cycles
// and 1..r in distinct cycles. Values come from the elementary symmetric
// functions of r, r+1, ..., n-1; queries with n < r are zero, and
// e_{n-k} vanishes by itself outside r <= k <= n.
inline Integer r_stirling_first(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 1) throw usage_error("r-Stirling numbers need r >= 1");
  if (n < r || k < 0 || k > n) return Integer();
  static detail::ConcurrentCache<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Integer>
      cache;
  return cache.get({n, k, r}, [&] {
    return elementary(n - k, detail::arithmetic_sequence(r, 1, n - r));
  });
}

// r-Stirling number of the second kind: partitions of {1..n} into k blocks
// with 1..r in distinct blocks. Values come from the complete homogeneous
// symmetric functions of r, r+1, ..., k. The sequence is empty at k = r-1,
// where h_0 = 1 keeps the boundary column consistent with the convolutions;
// below that the value is zero.
inline Integer r_stirling_second(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 1) throw usage_error("r-Stirling numbers need r >= 1");
  if (k < r - 1 || k > n) return Integer();
  static detail::ConcurrentCache<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Integer>
      cache;
  return cache.get({n, k, r}, [&] {
    return complete(n - k, detail::arithmetic_sequence(r, 1, k - r + 1));
  });
}

// r-Whitney number of the first kind:
//   w_{p,r}(n, k) = (-1)^(n-k) e_{n-k}(r, p+r, ..., (n-1)p+r).
inline Integer r_whitney_first(std::int64_t p, std::int64_t r, std::int64_t n, std::int64_t k) {
  if (p < 1 || r < 1) throw usage_error("r-Whitney numbers need p >= 1 and r >= 1");
  if (n < 0 || k < 0 || k > n) return Integer();
  static detail::ConcurrentCache<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>,
                                 Integer>
      cache;
  return cache.get({p, r, n, k}, [&] {
    Integer value = elementary(n - k, detail::arithmetic_sequence(r, p, n));
    return (n - k) % 2 == 1 ? -value : value;
  });
}

// r-Whitney number of the second kind:
//   W_{p,r}(n, k) = h_{n-k}(r, p+r, ..., kp+r).
inline Integer r_whitney_second(std::int64_t p, std::int64_t r, std::int64_t n, std::int64_t k) {
  if (p < 1 || r < 1) throw usage_error("r-Whitney numbers need p >= 1 and r >= 1");
  if (n < 0 || k < 0 || k > n) return Integer();
  static detail::ConcurrentCache<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>,
                                 Integer>
      cache;
  return cache.get({p, r, n, k}, [&] {
    return complete(n - k, detail::arithmetic_sequence(r, p, k + 1));
  });
}

// Validates the two defining polynomial identities of the r-Whitney numbers
// in Z[x], with the numbers produced by the symmetric-function routes above:
//   p^n (x)_n       = sum_k w_{p,r}(n,k) (px+r)^k
//   (px+r)^n        = sum_k p^k W_{p,r}(n,k) (x)_k
struct WhitneyCheckResult {
  bool first_kind_ok = false;
  bool second_kind_ok = false;
  bool ok() const { return first_kind_ok && second_kind_ok; }
  explicit operator bool() const { return ok(); }
};

inline WhitneyCheckResult whitney_defining_check(std::int64_t p, std::int64_t r, std::int64_t n) {
  if (p < 1 || r < 1 || n < 0)
    throw usage_error("whitney_defining_check needs p >= 1, r >= 1, n >= 0");
  const UPoly base = UPoly::monomial("x", Integer(p), 1) + UPoly(Integer(r));
  WhitneyCheckResult result;
  {
    const UPoly lhs = UPoly(ring_pow(Integer(p), static_cast<std::uint64_t>(n))) *
                      falling_factorial(n);
    UPoly rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
      rhs += UPoly(r_whitney_first(p, r, n, k)) * ring_pow(base, static_cast<std::uint64_t>(k));
    }
    result.first_kind_ok = lhs == rhs;
  }
  {
    const UPoly lhs = ring_pow(base, static_cast<std::uint64_t>(n));
    UPoly rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
      rhs += UPoly(ring_pow(Integer(p), static_cast<std::uint64_t>(k)) *
                   r_whitney_second(p, r, n, k)) *
             falling_factorial(k);
    }
    result.second_kind_ok = lhs == rhs;
  }
  return result;
}

}  // namespace symconv
