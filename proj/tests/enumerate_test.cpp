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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "symconv/enumerate.hpp"
#include "symconv/special.hpp"

using symconv::BoundedTupleRange;
using symconv::Composition;
using symconv::CompositionRange;
using symconv::Integer;
using symconv::Partition;
using symconv::PartitionRange;

namespace {

// Unbounded partition counter p(n), limited to parts <= max, as the
// independent oracle for the stream cardinalities.
long long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

// Conjugation swaps "at most m parts" with "parts at most m".
long long partitions_with_at_most(int n, int max_len) { return partition_count(n, max_len); }

}  // namespace

TEST_CASE("composition stream contents and order") {
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& c : CompositionRange(3, 2)) got.push_back(c.parts);
  CHECK(got == std::vector<std::vector<std::int64_t>>{{1, 2}, {2, 1}});

  got.clear();
  for (const auto& c : CompositionRange(1, 1)) got.push_back(c.parts);
  CHECK(got == std::vector<std::vector<std::int64_t>>{{1}});

  std::int64_t count = 0;
  for (const auto& c : CompositionRange(5, 3)) {
    (void)c;
    ++count;
  }
  CHECK(count == 6);  // stars and bars: C(4,2)
}

TEST_CASE("composition stream counts match binomials and power sums") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    std::int64_t all = 0;
    for (std::int64_t m = 1; m <= n; ++m) {
      std::int64_t count = 0;
      std::vector<std::int64_t> prev;
      std::set<std::vector<std::int64_t>> seen;
      for (const auto& c : CompositionRange(n, m)) {
        CHECK(c.total() == n);
        CHECK(c.size() == m);
        if (!prev.empty()) CHECK(prev < c.parts);  // strictly ascending lex
        prev = c.parts;
        seen.insert(c.parts);
        ++count;
      }
      CHECK(count == static_cast<std::int64_t>(seen.size()));
      CHECK(Integer(count) == symconv::binomial(n - 1, m - 1));
      all += count;
    }
    CHECK(Integer(all) == symconv::ring_pow(Integer(2), static_cast<std::uint64_t>(n - 1)));
  }
}

TEST_CASE("composition stream degenerate inputs are empty") {
  CHECK(CompositionRange(3, 4).begin() == CompositionRange(3, 4).end());
  CHECK(CompositionRange(3, 0).begin() == CompositionRange(3, 0).end());
  CHECK(CompositionRange(3, -1).begin() == CompositionRange(3, -1).end());
}

TEST_CASE("bounded tuple stream: reference block structure") {
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& t : BoundedTupleRange(3, {2, 1, 2})) got.push_back(t);
  CHECK(got == std::vector<std::vector<std::int64_t>>{
                   {0, 1, 2}, {1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 0}});
}

TEST_CASE("bounded tuple stream edges") {
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& t : BoundedTupleRange(0, {2, 5})) got.push_back(t);
  CHECK(got == std::vector<std::vector<std::int64_t>>{{0, 0}});

  CHECK(BoundedTupleRange(6, {2, 1, 2}).begin() == BoundedTupleRange(6, {2, 1, 2}).end());
  CHECK_THROWS_AS(BoundedTupleRange(1, {}), symconv::usage_error);
  CHECK_THROWS_AS(BoundedTupleRange(1, {2, -1}), symconv::usage_error);
}

TEST_CASE("bounded tuple stream matches brute force on random instances") {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 4);
    std::vector<std::int64_t> bounds;
    for (std::int64_t i = 0; i < m; ++i) bounds.push_back(static_cast<std::int64_t>(rng() % 4));
    const std::int64_t k = static_cast<std::int64_t>(rng() % 8);

    std::set<std::vector<std::int64_t>> expected;
    std::vector<std::int64_t> tuple(bounds.size(), 0);
    // Odometer enumeration of the full box, filtered by total.
    while (true) {
      std::int64_t total = 0;
      for (std::int64_t v : tuple) total += v;
      if (total == k) expected.insert(tuple);
      std::size_t pos = 0;
      while (pos < tuple.size() && tuple[pos] == bounds[pos]) tuple[pos++] = 0;
      if (pos == tuple.size()) break;
      ++tuple[pos];
    }

    std::set<std::vector<std::int64_t>> got;
    std::vector<std::int64_t> prev;
    for (const auto& t : BoundedTupleRange(k, bounds)) {
      if (!prev.empty() || got.size() == 1) CHECK(prev < t);
      prev = t;
      got.insert(t);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("partition stream contents") {
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& p : PartitionRange(4, 3)) got.push_back(p.parts);
  CHECK(got == std::vector<std::vector<std::int64_t>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}});

  got.clear();
  for (const auto& p : PartitionRange(1, 1)) got.push_back(p.parts);
  CHECK(got == std::vector<std::vector<std::int64_t>>{{1}});

  std::int64_t count = 0;
  for (const auto& p : PartitionRange(5, 5)) {
    (void)p;
    ++count;
  }
  CHECK(count == 7);  // p(5)
}

TEST_CASE("partition stream counts match the classic recurrence") {
  for (int k = 1; k <= 20; ++k) {
    for (int m : {1, 2, 3, k}) {
      std::int64_t count = 0;
      std::set<std::vector<std::int64_t>> seen;
      for (const auto& p : PartitionRange(k, m)) {
        CHECK(p.weight() == k);
        CHECK(p.length() <= m);
        CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
        seen.insert(p.parts);
        ++count;
      }
      CHECK(count == static_cast<std::int64_t>(seen.size()));
      CHECK(count == partitions_with_at_most(k, m));
    }
  }
}

TEST_CASE("partition multiplicities and length") {
  const Partition p({3, 2, 2, 1, 1, 1});
  CHECK(p.length() == 6);
  CHECK(p.weight() == 10);
  CHECK(p.multiplicity(1) == 3);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(3) == 1);
  CHECK(p.multiplicity(4) == 0);
}

TEST_CASE("prefix sums") {
  CHECK(Composition({2, 1, 2}).prefix_sums() == std::vector<std::int64_t>{0, 2, 3, 5});
  CHECK(Composition({7}).prefix_sums() == std::vector<std::int64_t>{0, 7});
  CHECK(Composition({1, 1, 1}).prefix_sums() == std::vector<std::int64_t>{0, 1, 2, 3});
}

TEST_CASE("multinomial coefficients of partitions") {
  auto coeff = [](std::int64_t m, std::vector<std::int64_t> parts) {
    return symconv::multinomial_partition_coeff(m, Partition(std::move(parts)));
  };
  // The four weights of the repeated-block expansion at m = 3, k = 4.
  CHECK(coeff(3, {2, 1, 1}) == Integer(3));
  CHECK(coeff(3, {3, 1}) == Integer(6));
  CHECK(coeff(3, {2, 2}) == Integer(3));
  CHECK(coeff(3, {4}) == Integer(3));

  CHECK(coeff(5, {9}) == Integer(5));   // single part: m choices
  CHECK(coeff(4, {1, 1, 1, 1}) == Integer(1));
  CHECK_THROWS_AS(coeff(2, {1, 1, 1}), symconv::usage_error);
}

TEST_CASE("multinomial weights total the weak composition count") {
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      Integer total;
      for (const auto& lambda : PartitionRange(k, std::min(k, m)))
        total += symconv::multinomial_partition_coeff(m, lambda);
      CHECK(total == symconv::binomial(k + m - 1, m - 1));
    }
  }
}
