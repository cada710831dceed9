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
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symconv/errors.hpp"
#include "symconv/integer.hpp"

namespace symconv {

// An ordered list of positive parts summing to the composed total.
struct Composition {
  std::vector<std::int64_t> parts;

  Composition() = default;
  explicit Composition(std::vector<std::int64_t> p) : parts(std::move(p)) {}

  std::int64_t total() const {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  }
  std::int64_t size() const { return static_cast<std::int64_t>(parts.size()); }

  // a_0 = 0, a_i = parts[0] + ... + parts[i-1].
  std::vector<std::int64_t> prefix_sums() const {
    std::vector<std::int64_t> a(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) a[i + 1] = a[i] + parts[i];
    return a;
  }

  std::string str() const { return render_parts(parts); }

  friend bool operator==(const Composition& x, const Composition& y) { return x.parts == y.parts; }

  static std::string render_parts(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  }
};

inline std::vector<std::int64_t> prefix_sums(const Composition& c) { return c.prefix_sums(); }

// Weakly decreasing positive parts; multiplicities are computed once at
// construction and kept alongside the part list.
struct Partition {
  std::vector<std::int64_t> parts;                               // weakly decreasing
  std::vector<std::pair<std::int64_t, std::int64_t>> multiplicities;  // (part, count), part ascending

  Partition() = default;
  explicit Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!multiplicities.empty() && multiplicities.back().first == *it)
        ++multiplicities.back().second;
      else
        multiplicities.emplace_back(*it, 1);
    }
  }

  std::int64_t length() const { return static_cast<std::int64_t>(parts.size()); }
  std::int64_t weight() const {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  }
  std::int64_t multiplicity(std::int64_t part) const {
    for (const auto& [p, t] : multiplicities)
      if (p == part) return t;
    return 0;
  }

  std::string str() const { return Composition::render_parts(parts); }

  friend bool operator==(const Partition& x, const Partition& y) { return x.parts == y.parts; }
};

namespace detail {

// Shared iterator shell: a loaded current value plus an exhausted flag, the
// derived range provides first() and advance().
template <class Range, class Value>
class stream_iterator {
 public:
  stream_iterator() : range_(nullptr), done_(true) {}
  explicit stream_iterator(const Range* range) : range_(range), done_(!range->first(cur_)) {}

  const Value& operator*() const { return cur_; }
  const Value* operator->() const { return &cur_; }

  stream_iterator& operator++() {
    done_ = !range_->advance(cur_);
    return *this;
  }

  friend bool operator==(const stream_iterator& a, const stream_iterator& b) {
    return a.done_ == b.done_;
  }
  friend bool operator!=(const stream_iterator& a, const stream_iterator& b) { return !(a == b); }

 private:
  const Range* range_;
  Value cur_;
  bool done_;
};

}  // namespace detail

// Compositions of n into exactly m positive parts, ascending lexicographic
// order. Empty when m <= 0 or m > n.
class CompositionRange {
 public:
  CompositionRange(std::int64_t n, std::int64_t m) : n_(n), m_(m) {}

  using iterator = detail::stream_iterator<CompositionRange, Composition>;
  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

  bool first(Composition& out) const {
    if (m_ <= 0 || n_ <= 0 || m_ > n_) return false;
    out.parts.assign(m_, 1);
    out.parts.back() = n_ - (m_ - 1);
    return true;
  }

  bool advance(Composition& cur) const {
    auto& c = cur.parts;
    const std::int64_t m = static_cast<std::int64_t>(c.size());
    std::int64_t tail = 0;
    for (std::int64_t i = m - 1; i-- > 0;) {
      tail += c[i + 1];
      // Incrementing position i needs one unit from the tail and at least
      // one unit left for each later position.
      if (tail >= (m - 1 - i) + 1) {
        c[i] += 1;
        for (std::int64_t j = i + 1; j < m - 1; ++j) c[j] = 1;
        c[m - 1] = tail - 1 - (m - 2 - i);
        return true;
      }
    }
    return false;
  }

 private:
  std::int64_t n_, m_;
};

// Tuples (k_1..k_m) with 0 <= k_i <= bounds[i] and sum k, ascending
// lexicographic order. Empty when k < 0 or k exceeds the bound total.
class BoundedTupleRange {
 public:
  BoundedTupleRange(std::int64_t k, std::vector<std::int64_t> bounds)
      : k_(k), bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw usage_error("bounded tuple enumeration needs at least one bound");
    for (std::int64_t b : bounds_)
      if (b < 0) throw usage_error("bounds must be nonnegative");
  }

  using iterator = detail::stream_iterator<BoundedTupleRange, std::vector<std::int64_t>>;
  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

  bool first(std::vector<std::int64_t>& out) const {
    if (k_ < 0) return false;
    out.assign(bounds_.size(), 0);
    return fill_min_lex(out, 0, k_);
  }

  bool advance(std::vector<std::int64_t>& cur) const {
    const std::int64_t m = static_cast<std::int64_t>(cur.size());
    std::int64_t tail = 0;
    for (std::int64_t i = m - 1; i-- > 0;) {
      tail += cur[i + 1];
      if (tail >= 1 && cur[i] < bounds_[i]) {
        cur[i] += 1;
        if (fill_min_lex(cur, i + 1, tail - 1)) return true;
        cur[i] -= 1;  // cannot happen with nonnegative bounds, kept for safety
      }
    }
    return false;
  }

 private:
  // Distributes `amount` over positions [from, end) right-heavy, which is
  // the lexicographically smallest completion.
  bool fill_min_lex(std::vector<std::int64_t>& v, std::int64_t from, std::int64_t amount) const {
    const std::int64_t m = static_cast<std::int64_t>(v.size());
    for (std::int64_t i = from; i < m; ++i) v[i] = 0;
    for (std::int64_t i = m; i-- > from && amount > 0;) {
      const std::int64_t take = std::min(amount, bounds_[i]);
      v[i] = take;
      amount -= take;
    }
    return amount == 0;
  }

  std::int64_t k_;
  std::vector<std::int64_t> bounds_;
};

// Partitions of k with at most max_len parts, in descending lexicographic
// order of the weakly decreasing part lists: [k] first. k = 0 yields the
// single empty partition.
class PartitionRange {
 public:
  PartitionRange(std::int64_t k, std::int64_t max_len) : k_(k), max_len_(max_len) {}

  using iterator = detail::stream_iterator<PartitionRange, Partition>;
  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

  bool first(Partition& out) const {
    if (k_ < 0 || max_len_ < 0) return false;
    if (k_ == 0) {
      out = Partition();
      return true;
    }
    if (max_len_ == 0) return false;
    out = Partition({k_});
    return true;
  }

  bool advance(Partition& cur) const {
    std::vector<std::int64_t> p = cur.parts;
    std::int64_t suffix = 0;  // sum of parts at positions >= i
    for (std::int64_t i = static_cast<std::int64_t>(p.size()); i-- > 0;) {
      suffix += p[i];
      if (p[i] < 2) continue;
      for (std::int64_t h = p[i] - 1; h >= 1; --h) {
        // Replace the suffix with parts of size at most h.
        const std::int64_t count = (suffix + h - 1) / h;
        if (i + count <= max_len_) {
          p.resize(i);
          std::int64_t rest = suffix;
          while (rest > 0) {
            const std::int64_t part = std::min(h, rest);
            p.push_back(part);
            rest -= part;
          }
          cur = Partition(std::move(p));
          return true;
        }
      }
    }
    return false;
  }

 private:
  std::int64_t k_, max_len_;
};

inline CompositionRange compositions(std::int64_t n, std::int64_t m) {
  return CompositionRange(n, m);
}

inline BoundedTupleRange bounded_compositions(std::int64_t k, std::vector<std::int64_t> bounds) {
  return BoundedTupleRange(k, std::move(bounds));
}

inline PartitionRange partitions_bounded_length(std::int64_t k, std::int64_t m) {
  return PartitionRange(k, m);
}

// m! / ((m - l)! * prod_i t_i!) for a partition with length l <= m and part
// multiplicities t_i. Computed as a falling product divided stepwise by the
// factorials, every intermediate quotient is integral.
inline Integer multinomial_partition_coeff(std::int64_t m, const Partition& lambda) {
  const std::int64_t l = lambda.length();
  if (m < 1) throw usage_error("multinomial coefficient needs m >= 1");
  if (l > m)
    throw usage_error("partition length " + std::to_string(l) + " exceeds m = " + std::to_string(m));
  Integer result(1);
  for (std::int64_t i = 0; i < l; ++i) result *= Integer(m - i);
  for (const auto& [part, count] : lambda.multiplicities) {
    for (std::int64_t i = 2; i <= count; ++i) result = exact_div(result, Integer(i));
  }
  return result;
}

}  // namespace symconv
