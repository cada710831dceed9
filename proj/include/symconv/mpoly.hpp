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
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "symconv/errors.hpp"
#include "symconv/integer.hpp"
#include "symconv/ring.hpp"

namespace symconv {

// Sparse exact polynomial in variables x1, x2, ... with integer coefficients.
//
// A monomial is an exponent vector with trailing zeros trimmed, so values in
// any number of variables live in one ring. Terms are kept in graded order
// (total degree ascending, ties broken so that x1-heavy monomials come
// first), which is also the canonical rendering order, e.g.
// "x1*x2 + x1*x3 + x2*x3".
class MPoly {
 public:
  using Exponents = std::vector<std::int64_t>;

  struct GradedLess {
    static std::int64_t total(const Exponents& e) {
      return std::accumulate(e.begin(), e.end(), std::int64_t{0});
    }
    bool operator()(const Exponents& a, const Exponents& b) const {
      const std::int64_t da = total(a), db = total(b);
      if (da != db) return da < db;
      const std::size_t len = std::max(a.size(), b.size());
      for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t ai = i < a.size() ? a[i] : 0;
        const std::int64_t bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
      }
      return false;
    }
  };

  MPoly() = default;

  MPoly(const Integer& c) {  // NOLINT: implicit coefficient embedding
    if (!c.is_zero()) terms_[{}] = c;
  }

  MPoly(long long c) : MPoly(Integer(c)) {}

  static MPoly one() { return MPoly(1); }

  // index is 1-based: variable(1) is x1.
  static MPoly variable(std::int64_t index) {
    if (index < 1) throw usage_error("variable index must be >= 1");
    MPoly p;
    Exponents e(static_cast<std::size_t>(index), 0);
    e.back() = 1;
    p.terms_[std::move(e)] = Integer(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Integer, GradedLess>& terms() const { return terms_; }

  std::int64_t max_variable() const {
    std::size_t width = 0;
    for (const auto& [e, c] : terms_) width = std::max(width, e.size());
    return static_cast<std::int64_t>(width);
  }

  bool is_homogeneous(std::int64_t degree) const {
    for (const auto& [e, c] : terms_)
      if (GradedLess::total(e) != degree) return false;
    return true;
  }

  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    a += b;
    return a;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        Integer& slot = r.terms_[e];
        slot += ca * cb;
        if (slot.is_zero()) r.terms_.erase(e);
      }
    }
    return r;
  }

  MPoly& operator-=(const MPoly& o) { return *this += -o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Applies the ring homomorphism fixing coefficients and sending each
  // variable to its image. Every variable occurring in the polynomial must
  // have an image; images map 1-based variable indices into one common ring.
  template <commutative_ring R>
  R substitute(const std::map<std::int64_t, R>& images) const {
    R acc{};
    for (const auto& [exps, coeff] : terms_) {
      R term = R(coeff);
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        auto it = images.find(static_cast<std::int64_t>(i) + 1);
        if (it == images.end())
          throw usage_error("no image for variable x" + std::to_string(i + 1));
        term = term * ring_pow(it->second, static_cast<std::uint64_t>(exps[i]));
      }
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c.sign() < 0;
      const Integer mag = c.abs();
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      if (e.empty()) {
        out += mag.to_string();
        continue;
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (!(mag == Integer(1))) out += mag.to_string() + "*";
      out += mono;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

  // Parses the canonical rendering grammar with monomials like "x1^2*x3".
  static MPoly parse(std::string_view text) {
    MPoly out;
    std::size_t pos = 0;
    bool neg = false;
    if (!text.empty() && text[0] == '-') {
      neg = true;
      pos = 1;
    }
    if (pos >= text.size()) throw usage_error("empty polynomial literal");
    while (true) {
      std::size_t next = text.find(' ', pos);
      std::string_view term = text.substr(pos, next == std::string_view::npos ? next : next - pos);
      out += parse_term(term, neg);
      if (next == std::string_view::npos) break;
      if (next + 3 > text.size() || text[next + 2] != ' ' ||
          (text[next + 1] != '+' && text[next + 1] != '-'))
        throw usage_error("malformed polynomial '" + std::string(text) + "'");
      neg = text[next + 1] == '-';
      pos = next + 3;
      if (pos >= text.size()) throw usage_error("trailing operator in polynomial");
    }
    return out;
  }

 private:
  static MPoly parse_term(std::string_view term, bool neg) {
    if (term.empty()) throw usage_error("empty term in polynomial");
    Integer coeff(1);
    std::size_t pos = 0;
    if (term[0] >= '0' && term[0] <= '9') {
      std::size_t star = term.find('*');
      if (star == std::string_view::npos) {
        coeff = Integer::from_string(term);
        pos = term.size();
      } else {
        coeff = Integer::from_string(term.substr(0, star));
        pos = star + 1;
      }
    }
    if (neg) coeff = -coeff;
    Exponents exps;
    while (pos < term.size()) {
      if (term[pos] != 'x') throw usage_error("malformed term '" + std::string(term) + "'");
      ++pos;
      std::size_t start = pos;
      while (pos < term.size() && term[pos] >= '0' && term[pos] <= '9') ++pos;
      if (pos == start) throw usage_error("malformed term '" + std::string(term) + "'");
      const std::int64_t index = Integer::from_string(term.substr(start, pos - start)).to_int64();
      std::int64_t exp = 1;
      if (pos < term.size() && term[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < term.size() && term[pos] >= '0' && term[pos] <= '9') ++pos;
        if (pos == start) throw usage_error("malformed term '" + std::string(term) + "'");
        exp = Integer::from_string(term.substr(start, pos - start)).to_int64();
      }
      if (index < 1) throw usage_error("variable index must be >= 1");
      if (exps.size() < static_cast<std::size_t>(index)) exps.resize(index, 0);
      exps[index - 1] += exp;
      if (pos < term.size()) {
        if (term[pos] != '*') throw usage_error("malformed term '" + std::string(term) + "'");
        ++pos;
      }
    }
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    MPoly m;
    if (!coeff.is_zero()) m.terms_[std::move(exps)] = coeff;
    return m;
  }

  std::map<Exponents, Integer, GradedLess> terms_;
};

// Convenience overload matching the map-based substitution with a dense
// image list for variables x1..xn.
template <commutative_ring R>
R substitute_variables(const MPoly& p, const std::vector<R>& images) {
  std::map<std::int64_t, R> m;
  for (std::size_t i = 0; i < images.size(); ++i) m.emplace(static_cast<std::int64_t>(i) + 1, images[i]);
  return p.substitute(m);
}

template <commutative_ring R>
R substitute_variables(const MPoly& p, const std::map<std::int64_t, R>& images) {
  return p.substitute(images);
}

}  // namespace symconv
