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

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "symconv/errors.hpp"
#include "symconv/integer.hpp"

namespace symconv {

// Exact univariate polynomial with a named indeterminate ("q", "x", ...).
//
// Canonical form: a sparse exponent -> coefficient map with no stored zero
// coefficient, and an empty indeterminate label whenever the polynomial is
// constant. Constants therefore compare equal across indeterminates, and
// combining polynomials in two different named indeterminates is a usage
// error. Exponents are never negative.
//
// Rendering lists terms by ascending exponent: "1 - q - q^2 + q^3".
class UPoly {
 public:
  UPoly() = default;

  UPoly(const Integer& c) {  // NOLINT: implicit coefficient embedding
    if (!c.is_zero()) coeffs_[0] = c;
  }

  UPoly(long long c) : UPoly(Integer(c)) {}

  static UPoly one() { return UPoly(1); }

  static UPoly variable(std::string label) {
    UPoly p;
    p.label_ = std::move(label);
    p.coeffs_[1] = Integer(1);
    return p;
  }

  static UPoly monomial(std::string label, const Integer& coeff, std::int64_t exp) {
    if (exp < 0) throw usage_error("negative exponent in monomial");
    UPoly p;
    if (!coeff.is_zero()) {
      if (exp > 0 && label.empty())
        throw internal_error("monomial of positive degree needs an indeterminate label");
      p.coeffs_[exp] = coeff;
      if (exp > 0) p.label_ = std::move(label);
    }
    return p;
  }

  const std::string& label() const { return label_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

  std::int64_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  Integer coeff(std::int64_t exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Integer() : it->second;
  }

  std::size_t term_count() const { return coeffs_.size(); }

  const std::map<std::int64_t, Integer>& terms() const { return coeffs_; }

  // Sum of coefficients, i.e. the value at the indeterminate = 1.
  Integer eval_at_one() const {
    Integer s;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    label_ = unify_labels(*this, o);
    for (const auto& [e, c] : o.coeffs_) {
      auto it = coeffs_.find(e);
      if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
      }
    }
    if (is_constant()) label_.clear();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) {
    a += b;
    return a;
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.label_ = unify_labels(a, b);
    for (const auto& [ea, ca] : a.coeffs_) {
      for (const auto& [eb, cb] : b.coeffs_) {
        Integer& slot = r.coeffs_[ea + eb];
        slot += ca * cb;
        if (slot.is_zero()) r.coeffs_.erase(ea + eb);
      }
    }
    r.normalize();
    return r;
  }

  UPoly& operator-=(const UPoly& o) { return *this += -o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.label_ == b.label_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Exact division; throws internal_error if the divisor does not divide
  // this polynomial (a defect signal for callers that proved divisibility).
  UPoly divide_exact(const UPoly& divisor) const {
    if (divisor.is_zero()) throw internal_error("exact division by zero polynomial");
    const std::string label = unify_labels(*this, divisor);
    UPoly quotient;
    UPoly rem = *this;
    const auto dlow = *divisor.coeffs_.begin();
    while (!rem.is_zero()) {
      const auto rlow = *rem.coeffs_.begin();
      if (rlow.first < dlow.first)
        throw internal_error("inexact polynomial division (low exponent)");
      Integer q, r;
      Integer::divmod(rlow.second, dlow.second, q, r);
      if (!r.is_zero()) throw internal_error("inexact polynomial division (coefficient)");
      UPoly term = monomial(label, q, rlow.first - dlow.first);
      quotient += term;
      rem -= term * divisor;
    }
    return quotient;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      const bool neg = c.sign() < 0;
      const Integer mag = c.abs();
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      if (e == 0) {
        out += mag.to_string();
      } else {
        if (!(mag == Integer(1))) out += mag.to_string() + "*";
        out += label_;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

  // Parses the canonical rendering grammar:
  //   poly   := ["-"] term (" + " term | " - " term)*
  //   term   := int | int "*" var | var ; var := label ["^" exp]
  static UPoly parse(std::string_view text) {
    UPoly out;
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
      parse_term(out, term, neg);
      if (next == std::string_view::npos) break;
      // Expect " + " or " - ".
      if (next + 3 > text.size() || text[next + 2] != ' ' ||
          (text[next + 1] != '+' && text[next + 1] != '-'))
        throw usage_error("malformed polynomial '" + std::string(text) + "'");
      neg = text[next + 1] == '-';
      pos = next + 3;
      if (pos >= text.size()) throw usage_error("trailing operator in polynomial");
    }
    out.normalize();
    return out;
  }

 private:
  static std::string unify_labels(const UPoly& a, const UPoly& b) {
    if (a.label_.empty()) return b.label_;
    if (b.label_.empty() || a.label_ == b.label_) return a.label_;
    throw usage_error("cannot combine polynomials in '" + a.label_ + "' and '" + b.label_ + "'");
  }

  void normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->second.is_zero())
        it = coeffs_.erase(it);
      else
        ++it;
    }
    if (is_constant()) label_.clear();
  }

  static void parse_term(UPoly& out, std::string_view term, bool neg) {
    if (term.empty()) throw usage_error("empty term in polynomial");
    Integer coeff(1);
    std::string_view varpart = term;
    if (term[0] >= '0' && term[0] <= '9') {
      std::size_t star = term.find('*');
      if (star == std::string_view::npos) {
        coeff = Integer::from_string(term);
        varpart = {};
      } else {
        coeff = Integer::from_string(term.substr(0, star));
        varpart = term.substr(star + 1);
      }
    }
    if (neg) coeff = -coeff;
    std::int64_t exp = 0;
    std::string label;
    if (!varpart.empty()) {
      std::size_t caret = varpart.find('^');
      std::string_view name = caret == std::string_view::npos ? varpart : varpart.substr(0, caret);
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw usage_error("malformed term '" + std::string(term) + "'");
      label = std::string(name);
      if (caret == std::string_view::npos) {
        exp = 1;
      } else {
        exp = Integer::from_string(varpart.substr(caret + 1)).to_int64();
        if (exp < 0) throw usage_error("negative exponent in polynomial");
      }
    }
    UPoly mono = monomial(label, coeff, exp);
    if (!mono.is_constant() && !out.label_.empty() && out.label_ != mono.label_)
      throw usage_error("mixed indeterminates in polynomial literal");
    out += mono;
  }

  std::string label_;
  std::map<std::int64_t, Integer> coeffs_;
};

inline Integer eval_at_one(const UPoly& p) { return p.eval_at_one(); }

}  // namespace symconv
