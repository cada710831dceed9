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

#include <bit>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "symconv/errors.hpp"

namespace symconv {

// Arbitrary-precision signed integer.
//
// Representation: sign in {-1,0,+1} plus a little-endian vector of 32-bit
// limbs with no trailing zero limb. Zero is canonical: sign 0, empty limbs.
// All operations are exact; division truncates toward zero.
class Integer {
 public:
  Integer() = default;

  template <std::signed_integral T>
  Integer(T value) {  // NOLINT: implicit by design, used pervasively
    const long long v = static_cast<long long>(value);
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by negating in unsigned space.
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
  }

  static Integer one() { return Integer(1); }

  // Parses an optionally negative decimal literal. Throws usage_error on
  // anything else.
  static Integer from_string(std::string_view text) {
    if (text.empty()) throw usage_error("empty integer literal");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
      neg = true;
      pos = 1;
      if (text.size() == 1) throw usage_error("invalid integer literal '-'");
    }
    Integer out;
    for (; pos < text.size();) {
      // Consume up to 9 digits at a time.
      std::uint32_t chunk = 0;
      int digits = 0;
      while (pos < text.size() && digits < 9) {
        char c = text[pos];
        if (c < '0' || c > '9')
          throw usage_error("invalid integer literal '" + std::string(text) + "'");
        chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
        ++digits;
        ++pos;
      }
      std::uint32_t scale = 1;
      for (int i = 0; i < digits; ++i) scale *= 10;
      mul_small_inplace(out.mag_, scale);
      add_small_inplace(out.mag_, chunk);
    }
    out.sign_ = out.mag_.empty() ? 0 : (neg ? -1 : 1);
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  Integer abs() const {
    Integer r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend Integer operator-(const Integer& a) {
    Integer r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Integer r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return Integer();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

  friend Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    Integer r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  // Truncated division: quotient rounds toward zero, remainder carries the
  // dividend's sign, |remainder| < |divisor|.
  static void divmod(const Integer& a, const Integer& b, Integer& quot, Integer& rem) {
    if (b.sign_ == 0) throw usage_error("division by zero");
    if (a.sign_ == 0) {
      quot = Integer();
      rem = Integer();
      return;
    }
    if (cmp_mag(a.mag_, b.mag_) < 0) {
      quot = Integer();
      rem = a;
      return;
    }
    std::vector<std::uint32_t> r_mag;
    std::vector<std::uint32_t> q_mag = divmod_mag(a.mag_, b.mag_, r_mag);
    quot = Integer();
    quot.mag_ = std::move(q_mag);
    trim(quot.mag_);
    quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem = Integer();
    rem.mag_ = std::move(r_mag);
    trim(rem.mag_);
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
  }

  friend Integer operator/(const Integer& a, const Integer& b) {
    Integer q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend Integer operator%(const Integer& a, const Integer& b) {
    Integer q, r;
    divmod(a, b, q, r);
    return r;
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
      std::uint32_t rem = divmod_small_inplace(work, 1000000000u);
      if (work.empty()) {
        // Most significant group: no zero padding.
        digits.insert(0, std::to_string(rem));
      } else {
        std::string g = std::to_string(rem);
        digits.insert(0, std::string(9 - g.size(), '0') + g);
      }
    }
    return sign_ < 0 ? "-" + digits : digits;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
  }

  // Narrowing conversion guarded against overflow; grid parameters and
  // q-exponents always fit.
  long long to_int64() const {
    if (mag_.size() > 2) throw internal_error("integer too large for int64 conversion");
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) {
      if (m > 0x7fffffffffffffffull) throw internal_error("integer too large for int64 conversion");
      return static_cast<long long>(m);
    }
    if (m > 0x8000000000000000ull) throw internal_error("integer too large for int64 conversion");
    return -static_cast<long long>(m - 1) - 1;
  }

 private:
  static void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int cmp(const Integer& a, const Integer& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    trim(r);
    return r;
  }

  // Requires a >= b.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (d < 0) {
        d += static_cast<std::int64_t>(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(d);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
  }

  static void mul_small_inplace(std::vector<std::uint32_t>& v, std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : v) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) v.push_back(static_cast<std::uint32_t>(carry));
    trim(v);
  }

  static void add_small_inplace(std::vector<std::uint32_t>& v, std::uint32_t a) {
    std::uint64_t carry = a;
    for (auto& limb : v) {
      if (!carry) break;
      std::uint64_t cur = limb + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) v.push_back(static_cast<std::uint32_t>(carry));
  }

  static std::uint32_t divmod_small_inplace(std::vector<std::uint32_t>& v, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | v[i];
      v[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(v);
    return static_cast<std::uint32_t>(rem);
  }

  // Knuth algorithm D on 32-bit limbs. Requires |u| >= |v|, v nonzero.
  static std::vector<std::uint32_t> divmod_mag(const std::vector<std::uint32_t>& u_in,
                                               const std::vector<std::uint32_t>& v_in,
                                               std::vector<std::uint32_t>& rem_out) {
    const std::size_t n = v_in.size();
    const std::size_t m = u_in.size();
    if (n == 1) {
      std::vector<std::uint32_t> q = u_in;
      std::uint32_t r = divmod_small_inplace(q, v_in[0]);
      rem_out.assign(1, r);
      trim(rem_out);
      return q;
    }
    const int s = std::countl_zero(v_in.back());
    std::vector<std::uint32_t> vn(n), un(m + 1, 0);
    if (s == 0) {
      vn = v_in;
      for (std::size_t i = 0; i < m; ++i) un[i] = u_in[i];
    } else {
      for (std::size_t i = n; i-- > 1;)
        vn[i] = (v_in[i] << s) | (v_in[i - 1] >> (32 - s));
      vn[0] = v_in[0] << s;
      un[m] = u_in[m - 1] >> (32 - s);
      for (std::size_t i = m; i-- > 1;)
        un[i] = (u_in[i] << s) | (u_in[i - 1] >> (32 - s));
      un[0] = u_in[0] << s;
    }
    const std::uint64_t base = std::uint64_t(1) << 32;
    std::vector<std::uint32_t> q(m - n + 1, 0);
    for (std::size_t j = m - n + 1; j-- > 0;) {
      std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = num / vn[n - 1];
      std::uint64_t rhat = num % vn[n - 1];
      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      // Multiply-subtract qhat*vn from un[j..j+n].
      std::int64_t t = 0;
      std::int64_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * vn[i];
        t = static_cast<std::int64_t>(un[i + j]) - k - static_cast<std::int64_t>(p & 0xffffffffu);
        un[i + j] = static_cast<std::uint32_t>(t);
        k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
      }
      t = static_cast<std::int64_t>(un[j + n]) - k;
      un[j + n] = static_cast<std::uint32_t>(t);
      q[j] = static_cast<std::uint32_t>(qhat);
      if (t < 0) {  // qhat was one too large; add divisor back
        --q[j];
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
          un[i + j] = static_cast<std::uint32_t>(cur);
          carry = cur >> 32;
        }
        un[j + n] += static_cast<std::uint32_t>(carry);
      }
    }
    rem_out.assign(n, 0);
    if (s == 0) {
      for (std::size_t i = 0; i < n; ++i) rem_out[i] = un[i];
    } else {
      for (std::size_t i = 0; i < n - 1; ++i)
        rem_out[i] = (un[i] >> s) | (static_cast<std::uint64_t>(un[i + 1]) << (32 - s));
      rem_out[n - 1] = un[n - 1] >> s;
    }
    trim(rem_out);
    return q;
  }

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

// Division that must leave no remainder; a nonzero remainder is a defect in
// the caller's reasoning, not a user mistake.
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::divmod(a, b, q, r);
  if (!r.is_zero())
    throw internal_error("inexact integer division: " + a.to_string() + " / " + b.to_string());
  return q;
}

}  // namespace symconv
