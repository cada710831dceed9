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

#include <concepts>
#include <cstdint>

#include "symconv/integer.hpp"

namespace symconv {

// The commutative-ring contract the symmetric-function kernel is generic
// over. A model provides exact +, -, *, unary negation, decidable equality,
// a default-constructed zero, a static one(), and an embedding of Integer
// coefficients. Instances here: Integer, UPoly, MPoly.
template <typename R>
concept commutative_ring =
    std::regular<R> && std::constructible_from<R, const Integer&> &&
    requires(R m, const R a, const R b) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { m += a };
      { R::one() } -> std::convertible_to<R>;
    };

template <commutative_ring R>
bool is_zero(const R& a) {
  return a == R{};
}

// Exponentiation by squaring; e == 0 gives one().
template <commutative_ring R>
R ring_pow(R base, std::uint64_t e) {
  R result = R::one();
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace symconv
