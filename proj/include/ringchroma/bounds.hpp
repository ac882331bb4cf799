// Copyright 2026 The ringchroma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Chi-bounding functions f_T, f_k and g_k, each evaluated both piecewise and
// in closed form.

#ifndef RINGCHROMA_BOUNDS_HPP
#define RINGCHROMA_BOUNDS_HPP

#include <stdexcept>
#include <string>

#include "ringchroma/errors.hpp"

namespace ringchroma {

namespace detail {

inline long long floor_div(long long a, long long b) { return a / b; }
inline long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

inline void require_n(long long n) {
  if (n < 1) throw InputError("n must be at least 1");
}

inline void require_odd_k(long long k) {
  if (k < 5 || k % 2 == 0) throw InputError("k must be odd and at least 5");
}

}  // namespace detail

/// floor(5n/4) for n = 0, 1 (mod 4), ceil(5n/4) otherwise.
inline long long f_T(long long n) {
  detail::require_n(n);
  return n % 4 <= 1 ? detail::floor_div(5 * n, 4) : detail::ceil_div_ll(5 * n, 4);
}

inline long long f_k_piecewise(long long k, long long n) {
  detail::require_odd_k(k);
  detail::require_n(n);
  long long r = n % (k - 1);
  return r <= 1 ? detail::floor_div(k * n, k - 1) : detail::ceil_div_ll(k * n, k - 1);
}

/// n + ceil(2 floor(n/2) / (k-1))
inline long long f_k_closed(long long k, long long n) {
  detail::require_odd_k(k);
  detail::require_n(n);
  return n + detail::ceil_div_ll(2 * (n / 2), k - 1);
}

inline long long f_k(long long k, long long n) {
  long long a = f_k_piecewise(k, n);
  long long b = f_k_closed(k, n);
  if (a != b)
    throw std::logic_error("f_k forms disagree at k=" + std::to_string(k) + " n=" + std::to_string(n));
  return a;
}

inline long long g_k_piecewise(long long k, long long n) {
  detail::require_odd_k(k);
  detail::require_n(n);
  long long r = n % (k - 1);
  return r <= (k - 3) / 2 ? detail::floor_div(k * n, k - 1) : detail::ceil_div_ll(k * n, k - 1);
}

/// n + ceil(floor(2n/(k-1)) / 2)
inline long long g_k_closed(long long k, long long n) {
  detail::require_odd_k(k);
  detail::require_n(n);
  return n + detail::ceil_div_ll((2 * n) / (k - 1), 2);
}

inline long long g_k(long long k, long long n) {
  long long a = g_k_piecewise(k, n);
  long long b = g_k_closed(k, n);
  if (a != b)
    throw std::logic_error("g_k forms disagree at k=" + std::to_string(k) + " n=" + std::to_string(n));
  return a;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_BOUNDS_HPP
