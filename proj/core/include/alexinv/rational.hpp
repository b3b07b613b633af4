/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef ALEXINV_RATIONAL_HPP
#define ALEXINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace alexinv {

// All coefficient arithmetic in this library is exact. Rational is a
// GMP-backed rational with arbitrary-precision integer parts; there is no
// floating point anywhere in the computation paths.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical textual form, e.g. "-3/2" or "5".
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Generalized binomial coefficient C(e, k) for integer e (possibly negative)
// and k >= 0; always an exact integer.
inline Integer binomial(long e, long k) {
  Integer result = 1;
  for (long t = 1; t <= k; ++t) {
    result *= Integer(e - t + 1);
    Integer quot;
    mpz_divexact_ui(quot.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(t));
    result = quot;
  }
  return result;
}

}  // namespace alexinv

#endif  // ALEXINV_RATIONAL_HPP
