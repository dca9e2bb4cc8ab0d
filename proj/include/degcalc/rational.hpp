/*
 * Copyright 2026 The degcalc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DEGCALC_RATIONAL_HPP
#define DEGCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degcalc::exact {

// Coefficient domain for the whole library. Values are always canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1. mpq_class maintains this for
// arithmetic; construction from raw parts goes through make_rational.
using Int = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den);
Rational make_rational(const Int& num, const Int& den);

/// Serializes as "p" when the denominator is 1, else "p/q" with q > 0.
std::string to_string(const Int& v);
std::string to_string(const Rational& v);

/// Inverse of to_string. Accepts an optional leading '-', digits, and an
/// optional "/digits" part. Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational rational_from_string(std::string_view text);

bool is_integer(const Rational& v);

Int pow_int(const Int& base, unsigned long exp);

/// base^exp for possibly negative exp; throws on 0^negative.
Rational pow_rational(const Rational& base, long exp);

}  // namespace degcalc::exact

#endif
