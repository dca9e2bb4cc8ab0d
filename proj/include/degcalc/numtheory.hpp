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

#ifndef DEGCALC_NUMTHEORY_HPP
#define DEGCALC_NUMTHEORY_HPP

#include "degcalc/rational.hpp"

namespace degcalc::exact {

/// k!, exact. Throws std::domain_error for k < 0.
Int factorial(long k);

/// C(a, b), exact. Requires 0 <= b <= a, else throws std::domain_error.
Int binomial(long a, long b);

/**
 * q-th Bernoulli number under the generating-function convention
 * x/(e^x - 1) = 1 - x/2 + sum over even q >= 2 of B_q x^q / q!.
 *
 * B_0 = 1, B_1 = -1/2, B_q = 0 for q < 0 and for odd q >= 3. Even values
 * come from the recurrence sum_{j=0..q} C(q+1, j) B_j = 0.
 *
 * Note B_1 = -1/2 is stored for completeness but never reaches the pairing
 * formulas: top-degree monomials always have even q.
 *
 * Memoized; safe for concurrent callers.
 */
Rational bernoulli(long q);

/// Pre-computes the memo table through B_q (avoids lock churn in parallel loops).
void bernoulli_reserve(long q);

}  // namespace degcalc::exact

#endif
