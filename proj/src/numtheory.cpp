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

#include "degcalc/numtheory.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace degcalc::exact {

Int factorial(long k) {
    if (k < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Int binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) {
        throw std::domain_error("binomial requires 0 <= b <= a");
    }
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return out;
}

namespace {

std::mutex bernoulli_mutex;
// memo[j] = B_j; grown on demand under the lock, values returned by copy.
std::vector<Rational> bernoulli_memo;

void grow_unlocked(long q) {
    if (bernoulli_memo.empty()) {
        bernoulli_memo.push_back(Rational(1));
    }
    while (static_cast<long>(bernoulli_memo.size()) <= q) {
        long i = static_cast<long>(bernoulli_memo.size());
        // sum_{j=0..i} C(i+1, j) B_j = 0, solved for B_i.
        Rational acc(0);
        for (long j = 0; j < i; ++j) {
            acc += Rational(binomial(i + 1, j)) * bernoulli_memo[static_cast<std::size_t>(j)];
        }
        bernoulli_memo.push_back(-acc / Rational(i + 1));
    }
}

}  // namespace

Rational bernoulli(long q) {
    if (q < 0) return Rational(0);
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    grow_unlocked(q);
    return bernoulli_memo[static_cast<std::size_t>(q)];
}

void bernoulli_reserve(long q) {
    if (q < 0) return;
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    grow_unlocked(q);
}

}  // namespace degcalc::exact
