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

#include "degcalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace degcalc::exact {

Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational rational_from_string(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        if (pos == start) fail();
    };

    std::string num;
    if (pos < text.size() && text[pos] == '-') {
        num.push_back('-');
        ++pos;
    }
    digits(num);

    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den.clear();
        digits(den);
    }
    if (pos != text.size()) fail();

    Int n(num, 10);
    Int d(den, 10);
    if (d == 0) fail();
    return make_rational(n, d);
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

Int pow_int(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) {
        throw std::domain_error("zero raised to a negative power");
    }
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational out(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    out.canonicalize();
    if (exp < 0) out = 1 / out;
    return out;
}

}  // namespace degcalc::exact
