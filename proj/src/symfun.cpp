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

#include "degcalc/symfun.hpp"

#include <stdexcept>

#include "degcalc/numtheory.hpp"

namespace degcalc::symfun {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::staircase(long k) {
    std::vector<long> parts;
    for (long i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

Partition Partition::rectangle(long part, long k) {
    if (part <= 0 || k <= 0) return Partition();
    return Partition(std::vector<long>(static_cast<std::size_t>(k), part));
}

long Partition::weight() const {
    long w = 0;
    for (long p : parts_) w += p;
    return w;
}

Poly ChernSeries::at(long k) const {
    if (k < 0) return Poly::zero(ring);
    if (k == 0) return Poly::constant(ring, Rational(1));
    if (k > static_cast<long>(c.size())) return Poly::zero(ring);
    return c[static_cast<std::size_t>(k - 1)];
}

const Poly& ChSeries::at(long k) const {
    auto it = comp.find(k);
    if (it == comp.end()) {
        throw std::out_of_range("missing Chern character component " +
                                std::to_string(k));
    }
    return it->second;
}

ChernSeries series_inverse(const ChernSeries& c, long top) {
    ChernSeries out{c.ring, {}};
    for (long k = 1; k <= top; ++k) {
        Poly acc = Poly::zero(c.ring);
        for (long i = 1; i <= k; ++i) {
            acc = acc + c.at(i) * out.at(k - i);
        }
        out.c.push_back(-acc);
    }
    return out;
}

ChernSeries series_product(const ChernSeries& c, const ChernSeries& d, long top) {
    if (!c.ring->same_as(*d.ring)) {
        throw std::invalid_argument("mismatched ambient rings");
    }
    ChernSeries out{c.ring, {}};
    for (long k = 1; k <= top; ++k) {
        Poly acc = Poly::zero(c.ring);
        for (long i = 0; i <= k; ++i) {
            acc = acc + c.at(i) * d.at(k - i);
        }
        out.c.push_back(acc);
    }
    return out;
}

ChernSeries dualize(const ChernSeries& c) {
    ChernSeries out{c.ring, {}};
    for (std::size_t i = 0; i < c.c.size(); ++i) {
        bool odd = (i % 2 == 0);  // c[0] is c_1
        out.c.push_back(odd ? -c.c[i] : c.c[i]);
    }
    return out;
}

ChSeries dualize_ch(const ChSeries& ch) {
    ChSeries out{ch.ring, {}, ch.placeholder_degrees};
    for (const auto& [deg, poly] : ch.comp) {
        out.comp.emplace(deg, (deg % 2 != 0) ? -poly : poly);
    }
    return out;
}

ChSeries half_twist_ch(const ChSeries& ch, const Poly& divisor, long top) {
    if (!divisor.is_zero() &&
        (!divisor.is_homogeneous() || divisor.weight() != 1)) {
        throw std::invalid_argument("half twist divisor must have weight 1");
    }
    Poly step = divisor.cast_to(ch.ring).scaled(Rational(-1, 2));
    ChSeries out{ch.ring, {}, ch.placeholder_degrees};
    for (long k = 0; k <= top; ++k) {
        Poly acc = Poly::zero(ch.ring);
        bool known = false;
        for (long j = 0; j <= k; ++j) {
            Poly factor = step.pow(k - j).scaled(
                Rational(1) / Rational(exact::factorial(k - j)));
            if (!ch.has(j)) {
                // an unknown component only blocks k when it actually
                // contributes (a zero divisor leaves the series alone)
                if (!factor.is_zero()) {
                    known = false;
                    break;
                }
                continue;
            }
            known = true;
            acc = acc + ch.at(j) * factor;
        }
        if (known) out.comp.emplace(k, acc);
    }
    return out;
}

namespace {

/// Power sums p_1..p_top from ch (p_k = k! ch_k); throws on a missing degree.
std::vector<Poly> power_sums(const ChSeries& ch, long top) {
    std::vector<Poly> p;
    for (long k = 1; k <= top; ++k) {
        if (!ch.has(k)) {
            throw std::out_of_range(
                "Chern character component " + std::to_string(k) +
                " unknown below the requested truncation");
        }
        p.push_back(ch.at(k).scaled(Rational(exact::factorial(k))));
    }
    return p;
}

}  // namespace

ChernSeries ch_to_chern(const ChSeries& ch, long top) {
    std::vector<Poly> p = power_sums(ch, top);
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    ChernSeries out{ch.ring, {}};
    for (long k = 1; k <= top; ++k) {
        Poly acc = Poly::zero(ch.ring);
        for (long i = 1; i <= k; ++i) {
            Poly term = out.at(k - i) * p[static_cast<std::size_t>(i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        out.c.push_back(acc.scaled(Rational(1, k)));
    }
    return out;
}

ChSeries chern_to_ch(const ChernSeries& c, long top) {
    // p_k = sum_{i=1..k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
    std::vector<Poly> p;
    for (long k = 1; k <= top; ++k) {
        Poly acc = Poly::zero(c.ring);
        for (long i = 1; i < k; ++i) {
            Poly term = c.at(i) * p[static_cast<std::size_t>(k - i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        Poly last = c.at(k).scaled(Rational(k));
        acc = (k % 2 == 1) ? acc + last : acc - last;
        p.push_back(acc);
    }
    ChSeries out{c.ring, {}, {}};
    for (long k = 1; k <= top; ++k) {
        out.comp.emplace(k, p[static_cast<std::size_t>(k - 1)].scaled(
                                Rational(1) / Rational(exact::factorial(k))));
    }
    return out;
}

Poly schur(const Partition& lambda, const ChernSeries& c) {
    long m = lambda.size();
    if (m == 0) return Poly::constant(c.ring, Rational(1));
    Matrix mat(static_cast<std::size_t>(m),
               std::vector<Poly>(static_cast<std::size_t>(m)));
    for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= m; ++j) {
            mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                c.at(lambda.parts()[static_cast<std::size_t>(i - 1)] - i + j);
        }
    }
    return determinant(mat);
}

namespace {

Poly det_rec(const Matrix& m, std::size_t row, unsigned cols,
             std::map<unsigned, Poly>& memo, const Ring& ring) {
    if (cols == 0) return Poly::constant(ring, Rational(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(ring);
    int parity = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (!(cols & (1u << j))) continue;
        const Poly& entry = m[row][j];
        if (!entry.is_zero()) {
            Poly sub = det_rec(m, row + 1, cols & ~(1u << j), memo, ring);
            Poly term = entry * sub;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
        }
        ++parity;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

Poly determinant(const Matrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    }
    Ring ring = m[0][0].ring();
    std::map<unsigned, Poly> memo;
    return det_rec(m, 0, (1u << n) - 1, memo, ring);
}

namespace {

Poly pfaffian_rec(const Matrix& m, std::vector<std::size_t> idx, const Ring& ring) {
    if (idx.empty()) return Poly::constant(ring, Rational(1));
    if (idx.size() == 2) return m[idx[0]][idx[1]];
    Poly acc = Poly::zero(ring);
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const Poly& entry = m[idx[0]][idx[j]];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k) {
            if (k != j) rest.push_back(idx[k]);
        }
        Poly term = entry * pfaffian_rec(m, std::move(rest), ring);
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Poly pfaffian(const Matrix& m) {
    std::size_t n = m.size();
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("pfaffian needs even positive dimension");
    }
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!(m[i][j] + m[j][i]).is_zero()) {
                throw std::invalid_argument("matrix is not skewsymmetric");
            }
        }
    }
    Ring ring = m[0][0].ring();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return pfaffian_rec(m, std::move(idx), ring);
}

}  // namespace degcalc::symfun
