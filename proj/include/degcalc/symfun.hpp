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

#ifndef DEGCALC_SYMFUN_HPP
#define DEGCALC_SYMFUN_HPP

#include <map>
#include <set>
#include <vector>

#include "degcalc/ring.hpp"

namespace degcalc::symfun {

using exact::Rational;
using ring::Poly;
using ring::Ring;

/// Weakly decreasing positive parts indexing Schur classes.
class Partition {
public:
    Partition() = default;  // empty partition
    explicit Partition(std::vector<long> parts);

    /// (k, k-1, ..., 2, 1); empty for k <= 0.
    static Partition staircase(long k);
    /// k copies of part; empty if either is <= 0.
    static Partition rectangle(long part, long k);

    const std::vector<long>& parts() const { return parts_; }
    long size() const { return static_cast<long>(parts_.size()); }
    long weight() const;

private:
    std::vector<long> parts_;
};

/// Total Chern class data: c[0] is c_1, c[1] is c_2, ... (c_0 = 1 implicit;
/// entries beyond the stored list are zero). Each c_i homogeneous of weight i.
struct ChernSeries {
    Ring ring;
    std::vector<Poly> c;

    /// c_k with the determinant conventions: k < 0 -> 0, k = 0 -> 1.
    Poly at(long k) const;
};

/// Chern-character data: degree -> homogeneous class of that weight.
/// A component may be an opaque placeholder generator (symbolic mode), which
/// lets cancellation claims be checked instead of assumed. Absent degrees are
/// "unknown": conversions that need them throw.
struct ChSeries {
    Ring ring;
    std::map<long, Poly> comp;
    std::set<long> placeholder_degrees;

    bool has(long k) const { return comp.count(k) != 0; }
    const Poly& at(long k) const;
};

/// Inverse series d with (c * d) = 1 up to weight `top`; needs c_0 = 1.
ChernSeries series_inverse(const ChernSeries& c, long top);

ChernSeries series_product(const ChernSeries& c, const ChernSeries& d, long top);

/// c_i -> (-1)^i c_i (dual bundle); an involution.
ChernSeries dualize(const ChernSeries& c);

/// ch_i -> (-1)^i ch_i: negates exactly the odd components.
ChSeries dualize_ch(const ChSeries& ch);

/**
 * Chern character of a formal half twist: multiplication by exp(-divisor/2),
 *   ch'_k = sum_j ch_j * (-divisor/2)^{k-j} / (k-j)!.
 * divisor must be homogeneous of weight 1. Components are produced for every
 * degree <= top that has any contribution (degree 0 included when present).
 */
ChSeries half_twist_ch(const ChSeries& ch, const Poly& divisor, long top);

/// Newton identities, ch_k = p_k / k!: components 1..top required (symbolic
/// placeholders count as present).
ChernSeries ch_to_chern(const ChSeries& ch, long top);
ChSeries chern_to_ch(const ChernSeries& c, long top);

/// Determinant of the matrix with (i, j) entry c_{lambda_i - i + j}
/// (1-based); homogeneous of weight |lambda|; 1 for the empty partition.
Poly schur(const Partition& lambda, const ChernSeries& c);

using Matrix = std::vector<std::vector<Poly>>;

/// Laplace expansion with column-subset memoization; fine for the small
/// matrices this library meets.
Poly determinant(const Matrix& m);

/**
 * Pfaffian of an even-dimensional skewsymmetric matrix, by recursive
 * expansion along the first row (not the 2^n n!-term sum). Sign convention
 * pinned by Pf((0 x; -x 0)) = x. Rejects odd dimension and A + A^T != 0.
 */
Poly pfaffian(const Matrix& m);

}  // namespace degcalc::symfun

#endif
