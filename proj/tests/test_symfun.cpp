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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "degcalc/numtheory.hpp"
#include "degcalc/symfun.hpp"

using namespace degcalc::symfun;
using degcalc::exact::make_rational;
using degcalc::exact::Rational;
using degcalc::ring::GeneratorSpec;
using degcalc::ring::RingSpec;

namespace {

Ring chern_ring(long top) {
    std::vector<GeneratorSpec> gens;
    for (long k = 1; k <= top; ++k) {
        gens.push_back({"c" + std::to_string(k), static_cast<int>(k)});
    }
    return RingSpec::make(std::move(gens));
}

ChernSeries generic_chern(const Ring& ring, long top) {
    ChernSeries c{ring, {}};
    for (long k = 1; k <= top; ++k) {
        c.c.push_back(Poly::generator(ring, "c" + std::to_string(k)));
    }
    return c;
}

Ring scalar_ring() { return RingSpec::make({}); }

Matrix random_skew(std::size_t n, std::mt19937& rng) {
    Ring ring = scalar_ring();
    std::uniform_int_distribution<int> dist(-4, 4);
    Matrix m(n, std::vector<Poly>(n, Poly::zero(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Poly v = Poly::constant(ring, Rational(dist(rng)));
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    return m;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// The definition as a sum over all of S_{2n}, scaled by 1/(2^n n!). Brute
/// oracle for the expansion the implementation uses.
Poly pfaffian_by_definition(const Matrix& m) {
    std::size_t dim = m.size();
    std::size_t half = dim / 2;
    Ring ring = m[0][0].ring();
    std::vector<int> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) perm[i] = static_cast<int>(i);
    Poly acc = Poly::zero(ring);
    do {
        Poly prod = Poly::constant(ring, Rational(1));
        for (std::size_t i = 0; i < half; ++i) {
            prod = prod * m[static_cast<std::size_t>(perm[2 * i])]
                          [static_cast<std::size_t>(perm[2 * i + 1])];
        }
        acc = acc + prod.scaled(Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational norm = Rational(1) /
                    (degcalc::exact::pow_rational(Rational(2), static_cast<long>(half)) *
                     Rational(degcalc::exact::factorial(static_cast<long>(half))));
    return acc.scaled(norm);
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(Partition().weight() == 0);
    CHECK(Partition::staircase(3).parts() == std::vector<long>{3, 2, 1});
    CHECK(Partition::rectangle(2, 3).parts() == std::vector<long>{2, 2, 2});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("series inverse") {
    Ring ring = chern_ring(4);
    Poly c1 = Poly::generator(ring, "c1");
    Poly c2 = Poly::generator(ring, "c2");

    ChernSeries trivial{ring, {}};
    ChernSeries inv = series_inverse(trivial, 4);
    for (long k = 1; k <= 4; ++k) CHECK(inv.at(k).is_zero());

    ChernSeries line{ring, {c1}};
    ChernSeries geom = series_inverse(line, 4);
    CHECK(geom.at(1) == -c1);
    CHECK(geom.at(2) == c1 * c1);
    CHECK(geom.at(3) == -(c1 * c1 * c1));

    ChernSeries rank2{ring, {c1, c2}};
    ChernSeries inv2 = series_inverse(rank2, 4);
    CHECK(inv2.at(2) == c1 * c1 - c2);
    // multiply back to the identity series
    ChernSeries prod = series_product(rank2, inv2, 4);
    for (long k = 1; k <= 4; ++k) CHECK(prod.at(k).is_zero());
}

TEST_CASE("dualize is an involution and respects products") {
    Ring ring = chern_ring(4);
    ChernSeries c = generic_chern(ring, 4);
    CHECK(dualize(dualize(c)).at(3) == c.at(3));
    CHECK(dualize(c).at(1) == -c.at(1));

    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> coef(-3, 3);
    ChernSeries d{ring, {}};
    for (long k = 1; k <= 4; ++k) {
        d.c.push_back(c.at(k).scaled(Rational(coef(rng))));
    }
    ChernSeries lhs = dualize(series_product(c, d, 4));
    ChernSeries rhs = series_product(dualize(c), dualize(d), 4);
    for (long k = 1; k <= 4; ++k) CHECK(lhs.at(k) == rhs.at(k));
}

TEST_CASE("dual characters negate exactly the odd degrees") {
    Ring ring = chern_ring(5);
    ChSeries ch{ring, {}, {}};
    for (long k = 1; k <= 5; ++k) {
        ch.comp.emplace(k, Poly::generator(ring, "c" + std::to_string(k)));
    }
    ChSeries dual = dualize_ch(ch);
    for (long k = 1; k <= 5; ++k) {
        if (k % 2 == 1) {
            CHECK(dual.at(k) == -ch.at(k));
        } else {
            CHECK(dual.at(k) == ch.at(k));
        }
    }
}

TEST_CASE("half twist") {
    Ring ring = RingSpec::make({{"phi", 1}});
    Poly phi = Poly::generator(ring, "phi");

    ChSeries rank_only{ring, {}, {}};
    rank_only.comp.emplace(0, Poly::constant(ring, Rational(3)));
    ChSeries untouched = half_twist_ch(rank_only, Poly::zero(ring), 4);
    CHECK(untouched.comp.size() == 1);
    CHECK(untouched.at(0) == Poly::constant(ring, Rational(3)));

    ChSeries rank2{ring, {}, {}};
    rank2.comp.emplace(0, Poly::constant(ring, Rational(2)));
    rank2.comp.emplace(1, Poly::zero(ring));
    ChSeries shifted = half_twist_ch(rank2, phi, 1);
    CHECK(shifted.at(1) == -phi);  // ch1 picks up rank * (-phi/2)

    // twisting by 2L equals twisting twice by L
    ChSeries base{ring, {}, {}};
    base.comp.emplace(0, Poly::constant(ring, Rational(2)));
    base.comp.emplace(1, phi.scaled(make_rational(3, 2)));
    base.comp.emplace(2, (phi * phi).scaled(make_rational(-1, 3)));
    base.comp.emplace(3, (phi * phi * phi).scaled(make_rational(5, 6)));
    ChSeries once = half_twist_ch(base, phi.scaled(Rational(2)), 3);
    ChSeries twice = half_twist_ch(half_twist_ch(base, phi, 3), phi, 3);
    for (long k = 0; k <= 3; ++k) {
        CHECK(once.at(k) == twice.at(k));
    }
}

TEST_CASE("character conversions: frozen low-degree forms") {
    Ring ring = chern_ring(3);
    ChernSeries c = generic_chern(ring, 3);
    ChSeries ch = chern_to_ch(c, 3);
    Poly c1 = c.at(1), c2 = c.at(2), c3 = c.at(3);
    CHECK(ch.at(1) == c1);
    CHECK(ch.at(2) == (c1 * c1 - c2.scaled(Rational(2))).scaled(make_rational(1, 2)));
    CHECK(ch.at(3) ==
          (c1 * c1 * c1 - (c1 * c2).scaled(Rational(3)) + c3.scaled(Rational(3)))
              .scaled(make_rational(1, 6)));
}

TEST_CASE("character conversions invert each other") {
    Ring ring = chern_ring(8);
    ChernSeries c = generic_chern(ring, 8);
    ChSeries ch = chern_to_ch(c, 8);
    ChernSeries back = ch_to_chern(ch, 8);
    for (long k = 1; k <= 8; ++k) {
        CHECK(back.at(k) == c.at(k));
    }

    // and the other way round, starting from opaque characters
    std::vector<degcalc::ring::GeneratorSpec> gens;
    for (long k = 1; k <= 8; ++k) {
        gens.push_back({"ch" + std::to_string(k), static_cast<int>(k)});
    }
    Ring chring = RingSpec::make(std::move(gens));
    ChSeries source{chring, {}, {}};
    for (long k = 1; k <= 8; ++k) {
        source.comp.emplace(k, Poly::generator(chring, "ch" + std::to_string(k)));
    }
    ChSeries roundtrip = chern_to_ch(ch_to_chern(source, 8), 8);
    for (long k = 1; k <= 8; ++k) {
        CHECK(roundtrip.at(k) == source.at(k));
    }

    CHECK_THROWS_AS(ch_to_chern(ChSeries{ring, {}, {}}, 2), std::out_of_range);
}

TEST_CASE("schur determinants") {
    Ring ring = chern_ring(6);
    ChernSeries c = generic_chern(ring, 6);
    Poly c1 = c.at(1), c2 = c.at(2), c3 = c.at(3), c4 = c.at(4), c5 = c.at(5);

    CHECK(schur(Partition(), c) == Poly::constant(ring, Rational(1)));
    CHECK(schur(Partition({1}), c) == c1);
    CHECK(schur(Partition({2, 1}), c) == c1 * c2 - c3);
    CHECK(schur(Partition({3, 2, 1}), c) ==
          c1 * c2 * c3 - c3 * c3 - c1 * c1 * c4 + c1 * c5);

    for (long k = 1; k <= 3; ++k) {
        Poly s = schur(Partition::staircase(k), c);
        CHECK(s.is_homogeneous());
        CHECK(s.weight() == Partition::staircase(k).weight());
    }
}

TEST_CASE("pfaffian conventions and small cases") {
    Ring ring = RingSpec::make({{"x", 1}});
    Poly x = Poly::generator(ring, "x");
    Matrix two{{Poly::zero(ring), x}, {-x, Poly::zero(ring)}};
    CHECK(pfaffian(two) == x);

    // generic 4x4 over six weight-1 generators
    Ring gen6 = RingSpec::make({{"x12", 1}, {"x13", 1}, {"x14", 1},
                                {"x23", 1}, {"x24", 1}, {"x34", 1}});
    auto g = [&](const char* n) { return Poly::generator(gen6, n); };
    Poly z = Poly::zero(gen6);
    Matrix four{{z, g("x12"), g("x13"), g("x14")},
                {-g("x12"), z, g("x23"), g("x24")},
                {-g("x13"), -g("x23"), z, g("x34")},
                {-g("x14"), -g("x24"), -g("x34"), z}};
    CHECK(pfaffian(four) ==
          g("x12") * g("x34") - g("x13") * g("x24") + g("x14") * g("x23"));

    // block-diagonal symplectic form: Pf = +1
    Ring sc = scalar_ring();
    auto c = [&](long v) { return Poly::constant(sc, Rational(v)); };
    for (std::size_t n : {1u, 2u, 3u}) {
        Matrix block(2 * n, std::vector<Poly>(2 * n, c(0)));
        for (std::size_t i = 0; i < n; ++i) {
            block[2 * i][2 * i + 1] = c(1);
            block[2 * i + 1][2 * i] = c(-1);
        }
        CHECK(pfaffian(block) == c(1));
    }

    // the (0 I; -I 0) form equals +-1, sign (-1)^{n(n-1)/2} in this convention
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        Matrix sympl(2 * n, std::vector<Poly>(2 * n, c(0)));
        for (std::size_t i = 0; i < n; ++i) {
            sympl[i][n + i] = c(1);
            sympl[n + i][i] = c(-1);
        }
        long sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(pfaffian(sympl) == c(sign));
    }

    CHECK_THROWS_AS(pfaffian(Matrix{{c(0), c(1), c(2)},
                                    {c(-1), c(0), c(3)},
                                    {c(-2), c(-3), c(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(Matrix{{c(0), c(1)}, {c(1), c(0)}}),
                    std::invalid_argument);
}

TEST_CASE("pfaffian equals the definition sum and squares to the determinant") {
    std::mt19937 rng(31337u);
    for (std::size_t n : {2u, 4u, 6u}) {
        for (int rep = 0; rep < 3; ++rep) {
            Matrix m = random_skew(n, rng);
            CHECK(pfaffian(m) == pfaffian_by_definition(m));
        }
    }
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int rep = 0; rep < 10; ++rep) {
            Matrix m = random_skew(n, rng);
            Poly pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
        }
    }
    for (std::size_t n : {3u, 5u, 7u}) {
        Matrix m = random_skew(n, rng);
        CHECK(determinant(m).is_zero());
    }
}
