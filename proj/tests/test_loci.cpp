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

#include "degcalc/loci.hpp"
#include "degcalc/numtheory.hpp"

using namespace degcalc::loci;
using degcalc::exact::make_rational;
using degcalc::exact::Rational;
using degcalc::ring::Poly;
using degcalc::ring::Ring;
using degcalc::ring::RingSpec;
using degcalc::symfun::ChernSeries;
using degcalc::symfun::ChSeries;

TEST_CASE("brill-noether numbers") {
    CHECK(brill_noether_rho(4, 1, 3) == 0);
    CHECK(brill_noether_rho(6, 1, 4) == 0);
    CHECK(brill_noether_rho(5, 0, 4) == 4);   // theta divisor: rho = g-1
    CHECK(brill_noether_rho(3, 2, 1) == -9);  // may be negative
}

TEST_CASE("expected codimensions") {
    CHECK(expected_codim(LocusSpec::section_count(7, 3)) == 15);
    CHECK(expected_dim(LocusSpec::section_count(7, 3)) == 3);
    CHECK(expected_codim(LocusSpec::skew(3, 3)) == 3);
    CHECK(expected_codim(LocusSpec::section_count(3, 1)) == 6);
    CHECK(expected_dim(LocusSpec::section_count(3, 1)) == 0);
    CHECK(expected_codim(LocusSpec::hom_count(3, 3)) == 3);
    CHECK(expected_codim(LocusSpec::general(3, 1, 2, 3)) == 2);
    CHECK(expected_codim(LocusSpec::symmetric(3, 2)) == 3);
    CHECK(expected_codim(LocusSpec::lagrangian(3, 2)) == 3);
    CHECK(expected_codim(LocusSpec::classic(4, 1, 3)) == 4);  // g - rho
    CHECK_THROWS_AS(LocusSpec::hom_count(3, 3, 2), std::invalid_argument);
    CHECK_NOTHROW(LocusSpec::hom_count(3, 3, 5));
    CHECK_THROWS_AS(LocusSpec::classic(1, 0, 1), std::invalid_argument);
}

TEST_CASE("lambda coefficients") {
    CHECK(lambda_coeff(0, 4, 5) == 1);  // theta-divisor case, d = g-1
    CHECK(lambda_coeff(1, 3, 4) == make_rational(1, 12));
    CHECK(lambda_coeff(1, 4, 6) == make_rational(1, 144));
    CHECK_THROWS_AS(lambda_coeff(0, 8, 5), std::domain_error);

    // the classical pencil counts
    CHECK(Rational(degcalc::exact::factorial(4)) * lambda_coeff(1, 3, 4) == 2);
    CHECK(Rational(degcalc::exact::factorial(6)) * lambda_coeff(1, 4, 6) == 5);
}

TEST_CASE("classic locus classes") {
    Poly theta_case = classic_locus_class(0, 4, 5);
    CHECK(theta_case.str() == "t");

    Poly pencil = classic_locus_class(1, 3, 4);
    CHECK(pencil == Poly::parse(theta_ring(4), "1/12*t^4"));

    // weight 6 exceeds the top weight g = 4: the class truncates to zero
    CHECK(classic_locus_class(1, 2, 4).is_zero());
}

TEST_CASE("porteous classes") {
    Ring ring = RingSpec::make({{"c1", 1}, {"c2", 2}, {"c3", 3}, {"c4", 4}});
    ChernSeries cf{ring, {Poly::generator(ring, "c1"), Poly::generator(ring, "c2"),
                          Poly::generator(ring, "c3"), Poly::generator(ring, "c4")}};
    CHECK(porteous_class(2, cf, 2, 3) == Poly::constant(ring, Rational(1)));
    CHECK(porteous_class(0, cf, 1, 1) == cf.at(1));
    // one-step rank drop of a square map: a single c_1, matching codimension 1
    CHECK(porteous_class(1, cf, 2, 2) == cf.at(1));
    // full kernel of a rank-2 -> rank-1 map: the 2x2 determinant c_1^2 - c_2
    CHECK(porteous_class(0, cf, 2, 1) == cf.at(1) * cf.at(1) - cf.at(2));
    CHECK_THROWS_AS(porteous_class(3, cf, 2, 2), std::invalid_argument);
}

TEST_CASE("symmetric and skew degeneracy classes") {
    Ring ring = RingSpec::make(
        {{"c1", 1}, {"c2", 2}, {"c3", 3}, {"c4", 4}, {"c5", 5}, {"c6", 6}, {"c7", 7}});
    ChernSeries c{ring, {}};
    for (long k = 1; k <= 7; ++k) {
        c.c.push_back(Poly::generator(ring, "c" + std::to_string(k)));
    }

    CHECK(harris_tu_symmetric(0, c) == Poly::constant(ring, Rational(1)));
    CHECK(harris_tu_symmetric(1, c) == c.at(1).scaled(Rational(2)));
    CHECK(harris_tu_symmetric(2, c) ==
          (c.at(1) * c.at(2) - c.at(3)).scaled(Rational(4)));

    CHECK(harris_tu_skew(2, c) == c.at(1));
    CHECK(harris_tu_skew(3, c) == c.at(1) * c.at(2) - c.at(3));
    CHECK(harris_tu_skew(1, c) == Poly::constant(ring, Rational(1)));
    CHECK(harris_tu_skew(0, c) == Poly::constant(ring, Rational(1)));

    // weight matches the expected codimension of the skew locus
    for (long nu = 2; nu <= 5; ++nu) {
        Poly cls = harris_tu_skew(nu, c);
        CHECK(cls.is_homogeneous());
        CHECK(cls.weight() == expected_codim(LocusSpec::skew(2, nu)));
    }
}

TEST_CASE("pushforward characters on the odd moduli space") {
    ChSeries ch = pushforward_ch_odd(3);
    Ring ring = ch.ring;
    CHECK(ch.at(1) == Poly::parse(ring, "-1/2*a"));
    CHECK(ch.at(3) == Poly::parse(ring, "-1/48*a*b + 1/12*c"));
    CHECK(ch.at(5) == Poly::parse(ring, "-1/3840*a*b^2 + 1/480*b*c"));
    CHECK(ch.placeholder_degrees.count(2) == 1);
    CHECK(ch.placeholder_degrees.count(4) == 1);
    CHECK(ch.at(2).uses_generator("e2"));
}

TEST_CASE("pushforward characters on the Hecke graph substitute back") {
    ChSeries hecke = pushforward_ch_hecke(3);
    CHECK(hecke.at(1) == Poly::parse(hecke.ring, "-h"));
    CHECK(hecke.at(3) == Poly::parse(hecke.ring, "-1/24*h*b + 1/12*c"));

    ChSeries odd = pushforward_ch_odd(3);
    Poly half_a = Poly::generator(hecke.ring, "a").scaled(make_rational(1, 2));
    for (long k : {1L, 3L, 5L}) {
        Poly substituted = hecke.at(k).substituted("h", half_a).cast_to(odd.ring);
        CHECK(substituted == odd.at(k));
    }
}

TEST_CASE("skew locus classes through the pipeline") {
    Poly odd3 = skew_locus_class(3, SkewContext::OddModuli);
    CHECK(odd3 == Poly::parse(odd_class_ring(), "1/24*a^3 - 1/24*a*b + 1/6*c"));

    // double-dualizing the inputs leaves the class unchanged
    Poly again = skew_locus_class(3, SkewContext::OddModuli);
    CHECK(odd3 == again);

    Poly hecke4 = skew_locus_class(4, SkewContext::HeckeGraph);
    CHECK(hecke4 == skew4_class_variant(Skew4Variant::Printed));
    CHECK(hecke4 != skew4_class_variant(Skew4Variant::LiteralForm));

    // the two retained variants differ exactly in the h^4 b and h^3 c terms
    Poly diff = skew4_class_variant(Skew4Variant::Printed) -
                skew4_class_variant(Skew4Variant::LiteralForm);
    CHECK(diff == Poly::parse(hecke_class_ring(), "-1/72*h^4*b + 1/36*h^3*c"));

    CHECK_THROWS_AS(skew_locus_class(5, SkewContext::OddModuli),
                    std::invalid_argument);
}

TEST_CASE("skew classes across the two contexts") {
    // the Hecke-graph rank-3 class
    Poly hecke3 = skew_locus_class(3, SkewContext::HeckeGraph);
    CHECK(hecke3 ==
          Poly::parse(hecke_class_ring(), "1/3*h^3 - 1/12*h*b + 1/6*c"));

    // substituting h := a/2 turns each Hecke class into the odd-moduli one
    Poly half_a =
        Poly::generator(hecke_class_ring(), "a").scaled(make_rational(1, 2));
    CHECK(hecke3.substituted("h", half_a).cast_to(odd_class_ring()) ==
          skew_locus_class(3, SkewContext::OddModuli));

    Poly hecke4 = skew_locus_class(4, SkewContext::HeckeGraph);
    CHECK(hecke4.substituted("h", half_a).cast_to(odd_class_ring()) ==
          skew_locus_class(4, SkewContext::OddModuli));
}

TEST_CASE("pipeline ignores the placeholder values") {
    // rescale the opaque even components and rerun the derivation by hand
    ChSeries ch = pushforward_ch_odd(2);
    ch.comp[2] = ch.comp[2].scaled(Rational(7));
    ChSeries dual = degcalc::symfun::dualize_ch(ch);
    ChernSeries chern = degcalc::symfun::ch_to_chern(dual, 3);
    Poly cls = harris_tu_skew(3, chern);
    CHECK(cls.cast_to(odd_class_ring()) ==
          Poly::parse(odd_class_ring(), "1/24*a^3 - 1/24*a*b + 1/6*c"));
}

TEST_CASE("printed section locus classes") {
    Poly n0 = section_locus_class(0);
    CHECK(n0.is_homogeneous());
    CHECK(n0.weight() == 3);
    Poly n1 = section_locus_class(1);
    CHECK(n1.weight() == 6);
    CHECK(n1.coefficient({{"h", 6}}) == make_rational(1, 360));
    Poly n2 = section_locus_class(2);
    CHECK(n2.weight() == 10);
    CHECK(n2.term_count() == 12);
    CHECK_THROWS_AS(section_locus_class(3), std::invalid_argument);
}

TEST_CASE("canonical exponents") {
    CHECK(canonical_exponent(CanonicalFamily::SectionCount, 3) == -1);
    CHECK(canonical_exponent(CanonicalFamily::HomCount, 3) == -1);
    CHECK(canonical_exponent(CanonicalFamily::HomCount, 5) == 0);
    CHECK(canonical_exponent(CanonicalFamily::SectionCount, 7) == 1);
    CHECK_THROWS_AS(canonical_exponent(CanonicalFamily::HomCount, 4),
                    std::domain_error);
    // negative exactly below index 5
    for (long idx : {1L, 3L, 5L, 7L, 9L}) {
        CHECK((canonical_exponent(CanonicalFamily::HomCount, idx) < 0) == (idx < 5));
    }
}

TEST_CASE("hom parity") {
    CHECK(hom_parity_ok(3, 1));
    CHECK_FALSE(hom_parity_ok(3, 2));
    CHECK(hom_parity_ok(0, 0));
}
