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

#include "degcalc/intersect.hpp"

using namespace degcalc::intersect;
using degcalc::exact::is_integer;
using degcalc::exact::make_rational;
using degcalc::exact::Rational;
using degcalc::loci::section_locus_class;
using degcalc::loci::skew4_class_variant;
using degcalc::loci::Skew4Variant;
using degcalc::loci::skew_locus_class;
using degcalc::loci::SkewContext;
using degcalc::ring::Poly;

TEST_CASE("odd-moduli pairings, frozen values") {
    // g = 2
    CHECK(pair_odd(2, 3, 0, 0) == 4);
    CHECK(pair_odd(2, 1, 1, 0) == -4);
    CHECK(pair_odd(2, 0, 0, 1) == 4);
    // g = 3
    CHECK(pair_odd(3, 6, 0, 0) == 224);
    CHECK(pair_odd(3, 4, 1, 0) == -64);
    CHECK(pair_odd(3, 3, 0, 1) == 24);
    CHECK(pair_odd(3, 2, 2, 0) == 32);
    CHECK(pair_odd(3, 1, 1, 1) == -24);
    CHECK(pair_odd(3, 0, 0, 2) == 24);
    CHECK(pair_odd(3, 0, 3, 0) == 0);  // q = -2 < 0
    // g = 4 spot checks
    CHECK(pair_odd(4, 9, 0, 0) == 47616);
    CHECK(pair_odd(4, 7, 1, 0) == -6272);
    CHECK(pair_odd(4, 6, 0, 1) == 1792);
    CHECK(pair_odd(4, 3, 3, 0) == -384);
    CHECK(pair_odd(4, 0, 0, 3) == 192);

    CHECK_THROWS_AS(pair_odd(2, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(pair_odd(1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("odd-moduli degree and its closed form") {
    CHECK(degree_odd_moduli(2) == 4);
    CHECK(degree_odd_moduli(3) == 224);
    for (int g = 2; g <= 12; ++g) {
        CHECK(degree_odd_moduli(g) == degree_odd_moduli_closed_form(g));
    }
    PairingConvention literal;
    literal.odd_factor = OddFactor::PowG;
    CHECK(degree_odd_moduli(2, literal) == degree_odd_moduli_closed_form(2));
    for (int g = 3; g <= 12; ++g) {
        CHECK(degree_odd_moduli(g, literal) != degree_odd_moduli_closed_form(g));
    }
}

TEST_CASE("hecke pairings") {
    CHECK(pair_hecke(2, 1, 3, 0, 0) == 4);
    CHECK(pair_hecke(2, 2, 2, 0, 0) == 4);  // u_2 = a, the rest integrates to 0
    CHECK(pair_hecke(2, 3, 1, 0, 0) == 2);  // u_3 = (3a^2 + b)/4
    CHECK(pair_hecke(2, 4, 0, 0, 0) == 0);  // u_4 = (a^3 + a b)/2 integrates to 0

    // every pure pullback (no H factor) integrates to zero
    CHECK(pair_hecke(2, 0, 4, 0, 0) == 0);
    CHECK(pair_hecke(3, 0, 7, 0, 0) == 0);

    PairingConvention printed;
    printed.z_pairing = ZPairing::PrintedZForm;
    CHECK(pair_hecke(2, 1, 1, 1, 0, printed) == -4);
    CHECK(pair_hecke(2, 1, 3, 0, 0, printed) == 2);  // halves the fiber-rule 4
    CHECK_THROWS_AS(pair_hecke(2, 2, 2, 0, 0, printed), std::invalid_argument);

    CHECK_THROWS_AS(pair_hecke(2, 1, 1, 1, 1), std::invalid_argument);

    // fiber-rule consistency across all single-H monomials
    for (int g = 2; g <= 5; ++g) {
        long degree = 3L * g - 3;
        for (long p = 0; 3 * p <= degree; ++p) {
            for (long n = 0; 2 * n + 3 * p <= degree; ++n) {
                long m = degree - 2 * n - 3 * p;
                CHECK(pair_hecke(g, 1, m, n, p) == pair_odd(g, m, n, p));
            }
        }
    }
}

TEST_CASE("pairing integrality in range") {
    for (int g = 2; g <= 6; ++g) {
        for (const auto& row : pairing_table(g, false, {}, ExecMode::Serial)) {
            CHECK(is_integer(row.value));
        }
    }
}

TEST_CASE("degree evaluation on the odd moduli space") {
    Poly cls = skew_locus_class(3, SkewContext::OddModuli);
    CHECK(evaluate_degree(cls, 2) == 1);
    CHECK(evaluate_degree(cls, 3) == 16);
    CHECK(evaluate_degree(cls, 4) == 2544);
    CHECK(evaluate_degree(cls, 5) == 1231616);

    Poly one = Poly::constant(degcalc::loci::odd_class_ring(), Rational(1));
    CHECK(evaluate_degree(one, 2) == 4);  // reduces to the moduli degree

    Poly mixed = Poly::parse(degcalc::loci::odd_class_ring(), "a + b");
    CHECK_THROWS_AS(evaluate_degree(mixed, 3), std::invalid_argument);
}

TEST_CASE("even-moduli degrees under the calibrated convention") {
    // genus-3 single point
    CHECK(evaluate_degree_hecke(section_locus_class(1), 3, 0) == 1);
    // genus-4 cubic threefold
    CHECK(evaluate_degree_hecke(section_locus_class(1), 4, 3) == 3);
    // genus-3 cone over the Veronese surface has degree 4
    CHECK(evaluate_degree_hecke(section_locus_class(0), 3, 3) == 4);

    // the genus-5 two-dimensional section locus is a plane carrying twice the
    // polarization generator: degree 2^2
    CHECK(evaluate_degree_hecke(section_locus_class(2), 5, 2) == 4);

    // the printed weight-6 class reproduces 6, 256, 28640
    Poly printed = skew4_class_variant(Skew4Variant::Printed);
    CHECK(evaluate_degree_hecke(printed, 4, 3) == 6);
    CHECK(evaluate_degree_hecke(printed, 5, 6) == 256);
    CHECK(evaluate_degree_hecke(printed, 6, 9) == 28640);

    CHECK_THROWS_AS(evaluate_degree_hecke(printed, 4, 2), std::invalid_argument);
}

TEST_CASE("calibration search") {
    using Target = CalibrationTarget;

    CHECK_THROWS_AS(calibrate_even_degree({}, {}, ExecMode::Serial),
                    std::invalid_argument);

    // the point count alone keeps the default rule among the solutions
    auto point_only = calibrate_even_degree(
        {Target::section_degree(1, 3, Rational(1))}, {}, ExecMode::Serial);
    bool default_found = false;
    for (const auto& s : point_only.solutions) {
        if (s.config.rule.h_coef == 1 && s.config.rule.alpha_coef == 0 &&
            s.config.rule.fiber_factor == make_rational(1, 2) &&
            s.config.variant == Skew4Variant::Printed) {
            default_found = true;
        }
    }
    CHECK(default_found);

    // adding the degree targets pins the convention and the variant
    auto full = calibrate_even_degree(
        {Target::section_degree(1, 3, Rational(1)),
         Target::skew_degree(4, Rational(6))},
        {Target::skew_degree(5, Rational(256)),
         Target::skew_degree(6, Rational(28640))},
        ExecMode::Serial);
    CHECK(full.solved());
    auto validated = full.validated();
    REQUIRE(!validated.empty());
    for (const auto& v : validated) {
        CHECK(v.config.variant == Skew4Variant::Printed);
    }
    bool calibrated_rule_found = false;
    for (const auto& v : validated) {
        if (v.config.rule.h_coef == 1 && v.config.rule.alpha_coef == 0 &&
            v.config.rule.fiber_factor == make_rational(1, 2)) {
            calibrated_rule_found = true;
        }
    }
    CHECK(calibrated_rule_found);
}

TEST_CASE("calibration near misses when nothing fits") {
    // an unreachable target: nothing on the grid hits 7 while also matching
    // the point count, so the report falls back to ranked near misses
    auto report = calibrate_even_degree(
        {CalibrationTarget::section_degree(1, 3, Rational(1)),
         CalibrationTarget::skew_degree(4, Rational(7))},
        {}, ExecMode::Serial);
    CHECK_FALSE(report.solved());
    REQUIRE(!report.near_misses.empty());
    // best near misses match the point count, and every listed result
    // carries the computed values for inspection
    CHECK(report.near_misses.front().target_values.size() == 2);
    CHECK(report.near_misses.front().target_values[0] == 1);
    CHECK(report.near_misses.front().target_values[1] != 7);
}

TEST_CASE("pairing tables and serialization") {
    auto rows = pairing_table(2, false, {}, ExecMode::Serial);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].m == 3);
    CHECK(rows[0].value == 4);
    CHECK(rows[1].n == 1);
    CHECK(rows[1].value == -4);
    CHECK(rows[2].p == 1);
    CHECK(rows[2].value == 4);

    std::string csv = pairing_table_csv(rows);
    CHECK(csv == "g,H,a,b,c,value\n2,0,3,0,0,4\n2,0,1,1,0,-4\n2,0,0,0,1,4\n");

    std::string json = pairing_table_json(rows);
    CHECK(json.find("\"value\": \"4\"") != std::string::npos);
    CHECK(json.find("\"monomial\"") != std::string::npos);

    auto hecke_rows = pairing_table(2, true, {}, ExecMode::Serial);
    REQUIRE(hecke_rows.size() == 3);
    CHECK(hecke_rows[0].h == 1);
    CHECK(hecke_rows[0].value == 4);
}
