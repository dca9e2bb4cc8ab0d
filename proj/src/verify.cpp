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

#include "degcalc/verify.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "degcalc/numtheory.hpp"

namespace degcalc::verify {

using exact::Rational;
using intersect::CalibrationTarget;
using intersect::ExecMode;
using intersect::OddFactor;
using intersect::PairingConvention;
using intersect::ZPairing;
using ring::Poly;
using ring::Ring;
using ring::RingSpec;
using symfun::ChernSeries;
using symfun::ChSeries;
using symfun::Partition;

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (const auto& v : values) parts.push_back(exact::to_string(v));
    return join(parts);
}

struct Runner {
    Report report;
    ExecMode mode;

    void add(std::string check, std::string anchor, int criterion,
             std::string expected, std::string computed) {
        Status status =
            expected == computed ? Status::Pass : Status::Fail;
        report.entries.push_back(ReportEntry{std::move(check), std::move(anchor),
                                             std::move(expected), std::move(computed),
                                             status, criterion});
    }

    /// For re-confirmed transcription mismatches: pass in the literal text and
    /// what the computation gives; `discrepancy_expected` says the two must
    /// differ (equality, or any other surprise, fails).
    void add_known_discrepancy(std::string check, std::string anchor, int criterion,
                               std::string literal, std::string computed,
                               bool pattern_holds) {
        Status status = pattern_holds ? Status::DocumentedDiscrepancy : Status::Fail;
        report.entries.push_back(ReportEntry{std::move(check), std::move(anchor),
                                             std::move(literal), std::move(computed),
                                             status, criterion});
    }

    template <typename Fn>
    void guarded(const char* check, const char* anchor, int criterion, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report.entries.push_back(ReportEntry{check, anchor, "no exception",
                                                 std::string("exception: ") + e.what(),
                                                 Status::Fail, criterion});
        }
    }
};

// --- criterion 1 ------------------------------------------------------------

void check_skew3_degrees(Runner& r) {
    r.guarded("skew3-degree-sequence", "rank-3 skew locus degrees, g=2..5", 1, [&] {
        Poly cls = loci::skew_locus_class(3, loci::SkewContext::OddModuli);
        std::vector<Rational> got;
        for (int g = 2; g <= 5; ++g) {
            got.push_back(intersect::evaluate_degree(cls, g));
        }
        r.add("skew3-degree-sequence", "rank-3 skew locus degrees, g=2..5", 1,
              "1, 16, 2544, 1231616", join_rationals(got));
    });
}

// --- criterion 2 ------------------------------------------------------------

void check_odd_degree_closed_form(Runner& r) {
    r.guarded("odd-degree-closed-form", "degree of the odd moduli space", 2, [&] {
        std::vector<Rational> closed, powq, powg;
        for (int g = 2; g <= 8; ++g) {
            closed.push_back(intersect::degree_odd_moduli_closed_form(g));
            PairingConvention q_conv;
            powq.push_back(intersect::degree_odd_moduli(g, q_conv));
            PairingConvention g_conv;
            g_conv.odd_factor = OddFactor::PowG;
            powg.push_back(intersect::degree_odd_moduli(g, g_conv));
        }
        r.add("odd-degree-closed-form[pow-q]",
              "degree of the odd moduli space, g=2..8", 2, join_rationals(closed),
              join_rationals(powq));

        bool pattern = powg[0] == closed[0];
        for (std::size_t i = 1; i < powg.size(); ++i) {
            if (powg[i] == closed[i]) pattern = false;
        }
        r.add_known_discrepancy("odd-degree-closed-form[pow-g]",
                                "literal 2^g-2 factor vs the degree display", 2,
                                join_rationals(closed), join_rationals(powg), pattern);
    });
}

// --- criterion 3 ------------------------------------------------------------

void check_skew3_pipeline(Runner& r) {
    r.guarded("skew3-pipeline-class", "rank-3 skew locus class on the odd moduli",
              3, [&] {
                  Poly cls = loci::skew_locus_class(3, loci::SkewContext::OddModuli);
                  Poly expected = Poly::parse(loci::odd_class_ring(),
                                              "1/24*a^3 - 1/24*a*b + 1/6*c");
                  r.add("skew3-pipeline-class",
                        "rank-3 skew locus class on the odd moduli", 3,
                        expected.str(), cls.str());
              });
}

// --- criterion 4 ------------------------------------------------------------

Ring ch_generator_ring(long top) {
    std::vector<ring::GeneratorSpec> gens;
    for (long k = 1; k <= top; ++k) {
        gens.push_back({"ch" + std::to_string(k), static_cast<int>(k)});
    }
    return RingSpec::make(std::move(gens));
}

/// The staircase-k Schur class written in Chern characters, with every
/// character an opaque generator (so even-degree cancellation is visible).
Poly staircase_in_ch(long k) {
    long top = 2 * k - 1;
    Ring ring = ch_generator_ring(top);
    ChSeries ch{ring, {}, {}};
    for (long i = 1; i <= top; ++i) {
        ch.comp.emplace(i, Poly::generator(ring, "ch" + std::to_string(i)));
        if (i % 2 == 0) ch.placeholder_degrees.insert(i);
    }
    ChernSeries c = symfun::ch_to_chern(ch, top);
    return symfun::schur(Partition::staircase(k), c);
}

void check_character_identities(Runner& r) {
    r.guarded("staircase2-ch-form", "skew class in characters, 2-step case", 4, [&] {
        Poly got = staircase_in_ch(2);
        Poly expected = Poly::parse(got.ring(), "1/3*ch1^3 - 2*ch3");
        r.add("staircase2-ch-form", "skew class in characters, 2-step case", 4,
              expected.str(), got.str());
    });

    r.guarded("staircase3-ch-form", "skew class in characters, 3-step case", 4, [&] {
        Poly got = staircase_in_ch(3);
        bool evens_cancel = !got.uses_generator("ch2") && !got.uses_generator("ch4");
        r.add("staircase3-even-cancellation",
              "only odd characters survive in the 3-step class", 4, "true",
              evens_cancel ? "true" : "false");

        Poly corrected = Poly::parse(
            got.ring(), "1/45*ch1^6 - 2/3*ch1^3*ch3 + 24*ch1*ch5 - 4*ch3^2");
        Poly literal = Poly::parse(
            got.ring(), "1/45*ch1^6 - 1/3*ch1^3*ch3 + 24*ch1*ch5 - 4*ch3^2");
        r.add("staircase3-ch-form", "3-step class equals the corrected closed form",
              4, corrected.str(), got.str());
        // The widely transcribed form has 1/3 where the identity forces 2/3.
        r.add_known_discrepancy(
            "staircase3-ch-form[literal]",
            "literal closed form differs in the ch1^3*ch3 coefficient", 4,
            literal.str(), got.str(), got == corrected && got != literal);
    });
}

// --- criterion 5 ------------------------------------------------------------

void check_classic(Runner& r, ExecMode mode) {
    r.guarded("castelnuovo-counts", "pencil counts on genus-4 and genus-6 curves",
              5, [&] {
                  Rational c4 = Rational(exact::factorial(4)) * loci::lambda_coeff(1, 3, 4);
                  Rational c6 = Rational(exact::factorial(6)) * loci::lambda_coeff(1, 4, 6);
                  r.add("castelnuovo-counts",
                        "pencil counts on genus-4 and genus-6 curves", 5, "2, 5",
                        exact::to_string(c4) + ", " + exact::to_string(c6));
              });

    r.guarded("classic-class-determinant-sweep",
              "rectangular determinant equals the product formula", 5, [&] {
        struct Case {
            int g;
            long rr, d;
        };
        std::vector<Case> cases;
        for (int g = 2; g <= 8; ++g) {
            for (long rr = 0; rr <= 3; ++rr) {
                for (long d = 1; d <= 2 * g - 2; ++d) {
                    if (g - d + rr >= 0) cases.push_back({g, rr, d});
                }
            }
        }
        Ring ring = RingSpec::make({{"t", 1}});  // untruncated
        Poly theta = Poly::generator(ring, "t");
        std::vector<char> okflags(cases.size(), 0);
        auto run_case = [&](std::size_t i) {
            const Case& cs = cases[i];
            long part = cs.g - cs.d + cs.rr;
            ChernSeries series{ring, {}};
            for (long k = 1; k <= part + cs.rr; ++k) {
                series.c.push_back(theta.pow(k).scaled(
                    Rational(1) / Rational(exact::factorial(k))));
            }
            Poly det =
                symfun::schur(Partition::rectangle(part, cs.rr + 1), series);
            long rho = loci::brill_noether_rho(cs.g, cs.rr, cs.d);
            Poly expected = theta.pow(cs.g - rho)
                                .scaled(loci::lambda_coeff(cs.rr, cs.d, cs.g));
            okflags[i] = det == expected ? 1 : 0;
        };
#ifdef _OPENMP
        if (mode == ExecMode::Parallel) {
            #pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(cases.size()); ++i) {
                run_case(static_cast<std::size_t>(i));
            }
        } else
#endif
        {
            (void)mode;
            for (std::size_t i = 0; i < cases.size(); ++i) run_case(i);
        }
        std::size_t good = 0;
        for (char f : okflags) good += static_cast<std::size_t>(f);
        std::ostringstream expect, got;
        expect << cases.size() << "/" << cases.size() << " identities";
        got << good << "/" << cases.size() << " identities";
        r.add("classic-class-determinant-sweep",
              "rectangular determinant equals the product formula, g<=8, r<=3", 5,
              expect.str(), got.str());
    });
}

// --- criterion 6 ------------------------------------------------------------

void check_point_count(Runner& r) {
    r.guarded("hecke-point-count-g3", "genus-3 section locus is a single point",
              6, [&] {
                  Rational got = intersect::evaluate_degree_hecke(
                      loci::section_locus_class(1), 3, 0);
                  r.add("hecke-point-count-g3",
                        "genus-3 section locus is a single point", 6, "1",
                        exact::to_string(got));
              });
}

// --- criterion 7 ------------------------------------------------------------

void check_calibration(Runner& r, ExecMode mode) {
    r.guarded("even-degree-calibration", "even-moduli degree targets 6, 256, 28640",
              7, [&] {
        std::vector<CalibrationTarget> targets = {
            CalibrationTarget::section_degree(1, 3, Rational(1)),
            CalibrationTarget::skew_degree(4, Rational(6)),
        };
        std::vector<CalibrationTarget> holdouts = {
            CalibrationTarget::skew_degree(5, Rational(256)),
            CalibrationTarget::skew_degree(6, Rational(28640)),
        };
        auto report = intersect::calibrate_even_degree(targets, holdouts, mode);
        auto validated = report.validated();

        bool unique_variant = !validated.empty();
        for (const auto& v : validated) {
            if (v.config.variant != validated.front().config.variant) {
                unique_variant = false;
            }
        }
        std::ostringstream got;
        if (validated.empty()) {
            got << "no configuration survived; near misses: ";
            std::vector<std::string> parts;
            for (const auto& m : report.near_misses) {
                parts.push_back(m.config.describe() + " -> " +
                                join_rationals(m.target_values));
            }
            got << join(parts);
            r.add("even-degree-calibration",
                  "even-moduli degree targets 6, 256, 28640", 7,
                  "a unique surviving variant", got.str());
            return;
        }
        got << validated.size() << " configuration(s); variant="
            << (validated.front().config.variant == loci::Skew4Variant::Printed
                    ? "printed"
                    : "literal-form");
        for (const auto& v : validated) {
            got << "; " << v.config.rule.describe() << " holdouts "
                << join_rationals(v.holdout_values);
        }
        r.add("even-degree-calibration", "even-moduli degree targets 6, 256, 28640",
              7,
              unique_variant ? got.str() : "a unique surviving variant",
              got.str());
    });

    r.guarded("skew4-pipeline-vs-printed", "pipeline class equals the printed one",
              0, [&] {
                  Poly pipeline =
                      loci::skew_locus_class(4, loci::SkewContext::HeckeGraph);
                  Poly printed =
                      loci::skew4_class_variant(loci::Skew4Variant::Printed);
                  r.add("skew4-pipeline-vs-printed",
                        "pipeline class equals the printed one", 0, printed.str(),
                        pipeline.str());
              });

    r.guarded("cubic-threefold-degree", "genus-4 section locus is a cubic 3-fold",
              0, [&] {
                  Rational got = intersect::evaluate_degree_hecke(
                      loci::section_locus_class(1), 4, 3);
                  r.add("cubic-threefold-degree",
                        "genus-4 section locus is a cubic 3-fold", 0, "3",
                        exact::to_string(got));
              });
}

// --- criterion 8 ------------------------------------------------------------

void check_pfaffian_properties(Runner& r) {
    r.guarded("pfaffian-square-det", "Pf(A)^2 = det(A) on random skew matrices",
              8, [&] {
        Ring scalars = RingSpec::make({});
        std::mt19937 rng(20260808u);
        std::uniform_int_distribution<int> dist(-4, 4);
        auto random_skew = [&](std::size_t nn) {
            symfun::Matrix m(nn, std::vector<Poly>(nn, Poly::zero(scalars)));
            for (std::size_t i = 0; i < nn; ++i) {
                for (std::size_t j = i + 1; j < nn; ++j) {
                    Poly v = Poly::constant(scalars, Rational(dist(rng)));
                    m[i][j] = v;
                    m[j][i] = -v;
                }
            }
            return m;
        };
        int checked = 0, good = 0;
        for (std::size_t nn : {2u, 4u, 6u, 8u}) {
            for (int rep = 0; rep < 30; ++rep) {
                auto m = random_skew(nn);
                Poly pf = symfun::pfaffian(m);
                if (pf * pf == symfun::determinant(m)) ++good;
                ++checked;
            }
        }
        int odd_good = 0, odd_checked = 0;
        for (std::size_t nn : {3u, 5u, 7u}) {
            for (int rep = 0; rep < 5; ++rep) {
                auto m = random_skew(nn);
                if (symfun::determinant(m).is_zero()) ++odd_good;
                ++odd_checked;
            }
        }
        std::ostringstream expect, got;
        expect << checked << " squares, " << odd_checked << " odd vanishings";
        got << good << " squares, " << odd_good << " odd vanishings";
        r.add("pfaffian-square-det", "Pf(A)^2 = det(A); odd skew determinants vanish",
              8, expect.str(), got.str());
    });
}

void check_bernoulli_recurrence(Runner& r) {
    r.guarded("bernoulli-recurrence", "binomial recurrence through index 30", 8, [&] {
        bool ok = true;
        for (long q = 1; q <= 30; ++q) {
            Rational acc(0);
            for (long j = 0; j <= q; ++j) {
                acc += Rational(exact::binomial(q + 1, j)) * exact::bernoulli(j);
            }
            if (acc != 0) ok = false;
        }
        for (long q = 3; q <= 31; q += 2) {
            if (exact::bernoulli(q) != 0) ok = false;
        }
        r.add("bernoulli-recurrence", "binomial recurrence through index 30", 8,
              "true", ok ? "true" : "false");
    });
}

void check_newton_roundtrip(Runner& r) {
    r.guarded("newton-roundtrip", "character conversions invert through weight 8",
              8, [&] {
        std::vector<ring::GeneratorSpec> gens;
        for (long k = 1; k <= 8; ++k) {
            gens.push_back({"c" + std::to_string(k), static_cast<int>(k)});
        }
        Ring ring = RingSpec::make(std::move(gens));
        ChernSeries c{ring, {}};
        for (long k = 1; k <= 8; ++k) {
            c.c.push_back(Poly::generator(ring, "c" + std::to_string(k)));
        }
        ChSeries ch = symfun::chern_to_ch(c, 8);
        ChernSeries back = symfun::ch_to_chern(ch, 8);
        bool ok = back.c.size() == 8;
        for (long k = 1; ok && k <= 8; ++k) {
            if (back.at(k) != c.at(k)) ok = false;
        }
        r.add("newton-roundtrip", "character conversions invert through weight 8",
              8, "true", ok ? "true" : "false");
    });
}

void check_q_parity(Runner& r) {
    r.guarded("q-parity", "q is even for every top-degree monomial, g=2..6", 8, [&] {
        bool ok = true;
        for (int g = 2; g <= 6; ++g) {
            long degree = 3L * g - 3;
            for (long p = 0; 3 * p <= degree; ++p) {
                for (long n = 0; 2 * n + 3 * p <= degree; ++n) {
                    long m = degree - 2 * n - 3 * p;
                    if ((m + p + 1 - g) % 2 != 0) ok = false;
                }
            }
        }
        r.add("q-parity", "q is even for every top-degree monomial, g=2..6", 8,
              "true", ok ? "true" : "false");
    });
}

void check_fiber_rule(Runner& r) {
    r.guarded("fiber-rule-consistency",
              "one H factor integrates like the odd moduli, g=2..5", 8, [&] {
        bool ok = true;
        for (int g = 2; g <= 5; ++g) {
            long degree = 3L * g - 3;
            for (long p = 0; 3 * p <= degree; ++p) {
                for (long n = 0; 2 * n + 3 * p <= degree; ++n) {
                    long m = degree - 2 * n - 3 * p;
                    if (intersect::pair_hecke(g, 1, m, n, p) !=
                        intersect::pair_odd(g, m, n, p)) {
                        ok = false;
                    }
                }
            }
        }
        r.add("fiber-rule-consistency",
              "one H factor integrates like the odd moduli, g=2..5", 8, "true",
              ok ? "true" : "false");
    });
}

// --- supplementary invariants -------------------------------------------------

void check_integrality(Runner& r) {
    r.guarded("pairing-integrality", "odd-moduli pairings are integers, g=2..6", 0,
              [&] {
        bool ok = true;
        for (int g = 2; g <= 6; ++g) {
            for (const auto& row : intersect::pairing_table(g, false)) {
                if (!exact::is_integer(row.value)) ok = false;
            }
        }
        r.add("pairing-integrality", "odd-moduli pairings are integers, g=2..6", 0,
              "true", ok ? "true" : "false");
    });
}

void check_printed_z_form(Runner& r) {
    r.guarded("printed-z-form", "transcribed Hecke pairing vs the fiber rule", 0,
              [&] {
        PairingConvention printed;
        printed.z_pairing = ZPairing::PrintedZForm;
        Rational fiber_a = intersect::pair_hecke(2, 1, 3, 0, 0);
        Rational printed_a = intersect::pair_hecke(2, 1, 3, 0, 0, printed);
        Rational fiber_b = intersect::pair_hecke(2, 1, 1, 1, 0);
        Rational printed_b = intersect::pair_hecke(2, 1, 1, 1, 0, printed);
        // The transcribed form halves the pure-a pairing at g=2 but agrees on
        // the mixed one; re-confirm exactly that pattern.
        bool pattern = fiber_a == Rational(4) && printed_a == Rational(2) &&
                       fiber_b == printed_b && fiber_b == Rational(-4);
        std::ostringstream literal, got;
        literal << "fiber rule: " << exact::to_string(fiber_a) << ", "
                << exact::to_string(fiber_b);
        got << "transcribed form: " << exact::to_string(printed_a) << ", "
            << exact::to_string(printed_b);
        r.add_known_discrepancy("printed-z-form",
                                "transcribed Hecke pairing vs the fiber rule", 0,
                                literal.str(), got.str(), pattern);
    });
}

}  // namespace

bool Report::ok() const {
    for (const auto& e : entries) {
        if (e.status == Status::Fail) return false;
    }
    return true;
}

int Report::count(Status s) const {
    int n = 0;
    for (const auto& e : entries) {
        if (e.status == s) ++n;
    }
    return n;
}

std::map<int, bool> Report::criterion_ok() const {
    std::map<int, bool> out;
    for (int c = 1; c <= 8; ++c) out[c] = true;
    for (const auto& e : entries) {
        if (e.criterion >= 1 && e.status == Status::Fail) out[e.criterion] = false;
    }
    return out;
}

Report run_all(intersect::ExecMode mode) {
    Runner runner{Report{}, mode};
    check_skew3_degrees(runner);
    check_odd_degree_closed_form(runner);
    check_skew3_pipeline(runner);
    check_character_identities(runner);
    check_classic(runner, mode);
    check_point_count(runner);
    check_calibration(runner, mode);
    check_pfaffian_properties(runner);
    check_bernoulli_recurrence(runner);
    check_newton_roundtrip(runner);
    check_q_parity(runner);
    check_fiber_rule(runner);
    check_integrality(runner);
    check_printed_z_form(runner);
    return runner.report;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::DocumentedDiscrepancy:
            return "documented-discrepancy";
    }
    return "unknown";
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    for (const auto& e : report.entries) {
        out << "[" << status_name(e.status) << "] " << e.check << " (" << e.anchor
            << ")\n    expected: " << e.expected << "\n    computed: " << e.computed
            << "\n";
    }
    out << report.count(Status::Pass) << " pass, " << report.count(Status::Fail)
        << " fail, " << report.count(Status::DocumentedDiscrepancy)
        << " documented-discrepancy\n";
    return out.str();
}

std::string to_json(const Report& report) {
    nlohmann::json out;
    out["version"] = "1";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"check", e.check},
                           {"anchor", e.anchor},
                           {"expected", e.expected},
                           {"computed", e.computed},
                           {"status", status_name(e.status)},
                           {"criterion", e.criterion}});
    }
    out["entries"] = entries;
    out["summary"] = {{"pass", report.count(Status::Pass)},
                      {"fail", report.count(Status::Fail)},
                      {"documented_discrepancy",
                       report.count(Status::DocumentedDiscrepancy)}};
    return out.dump(2) + "\n";
}

}  // namespace degcalc::verify
