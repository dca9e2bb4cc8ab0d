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

#ifndef DEGCALC_INTERSECT_HPP
#define DEGCALC_INTERSECT_HPP

#include <string>
#include <vector>

#include "degcalc/loci.hpp"

namespace degcalc::intersect {

using exact::Rational;
using ring::Poly;
using ring::Ring;

/// Run data-parallel kernels serially (reference) or with OpenMP.
enum class ExecMode { Serial, Parallel };

/// The odd-moduli pairing carries a factor that the degree formula pins to
/// (2^q - 2); the (2^g - 2) variant is the literal transcription, kept for
/// the documented-discrepancy checks.
enum class OddFactor { PowQ, PowG };

/// Hecke-graph pairings: FiberRule pushes H^k down with the quadratic rewrite
/// and integrates u * H over the fibers; PrintedZForm is the transcribed
/// two-branch closed form (defined only for a single H factor).
enum class ZPairing { FiberRule, PrintedZForm };

/// Degree convention for loci pulled back from the even moduli space:
/// value = fiber_factor * Integral_Z( class * divisor^ell * alpha ), with
/// divisor = h_coef * H + alpha_coef * alpha. The shipped default is the
/// calibrated one (divisor = H, fiber factor 1/2).
struct EvenDegreeRule {
    Rational h_coef;
    Rational alpha_coef;
    Rational fiber_factor;

    Poly divisor_poly(const Ring& hecke) const;
    std::string describe() const;
};

EvenDegreeRule calibrated_even_degree_rule();

struct PairingConvention {
    OddFactor odd_factor = OddFactor::PowQ;
    ZPairing z_pairing = ZPairing::FiberRule;
    EvenDegreeRule even_degree = calibrated_even_degree_rule();
    loci::Skew4Variant skew4_variant = loci::Skew4Variant::Printed;
};

/// Ring (h, a, b, c) with the h rule and top weight 3g-2 (the Hecke graph).
Ring hecke_ring(int g);
/// Ring (a, b, c) with top weight 3g-3 (the odd moduli space).
Ring odd_ring(int g);

/**
 * Intersection number (a^m b^n c^p) on the odd moduli space:
 *   (-1)^{p-g} * g! m! / ((g-p)! q!) * 2^{2g-2-p} * F * B_q,
 * q = m + p + 1 - g, F = 2^q - 2 (PowQ) or 2^g - 2 (PowG); zero when q < 0.
 * Requires m + 2n + 3p = 3g - 3.
 */
Rational pair_odd(int g, long m, long n, long p,
                  const PairingConvention& conv = {});

/// (a^{3g-3}) via pair_odd.
Rational degree_odd_moduli(int g, const PairingConvention& conv = {});

/// The closed form (-1)^g (3g-3)!/(2g-2)! 2^{2g-2} (2^{2g-2}-2) B_{2g-2},
/// used as the oracle the PowQ/PowG choice is tested against.
Rational degree_odd_moduli_closed_form(int g);

/// (H^a a^m b^n c^p) on the Hecke graph; a + m + 2n + 3p = 3g - 2.
/// PrintedZForm additionally requires a = 1.
Rational pair_hecke(int g, long a, long m, long n, long p,
                    const PairingConvention& conv = {});

/// Degree of a homogeneous class over (a, b, c) against a^{3g-3-codim}.
Rational evaluate_degree(const Poly& cls, int g,
                         const PairingConvention& conv = {});

/// Even-moduli degree of a homogeneous Hecke-graph class:
/// fiber_factor * Integral_Z(class * divisor^ell * alpha); ell is the locus
/// dimension in the even moduli space; weight(class) + ell + 1 = 3g - 2.
Rational evaluate_degree_hecke(const Poly& cls, int g, long ell,
                               const PairingConvention& conv = {});

// --- calibration -----------------------------------------------------------

struct CalibrationTarget {
    enum class Kind { SkewDegree, SectionDegree };
    Kind kind;
    long index = 0;  // nu for SkewDegree (only 4 supported), n for SectionDegree
    int g = 2;
    Rational value;

    static CalibrationTarget skew_degree(int g, const Rational& value);
    static CalibrationTarget section_degree(long n, int g, const Rational& value);
    std::string describe() const;
};

struct CalibrationConfig {
    EvenDegreeRule rule;
    loci::Skew4Variant variant;
    std::string describe() const;
};

struct CalibrationResult {
    CalibrationConfig config;
    std::vector<Rational> target_values;
    bool targets_ok = false;
    std::vector<Rational> holdout_values;
    bool holdouts_ok = false;
};

struct CalibrationReport {
    std::vector<CalibrationTarget> targets, holdouts;
    /// Configurations reproducing every target, in grid order, with their
    /// held-out validation results.
    std::vector<CalibrationResult> solutions;
    /// When no configuration matches all targets: the best near misses.
    std::vector<CalibrationResult> near_misses;

    bool solved() const { return !solutions.empty(); }
    /// Solutions that also pass every held-out target.
    std::vector<CalibrationResult> validated() const;
};

/**
 * Exhaustive search over divisor = x*H + y*alpha for x, y in {-2, ..., 2}
 * in half-integer steps, fiber factor in {1/2, 1}, and both retained class
 * variants. Deterministic result order (x, then y, then factor, then
 * variant); the grid may be evaluated in parallel. Throws on empty targets.
 */
CalibrationReport calibrate_even_degree(
    const std::vector<CalibrationTarget>& targets,
    const std::vector<CalibrationTarget>& holdouts = {},
    ExecMode mode = ExecMode::Parallel);

// --- tables ----------------------------------------------------------------

struct PairingRow {
    int g = 2;
    long h = 0, m = 0, n = 0, p = 0;
    Rational value;
};

/// All top-degree monomial pairings for one genus, ordered by m desc, n desc.
/// hecke = true lists (H a^m b^n c^p) on the Hecke graph instead.
std::vector<PairingRow> pairing_table(int g, bool hecke,
                                      const PairingConvention& conv = {},
                                      ExecMode mode = ExecMode::Parallel);

std::string pairing_table_csv(const std::vector<PairingRow>& rows);
std::string pairing_table_json(const std::vector<PairingRow>& rows);
std::string calibration_report_json(const CalibrationReport& report);

}  // namespace degcalc::intersect

#endif
