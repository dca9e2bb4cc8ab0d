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

#include "degcalc/intersect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "degcalc/numtheory.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degcalc::intersect {

using exact::bernoulli;
using exact::factorial;
using exact::Int;
using exact::make_rational;
using exact::pow_int;
using ring::RingSpec;

namespace {

/// Deterministic task-parallel loop: each index writes only its own slot.
template <typename Fn>
void for_each_index(std::size_t count, ExecMode mode, const Fn& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

void check_genus(int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
}

}  // namespace

Poly EvenDegreeRule::divisor_poly(const Ring& hecke) const {
    return Poly::generator(hecke, "h").scaled(h_coef) +
           Poly::generator(hecke, "a").scaled(alpha_coef);
}

std::string EvenDegreeRule::describe() const {
    std::ostringstream out;
    out << "divisor=" << exact::to_string(h_coef) << "*h+"
        << exact::to_string(alpha_coef) << "*a, fiber=" << exact::to_string(fiber_factor);
    return out.str();
}

EvenDegreeRule calibrated_even_degree_rule() {
    return EvenDegreeRule{Rational(1), Rational(0), make_rational(1, 2)};
}

Ring hecke_ring(int g) {
    check_genus(g);
    return RingSpec::make({{"h", 1}, {"a", 1}, {"b", 2}, {"c", 3}}, 3 * g - 2, "h");
}

Ring odd_ring(int g) {
    check_genus(g);
    return RingSpec::make({{"a", 1}, {"b", 2}, {"c", 3}}, 3 * g - 3);
}

Rational pair_odd(int g, long m, long n, long p, const PairingConvention& conv) {
    check_genus(g);
    if (m < 0 || n < 0 || p < 0 || m + 2 * n + 3 * p != 3L * g - 3) {
        throw std::invalid_argument("pairing monomial must have top degree 3g-3");
    }
    if (p > g) throw std::invalid_argument("c-exponent exceeds the genus");
    long q = m + p + 1 - g;
    if (q < 0) return Rational(0);
    Rational bq = bernoulli(q);
    if (bq == 0) return Rational(0);

    Rational value = make_rational(factorial(g) * factorial(m),
                                   factorial(g - p) * factorial(q));
    value *= Rational(pow_int(Int(2), static_cast<unsigned long>(2 * g - 2 - p)));
    long f_exp = conv.odd_factor == OddFactor::PowQ ? q : g;
    value *= Rational(pow_int(Int(2), static_cast<unsigned long>(f_exp)) - 2);
    value *= bq;
    if ((p - g) % 2 != 0) value = -value;
    return value;
}

Rational degree_odd_moduli(int g, const PairingConvention& conv) {
    return pair_odd(g, 3L * g - 3, 0, 0, conv);
}

Rational degree_odd_moduli_closed_form(int g) {
    check_genus(g);
    Rational value = make_rational(factorial(3 * g - 3), factorial(2 * g - 2));
    Int two_pow = pow_int(Int(2), static_cast<unsigned long>(2 * g - 2));
    value *= Rational(two_pow) * Rational(two_pow - 2);
    value *= bernoulli(2 * g - 2);
    if (g % 2 != 0) value = -value;
    return value;
}

namespace {

/// Integral over Z of a normalized Hecke-ring polynomial (every H power
/// already <= 1): the u*H part integrates to the odd-moduli pairing of u,
/// H-free terms integrate to zero.
Rational integrate_hecke(const Poly& reduced, int g, const PairingConvention& conv) {
    const Ring& ring = reduced.ring();
    int hi = ring->index_of("h");
    int ai = ring->index_of("a");
    int bi = ring->index_of("b");
    int ci = ring->index_of("c");
    Rational total(0);
    reduced.for_each_term([&](const std::vector<int>& e, const Rational& coef) {
        if (e[static_cast<std::size_t>(hi)] != 1) return;
        total += coef * pair_odd(g, e[static_cast<std::size_t>(ai)],
                                 e[static_cast<std::size_t>(bi)],
                                 e[static_cast<std::size_t>(ci)], conv);
    });
    return total;
}

}  // namespace

Rational pair_hecke(int g, long a, long m, long n, long p,
                    const PairingConvention& conv) {
    check_genus(g);
    if (a < 0 || m < 0 || n < 0 || p < 0 ||
        a + m + 2 * n + 3 * p != 3L * g - 2) {
        throw std::invalid_argument("pairing monomial must have top degree 3g-2");
    }

    if (conv.z_pairing == ZPairing::PrintedZForm) {
        if (a != 1) {
            throw std::invalid_argument(
                "the printed Hecke pairing form is defined for a single H factor");
        }
        long q = m + p + 1 - g;
        if (q < 0) return Rational(0);
        Rational value;
        if (q != 0) {
            Rational bq = bernoulli(q);
            if (bq == 0) return Rational(0);
            value = make_rational(factorial(g) * factorial(m),
                                  factorial(g - p) * factorial(q));
            value *= bq;
            if ((p + g) % 2 != 0) value = -value;
        } else {
            value = make_rational(factorial(g) * factorial(m) * m, factorial(g - p));
            if ((p + g + 1) % 2 != 0) value = -value;
        }
        value *= Rational(pow_int(Int(2), static_cast<unsigned long>(g)));
        return value;
    }

    Ring ring = hecke_ring(g);
    Poly mono = Poly::monomial(ring,
                               {{"h", static_cast<int>(a)},
                                {"a", static_cast<int>(m)},
                                {"b", static_cast<int>(n)},
                                {"c", static_cast<int>(p)}},
                               Rational(1));
    auto [u, v] = mono.reduce_h();
    Poly h = Poly::generator(ring, "h");
    return integrate_hecke(u * h, g, conv);
}

Rational evaluate_degree(const Poly& cls, int g, const PairingConvention& conv) {
    check_genus(g);
    if (!cls.is_homogeneous()) {
        throw std::invalid_argument("degree evaluation needs a homogeneous class");
    }
    if (cls.is_zero()) return Rational(0);
    Ring ring = odd_ring(g);
    Poly inside = cls.cast_to(ring);
    long pad = 3L * g - 3 - cls.weight();
    if (pad < 0) {
        throw std::invalid_argument("class weight exceeds the moduli dimension");
    }
    Poly total = inside * Poly::generator(ring, "a").pow(pad);
    int ai = ring->index_of("a"), bi = ring->index_of("b"), ci = ring->index_of("c");
    Rational out(0);
    total.for_each_term([&](const std::vector<int>& e, const Rational& coef) {
        out += coef * pair_odd(g, e[static_cast<std::size_t>(ai)],
                               e[static_cast<std::size_t>(bi)],
                               e[static_cast<std::size_t>(ci)], conv);
    });
    return out;
}

Rational evaluate_degree_hecke(const Poly& cls, int g, long ell,
                               const PairingConvention& conv) {
    check_genus(g);
    if (!cls.is_homogeneous()) {
        throw std::invalid_argument("degree evaluation needs a homogeneous class");
    }
    if (ell < 0) throw std::invalid_argument("negative divisor power");
    if (cls.is_zero()) return Rational(0);
    if (cls.weight() + ell + 1 != 3L * g - 2) {
        throw std::invalid_argument("class weight + divisor powers must fill dim Z");
    }
    Ring ring = hecke_ring(g);
    Poly inside = cls.cast_to(ring);  // H powers reduce here
    Poly divisor = conv.even_degree.divisor_poly(ring);
    Poly total = inside * divisor.pow(ell) * Poly::generator(ring, "a");
    return conv.even_degree.fiber_factor * integrate_hecke(total, g, conv);
}

// --- calibration -------------------------------------------------------------

CalibrationTarget CalibrationTarget::skew_degree(int g, const Rational& value) {
    return CalibrationTarget{Kind::SkewDegree, 4, g, value};
}

CalibrationTarget CalibrationTarget::section_degree(long n, int g,
                                                    const Rational& value) {
    return CalibrationTarget{Kind::SectionDegree, n, g, value};
}

std::string CalibrationTarget::describe() const {
    std::ostringstream out;
    if (kind == Kind::SkewDegree) {
        out << "skew nu=4 degree, g=" << g;
    } else {
        out << "section locus n=" << index << " degree, g=" << g;
    }
    out << " -> " << exact::to_string(value);
    return out.str();
}

std::string CalibrationConfig::describe() const {
    std::ostringstream out;
    out << rule.describe() << ", variant="
        << (variant == loci::Skew4Variant::Printed ? "printed" : "literal-form");
    return out.str();
}

namespace {

Rational evaluate_target(const CalibrationTarget& target,
                         const CalibrationConfig& config) {
    PairingConvention conv;
    conv.even_degree = config.rule;
    conv.skew4_variant = config.variant;
    Poly cls;
    long codim = 0;
    if (target.kind == CalibrationTarget::Kind::SkewDegree) {
        cls = loci::skew4_class_variant(config.variant);
        codim = 6;
    } else {
        cls = loci::section_locus_class(target.index);
        codim = loci::expected_codim(
            loci::LocusSpec::section_count(target.g, target.index));
    }
    long ell = 3L * target.g - 3 - codim;
    if (ell < 0) {
        throw std::invalid_argument("calibration target has negative dimension");
    }
    return evaluate_degree_hecke(cls, target.g, ell, conv);
}

}  // namespace

std::vector<CalibrationResult> CalibrationReport::validated() const {
    std::vector<CalibrationResult> out;
    for (const auto& r : solutions) {
        if (r.holdouts_ok) out.push_back(r);
    }
    return out;
}

namespace {

/// Fails fast (and on the calling thread) for targets the grid loop would
/// otherwise trip over inside a parallel region.
void validate_target(const CalibrationTarget& t) {
    check_genus(t.g);
    long codim = 6;
    if (t.kind == CalibrationTarget::Kind::SectionDegree) {
        loci::section_locus_class(t.index);  // throws for unsupported n
        codim = loci::expected_codim(loci::LocusSpec::section_count(t.g, t.index));
    } else if (t.index != 4) {
        throw std::invalid_argument("skew calibration targets support nu = 4 only");
    }
    if (3L * t.g - 3 - codim < 0) {
        throw std::invalid_argument("calibration target has negative dimension");
    }
}

}  // namespace

CalibrationReport calibrate_even_degree(
    const std::vector<CalibrationTarget>& targets,
    const std::vector<CalibrationTarget>& holdouts, ExecMode mode) {
    if (targets.empty()) {
        throw std::invalid_argument("calibration needs at least one target");
    }
    for (const auto& t : targets) validate_target(t);
    for (const auto& t : holdouts) validate_target(t);

    std::vector<CalibrationConfig> grid;
    for (int xi = -4; xi <= 4; ++xi) {
        for (int yi = -4; yi <= 4; ++yi) {
            for (int f = 0; f < 2; ++f) {
                for (int v = 0; v < 2; ++v) {
                    EvenDegreeRule rule{make_rational(xi, 2), make_rational(yi, 2),
                                        f == 0 ? make_rational(1, 2) : Rational(1)};
                    grid.push_back(CalibrationConfig{
                        rule, v == 0 ? loci::Skew4Variant::Printed
                                     : loci::Skew4Variant::LiteralForm});
                }
            }
        }
    }

    long max_g = 2;
    for (const auto& t : targets) max_g = std::max<long>(max_g, t.g);
    for (const auto& t : holdouts) max_g = std::max<long>(max_g, t.g);
    exact::bernoulli_reserve(2 * max_g - 2);

    std::vector<CalibrationResult> results(grid.size());
    for_each_index(grid.size(), mode, [&](std::size_t i) {
        CalibrationResult r;
        r.config = grid[i];
        r.targets_ok = true;
        for (const auto& t : targets) {
            Rational got = evaluate_target(t, grid[i]);
            r.target_values.push_back(got);
            if (got != t.value) r.targets_ok = false;
        }
        if (r.targets_ok) {
            r.holdouts_ok = true;
            for (const auto& t : holdouts) {
                Rational got = evaluate_target(t, grid[i]);
                r.holdout_values.push_back(got);
                if (got != t.value) r.holdouts_ok = false;
            }
        }
        results[i] = std::move(r);
    });

    CalibrationReport report;
    report.targets = targets;
    report.holdouts = holdouts;
    for (auto& r : results) {
        if (r.targets_ok) report.solutions.push_back(std::move(r));
    }
    if (report.solutions.empty()) {
        // best-effort near misses: most targets matched, then grid order
        auto matched = [&](const CalibrationResult& r) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < targets.size(); ++i) {
                if (r.target_values[i] == targets[i].value) ++count;
            }
            return count;
        };
        std::vector<std::size_t> order(results.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return matched(results[a]) > matched(results[b]);
                         });
        std::size_t keep = std::min<std::size_t>(order.size(), 10);
        for (std::size_t i = 0; i < keep; ++i) {
            report.near_misses.push_back(results[order[i]]);
        }
    }
    return report;
}

// --- tables ------------------------------------------------------------------

std::vector<PairingRow> pairing_table(int g, bool hecke,
                                      const PairingConvention& conv,
                                      ExecMode mode) {
    check_genus(g);
    long degree = 3L * g - 3;
    std::vector<PairingRow> rows;
    for (long p = 0; 3 * p <= degree; ++p) {
        for (long n = 0; 2 * n + 3 * p <= degree; ++n) {
            long m = degree - 2 * n - 3 * p;
            rows.push_back(PairingRow{g, hecke ? 1 : 0, m, n, p, Rational(0)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const PairingRow& x, const PairingRow& y) {
        if (x.m != y.m) return x.m > y.m;
        return x.n > y.n;
    });
    exact::bernoulli_reserve(2L * g - 2);
    for_each_index(rows.size(), mode, [&](std::size_t i) {
        PairingRow& r = rows[i];
        r.value = hecke ? pair_hecke(g, 1, r.m, r.n, r.p, conv)
                        : pair_odd(g, r.m, r.n, r.p, conv);
    });
    return rows;
}

std::string pairing_table_csv(const std::vector<PairingRow>& rows) {
    std::ostringstream out;
    out << "g,H,a,b,c,value\n";
    for (const auto& r : rows) {
        out << r.g << ',' << r.h << ',' << r.m << ',' << r.n << ',' << r.p << ','
            << exact::to_string(r.value) << '\n';
    }
    return out.str();
}

std::string pairing_table_json(const std::vector<PairingRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"g", r.g},
                       {"monomial",
                        {{"H", r.h}, {"a", r.m}, {"b", r.n}, {"c", r.p}}},
                       {"value", exact::to_string(r.value)}});
    }
    return arr.dump(2) + "\n";
}

namespace {

nlohmann::json result_json(const CalibrationResult& r,
                           const std::vector<CalibrationTarget>& targets,
                           const std::vector<CalibrationTarget>& holdouts) {
    nlohmann::json out;
    out["divisor"] = {{"h", exact::to_string(r.config.rule.h_coef)},
                      {"a", exact::to_string(r.config.rule.alpha_coef)}};
    out["fiber_factor"] = exact::to_string(r.config.rule.fiber_factor);
    out["variant"] =
        r.config.variant == loci::Skew4Variant::Printed ? "printed" : "literal-form";
    nlohmann::json tv = nlohmann::json::array();
    for (std::size_t i = 0; i < r.target_values.size(); ++i) {
        tv.push_back({{"target", targets[i].describe()},
                      {"computed", exact::to_string(r.target_values[i])}});
    }
    out["targets"] = tv;
    nlohmann::json hv = nlohmann::json::array();
    for (std::size_t i = 0; i < r.holdout_values.size(); ++i) {
        hv.push_back({{"target", holdouts[i].describe()},
                      {"computed", exact::to_string(r.holdout_values[i])}});
    }
    out["holdouts"] = hv;
    out["targets_ok"] = r.targets_ok;
    out["holdouts_ok"] = r.holdouts_ok;
    return out;
}

}  // namespace

std::string calibration_report_json(const CalibrationReport& report) {
    nlohmann::json out;
    nlohmann::json targets = nlohmann::json::array();
    for (const auto& t : report.targets) targets.push_back(t.describe());
    out["targets"] = targets;
    nlohmann::json holdouts = nlohmann::json::array();
    for (const auto& t : report.holdouts) holdouts.push_back(t.describe());
    out["holdouts"] = holdouts;
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& r : report.solutions) {
        solutions.push_back(result_json(r, report.targets, report.holdouts));
    }
    out["solutions"] = solutions;
    nlohmann::json misses = nlohmann::json::array();
    for (const auto& r : report.near_misses) {
        misses.push_back(result_json(r, report.targets, report.holdouts));
    }
    out["near_misses"] = misses;
    return out.dump(2) + "\n";
}

}  // namespace degcalc::intersect
