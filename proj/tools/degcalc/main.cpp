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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degcalc/numtheory.hpp"
#include "degcalc/verify.hpp"

namespace {

using degcalc::exact::Rational;
using degcalc::intersect::CalibrationTarget;
using degcalc::intersect::ExecMode;
using degcalc::intersect::OddFactor;
using degcalc::intersect::PairingConvention;
using degcalc::intersect::ZPairing;
using degcalc::ring::Poly;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int max_genus_cap() {
    const char* env = std::getenv("DEGCALC_MAX_G");
    if (!env || !*env) return 8;
    int cap = std::atoi(env);
    return cap >= 2 ? cap : 8;
}

void check_genus_arg(int g) {
    int cap = max_genus_cap();
    if (g < 2 || g > cap) {
        throw CLI::ValidationError("--g", "genus must be between 2 and " +
                                             std::to_string(cap) +
                                             " (override with DEGCALC_MAX_G)");
    }
}

std::pair<int, int> parse_g_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        int g = std::atoi(text.c_str());
        if (g == 0) throw CLI::ValidationError("--g-range", "expected A..B or a genus");
        return {g, g};
    }
    int a = std::atoi(text.substr(0, sep).c_str());
    int b = std::atoi(text.substr(sep + 2).c_str());
    if (a == 0 || b == 0 || b < a) {
        throw CLI::ValidationError("--g-range", "expected A..B with A <= B");
    }
    return {a, b};
}

PairingConvention make_convention(const std::string& factor, const std::string& z) {
    PairingConvention conv;
    if (factor == "pow-g") {
        conv.odd_factor = OddFactor::PowG;
    } else if (factor != "pow-q") {
        throw CLI::ValidationError("--convention", "expected pow-q or pow-g");
    }
    if (z == "printed") {
        conv.z_pairing = ZPairing::PrintedZForm;
    } else if (z != "fiber") {
        throw CLI::ValidationError("--z-pairing", "expected fiber or printed");
    }
    return conv;
}

std::string monomial_name(const degcalc::intersect::PairingRow& row) {
    std::ostringstream out;
    bool first = true;
    auto put = [&](const char* name, long e) {
        if (e == 0) return;
        if (!first) out << "*";
        out << name;
        if (e > 1) out << "^" << e;
        first = false;
    };
    put("h", row.h);
    put("a", row.m);
    put("b", row.n);
    put("c", row.p);
    if (first) out << "1";
    return out.str();
}

int cmd_pairs(int g, bool hecke, const std::string& format,
              const PairingConvention& conv, ExecMode mode) {
    auto rows = degcalc::intersect::pairing_table(g, hecke, conv, mode);
    if (format == "csv") {
        std::cout << degcalc::intersect::pairing_table_csv(rows);
    } else if (format == "json") {
        std::cout << degcalc::intersect::pairing_table_json(rows);
    } else {
        for (const auto& row : rows) {
            std::cout << "(" << monomial_name(row)
                      << ") = " << degcalc::exact::to_string(row.value) << "\n";
        }
    }
    return kExitOk;
}

struct DegreeRow {
    int g;
    Rational value;
    std::string provenance;
};

int cmd_degrees(int type, long index, int g_lo, int g_hi, const std::string& format,
                const PairingConvention& conv) {
    std::vector<DegreeRow> rows;
    for (int g = g_lo; g <= g_hi; ++g) {
        check_genus_arg(g);
        DegreeRow row{g, Rational(0), ""};
        if (type == 2 && index == 3) {
            Poly cls = degcalc::loci::skew_locus_class(
                3, degcalc::loci::SkewContext::OddModuli);
            row.value = degcalc::intersect::evaluate_degree(cls, g, conv);
            row.provenance = "pipeline class, odd-moduli pairing (" +
                             std::string(conv.odd_factor == OddFactor::PowQ
                                             ? "pow-q"
                                             : "pow-g") +
                             ")";
        } else if (type == 2 && index == 4) {
            Poly cls = degcalc::loci::skew4_class_variant(conv.skew4_variant);
            long ell = 3L * g - 9;
            if (ell < 0) {
                throw CLI::ValidationError("--g-range",
                                           "locus has negative dimension at g=" +
                                               std::to_string(g));
            }
            row.value = degcalc::intersect::evaluate_degree_hecke(cls, g, ell, conv);
            row.provenance =
                std::string(conv.skew4_variant == degcalc::loci::Skew4Variant::Printed
                                ? "printed variant"
                                : "literal-form variant") +
                ", " + conv.even_degree.describe();
        } else if (type == 3) {
            Poly cls = degcalc::loci::section_locus_class(index);
            long codim = degcalc::loci::expected_codim(
                degcalc::loci::LocusSpec::section_count(g, index));
            long ell = 3L * g - 3 - codim;
            if (ell < 0) {
                throw CLI::ValidationError("--g-range",
                                           "locus has negative dimension at g=" +
                                               std::to_string(g));
            }
            row.value = degcalc::intersect::evaluate_degree_hecke(cls, g, ell, conv);
            row.provenance = "printed class, " + conv.even_degree.describe();
        } else {
            throw CLI::ValidationError("--type", "supported: --type 2 --nu {3,4}, "
                                                 "--type 3 --n {0,1,2}");
        }
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            arr.push_back({{"g", row.g},
                           {"degree", degcalc::exact::to_string(row.value)},
                           {"provenance", row.provenance}});
        }
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "g,degree,provenance\n";
        for (const auto& row : rows) {
            std::cout << row.g << ',' << degcalc::exact::to_string(row.value) << ",\""
                      << row.provenance << "\"\n";
        }
    } else {
        for (const auto& row : rows) {
            std::cout << "g=" << row.g
                      << "  degree=" << degcalc::exact::to_string(row.value) << "  ["
                      << row.provenance << "]\n";
        }
    }
    return kExitOk;
}

std::vector<CalibrationTarget> parse_targets(const nlohmann::json& arr,
                                             const char* what) {
    std::vector<CalibrationTarget> out;
    for (const auto& item : arr) {
        std::string kind = item.at("kind").get<std::string>();
        int g = item.at("g").get<int>();
        Rational value =
            degcalc::exact::rational_from_string(item.at("value").get<std::string>());
        if (kind == "skew4-degree") {
            out.push_back(CalibrationTarget::skew_degree(g, value));
        } else if (kind == "section-degree") {
            out.push_back(
                CalibrationTarget::section_degree(item.at("n").get<long>(), g, value));
        } else {
            throw std::invalid_argument(std::string(what) +
                                        ": unknown target kind '" + kind + "'");
        }
    }
    return out;
}

int cmd_calibrate(const std::string& path, const std::string& format, ExecMode mode) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open targets file: " << path << "\n";
        return kExitUsage;
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    auto targets = parse_targets(doc.at("targets"), "targets");
    std::vector<CalibrationTarget> holdouts;
    if (doc.contains("holdouts")) {
        holdouts = parse_targets(doc.at("holdouts"), "holdouts");
    }
    auto report = degcalc::intersect::calibrate_even_degree(targets, holdouts, mode);

    if (format == "json") {
        std::cout << degcalc::intersect::calibration_report_json(report);
    } else {
        std::cout << "targets:\n";
        for (const auto& t : report.targets) std::cout << "  " << t.describe() << "\n";
        if (!report.holdouts.empty()) {
            std::cout << "holdouts:\n";
            for (const auto& t : report.holdouts) {
                std::cout << "  " << t.describe() << "\n";
            }
        }
        if (report.solutions.empty()) {
            std::cout << "no configuration reproduces every target; near misses:\n";
            for (const auto& m : report.near_misses) {
                std::cout << "  " << m.config.describe() << " -> ";
                for (std::size_t i = 0; i < m.target_values.size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << degcalc::exact::to_string(m.target_values[i]);
                }
                std::cout << "\n";
            }
        } else {
            std::cout << "solutions:\n";
            for (const auto& s : report.solutions) {
                std::cout << "  " << s.config.describe();
                if (!report.holdouts.empty()) {
                    std::cout << "  holdouts: ";
                    for (std::size_t i = 0; i < s.holdout_values.size(); ++i) {
                        if (i) std::cout << ", ";
                        std::cout << degcalc::exact::to_string(s.holdout_values[i]);
                    }
                    std::cout << (s.holdouts_ok ? "  [validated]" : "  [mismatch]");
                }
                std::cout << "\n";
            }
        }
    }
    return report.solved() ? kExitOk : kExitFail;
}

int cmd_verify(bool json, ExecMode mode) {
    auto report = degcalc::verify::run_all(mode);
    if (json) {
        std::cout << degcalc::verify::to_json(report);
    } else {
        std::cout << degcalc::verify::to_text(report);
    }
    return report.ok() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "degcalc: exact degeneracy-locus classes and moduli intersection numbers "
        "for rank-2 bundles on curves"};
    app.require_subcommand(1);

    bool serial = false;
    app.add_flag("--serial", serial, "run the data-parallel kernels serially");

    // pairs
    auto* pairs = app.add_subcommand("pairs", "top-degree intersection pairings");
    int pairs_g = 2;
    bool pairs_hecke = false;
    std::string pairs_format = "text", pairs_factor = "pow-q", pairs_z = "fiber";
    pairs->add_option("--g", pairs_g, "genus")->required();
    pairs->add_flag("--hecke", pairs_hecke, "pairings with one H factor on the Hecke graph");
    pairs->add_option("--format", pairs_format, "text|json|csv");
    pairs->add_option("--convention", pairs_factor, "pow-q|pow-g");
    pairs->add_option("--z-pairing", pairs_z, "fiber|printed");

    // degrees
    auto* degrees = app.add_subcommand("degrees", "degrees of the known loci");
    int deg_type = 0;
    long deg_nu = -1, deg_n = -1;
    std::string deg_range, deg_format = "text", deg_factor = "pow-q",
                deg_variant = "printed";
    degrees->add_option("--type", deg_type, "2 (hom-count) or 3 (section-count)")
        ->required();
    degrees->add_option("--nu", deg_nu, "hom-count index (3 or 4)");
    degrees->add_option("--n", deg_n, "section-count index (0, 1 or 2)");
    degrees->add_option("--g-range", deg_range, "A..B")->required();
    degrees->add_option("--format", deg_format, "text|json|csv");
    degrees->add_option("--convention", deg_factor, "pow-q|pow-g");
    degrees->add_option("--variant", deg_variant,
                        "printed|literal-form (weight-6 hom-count class)");

    // bn
    auto* bn = app.add_subcommand("bn", "expected dimensions and indices");
    int bn_g = 0;
    long bn_r = -1, bn_d = -1, bn_n = -1, bn_nu = -1, bn_degf = 0;
    bool bn_type3 = false, bn_type2 = false;
    bn->add_option("--g", bn_g, "genus")->required();
    bn->add_option("--r", bn_r, "classic: sections minus one");
    bn->add_option("--d", bn_d, "classic: degree");
    bn->add_flag("--type3", bn_type3, "section-count locus");
    bn->add_option("--n", bn_n, "section-count index");
    bn->add_flag("--type2", bn_type2, "hom-count locus");
    bn->add_option("--nu", bn_nu, "hom-count index");
    auto* degf_opt = bn->add_option("--deg-f", bn_degf, "degree of the fixed bundle");

    // castelnuovo
    auto* cast = app.add_subcommand("castelnuovo",
                                    "point count of a zero-dimensional classic locus");
    int cast_g = 0;
    long cast_r = 0, cast_d = 0;
    cast->add_option("--g", cast_g, "genus")->required();
    cast->add_option("--r", cast_r, "sections minus one")->required();
    cast->add_option("--d", cast_d, "degree")->required();

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate",
                                         "search the even-moduli degree convention");
    std::string cal_targets, cal_format = "text";
    calibrate->add_option("--targets", cal_targets, "JSON targets file")->required();
    calibrate->add_option("--format", cal_format, "text|json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "emit the JSON report");

    try {
        app.parse(argc, argv);
        ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;

        if (*pairs) {
            check_genus_arg(pairs_g);
            return cmd_pairs(pairs_g, pairs_hecke, pairs_format,
                             make_convention(pairs_factor, pairs_z), mode);
        }
        if (*degrees) {
            auto [lo, hi] = parse_g_range(deg_range);
            PairingConvention conv = make_convention(deg_factor, "fiber");
            if (deg_variant == "literal-form") {
                conv.skew4_variant = degcalc::loci::Skew4Variant::LiteralForm;
            } else if (deg_variant != "printed") {
                throw CLI::ValidationError("--variant", "expected printed or literal-form");
            }
            long index = deg_type == 2 ? deg_nu : deg_n;
            if (index < 0) {
                throw CLI::ValidationError(
                    "--type", "--type 2 needs --nu, --type 3 needs --n");
            }
            return cmd_degrees(deg_type, index, lo, hi, deg_format, conv);
        }
        if (*bn) {
            check_genus_arg(bn_g);
            nlohmann::json out;
            if (bn_type3) {
                auto spec = degcalc::loci::LocusSpec::section_count(bn_g, bn_n);
                out = {{"kind", "section-count"},
                       {"g", bn_g},
                       {"n", bn_n},
                       {"expected_codim", degcalc::loci::expected_codim(spec)},
                       {"expected_dim", degcalc::loci::expected_dim(spec)}};
            } else if (bn_type2) {
                auto spec = degcalc::loci::LocusSpec::hom_count(
                    bn_g, bn_nu,
                    degf_opt->count() ? std::optional<long>(bn_degf) : std::nullopt);
                out = {{"kind", "hom-count"},
                       {"g", bn_g},
                       {"nu", bn_nu},
                       {"expected_codim", degcalc::loci::expected_codim(spec)},
                       {"expected_dim", degcalc::loci::expected_dim(spec)}};
            } else {
                if (bn_r < 0 || bn_d < 0) {
                    throw CLI::ValidationError("--r", "classic mode needs --r and --d");
                }
                long rho = degcalc::loci::brill_noether_rho(bn_g, bn_r, bn_d);
                out = {{"kind", "classic"},
                       {"g", bn_g},
                       {"r", bn_r},
                       {"d", bn_d},
                       {"rho", rho}};
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (*cast) {
            check_genus_arg(cast_g);
            long rho = degcalc::loci::brill_noether_rho(cast_g, cast_r, cast_d);
            if (rho != 0) {
                std::cerr << "expected dimension is " << rho
                          << "; the point count needs rho = 0\n";
                return kExitUsage;
            }
            Rational count = Rational(degcalc::exact::factorial(cast_g)) *
                             degcalc::loci::lambda_coeff(cast_r, cast_d, cast_g);
            std::cout << degcalc::exact::to_string(count) << "\n";
            return kExitOk;
        }
        if (*calibrate) {
            return cmd_calibrate(cal_targets, cal_format, mode);
        }
        if (*verify) {
            return cmd_verify(verify_json, mode);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
