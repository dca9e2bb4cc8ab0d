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

// Compares the serial reference paths against the OpenMP ones on the
// data-parallel kernels and checks that the outputs agree exactly.

#include <chrono>
#include <cstdio>

#include "degcalc/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using degcalc::intersect::ExecMode;

template <typename Fn>
double time_ms(const Fn& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "equal");

    {
        std::vector<degcalc::intersect::PairingRow> serial_rows, parallel_rows;
        double s = time_ms([&] {
            for (int g = 2; g <= 9; ++g) {
                auto rows = degcalc::intersect::pairing_table(g, false, {},
                                                              ExecMode::Serial);
                serial_rows.insert(serial_rows.end(), rows.begin(), rows.end());
            }
        });
        double p = time_ms([&] {
            for (int g = 2; g <= 9; ++g) {
                auto rows = degcalc::intersect::pairing_table(g, false, {},
                                                              ExecMode::Parallel);
                parallel_rows.insert(parallel_rows.end(), rows.begin(), rows.end());
            }
        });
        bool equal = serial_rows.size() == parallel_rows.size();
        for (std::size_t i = 0; equal && i < serial_rows.size(); ++i) {
            equal = serial_rows[i].value == parallel_rows[i].value;
        }
        std::printf("%-34s %12.2f %12.2f %9s\n", "pairing tables, g=2..9", s, p,
                    equal ? "yes" : "NO");
    }

    {
        using degcalc::exact::Rational;
        using degcalc::intersect::CalibrationTarget;
        std::vector<CalibrationTarget> targets = {
            CalibrationTarget::section_degree(1, 3, Rational(1)),
            CalibrationTarget::skew_degree(4, Rational(6)),
        };
        std::vector<CalibrationTarget> holdouts = {
            CalibrationTarget::skew_degree(5, Rational(256)),
            CalibrationTarget::skew_degree(6, Rational(28640)),
        };
        degcalc::intersect::CalibrationReport serial_report, parallel_report;
        double s = time_ms([&] {
            serial_report = degcalc::intersect::calibrate_even_degree(
                targets, holdouts, ExecMode::Serial);
        });
        double p = time_ms([&] {
            parallel_report = degcalc::intersect::calibrate_even_degree(
                targets, holdouts, ExecMode::Parallel);
        });
        bool equal =
            degcalc::intersect::calibration_report_json(serial_report) ==
            degcalc::intersect::calibration_report_json(parallel_report);
        std::printf("%-34s %12.2f %12.2f %9s\n", "calibration grid search", s, p,
                    equal ? "yes" : "NO");
    }

    {
        degcalc::verify::Report serial_report, parallel_report;
        double s = time_ms(
            [&] { serial_report = degcalc::verify::run_all(ExecMode::Serial); });
        double p = time_ms(
            [&] { parallel_report = degcalc::verify::run_all(ExecMode::Parallel); });
        bool equal = degcalc::verify::to_json(serial_report) ==
                     degcalc::verify::to_json(parallel_report);
        std::printf("%-34s %12.2f %12.2f %9s\n", "verification suite", s, p,
                    equal ? "yes" : "NO");
    }
    return 0;
}
