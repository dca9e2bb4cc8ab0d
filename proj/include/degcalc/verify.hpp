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

#ifndef DEGCALC_VERIFY_HPP
#define DEGCALC_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "degcalc/intersect.hpp"

namespace degcalc::verify {

enum class Status { Pass, Fail, DocumentedDiscrepancy };

/// One verification line. Pass means expected == computed; a
/// documented-discrepancy records a known transcription mismatch that the
/// run re-confirms (it never fails the run); anything else is a failure.
struct ReportEntry {
    std::string check;
    std::string anchor;
    std::string expected;
    std::string computed;
    Status status = Status::Fail;
    int criterion = 0;  // 1..8 for the acceptance criteria, 0 = supplementary
};

struct Report {
    std::vector<ReportEntry> entries;

    bool ok() const;  // no failures
    int count(Status s) const;
    /// criterion number -> true when none of its entries failed
    std::map<int, bool> criterion_ok() const;
};

/// Runs the whole verification suite.
Report run_all(intersect::ExecMode mode = intersect::ExecMode::Parallel);

std::string to_text(const Report& report);
std::string to_json(const Report& report);
std::string status_name(Status s);

}  // namespace degcalc::verify

#endif
