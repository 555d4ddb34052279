// Copyright 2026 The polarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text renderings of evaluation reports.  csv and json are stable byte for
// byte for a given report; table is for people.

#ifndef POLARITY_REPORT_H_
#define POLARITY_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "polarity/evaluation.h"

namespace polarity::harness {

enum class ReportFormat { kCsv, kJson, kTable };

std::optional<ReportFormat> ParseReportFormat(std::string_view text);

// Picks csv or json from a file extension; nullopt otherwise.
std::optional<ReportFormat> FormatForPath(std::string_view path);

// One row per (corpus, method) for clean trials, then one per
// (corpus, method, snr) when a sweep was run.
inline constexpr std::string_view kCsvHeader =
    "corpus,method,condition,snr_db,trials,correct,false,indeterminate,errors,"
    "percent_correct,detection_error_rate";

std::string RenderReport(std::span<const EvalReport> reports, ReportFormat format);
std::string RenderReport(const EvalReport& report, ReportFormat format);

}  // namespace polarity::harness

#endif  // POLARITY_REPORT_H_
