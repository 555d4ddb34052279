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

#include "polarity/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <nlohmann/json.hpp>

namespace polarity::harness {
namespace {

using Json = nlohmann::ordered_json;

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Shortest text that reads back to the same double.
std::string Real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvRow(std::string& out, const std::string& corpus, Method m,
            std::optional<double> snr, const Tally& t) {
  out += CsvField(corpus);
  out += ',';
  out += ToString(m);
  out += snr ? ",noisy," + Real(*snr) : std::string(",clean,");
  out += ',' + std::to_string(t.trials());
  out += ',' + std::to_string(t.correct);
  out += ',' + std::to_string(t.wrong);
  out += ',' + std::to_string(t.indeterminate);
  out += ',' + std::to_string(t.errors);
  out += ',' + Fixed(t.percent_correct(), 4);
  out += ',' + Fixed(t.detection_error_rate(), 6);
  out += '\n';
}

std::string RenderCsv(std::span<const EvalReport> reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const EvalReport& r : reports) {
    for (Method m : r.methods) CsvRow(out, r.corpus, m, std::nullopt, r.per_method.at(m));
  }
  for (const EvalReport& r : reports) {
    for (Method m : r.methods) {
      auto it = r.per_snr.find(m);
      if (it == r.per_snr.end()) continue;
      for (const auto& [snr, t] : it->second) CsvRow(out, r.corpus, m, snr, t);
    }
  }
  return out;
}

Json TallyJson(const Tally& t) {
  Json j;
  j["trials"] = t.trials();
  j["correct"] = t.correct;
  j["false"] = t.wrong;
  j["indeterminate"] = t.indeterminate;
  j["errors"] = t.errors;
  j["percent_correct"] = t.percent_correct();
  j["detection_error_rate"] = t.detection_error_rate();
  return j;
}

Json ReportJson(const EvalReport& r) {
  Json j;
  j["corpus"] = r.corpus;
  j["methods"] = Json::array();
  for (Method m : r.methods) j["methods"].push_back(ToString(m));
  j["per_method"] = Json::object();
  for (Method m : r.methods) j["per_method"][std::string(ToString(m))] = TallyJson(r.per_method.at(m));
  j["per_snr"] = Json::object();
  for (Method m : r.methods) {
    auto it = r.per_snr.find(m);
    if (it == r.per_snr.end()) continue;
    Json levels = Json::array();
    for (const auto& [snr, t] : it->second) {
      Json row;
      row["snr_db"] = snr;
      row.update(TallyJson(t));
      levels.push_back(std::move(row));
    }
    j["per_snr"][std::string(ToString(m))] = std::move(levels);
  }
  j["symmetry_violations"] = r.symmetry_violations;
  j["per_file"] = Json::array();
  for (const TrialRecord& t : r.per_file) {
    Json row;
    row["path"] = t.path;
    row["kind"] = ToString(t.kind);
    row["method"] = ToString(t.method);
    row["snr_db"] = t.snr_db ? Json(*t.snr_db) : Json(nullptr);
    row["negated"] = t.negated;
    row["expected"] = ToString(t.expected);
    if (t.error.empty()) {
      row["decision"] = ToString(t.decided);
      row["positive_slope_votes"] = t.positive_slope_votes;
      row["negative_slope_votes"] = t.negative_slope_votes;
      row["anchors_used"] = t.anchors_used;
      row["statistic"] = t.statistic ? Json(*t.statistic) : Json(nullptr);
      row["correct"] = t.correct();
    } else {
      row["error"] = t.error;
      row["correct"] = false;
    }
    j["per_file"].push_back(std::move(row));
  }
  return j;
}

std::string RenderJson(std::span<const EvalReport> reports) {
  Json j;
  j["corpora"] = Json::array();
  for (const EvalReport& r : reports) j["corpora"].push_back(ReportJson(r));
  return j.dump(2) + "\n";
}

std::string Pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  return left ? s + std::string(width - s.size(), ' ') : std::string(width - s.size(), ' ') + s;
}

// Layout of the clean-corpus table: per method, correct count, false count
// (wrong plus indeterminate) and percent correct.
std::string RenderTable(std::span<const EvalReport> reports) {
  std::vector<Method> methods;
  for (const EvalReport& r : reports) {
    for (Method m : r.methods) {
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
    }
  }
  std::size_t name_w = 8;
  for (const EvalReport& r : reports) name_w = std::max(name_w, r.corpus.size() + 2);

  constexpr std::size_t kCol = 12;
  std::string out;
  out += Pad("", name_w, true);
  for (Method m : methods) out += "| " + Pad(std::string(ToString(m)), 3 * kCol, true);
  out += "\n" + Pad("Corpus", name_w, true);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    out += "| " + Pad("Corr.", kCol) + Pad("False", kCol) + Pad("% Correct", kCol);
  }
  out += "\n" + std::string(name_w + methods.size() * (3 * kCol + 2), '-') + "\n";

  auto emit = [&](const std::string& name, auto tally_for) {
    out += Pad(name, name_w, true);
    for (Method m : methods) {
      const std::optional<Tally> t = tally_for(m);
      if (!t) {
        out += "| " + Pad("-", kCol) + Pad("-", kCol) + Pad("-", kCol);
        continue;
      }
      out += "| " + Pad(std::to_string(t->correct), kCol) +
             Pad(std::to_string(t->wrong + t->indeterminate), kCol) +
             Pad(Fixed(t->percent_correct(), 2), kCol);
    }
    out += "\n";
  };
  for (const EvalReport& r : reports) {
    emit(r.corpus, [&](Method m) -> std::optional<Tally> {
      auto it = r.per_method.find(m);
      if (it == r.per_method.end()) return std::nullopt;
      return it->second;
    });
  }
  if (reports.size() > 1) {
    emit("Total", [&](Method m) -> std::optional<Tally> {
      Tally sum;
      for (const EvalReport& r : reports) {
        auto it = r.per_method.find(m);
        if (it == r.per_method.end()) continue;
        sum.correct += it->second.correct;
        sum.wrong += it->second.wrong;
        sum.indeterminate += it->second.indeterminate;
        sum.errors += it->second.errors;
      }
      return sum;
    });
  }

  // Noise sweep: detection error rate in percent, one column per level.
  for (const EvalReport& r : reports) {
    if (r.per_snr.empty()) continue;
    std::vector<double> levels;
    for (const auto& [m, by_snr] : r.per_snr) {
      for (const auto& [snr, t] : by_snr) {
        if (std::find(levels.begin(), levels.end(), snr) == levels.end()) levels.push_back(snr);
      }
    }
    std::sort(levels.begin(), levels.end());
    out += "\nDetection error rate (%), " + r.corpus + "\n" + Pad("SNR (dB)", name_w, true);
    for (double snr : levels) out += Pad(Real(snr), kCol);
    out += "\n";
    for (Method m : r.methods) {
      auto it = r.per_snr.find(m);
      if (it == r.per_snr.end()) continue;
      out += Pad(std::string(ToString(m)), name_w, true);
      for (double snr : levels) {
        auto t = it->second.find(snr);
        out += Pad(t == it->second.end() ? "-" : Fixed(100.0 * t->second.detection_error_rate(), 3),
                   kCol);
      }
      out += "\n";
    }
  }

  bool any_errors = false;
  for (const EvalReport& r : reports) {
    if (r.symmetry_violations > 0) {
      out += "\nINTERNAL CONSISTENCY FAILURE: " + std::to_string(r.symmetry_violations) +
             " negated trial(s) in " + r.corpus + " did not flip\n";
    }
    for (const auto& [m, t] : r.per_method) any_errors |= t.errors > 0;
  }
  if (any_errors) out += "\nSome files could not be evaluated; see the json report for details.\n";
  return out;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  if (text == "table") return ReportFormat::kTable;
  return std::nullopt;
}

std::optional<ReportFormat> FormatForPath(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".csv")) return ReportFormat::kCsv;
  if (ends_with(".json")) return ReportFormat::kJson;
  if (ends_with(".txt")) return ReportFormat::kTable;
  return std::nullopt;
}

std::string RenderReport(std::span<const EvalReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return RenderCsv(reports);
    case ReportFormat::kJson:
      return RenderJson(reports);
    case ReportFormat::kTable:
      break;
  }
  return RenderTable(reports);
}

std::string RenderReport(const EvalReport& report, ReportFormat format) {
  return RenderReport(std::span<const EvalReport>(&report, 1), format);
}

}  // namespace polarity::harness
