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

#include "polarity/config_file.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "polarity/errors.h"

namespace polarity::harness {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double ToDouble(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DataError("config key " + std::string(key) + ": '" + std::string(v) +
                    "' is not a number");
  }
  return out;
}

int ToInt(std::string_view key, std::string_view v) {
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DataError("config key " + std::string(key) + ": '" + std::string(v) +
                    "' is not an integer");
  }
  return out;
}

std::string Num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void Validate(const DetectorConfig& cfg) {
  epochs::Validate(cfg.zff);
  hp::Validate(cfg.hp);
  reskew::Validate(cfg.lp);
}

void ApplySetting(DetectorConfig& cfg, std::string_view key, std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "zff.trend_window_ms") {
    if (value == "auto") {
      cfg.zff.trend_window_ms.reset();
    } else {
      cfg.zff.trend_window_ms = ToDouble(key, value);
    }
  } else if (key == "zff.trend_passes") {
    cfg.zff.trend_passes = ToInt(key, value);
  } else if (key == "zff.mean_pitch_fallback_hz") {
    cfg.zff.mean_pitch_fallback_hz = ToDouble(key, value);
  } else if (key == "hp.peak_search_ms") {
    cfg.hp.peak_search_ms = ToDouble(key, value);
  } else if (key == "hp.zc_search_ms") {
    cfg.hp.zc_search_ms = ToDouble(key, value);
  } else if (key == "hp.min_votes") {
    cfg.hp.min_votes = ToInt(key, value);
  } else if (key == "hp.prominence_floor") {
    cfg.hp.prominence_floor = ToDouble(key, value);
  } else if (key == "hp.slope_sign_for_positive") {
    cfg.hp.slope_sign_for_positive = ToInt(key, value);
  } else if (key == "lp.order") {
    cfg.lp.order = value == "auto" ? 0 : ToInt(key, value);
  } else if (key == "lp.frame_ms") {
    cfg.lp.frame_ms = ToDouble(key, value);
  } else if (key == "lp.hop_ms") {
    cfg.lp.hop_ms = ToDouble(key, value);
  } else if (key == "lp.integrator_pole") {
    cfg.lp.integrator_pole = ToDouble(key, value);
  } else {
    throw DataError("unknown config key '" + std::string(key) + "'");
  }
}

void ApplyAssignment(DetectorConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw DataError("expected key=value, got '" + std::string(assignment) + "'");
  }
  ApplySetting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void ApplyConfigText(DetectorConfig& cfg, std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    try {
      ApplyAssignment(cfg, line);
    } catch (const DataError& e) {
      throw DataError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void ApplyConfigFile(DetectorConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  ApplyConfigText(cfg, buf.str());
}

std::vector<std::pair<std::string, std::string>> ListSettings(const DetectorConfig& cfg) {
  return {
      {"zff.trend_window_ms",
       cfg.zff.trend_window_ms ? Num(*cfg.zff.trend_window_ms) : std::string("auto")},
      {"zff.trend_passes", std::to_string(cfg.zff.trend_passes)},
      {"zff.mean_pitch_fallback_hz", Num(cfg.zff.mean_pitch_fallback_hz)},
      {"hp.peak_search_ms", Num(cfg.hp.peak_search_ms)},
      {"hp.zc_search_ms", Num(cfg.hp.zc_search_ms)},
      {"hp.min_votes", std::to_string(cfg.hp.min_votes)},
      {"hp.prominence_floor", Num(cfg.hp.prominence_floor)},
      {"hp.slope_sign_for_positive", std::to_string(cfg.hp.slope_sign_for_positive)},
      {"lp.order", cfg.lp.order == 0 ? std::string("auto") : std::to_string(cfg.lp.order)},
      {"lp.frame_ms", Num(cfg.lp.frame_ms)},
      {"lp.hop_ms", Num(cfg.lp.hop_ms)},
      {"lp.integrator_pole", Num(cfg.lp.integrator_pole)},
  };
}

}  // namespace polarity::harness
