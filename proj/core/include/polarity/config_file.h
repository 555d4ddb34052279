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

// All detector settings in one place, plus a "key = value" text format for
// overriding them:
//
//   # comments are allowed
//   zff.trend_window_ms = auto
//   hp.peak_search_ms   = 5
//   lp.order            = 18

#ifndef POLARITY_CONFIG_FILE_H_
#define POLARITY_CONFIG_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/hp_detector.h"
#include "polarity/reskew.h"
#include "polarity/zff.h"

namespace polarity::harness {

struct DetectorConfig {
  epochs::ZffConfig zff;
  hp::HpConfig hp;
  reskew::LpConfig lp;
};

// Runs every sub-config's validation.
void Validate(const DetectorConfig& cfg);

// Sets one key.  Throws DataError for unknown keys or unparsable values.
void ApplySetting(DetectorConfig& cfg, std::string_view key, std::string_view value);

// Parses "key=value" (as given on the command line).
void ApplyAssignment(DetectorConfig& cfg, std::string_view assignment);

void ApplyConfigText(DetectorConfig& cfg, std::string_view text);
void ApplyConfigFile(DetectorConfig& cfg, const std::filesystem::path& path);

// Every recognised key with its current value, in a fixed order.
std::vector<std::pair<std::string, std::string>> ListSettings(const DetectorConfig& cfg);

}  // namespace polarity::harness

#endif  // POLARITY_CONFIG_FILE_H_
