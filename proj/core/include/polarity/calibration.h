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

// Sign-convention calibration.  Positive-polarity synthetic utterances are
// run through both detectors with their raw (uncalibrated) statistic, and
// the majority direction fixes which sign means Positive.

#ifndef POLARITY_CALIBRATION_H_
#define POLARITY_CALIBRATION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polarity/config_file.h"

namespace polarity::harness {

struct CalibrationOptions {
  std::vector<double> pitches_hz{80.0, 100.0, 150.0, 220.0, 300.0};
  int seeds_per_condition = 2;
  std::uint64_t base_seed = 1;
  double duration_s = 1.0;
  int sample_rate_hz = 16000;
  double jitter_pct = 1.0;
  DetectorConfig config;  // slope_sign_for_positive is overridden
};

struct CalibrationCell {
  std::string vowel;
  double pitch_hz = 0.0;
  std::size_t rising_votes = 0;
  std::size_t falling_votes = 0;
  double reskew_delta = 0.0;
};

struct CalibrationResult {
  std::vector<CalibrationCell> cells;
  std::size_t rising_majority = 0;   // utterances with more rising than falling votes
  std::size_t falling_majority = 0;
  std::size_t reskew_negative = 0;   // utterances with delta < 0
  std::size_t reskew_positive = 0;
  int slope_sign_for_positive = 0;   // +1, -1, or 0 if the set is split evenly
  int reskew_sign_for_positive = 0;  // sign of delta that means Positive
};

CalibrationResult Calibrate(const CalibrationOptions& options);

std::string RenderCalibration(const CalibrationResult& result);

}  // namespace polarity::harness

#endif  // POLARITY_CALIBRATION_H_
