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

#include "polarity/calibration.h"

#include <cstdio>

#include "polarity/hp_detector.h"
#include "polarity/reskew.h"
#include "polarity/synth.h"

namespace polarity::harness {
namespace {

int Majority(std::size_t plus, std::size_t minus) {
  if (plus > minus) return +1;
  if (minus > plus) return -1;
  return 0;
}

}  // namespace

CalibrationResult Calibrate(const CalibrationOptions& options) {
  DetectorConfig cfg = options.config;
  cfg.hp.slope_sign_for_positive = +1;
  Validate(cfg);

  CalibrationResult result;
  std::uint64_t seed = options.base_seed;
  for (const synth::Vowel& vowel : synth::ReferenceVowels()) {
    for (double f0 : options.pitches_hz) {
      for (int k = 0; k < options.seeds_per_condition; ++k) {
        synth::SynthSpec spec;
        spec.pitch_hz = f0;
        spec.duration_s = options.duration_s;
        spec.sample_rate_hz = options.sample_rate_hz;
        spec.formants = vowel.formants;
        spec.jitter_pct = options.jitter_pct;
        spec.seed = seed++;
        spec.polarity = Polarity::kPositive;
        const Signal s = synth::GenerateUtterance(spec);

        hp::HpTrace trace;
        hp::DetectPolarityHp(s, cfg.zff, cfg.hp, &trace);
        CalibrationCell cell;
        cell.vowel = vowel.name;
        cell.pitch_hz = f0;
        for (int v : trace.slope_signs) {
          if (v > 0) ++cell.rising_votes;
          if (v < 0) ++cell.falling_votes;
        }
        cell.reskew_delta = reskew::ReskewStatistic(s, cfg.lp);

        switch (Majority(cell.rising_votes, cell.falling_votes)) {
          case +1: ++result.rising_majority; break;
          case -1: ++result.falling_majority; break;
          default: break;
        }
        if (cell.reskew_delta < 0.0) ++result.reskew_negative;
        if (cell.reskew_delta > 0.0) ++result.reskew_positive;
        result.cells.push_back(cell);
      }
    }
  }
  result.slope_sign_for_positive = Majority(result.rising_majority, result.falling_majority);
  result.reskew_sign_for_positive = Majority(result.reskew_positive, result.reskew_negative);
  return result;
}

std::string RenderCalibration(const CalibrationResult& r) {
  std::string out = "vowel    f0_hz  rising  falling  reskew_delta\n";
  char buf[128];
  for (const CalibrationCell& c : r.cells) {
    std::snprintf(buf, sizeof buf, "%-8s %5.0f  %6zu  %7zu  %12.4f\n", c.vowel.c_str(), c.pitch_hz,
                  c.rising_votes, c.falling_votes, c.reskew_delta);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "\nhp: %zu rising-majority, %zu falling-majority of %zu\n",
                r.rising_majority, r.falling_majority, r.cells.size());
  out += buf;
  std::snprintf(buf, sizeof buf, "reskew: %zu with delta < 0, %zu with delta > 0\n",
                r.reskew_negative, r.reskew_positive);
  out += buf;
  std::snprintf(buf, sizeof buf, "slope_sign_for_positive = %+d\nreskew positive when delta %s 0\n",
                r.slope_sign_for_positive,
                r.reskew_sign_for_positive < 0 ? "<" : (r.reskew_sign_for_positive > 0 ? ">" : "=="));
  out += buf;
  return out;
}

}  // namespace polarity::harness
