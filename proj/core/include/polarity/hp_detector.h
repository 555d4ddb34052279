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

// Hilbert-phase polarity detector.
//
// Hilbert-envelope peaks are picked next to the ZFF anchors; at each peak
// the nearest zero crossing of the cosine phase is read for its slope
// direction, and the utterance polarity is the majority direction mapped
// through a calibrated sign convention.  Negating the input leaves the
// envelope and the anchors unchanged and reverses every slope, so the
// decision is exactly antisymmetric.

#ifndef POLARITY_HP_DETECTOR_H_
#define POLARITY_HP_DETECTOR_H_

#include <cstddef>
#include <vector>

#include "polarity/analytic.h"
#include "polarity/signal.h"
#include "polarity/zff.h"

namespace polarity::hp {

struct HpConfig {
  double peak_search_ms = 5.0;    // [0.5, 20]
  double zc_search_ms = 2.0;      // [0.5, 10]
  int min_votes = 3;              // >= 1
  double prominence_floor = 0.05; // fraction of the global envelope maximum
  // Slope direction that indicates positive polarity.  Resolved by running
  // Calibrate() against synthetic positive-polarity speech.
  int slope_sign_for_positive = +1;
};

void Validate(const HpConfig& cfg);

// For each epoch, the arg-max of the envelope within +/- peak_search_ms,
// kept if it reaches prominence_floor * max(envelope).  Ascending, without
// duplicates.
std::vector<std::size_t> SelectHePeaks(const dsp::EnvelopeSeries& env,
                                       const epochs::EpochList& epochs,
                                       const HpConfig& cfg);

// +1 / -1 for a rising / falling cosine-phase zero crossing nearest to
// `peak` within +/- zc_search_ms, 0 when there is none.
int SlopeSignAtPeak(const dsp::PhaseSeries& phase, std::size_t peak, const HpConfig& cfg);

// Everything the detector computed, for inspection and plotting.
struct HpTrace {
  dsp::EnvelopeSeries envelope;
  dsp::PhaseSeries phase;
  epochs::EpochList epochs;
  std::vector<std::size_t> peaks;
  std::vector<int> slope_signs;  // parallel to peaks
};

// Maps vote counts onto a decision.
PolarityDecision DecideFromVotes(std::size_t rising, std::size_t falling,
                                 std::size_t anchors, const HpConfig& cfg);

// Full pipeline.  Requires at least 100 ms of audio at >= 1 kHz.
PolarityDecision DetectPolarityHp(const Signal& s, const epochs::ZffConfig& zcfg = {},
                                  const HpConfig& hcfg = {}, HpTrace* trace = nullptr);

}  // namespace polarity::hp

#endif  // POLARITY_HP_DETECTOR_H_
