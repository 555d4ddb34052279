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

// Epoch (instant of significant excitation) estimation by zero-frequency
// filtering.
//
// The signal is differenced, passed twice through a double pole at DC,
// and the resulting polynomial drift is removed by repeated centred
// local-mean subtraction over a window of about 1.5 pitch periods.  What is
// left oscillates at the pitch rate; its zero crossings are the anchors.

#ifndef POLARITY_ZFF_H_
#define POLARITY_ZFF_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "polarity/signal.h"

namespace polarity::epochs {

struct ZffConfig {
  // Trend-removal window.  Unset means 1.5 mean pitch periods, clamped to
  // [3, 25] ms.  When set it must lie in [1, 50] ms.
  std::optional<double> trend_window_ms;
  int trend_passes = 3;  // [1, 5]
  double mean_pitch_fallback_hz = 120.0;
};

void Validate(const ZffConfig& cfg);

struct EpochList {
  std::vector<std::size_t> indices;  // strictly ascending
  int sample_rate_hz = 0;
};

// Mean F0 over frames whose normalised autocorrelation peak (lags 2.5-20 ms)
// reaches 0.5.  Falls back to cfg.mean_pitch_fallback_hz when the signal is
// shorter than 100 ms or fewer than 5 frames qualify.
double EstimateMeanPitch(const Signal& s, const ZffConfig& cfg = {});

// Trend window actually used by ZffFilter for this signal.
double ResolveTrendWindowMs(const Signal& s, const ZffConfig& cfg);

// Zero-frequency filter output.  Throws InvalidInputError if the signal is
// shorter than three trend windows.
Signal ZffFilter(const Signal& s, const ZffConfig& cfg = {});

// Both rising and falling zero crossings of a ZFF output, each placed on the
// sample of the crossing pair closest to zero.  Crossings within 16 samples
// of either end, or closer than 1 ms to the previously accepted one, are
// dropped.
EpochList ExtractEpochs(const Signal& zff_output, const ZffConfig& cfg = {});

}  // namespace polarity::epochs

#endif  // POLARITY_ZFF_H_
