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

// Residual-skewness (RESKEW) baseline.
//
// The LP residual e(n) is obtained by frame-wise autocorrelation LPC and
// inverse filtering.  Leaky integration of e(n) gives a rough glottal-flow
// approximation g(n).  The decision statistic is
//
//   delta = skewness(g) - skewness(e)
//
// with delta < 0 meaning positive polarity.  Both skewnesses are odd in the
// sign of the input and invariant to its scale, so delta is too.

#ifndef POLARITY_RESKEW_H_
#define POLARITY_RESKEW_H_

#include <span>
#include <vector>

#include "polarity/signal.h"

namespace polarity::reskew {

struct LpConfig {
  int order = 0;  // 0 = round(fs / 1000) + 2; otherwise [4, 40]
  double frame_ms = 25.0;
  double hop_ms = 5.0;            // (0, frame_ms]
  double integrator_pole = 0.99;  // (0.9, 1.0)
};

void Validate(const LpConfig& cfg);

// Order actually used for a given sample rate.
int ResolveOrder(const LpConfig& cfg, int sample_rate_hz);

// Levinson-Durbin recursion on autocorrelation lags r[0..order].  Returns
// the prediction-error filter a[0..order] with a[0] = 1, or an empty vector
// when the recursion breaks down (non-positive prediction error).
std::vector<double> LevinsonDurbin(std::span<const double> r, int order);

// Full-length LP residual, assembled by weighted overlap-add so every
// sample's weights sum to one.  Zero-energy frames contribute zeros; frames
// where Levinson-Durbin breaks down reuse the previous frame's filter.
Signal LpResidual(const Signal& s, const LpConfig& cfg = {});

// m3 / m2^1.5 with central sample moments.  Throws UndefinedStatisticError
// for fewer than three values or a constant sequence.
double Skewness(std::span<const double> x);

// g(n) = e(n) + pole * g(n-1).
std::vector<double> LeakyIntegrate(std::span<const double> e, double pole);

// skewness(leaky(e)) - skewness(e) for e = LpResidual(s).  Throws
// UndefinedStatisticError when either skewness is undefined.
double ReskewStatistic(const Signal& s, const LpConfig& cfg = {});

// |delta| below this is reported as Indeterminate.
inline constexpr double kIndeterminateDelta = 1e-6;

// Requires at least 100 ms of audio.  Silent input yields Indeterminate.
PolarityDecision DetectPolarityReskew(const Signal& s, const LpConfig& cfg = {});

}  // namespace polarity::reskew

#endif  // POLARITY_RESKEW_H_
