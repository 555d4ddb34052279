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

#include "polarity/hp_detector.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "polarity/errors.h"

namespace polarity::hp {
namespace {

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

void Validate(const HpConfig& cfg) {
  if (!(cfg.peak_search_ms >= 0.5 && cfg.peak_search_ms <= 20.0)) {
    throw InvalidInputError("hp peak_search_ms must be in [0.5, 20], got " +
                            std::to_string(cfg.peak_search_ms));
  }
  if (!(cfg.zc_search_ms >= 0.5 && cfg.zc_search_ms <= 10.0)) {
    throw InvalidInputError("hp zc_search_ms must be in [0.5, 10], got " +
                            std::to_string(cfg.zc_search_ms));
  }
  if (cfg.min_votes < 1) throw InvalidInputError("hp min_votes must be >= 1");
  if (!(cfg.prominence_floor >= 0.0 && cfg.prominence_floor <= 1.0)) {
    throw InvalidInputError("hp prominence_floor must be in [0, 1]");
  }
  if (cfg.slope_sign_for_positive != 1 && cfg.slope_sign_for_positive != -1) {
    throw InvalidInputError("hp slope_sign_for_positive must be +1 or -1");
  }
}

std::vector<std::size_t> SelectHePeaks(const dsp::EnvelopeSeries& env,
                                       const epochs::EpochList& epochs,
                                       const HpConfig& cfg) {
  Validate(cfg);
  std::vector<std::size_t> peaks;
  const std::size_t n = env.values.size();
  if (n == 0 || epochs.indices.empty()) return peaks;
  if (epochs.sample_rate_hz != env.sample_rate_hz) {
    throw InvalidInputError("envelope and epochs have different sample rates");
  }

  const double global_max = *std::max_element(env.values.begin(), env.values.end());
  const double floor = cfg.prominence_floor * global_max;
  const std::size_t half = MsToSamples(cfg.peak_search_ms, env.sample_rate_hz);

  for (std::size_t e : epochs.indices) {
    if (e >= n) continue;
    const std::size_t lo = e > half ? e - half : 0;
    const std::size_t hi = std::min(n - 1, e + half);
    const auto it = std::max_element(env.values.begin() + static_cast<std::ptrdiff_t>(lo),
                                     env.values.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    if (global_max > 0.0 && *it >= floor) {
      peaks.push_back(static_cast<std::size_t>(it - env.values.begin()));
    }
  }
  std::sort(peaks.begin(), peaks.end());
  peaks.erase(std::unique(peaks.begin(), peaks.end()), peaks.end());
  return peaks;
}

int SlopeSignAtPeak(const dsp::PhaseSeries& phase, std::size_t peak, const HpConfig& cfg) {
  Validate(cfg);
  const auto& v = phase.values;
  const std::size_t n = v.size();
  if (peak >= n || n < 2) return 0;
  const std::size_t half = MsToSamples(cfg.zc_search_ms, phase.sample_rate_hz);
  const std::size_t lo = peak > half ? peak - half : 0;
  const std::size_t hi = std::min(n - 1, peak + half);

  // A crossing sits between k and k+1 whenever the three-valued sign
  // changes; this set is the same for the phase and its negation.  The
  // distance of a crossing from the peak is measured from its midpoint,
  // ties going to the earlier crossing.
  long best_twice_dist = -1;
  int best_sign = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    if (Sign(v[k]) == Sign(v[k + 1])) continue;
    const long twice_dist =
        std::labs(static_cast<long>(2 * k + 1) - static_cast<long>(2 * peak));
    if (best_twice_dist < 0 || twice_dist < best_twice_dist) {
      best_twice_dist = twice_dist;
      best_sign = Sign(v[k + 1] - v[k]);
    }
  }
  return best_sign;
}

PolarityDecision DecideFromVotes(std::size_t rising, std::size_t falling,
                                 std::size_t anchors, const HpConfig& cfg) {
  PolarityDecision d;
  d.positive_slope_votes = rising;
  d.negative_slope_votes = falling;
  d.anchors_used = anchors;
  const std::size_t total = rising + falling;
  if (total < static_cast<std::size_t>(cfg.min_votes) || rising == falling) {
    d.polarity = Polarity::kIndeterminate;
    return d;
  }
  const int majority = rising > falling ? +1 : -1;
  d.polarity = majority == cfg.slope_sign_for_positive ? Polarity::kPositive
                                                       : Polarity::kNegative;
  return d;
}

PolarityDecision DetectPolarityHp(const Signal& s, const epochs::ZffConfig& zcfg,
                                  const HpConfig& hcfg, HpTrace* trace) {
  Validate(hcfg);
  epochs::Validate(zcfg);
  ValidateSpeechSignal(s, 0.1, "hp detector input");

  const dsp::AnalyticSignal analytic = dsp::MakeAnalyticSignal(s);
  dsp::EnvelopeSeries envelope = dsp::HilbertEnvelope(analytic);
  dsp::PhaseSeries phase =
      dsp::CosinePhase(analytic, envelope, dsp::DefaultPhaseEpsilon(envelope));

  const Signal zff = epochs::ZffFilter(s, zcfg);
  epochs::EpochList anchors = epochs::ExtractEpochs(zff, zcfg);

  std::vector<std::size_t> peaks = SelectHePeaks(envelope, anchors, hcfg);
  std::vector<int> signs;
  signs.reserve(peaks.size());
  std::size_t rising = 0, falling = 0;
  for (std::size_t p : peaks) {
    const int sg = SlopeSignAtPeak(phase, p, hcfg);
    signs.push_back(sg);
    if (sg > 0) ++rising;
    if (sg < 0) ++falling;
  }

  PolarityDecision d = DecideFromVotes(rising, falling, peaks.size(), hcfg);
  if (trace != nullptr) {
    trace->envelope = std::move(envelope);
    trace->phase = std::move(phase);
    trace->epochs = std::move(anchors);
    trace->peaks = std::move(peaks);
    trace->slope_signs = std::move(signs);
  }
  return d;
}

}  // namespace polarity::hp
