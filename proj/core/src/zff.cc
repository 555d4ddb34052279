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

#include "polarity/zff.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarity/errors.h"

namespace polarity::epochs {
namespace {

constexpr double kFrameMs = 40.0;
constexpr double kHopMs = 20.0;
constexpr double kMinLagMs = 2.5;
constexpr double kMaxLagMs = 20.0;
constexpr double kVoicingThreshold = 0.5;
constexpr int kMinVoicedFrames = 5;
// A shorter-lag peak within this fraction of the best one wins; otherwise
// period multiples of a strongly periodic frame score as well as the period.
constexpr double kSubharmonicRatio = 0.9;
constexpr std::size_t kEdgeGuard = 16;

// Normalised autocorrelation of `frame` at `lag` over the overlapping part.
double Nacf(const std::vector<double>& frame, std::size_t lag) {
  double xy = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i + lag < frame.size(); ++i) {
    const double a = frame[i];
    const double b = frame[i + lag];
    xy += a * b;
    xx += a * a;
    yy += b * b;
  }
  const double d = std::sqrt(xx * yy);
  return d > 0.0 ? xy / d : 0.0;
}

// One pass of y(n) = x(n) + 2 y(n-1) - y(n-2), in place.
void DoubleIntegrate(std::vector<long double>& x) {
  long double y1 = 0.0L, y2 = 0.0L;
  for (long double& v : x) {
    const long double y = v + 2.0L * y1 - y2;
    y2 = y1;
    y1 = y;
    v = y;
  }
}

// x(n) -= mean of x over [n - half, n + half], truncated at the ends.  The
// running sum is recomputed from scratch every `refresh` steps so that
// rounding error cannot accumulate across the (large) pre-detrend values.
void SubtractLocalMean(std::vector<long double>& x, std::size_t half) {
  const std::size_t n = x.size();
  if (n == 0) return;
  const std::size_t refresh = std::max<std::size_t>(2 * half + 1, 64);
  std::vector<long double> out(n);
  long double sum = 0.0L;
  std::size_t lo = 0, hi = 0;  // window is [lo, hi)
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t want_lo = i > half ? i - half : 0;
    const std::size_t want_hi = std::min(n, i + half + 1);
    if (i % refresh == 0) {
      sum = 0.0L;
      for (std::size_t k = want_lo; k < want_hi; ++k) sum += x[k];
    } else {
      while (hi < want_hi) sum += x[hi++];
      while (lo < want_lo) sum -= x[lo++];
    }
    lo = want_lo;
    hi = want_hi;
    out[i] = x[i] - sum / static_cast<long double>(want_hi - want_lo);
  }
  x.swap(out);
}

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

void Validate(const ZffConfig& cfg) {
  if (cfg.trend_window_ms &&
      !(*cfg.trend_window_ms >= 1.0 && *cfg.trend_window_ms <= 50.0)) {
    throw InvalidInputError("zff trend_window_ms must be in [1, 50], got " +
                            std::to_string(*cfg.trend_window_ms));
  }
  if (cfg.trend_passes < 1 || cfg.trend_passes > 5) {
    throw InvalidInputError("zff trend_passes must be in [1, 5], got " +
                            std::to_string(cfg.trend_passes));
  }
  if (!(cfg.mean_pitch_fallback_hz > 0.0)) {
    throw InvalidInputError("zff mean_pitch_fallback_hz must be positive");
  }
}

double EstimateMeanPitch(const Signal& s, const ZffConfig& cfg) {
  ValidateSignal(s, "pitch estimation input");
  if (s.duration_s() < 0.1) return cfg.mean_pitch_fallback_hz;

  const int fs = s.sample_rate_hz;
  const std::size_t frame_len = MsToSamples(kFrameMs, fs);
  const std::size_t hop = std::max<std::size_t>(MsToSamples(kHopMs, fs), 1);
  const std::size_t min_lag = std::max<std::size_t>(MsToSamples(kMinLagMs, fs), 2);
  const std::size_t max_lag = std::min(MsToSamples(kMaxLagMs, fs), frame_len - 2);
  if (max_lag <= min_lag) return cfg.mean_pitch_fallback_hz;

  std::vector<double> frame(frame_len);
  std::vector<double> nacf(max_lag + 2);
  double f0_sum = 0.0;
  int voiced = 0;
  for (std::size_t start = 0; start + frame_len <= s.size(); start += hop) {
    double mean = 0.0;
    for (std::size_t i = 0; i < frame_len; ++i) mean += s.samples[start + i];
    mean /= static_cast<double>(frame_len);
    for (std::size_t i = 0; i < frame_len; ++i) frame[i] = s.samples[start + i] - mean;

    for (std::size_t lag = min_lag - 1; lag <= max_lag + 1; ++lag) nacf[lag] = Nacf(frame, lag);

    double best = -1.0;
    for (std::size_t lag = min_lag; lag <= max_lag; ++lag) {
      if (nacf[lag] >= nacf[lag - 1] && nacf[lag] >= nacf[lag + 1]) {
        best = std::max(best, nacf[lag]);
      }
    }
    if (best < kVoicingThreshold) continue;
    for (std::size_t lag = min_lag; lag <= max_lag; ++lag) {
      if (nacf[lag] >= nacf[lag - 1] && nacf[lag] >= nacf[lag + 1] &&
          nacf[lag] >= kSubharmonicRatio * best) {
        f0_sum += static_cast<double>(fs) / static_cast<double>(lag);
        ++voiced;
        break;
      }
    }
  }
  if (voiced < kMinVoicedFrames) return cfg.mean_pitch_fallback_hz;
  return f0_sum / voiced;
}

double ResolveTrendWindowMs(const Signal& s, const ZffConfig& cfg) {
  if (cfg.trend_window_ms) return *cfg.trend_window_ms;
  const double f0 = EstimateMeanPitch(s, cfg);
  return std::clamp(1.5 * 1000.0 / f0, 3.0, 25.0);
}

Signal ZffFilter(const Signal& s, const ZffConfig& cfg) {
  Validate(cfg);
  ValidateSignal(s, "zff input");
  const double window_ms = ResolveTrendWindowMs(s, cfg);
  const std::size_t half = MsToSamples(window_ms / 2.0, s.sample_rate_hz);
  const std::size_t window = 2 * half + 1;
  if (s.size() < 3 * window) {
    throw InvalidInputError("zff input has " + std::to_string(s.size()) +
                            " samples; at least three trend windows (" +
                            std::to_string(3 * window) + ") required");
  }

  std::vector<long double> y(s.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    y[i] = static_cast<long double>(s.samples[i]) - prev;
    prev = s.samples[i];
  }
  DoubleIntegrate(y);
  DoubleIntegrate(y);
  for (int pass = 0; pass < cfg.trend_passes; ++pass) SubtractLocalMean(y, half);

  Signal out;
  out.sample_rate_hz = s.sample_rate_hz;
  out.samples.assign(y.begin(), y.end());
  return out;
}

EpochList ExtractEpochs(const Signal& y, const ZffConfig& cfg) {
  Validate(cfg);
  EpochList epochs;
  epochs.sample_rate_hz = y.sample_rate_hz;
  const std::size_t n = y.size();
  if (n < 2) return epochs;
  const double min_gap = y.sample_rate_hz / 1000.0;

  // Exact zeros are skipped when looking for a sign change so that y and -y
  // produce the same crossing set.
  std::size_t last = n;  // index of the last non-zero sample
  for (std::size_t i = 0; i < n; ++i) {
    const int sg = Sign(y.samples[i]);
    if (sg == 0) continue;
    if (last != n && Sign(y.samples[last]) != sg) {
      std::size_t best = last;
      for (std::size_t k = last + 1; k <= i; ++k) {
        if (std::abs(y.samples[k]) < std::abs(y.samples[best])) best = k;
      }
      const bool in_bounds = best >= kEdgeGuard && best + kEdgeGuard < n;
      const bool spaced =
          epochs.indices.empty() ||
          static_cast<double>(best - epochs.indices.back()) >= min_gap;
      if (in_bounds && spaced) epochs.indices.push_back(best);
    }
    last = i;
  }
  return epochs;
}

}  // namespace polarity::epochs
