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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polarity/errors.h"
#include "polarity/reskew.h"

namespace polarity::reskew {
namespace {

// Hann-shaped taper sampled at half-integer points so it never reaches zero
// and the overlap-add normaliser is positive everywhere.
std::vector<double> Taper(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) /
                                static_cast<double>(n));
  }
  return w;
}

}  // namespace

void Validate(const LpConfig& cfg) {
  if (cfg.order != 0 && (cfg.order < 4 || cfg.order > 40)) {
    throw InvalidInputError("lp order must be in [4, 40], got " + std::to_string(cfg.order));
  }
  if (!(cfg.frame_ms > 0.0)) throw InvalidInputError("lp frame_ms must be positive");
  if (!(cfg.hop_ms > 0.0 && cfg.hop_ms <= cfg.frame_ms)) {
    throw InvalidInputError("lp hop_ms must be in (0, frame_ms]");
  }
  if (!(cfg.integrator_pole > 0.9 && cfg.integrator_pole < 1.0)) {
    throw InvalidInputError("lp integrator_pole must be in (0.9, 1.0)");
  }
}

int ResolveOrder(const LpConfig& cfg, int sample_rate_hz) {
  if (cfg.order != 0) return cfg.order;
  const int order = static_cast<int>(std::lround(sample_rate_hz / 1000.0)) + 2;
  return std::clamp(order, 4, 40);
}

std::vector<double> LevinsonDurbin(std::span<const double> r, int order) {
  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  if (!(err > 0.0)) return {};
  std::vector<double> prev(a.size());
  for (int i = 1; i <= order; ++i) {
    double acc = r[static_cast<std::size_t>(i)];
    for (int j = 1; j < i; ++j) {
      acc += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(i - j)];
    }
    const double k = -acc / err;
    prev = a;
    for (int j = 1; j < i; ++j) {
      a[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j)] + k * prev[static_cast<std::size_t>(i - j)];
    }
    a[static_cast<std::size_t>(i)] = k;
    err *= (1.0 - k * k);
    if (!(err > 0.0)) return {};
  }
  return a;
}

Signal LpResidual(const Signal& s, const LpConfig& cfg) {
  Validate(cfg);
  ValidateSignal(s, "lp residual input");
  const int fs = s.sample_rate_hz;
  const std::size_t frame = std::max<std::size_t>(MsToSamples(cfg.frame_ms, fs), 8);
  const std::size_t hop = std::max<std::size_t>(MsToSamples(cfg.hop_ms, fs), 1);
  const int order = ResolveOrder(cfg, fs);
  const std::size_t n = s.size();
  if (n < 2 * frame) {
    throw InvalidInputError("lp residual input has " + std::to_string(n) +
                            " samples; at least two frames (" + std::to_string(2 * frame) +
                            ") required");
  }

  std::vector<std::size_t> starts;
  for (std::size_t st = 0; st + frame <= n; st += hop) starts.push_back(st);
  if (starts.back() + frame < n) starts.push_back(n - frame);

  const std::vector<double> taper = Taper(frame);
  std::vector<double> acc(n, 0.0), weight(n, 0.0);
  std::vector<double> windowed(frame), r(static_cast<std::size_t>(order) + 1);
  std::vector<double> coeffs, last_good;

  for (std::size_t st : starts) {
    for (std::size_t i = 0; i < frame; ++i) windowed[i] = taper[i] * s.samples[st + i];
    for (int lag = 0; lag <= order; ++lag) {
      double sum = 0.0;
      for (std::size_t i = static_cast<std::size_t>(lag); i < frame; ++i) {
        sum += windowed[i] * windowed[i - static_cast<std::size_t>(lag)];
      }
      r[static_cast<std::size_t>(lag)] = sum;
    }

    const bool silent = !(r[0] > 0.0);
    if (!silent) {
      coeffs = LevinsonDurbin(r, order);
      if (coeffs.empty()) {
        coeffs = last_good.empty() ? std::vector<double>{1.0} : last_good;
      } else {
        last_good = coeffs;
      }
    }

    for (std::size_t i = 0; i < frame; ++i) {
      const std::size_t t = st + i;
      double e = 0.0;
      if (!silent) {
        // Inverse filter the raw (untapered) samples, with history from the
        // signal itself where it exists.
        e = s.samples[t];
        for (std::size_t j = 1; j < coeffs.size() && j <= t; ++j) {
          e += coeffs[j] * s.samples[t - j];
        }
      }
      acc[t] += taper[i] * e;
      weight[t] += taper[i];
    }
  }

  Signal out;
  out.sample_rate_hz = fs;
  out.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.samples[t] = acc[t] / weight[t];
  return out;
}

double Skewness(std::span<const double> x) {
  if (x.size() < 3) {
    throw UndefinedStatisticError("skewness needs at least 3 values, got " +
                                  std::to_string(x.size()));
  }
  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  if (*mn == *mx) throw UndefinedStatisticError("skewness of a constant sequence");

  const double count = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= count;
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= count;
  m3 /= count;
  if (!(m2 > 0.0)) throw UndefinedStatisticError("skewness with zero variance");
  return m3 / std::pow(m2, 1.5);
}

std::vector<double> LeakyIntegrate(std::span<const double> e, double pole) {
  std::vector<double> g(e.size());
  double state = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    state = e[i] + pole * state;
    g[i] = state;
  }
  return g;
}

double ReskewStatistic(const Signal& s, const LpConfig& cfg) {
  const Signal residual = LpResidual(s, cfg);
  const std::vector<double> glottal = LeakyIntegrate(residual.samples, cfg.integrator_pole);
  return Skewness(glottal) - Skewness(residual.samples);
}

PolarityDecision DetectPolarityReskew(const Signal& s, const LpConfig& cfg) {
  Validate(cfg);
  ValidateSpeechSignal(s, 0.1, "reskew detector input");
  PolarityDecision d;
  double delta = 0.0;
  try {
    delta = ReskewStatistic(s, cfg);
  } catch (const UndefinedStatisticError&) {
    d.polarity = Polarity::kIndeterminate;
    return d;
  }
  d.statistic = delta;
  if (std::abs(delta) < kIndeterminateDelta) {
    d.polarity = Polarity::kIndeterminate;
  } else {
    d.polarity = delta < 0.0 ? Polarity::kPositive : Polarity::kNegative;
  }
  return d;
}

}  // namespace polarity::reskew
