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

#include "polarity/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "polarity/errors.h"

namespace polarity::synth {
namespace {

constexpr double kPi = std::numbers::pi;

// 53 random mantissa bits -> [0, 1).  std::uniform_real_distribution is
// implementation-defined; this keeps outputs identical across toolchains.
double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Glottal flow derivative at `tau` samples into a cycle.
double RosenbergDerivative(double tau, double open, double close) {
  if (tau < 0.0) return 0.0;
  if (tau < open) return (kPi / (2.0 * open)) * std::sin(kPi * tau / open);
  if (tau < open + close) {
    return -(kPi / (2.0 * close)) * std::sin(kPi * (tau - open) / (2.0 * close));
  }
  return 0.0;
}

// y(n) = b0 x(n) + a1 y(n-1) + a2 y(n-2), unity gain at DC.
void Resonate(std::vector<double>& x, const Formant& f, int fs) {
  const double r = std::exp(-kPi * f.bandwidth_hz / fs);
  const double a1 = 2.0 * r * std::cos(2.0 * kPi * f.center_hz / fs);
  const double a2 = -r * r;
  const double b0 = 1.0 - a1 - a2;
  double y1 = 0.0, y2 = 0.0;
  for (double& v : x) {
    const double y = b0 * v + a1 * y1 + a2 * y2;
    y2 = y1;
    y1 = y;
    v = y;
  }
}

}  // namespace

// Formants of an open-mid central vowel.
std::vector<Formant> DefaultFormants() {
  return {{700.0, 80.0}, {1220.0, 100.0}, {2600.0, 120.0}};
}

std::vector<Vowel> ReferenceVowels() {
  return {
      {"default", DefaultFormants()},
      {"i", {{270.0, 60.0}, {2290.0, 100.0}, {3010.0, 170.0}}},
      {"e", {{530.0, 70.0}, {1840.0, 100.0}, {2480.0, 160.0}}},
      {"a", {{730.0, 90.0}, {1090.0, 110.0}, {2440.0, 170.0}}},
      {"u", {{300.0, 60.0}, {870.0, 80.0}, {2240.0, 150.0}}},
  };
}

void Validate(const SynthSpec& spec) {
  if (spec.sample_rate_hz < 1000) throw InvalidInputError("synth sample rate must be >= 1000 Hz");
  if (!(spec.pitch_hz >= 50.0 && spec.pitch_hz <= 400.0)) {
    throw InvalidInputError("synth pitch must be in [50, 400] Hz, got " +
                            std::to_string(spec.pitch_hz));
  }
  if (!(spec.pitch_hz < spec.sample_rate_hz / 8.0)) {
    throw InvalidInputError("synth pitch must be below sample_rate / 8");
  }
  if (!(spec.duration_s > 0.0)) throw InvalidInputError("synth duration must be positive");
  if (!(spec.jitter_pct >= 0.0 && spec.jitter_pct <= 5.0)) {
    throw InvalidInputError("synth jitter must be in [0, 5] percent");
  }
  if (spec.polarity == Polarity::kIndeterminate) {
    throw InvalidInputError("synth polarity must be positive or negative");
  }
  if (!(spec.open_fraction > 0.0 && spec.close_fraction > 0.0 &&
        spec.open_fraction + spec.close_fraction < 1.0)) {
    throw InvalidInputError("synth open/close fractions must be positive and sum below 1");
  }
  for (const Formant& f : spec.formants) {
    if (!(f.center_hz > 0.0 && f.center_hz < spec.sample_rate_hz / 2.0)) {
      throw InvalidInputError("formant center " + std::to_string(f.center_hz) +
                              " Hz must be in (0, sample_rate / 2)");
    }
    if (!(f.bandwidth_hz > 0.0)) throw InvalidInputError("formant bandwidth must be positive");
  }
}

Utterance Synthesize(const SynthSpec& spec) {
  Validate(spec);
  const int fs = spec.sample_rate_hz;
  const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * fs));
  if (n == 0) throw InvalidInputError("synth duration is shorter than one sample");

  Utterance u;
  u.signal.sample_rate_hz = fs;
  std::vector<double>& x = u.signal.samples;
  x.assign(n, 0.0);

  std::mt19937_64 rng(spec.seed);
  const double nominal = fs / spec.pitch_hz;
  double start = 0.0;
  while (true) {
    const double perturb = spec.jitter_pct / 100.0 * (2.0 * Uniform01(rng) - 1.0);
    const double period = nominal * (1.0 + perturb);
    if (start + period > static_cast<double>(n)) break;
    const double open = spec.open_fraction * period;
    const double close = spec.close_fraction * period;
    const auto first = static_cast<std::size_t>(std::ceil(start));
    const auto last = std::min(n - 1, static_cast<std::size_t>(std::floor(start + period)));
    for (std::size_t i = first; i <= last; ++i) {
      x[i] += RosenbergDerivative(static_cast<double>(i) - start, open, close);
    }
    const auto closure = static_cast<std::size_t>(std::lround(start + open + close));
    if (closure < n) u.excitation_instants.push_back(closure);
    start += period;
  }

  for (const Formant& f : spec.formants) Resonate(x, f, fs);

  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    const double g = kPeakAmplitude / peak;
    for (double& v : x) v *= g;
  }
  if (spec.polarity == Polarity::kNegative) {
    for (double& v : x) v = -v;
  }
  return u;
}

Signal GenerateUtterance(const SynthSpec& spec) { return Synthesize(spec).signal; }

std::vector<std::size_t> ExcitationInstants(const SynthSpec& spec) {
  return Synthesize(spec).excitation_instants;
}

}  // namespace polarity::synth
