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

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "polarity/errors.h"
#include "polarity/synth.h"
#include "polarity/wav_io.h"

namespace polarity::synth {
namespace {

constexpr double kPi = std::numbers::pi;

double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> WhiteNoise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  // Box-Muller, two samples per draw.
  for (std::size_t i = 0; i < n; i += 2) {
    double u1 = Uniform01(rng);
    while (u1 <= 0.0) u1 = Uniform01(rng);
    const double u2 = Uniform01(rng);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    out[i] = mag * std::cos(2.0 * kPi * u2);
    if (i + 1 < n) out[i + 1] = mag * std::sin(2.0 * kPi * u2);
  }
  return out;
}

// Paul Kellet's refined pink filter applied to white noise.
std::vector<double> PinkNoise(std::size_t n, std::uint64_t seed) {
  std::vector<double> w = WhiteNoise(n, seed);
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
  for (double& v : w) {
    const double white = v;
    b0 = 0.99886 * b0 + white * 0.0555179;
    b1 = 0.99332 * b1 + white * 0.0750759;
    b2 = 0.96900 * b2 + white * 0.1538520;
    b3 = 0.86650 * b3 + white * 0.3104856;
    b4 = 0.55000 * b4 + white * 0.5329522;
    b5 = -0.7616 * b5 - white * 0.0168980;
    v = b0 + b1 + b2 + b3 + b4 + b5 + b6 + white * 0.5362;
    b6 = white * 0.115926;
  }
  return w;
}

void NormaliseVariance(std::vector<double>& x) {
  if (x.empty()) return;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double var = 0.0;
  for (double& v : x) {
    v -= mean;
    var += v * v;
  }
  var /= static_cast<double>(x.size());
  if (var > 0.0) {
    const double g = 1.0 / std::sqrt(var);
    for (double& v : x) v *= g;
  }
}

}  // namespace

void Validate(const NoiseSpec& spec) {
  if (!(spec.snr_db >= -10.0 && spec.snr_db <= 60.0)) {
    throw InvalidInputError("snr_db must be in [-10, 60], got " + std::to_string(spec.snr_db));
  }
  if (spec.kind == NoiseKind::kFile && (!spec.path || spec.path->empty())) {
    throw InvalidInputError("file noise requires a path");
  }
}

std::optional<NoiseSpec> ParseNoiseKind(const std::string& text) {
  NoiseSpec spec;
  if (text == "white") {
    spec.kind = NoiseKind::kWhite;
  } else if (text == "pink") {
    spec.kind = NoiseKind::kPink;
  } else if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    spec.kind = NoiseKind::kFile;
    spec.path = text.substr(5);
  } else {
    return std::nullopt;
  }
  return spec;
}

Signal MixNoise(const Signal& s, const NoiseSpec& spec) {
  Validate(spec);
  ValidateSignal(s, "noise mixing input");
  return MixNoiseWith(s, MakeNoise(spec, s.size()), spec.snr_db);
}

Signal MixNoiseWith(const Signal& s, const std::vector<double>& noise, double snr_db) {
  if (noise.size() != s.size()) throw InvalidInputError("noise length differs from signal");
  const double es = Energy(s.samples);
  const double en = Energy(noise);
  if (!(es > 0.0)) throw InvalidInputError("cannot set an SNR against a zero-energy signal");
  if (!(en > 0.0)) throw InvalidInputError("noise has zero energy");
  const double lambda = std::sqrt(es / (en * std::pow(10.0, snr_db / 10.0)));
  Signal out{s.samples, s.sample_rate_hz};
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += lambda * noise[i];
  return out;
}

double MeasuredSnrDb(const Signal& clean, const Signal& noisy) {
  double en = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const double d = noisy.samples[i] - clean.samples[i];
    en += d * d;
  }
  return 10.0 * std::log10(Energy(clean.samples) / en);
}

std::vector<double> MakeNoise(const NoiseSpec& spec, std::size_t n) {
  std::vector<double> noise;
  switch (spec.kind) {
    case NoiseKind::kWhite:
      noise = WhiteNoise(n, spec.seed);
      break;
    case NoiseKind::kPink:
      noise = PinkNoise(n, spec.seed);
      break;
    case NoiseKind::kFile: {
      if (!spec.path) throw InvalidInputError("file noise requires a path");
      const Signal src = harness::LoadWav(*spec.path);
      if (src.empty()) throw DataError(*spec.path + ": noise file has no samples");
      noise.resize(n);
      // Tile from an offset picked by the seed so that different trials see
      // different stretches of a long babble recording.
      const std::size_t offset = spec.seed % src.size();
      for (std::size_t i = 0; i < n; ++i) noise[i] = src.samples[(offset + i) % src.size()];
      break;
    }
  }
  NormaliseVariance(noise);
  return noise;
}

}  // namespace polarity::synth
