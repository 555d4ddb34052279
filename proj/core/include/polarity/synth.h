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

// Synthetic speech of known polarity, and calibrated-SNR noise mixing.
//
// A Rosenberg glottal pulse is differentiated analytically, giving one
// cycle of glottal-flow derivative per pitch period with its sharpest
// (negative) excursion at glottal closure.  The pulse train is passed
// through a cascade of DC-normalised two-pole resonators, one per formant.
// Negative polarity is the exact sample-wise negation of the positive
// construction.

#ifndef POLARITY_SYNTH_H_
#define POLARITY_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarity/signal.h"

namespace polarity::synth {

struct Formant {
  double center_hz = 0.0;
  double bandwidth_hz = 0.0;
};

std::vector<Formant> DefaultFormants();

struct Vowel {
  std::string name;
  std::vector<Formant> formants;
};

// The default set plus four corner vowels with average adult male formant
// frequencies.  Used for the synthetic evaluation corpus and calibration.
std::vector<Vowel> ReferenceVowels();

struct SynthSpec {
  double pitch_hz = 100.0;  // [50, 400] and below fs / 8
  double duration_s = 1.0;
  int sample_rate_hz = 16000;
  std::vector<Formant> formants = DefaultFormants();
  Polarity polarity = Polarity::kPositive;
  double jitter_pct = 1.0;  // [0, 5], uniform per-cycle period perturbation
  std::uint64_t seed = 0;
  // Rosenberg opening and closing phases as fractions of the period.
  double open_fraction = 0.40;
  double close_fraction = 0.16;
};

void Validate(const SynthSpec& spec);

struct Utterance {
  Signal signal;
  // Glottal-closure sample index of every complete pitch cycle.
  std::vector<std::size_t> excitation_instants;
};

// Peak amplitude of the generated waveform.
inline constexpr double kPeakAmplitude = 0.5;

Utterance Synthesize(const SynthSpec& spec);
Signal GenerateUtterance(const SynthSpec& spec);
std::vector<std::size_t> ExcitationInstants(const SynthSpec& spec);

enum class NoiseKind { kWhite, kPink, kFile };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kWhite;
  double snr_db = 20.0;  // [-10, 60]
  std::uint64_t seed = 0;
  std::optional<std::string> path;  // required for kFile
};

void Validate(const NoiseSpec& spec);

// Parses "white", "pink" or "file:<path>".
std::optional<NoiseSpec> ParseNoiseKind(const std::string& text);

// `n` samples of unit-variance noise of the given kind.  kFile reads the
// WAV at spec.path and tiles or truncates it to `n` samples.
std::vector<double> MakeNoise(const NoiseSpec& spec, std::size_t n);

// s + lambda * noise with lambda chosen so that the energy ratio over the
// whole signal equals spec.snr_db.  Deterministic given the seed.
Signal MixNoise(const Signal& s, const NoiseSpec& spec);

// Same, with caller-provided noise of the same length as `s`.
Signal MixNoiseWith(const Signal& s, const std::vector<double>& noise, double snr_db);

// 10 log10(E_clean / E_(noisy - clean)).
double MeasuredSnrDb(const Signal& clean, const Signal& noisy);

}  // namespace polarity::synth

#endif  // POLARITY_SYNTH_H_
