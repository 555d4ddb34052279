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

// Basic value types shared by every stage of the pipeline.

#ifndef POLARITY_SIGNAL_H_
#define POLARITY_SIGNAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace polarity {

// A uniformly sampled real waveform.
struct Signal {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz
                              : 0.0;
  }
};

// Throws InvalidInputError unless the signal is non-empty, has a positive
// sample rate and contains only finite samples.
void ValidateSignal(const Signal& s, std::string_view what = "signal");

// Same as ValidateSignal, plus the speech-path requirements: a sample rate of
// at least 1 kHz and at least `min_duration_s` seconds of audio.
void ValidateSpeechSignal(const Signal& s, double min_duration_s,
                          std::string_view what = "signal");

// Elementwise negation (polarity inversion).
Signal Negated(const Signal& s);

// Elementwise scaling by `gain`.
Signal Scaled(const Signal& s, double gain);

// Sum of squares.
double Energy(std::span<const double> x);

// Number of samples spanned by `ms` milliseconds at `sample_rate_hz`,
// rounded to nearest.
std::size_t MsToSamples(double ms, int sample_rate_hz);

enum class Polarity { kPositive, kNegative, kIndeterminate };

std::string_view ToString(Polarity p);
std::optional<Polarity> ParsePolarity(std::string_view text);
Polarity Opposite(Polarity p);

// Per-utterance verdict.  The Hilbert-phase detector fills the vote fields;
// the skewness baseline fills `statistic` and leaves the votes at zero.
struct PolarityDecision {
  Polarity polarity = Polarity::kIndeterminate;
  std::size_t positive_slope_votes = 0;
  std::size_t negative_slope_votes = 0;
  std::size_t anchors_used = 0;
  std::optional<double> statistic;

  bool operator==(const PolarityDecision&) const = default;
};

}  // namespace polarity

#endif  // POLARITY_SIGNAL_H_
