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

#include "polarity/signal.h"

#include <cmath>
#include <string>

#include "polarity/errors.h"

namespace polarity {

void ValidateSignal(const Signal& s, std::string_view what) {
  if (s.samples.empty()) {
    throw InvalidInputError(std::string(what) + " is empty");
  }
  if (s.sample_rate_hz <= 0) {
    throw InvalidInputError(std::string(what) + " has non-positive sample rate " +
                            std::to_string(s.sample_rate_hz));
  }
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    if (!std::isfinite(s.samples[i])) {
      throw InvalidInputError(std::string(what) + " has a non-finite sample at index " +
                              std::to_string(i));
    }
  }
}

void ValidateSpeechSignal(const Signal& s, double min_duration_s, std::string_view what) {
  ValidateSignal(s, what);
  if (s.sample_rate_hz < 1000) {
    throw InvalidInputError(std::string(what) + " sample rate " +
                            std::to_string(s.sample_rate_hz) + " Hz is below 1000 Hz");
  }
  if (s.duration_s() < min_duration_s) {
    throw InvalidInputError(std::string(what) + " is " + std::to_string(s.duration_s()) +
                            " s long; at least " + std::to_string(min_duration_s) +
                            " s required");
  }
}

Signal Negated(const Signal& s) {
  Signal out{s.samples, s.sample_rate_hz};
  for (double& v : out.samples) v = -v;
  return out;
}

Signal Scaled(const Signal& s, double gain) {
  Signal out{s.samples, s.sample_rate_hz};
  for (double& v : out.samples) v *= gain;
  return out;
}

double Energy(std::span<const double> x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

std::size_t MsToSamples(double ms, int sample_rate_hz) {
  return static_cast<std::size_t>(std::lround(ms * sample_rate_hz / 1000.0));
}

std::string_view ToString(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::optional<Polarity> ParsePolarity(std::string_view text) {
  if (text == "positive" || text == "pos" || text == "+") return Polarity::kPositive;
  if (text == "negative" || text == "neg" || text == "-") return Polarity::kNegative;
  return std::nullopt;
}

Polarity Opposite(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return Polarity::kNegative;
    case Polarity::kNegative:
      return Polarity::kPositive;
    case Polarity::kIndeterminate:
      return Polarity::kIndeterminate;
  }
  return Polarity::kIndeterminate;
}

}  // namespace polarity
