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

// Corpus evaluation.  Every recording is scored twice, as stored and
// negated, against its labelled polarity and the opposite label; a noise
// sweep repeats both trials at each SNR.  Indeterminate verdicts count
// against the detector.

#ifndef POLARITY_EVALUATION_H_
#define POLARITY_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/config_file.h"
#include "polarity/manifest.h"
#include "polarity/signal.h"
#include "polarity/synth.h"

namespace polarity::harness {

enum class Method { kHp, kReskew };

std::string_view ToString(Method m);
std::optional<Method> ParseMethod(std::string_view text);

// Runs one detector with the relevant part of `cfg`.
PolarityDecision Detect(Method method, const Signal& s, const DetectorConfig& cfg);

struct NoiseSweep {
  synth::NoiseSpec noise;       // kind, base seed and path; snr_db is ignored
  std::vector<double> snr_db;   // one condition per level
};

struct EvalOptions {
  std::vector<Method> methods{Method::kHp, Method::kReskew};
  std::optional<NoiseSweep> sweep;
  DetectorConfig config;
  int jobs = 0;  // 0 = hardware concurrency
};

struct TrialRecord {
  std::string path;
  RecordingKind kind = RecordingKind::kSpeech;
  Method method = Method::kHp;
  std::optional<double> snr_db;  // nullopt = clean
  bool negated = false;
  Polarity expected = Polarity::kPositive;
  Polarity decided = Polarity::kIndeterminate;
  std::size_t positive_slope_votes = 0;
  std::size_t negative_slope_votes = 0;
  std::size_t anchors_used = 0;
  std::optional<double> statistic;
  std::string error;  // non-empty when the file could not be evaluated

  bool correct() const { return error.empty() && decided == expected; }
};

struct Tally {
  std::size_t correct = 0;
  std::size_t wrong = 0;          // decisive but opposite to the label
  std::size_t indeterminate = 0;
  std::size_t errors = 0;         // trials that could not be run at all

  std::size_t trials() const { return correct + wrong + indeterminate; }
  double percent_correct() const;
  double detection_error_rate() const;  // (wrong + indeterminate) / trials
  bool operator==(const Tally&) const = default;
};

struct EvalReport {
  std::string corpus;
  std::vector<Method> methods;
  std::map<Method, Tally> per_method;                       // clean trials
  std::map<Method, std::map<double, Tally>> per_snr;        // noisy trials
  std::vector<TrialRecord> per_file;  // sorted by path, method, condition, orientation
  // Files whose negated copy did not receive the opposite verdict.
  std::size_t symmetry_violations = 0;
};

// Seed for the noise added to one (file, SNR level) pair.  Depends only on
// the base seed, the file name (not its directory, so a corpus can move)
// and the level index, never on scheduling.
std::uint64_t TrialSeed(std::uint64_t base, const std::filesystem::path& file, std::size_t level);

EvalReport EvaluateCorpus(const CorpusManifest& manifest, const EvalOptions& options);

// Recomputes per_method / per_snr / symmetry_violations from per_file.
void Aggregate(EvalReport& report);

}  // namespace polarity::harness

#endif  // POLARITY_EVALUATION_H_
