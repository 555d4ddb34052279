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

#include "polarity/evaluation.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "polarity/errors.h"
#include "polarity/hp_detector.h"
#include "polarity/reskew.h"
#include "polarity/wav_io.h"

namespace polarity::harness {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

TrialRecord Run(Method method, const Signal& s, const DetectorConfig& cfg, TrialRecord base) {
  try {
    const PolarityDecision d = Detect(method, s, cfg);
    base.decided = d.polarity;
    base.positive_slope_votes = d.positive_slope_votes;
    base.negative_slope_votes = d.negative_slope_votes;
    base.anchors_used = d.anchors_used;
    base.statistic = d.statistic;
  } catch (const Error& e) {
    base.error = e.what();
  }
  return base;
}

// All trials for one manifest entry.
std::vector<TrialRecord> EvaluateEntry(const ManifestEntry& entry, const EvalOptions& opt) {
  std::vector<TrialRecord> out;
  TrialRecord proto;
  proto.path = entry.path.string();
  proto.kind = entry.kind;

  Signal clean;
  try {
    clean = LoadWav(entry.path);
  } catch (const Error& e) {
    for (Method m : opt.methods) {
      TrialRecord r = proto;
      r.method = m;
      r.expected = entry.true_polarity;
      r.error = e.what();
      out.push_back(r);
    }
    return out;
  }

  auto both_orientations = [&](const Signal& s, std::optional<double> snr) {
    const Signal flipped = Negated(s);
    for (Method m : opt.methods) {
      TrialRecord r = proto;
      r.method = m;
      r.snr_db = snr;
      r.expected = entry.true_polarity;
      out.push_back(Run(m, s, opt.config, r));
      r.negated = true;
      r.expected = Opposite(entry.true_polarity);
      out.push_back(Run(m, flipped, opt.config, r));
    }
  };

  both_orientations(clean, std::nullopt);
  if (opt.sweep) {
    for (std::size_t level = 0; level < opt.sweep->snr_db.size(); ++level) {
      synth::NoiseSpec spec = opt.sweep->noise;
      spec.snr_db = opt.sweep->snr_db[level];
      spec.seed = TrialSeed(opt.sweep->noise.seed, entry.path, level);
      Signal noisy;
      try {
        noisy = synth::MixNoise(clean, spec);
      } catch (const Error& e) {
        for (Method m : opt.methods) {
          TrialRecord r = proto;
          r.method = m;
          r.snr_db = spec.snr_db;
          r.expected = entry.true_polarity;
          r.error = e.what();
          out.push_back(r);
        }
        continue;
      }
      both_orientations(noisy, spec.snr_db);
    }
  }
  return out;
}

auto SortKey(const TrialRecord& r) {
  return std::make_tuple(r.path, static_cast<int>(r.method), r.snr_db.has_value(),
                         r.snr_db.value_or(0.0), r.negated);
}

}  // namespace

std::string_view ToString(Method m) { return m == Method::kHp ? "hp" : "reskew"; }

std::optional<Method> ParseMethod(std::string_view text) {
  if (text == "hp") return Method::kHp;
  if (text == "reskew") return Method::kReskew;
  return std::nullopt;
}

PolarityDecision Detect(Method method, const Signal& s, const DetectorConfig& cfg) {
  if (method == Method::kHp) return hp::DetectPolarityHp(s, cfg.zff, cfg.hp);
  return reskew::DetectPolarityReskew(s, cfg.lp);
}

double Tally::percent_correct() const {
  return trials() == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / trials();
}

double Tally::detection_error_rate() const {
  return trials() == 0 ? 0.0 : static_cast<double>(wrong + indeterminate) / trials();
}

std::uint64_t TrialSeed(std::uint64_t base, const std::filesystem::path& file, std::size_t level) {
  return SplitMix64(base ^ SplitMix64(Fnv1a(file.filename().string())) ^ SplitMix64(level + 1));
}

void Aggregate(EvalReport& report) {
  report.per_method.clear();
  report.per_snr.clear();
  report.symmetry_violations = 0;
  for (Method m : report.methods) report.per_method[m];

  for (const TrialRecord& r : report.per_file) {
    Tally& t = r.snr_db ? report.per_snr[r.method][*r.snr_db] : report.per_method[r.method];
    if (!r.error.empty()) {
      ++t.errors;
    } else if (r.decided == r.expected) {
      ++t.correct;
    } else if (r.decided == Polarity::kIndeterminate) {
      ++t.indeterminate;
    } else {
      ++t.wrong;
    }
  }

  // per_file is sorted so each as-stored trial is immediately followed by
  // its negated twin.
  for (std::size_t i = 0; i + 1 < report.per_file.size(); ++i) {
    const TrialRecord& a = report.per_file[i];
    const TrialRecord& b = report.per_file[i + 1];
    if (a.negated || !b.negated || a.path != b.path || a.method != b.method ||
        a.snr_db != b.snr_db) {
      continue;
    }
    if (a.error.empty() && b.error.empty() && b.decided != Opposite(a.decided)) {
      ++report.symmetry_violations;
    }
  }
}

EvalReport EvaluateCorpus(const CorpusManifest& manifest, const EvalOptions& options) {
  Validate(options.config);
  if (options.sweep) {
    for (double snr : options.sweep->snr_db) {
      synth::NoiseSpec probe = options.sweep->noise;
      probe.snr_db = snr;
      synth::Validate(probe);
    }
  }

  EvalReport report;
  report.corpus = manifest.name;
  report.methods = options.methods;

  const std::size_t n = manifest.entries.size();
  std::vector<std::vector<TrialRecord>> results(n);
  if (!options.methods.empty() && n > 0) {
    unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                     : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(n));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        results[i] = EvaluateEntry(manifest.entries[i], options);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  for (auto& rows : results) {
    for (auto& r : rows) report.per_file.push_back(std::move(r));
  }
  std::sort(report.per_file.begin(), report.per_file.end(),
            [](const TrialRecord& a, const TrialRecord& b) { return SortKey(a) < SortKey(b); });
  Aggregate(report);
  return report;
}

}  // namespace polarity::harness
