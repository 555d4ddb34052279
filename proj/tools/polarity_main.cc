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

// polarity: command-line front end.
//
//   polarity detect utt.wav [--method hp|reskew|both] [--json]
//   polarity eval --manifest corpus.txt [--methods hp,reskew] [--snr 0,5,10]
//                 [--noise white|pink|file:<path>] [--seed N] [--out report.csv]
//   polarity synth --pitch 100 --polarity positive --seed 7 --out utt.wav
//   polarity calibrate
//   polarity config
//
// Every subcommand accepts --config <file> and --set key=value.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polarity/calibration.h"
#include "polarity/config_file.h"
#include "polarity/errors.h"
#include "polarity/evaluation.h"
#include "polarity/hp_detector.h"
#include "polarity/manifest.h"
#include "polarity/report.h"
#include "polarity/reskew.h"
#include "polarity/synth.h"
#include "polarity/wav_io.h"

namespace {

using namespace polarity;
using Json = nlohmann::ordered_json;

// Thrown for bad flag values found after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> settings;
};

void AddCommon(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--config", common.config_path, "key = value file of detector settings")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", common.settings, "override one setting, e.g. hp.min_votes=5");
}

harness::DetectorConfig ResolveConfig(const CommonOptions& common) {
  harness::DetectorConfig cfg;
  if (!common.config_path.empty()) harness::ApplyConfigFile(cfg, common.config_path);
  for (const std::string& s : common.settings) harness::ApplyAssignment(cfg, s);
  harness::Validate(cfg);
  return cfg;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out << text;
  if (!out.flush()) throw IoError(path.string() + ": write failed");
}

int ExitFor(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return 0;
    case Polarity::kNegative: return 1;
    case Polarity::kIndeterminate: break;
  }
  return 2;
}

// detect ------------------------------------------------------------------

struct DetectOptions {
  std::string path;
  std::string method = "both";
  bool json = false;
};

int RunDetect(const DetectOptions& opt, const CommonOptions& common) {
  const harness::DetectorConfig cfg = ResolveConfig(common);
  std::vector<harness::Method> methods;
  if (opt.method == "both") {
    methods = {harness::Method::kHp, harness::Method::kReskew};
  } else {
    methods = {*harness::ParseMethod(opt.method)};
  }
  const Signal s = harness::LoadWav(opt.path);

  Json doc;
  doc["path"] = opt.path;
  doc["sample_rate_hz"] = s.sample_rate_hz;
  doc["duration_s"] = s.duration_s();
  Polarity last = Polarity::kIndeterminate;
  for (harness::Method m : methods) {
    const PolarityDecision d = harness::Detect(m, s, cfg);
    last = d.polarity;
    Json j;
    j["decision"] = ToString(d.polarity);
    if (m == harness::Method::kHp) {
      j["positive_slope_votes"] = d.positive_slope_votes;
      j["negative_slope_votes"] = d.negative_slope_votes;
      j["anchors_used"] = d.anchors_used;
      if (!opt.json) {
        std::printf("hp: %s (rising %zu, falling %zu, anchors %zu)\n",
                    std::string(ToString(d.polarity)).c_str(), d.positive_slope_votes,
                    d.negative_slope_votes, d.anchors_used);
      }
    } else {
      j["statistic"] = d.statistic ? Json(*d.statistic) : Json(nullptr);
      if (!opt.json) {
        std::printf("reskew: %s (delta %.6g)\n", std::string(ToString(d.polarity)).c_str(),
                    d.statistic.value_or(0.0));
      }
    }
    doc[std::string(harness::ToString(m))] = std::move(j);
  }
  if (opt.json) std::cout << doc.dump(2) << "\n";
  return methods.size() == 1 ? ExitFor(last) : exit_code::kSuccess;
}

// eval --------------------------------------------------------------------

struct EvalCliOptions {
  std::vector<std::string> manifests;
  std::vector<std::string> methods{"hp", "reskew"};
  std::vector<double> snr_db;
  std::string noise = "white";
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  int jobs = 0;
};

int RunEval(const EvalCliOptions& opt, const CommonOptions& common) {
  harness::EvalOptions eval;
  eval.config = ResolveConfig(common);
  eval.jobs = opt.jobs;
  eval.methods.clear();
  for (const std::string& name : opt.methods) {
    auto m = harness::ParseMethod(name);
    if (!m) throw UsageError("unknown method '" + name + "' (expected hp or reskew)");
    if (std::find(eval.methods.begin(), eval.methods.end(), *m) == eval.methods.end()) {
      eval.methods.push_back(*m);
    }
  }
  if (!opt.snr_db.empty()) {
    auto noise = synth::ParseNoiseKind(opt.noise);
    if (!noise) throw UsageError("bad --noise '" + opt.noise + "'");
    noise->seed = opt.seed;
    eval.sweep = harness::NoiseSweep{*noise, opt.snr_db};
  }

  std::optional<harness::ReportFormat> out_format;
  if (!opt.format.empty()) {
    out_format = harness::ParseReportFormat(opt.format);
    if (!out_format) throw UsageError("bad --format '" + opt.format + "'");
  } else if (!opt.out.empty()) {
    out_format = harness::FormatForPath(opt.out);
    if (!out_format) throw UsageError("cannot infer report format from '" + opt.out + "'");
  }

  std::vector<harness::EvalReport> reports;
  for (const std::string& path : opt.manifests) {
    const harness::CorpusManifest manifest = harness::LoadManifest(path);
    if (manifest.entries.empty()) throw DataError(path + ": manifest has no entries");
    reports.push_back(harness::EvaluateCorpus(manifest, eval));
  }

  const harness::ReportFormat fmt = out_format.value_or(harness::ReportFormat::kTable);
  if (!opt.out.empty()) {
    WriteText(opt.out, harness::RenderReport(reports, fmt));
    std::cout << harness::RenderReport(reports, harness::ReportFormat::kTable);
  } else {
    std::cout << harness::RenderReport(reports, fmt);
  }

  for (const harness::EvalReport& r : reports) {
    if (r.symmetry_violations > 0) {
      std::cerr << "polarity: " << r.corpus << ": " << r.symmetry_violations
                << " trial pair(s) violate decision antisymmetry\n";
      return exit_code::kDataError;
    }
  }
  return exit_code::kSuccess;
}

// synth -------------------------------------------------------------------

struct SynthCliOptions {
  synth::SynthSpec spec;
  std::string polarity = "positive";
  std::string vowel;
  std::string formants;
  std::string encoding = "pcm16";
  std::string out;
};

std::vector<synth::Formant> ParseFormants(const std::string& text) {
  std::vector<synth::Formant> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("formant '" + item + "' is not center:bandwidth");
    try {
      out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("formant '" + item + "' is not center:bandwidth");
    }
  }
  return out;
}

int RunSynth(SynthCliOptions opt) {
  auto pol = ParsePolarity(opt.polarity);
  if (!pol || *pol == Polarity::kIndeterminate) {
    throw UsageError("--polarity must be positive or negative");
  }
  opt.spec.polarity = *pol;
  if (!opt.vowel.empty()) {
    bool found = false;
    for (const synth::Vowel& v : synth::ReferenceVowels()) {
      if (v.name == opt.vowel) {
        opt.spec.formants = v.formants;
        found = true;
      }
    }
    if (!found) throw UsageError("unknown vowel '" + opt.vowel + "'");
  }
  if (!opt.formants.empty()) opt.spec.formants = ParseFormants(opt.formants);
  try {
    synth::Validate(opt.spec);
  } catch (const InvalidInputError& e) {
    throw UsageError(e.what());
  }
  const harness::WavEncoding enc =
      opt.encoding == "float32" ? harness::WavEncoding::kFloat32 : harness::WavEncoding::kPcm16;
  const synth::Utterance u = synth::Synthesize(opt.spec);
  harness::SaveWav(opt.out, u.signal, enc);
  std::printf("%s: %zu samples at %d Hz, %zu glottal closures, %s polarity\n", opt.out.c_str(),
              u.signal.size(), u.signal.sample_rate_hz, u.excitation_instants.size(),
              std::string(ToString(opt.spec.polarity)).c_str());
  return exit_code::kSuccess;
}

// calibrate ---------------------------------------------------------------

int RunCalibrate(harness::CalibrationOptions opt, const CommonOptions& common, bool verbose) {
  opt.config = ResolveConfig(common);
  const harness::CalibrationResult r = harness::Calibrate(opt);
  if (verbose) {
    std::cout << harness::RenderCalibration(r);
  } else {
    std::printf("slope_sign_for_positive = %+d\n", r.slope_sign_for_positive);
  }
  if (r.slope_sign_for_positive != opt.config.hp.slope_sign_for_positive) {
    std::printf("note: configured hp.slope_sign_for_positive is %+d\n",
                opt.config.hp.slope_sign_for_positive);
  }
  return r.slope_sign_for_positive == 0 ? exit_code::kDataError : exit_code::kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speech polarity detection from Hilbert phase, with a residual-skewness baseline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polarity 0.1.0");

  CommonOptions common;

  DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Decide the polarity of one WAV file");
  detect_cmd->add_option("file", detect.path, "mono WAV file")->required();
  detect_cmd->add_option("--method", detect.method, "hp, reskew or both")
      ->check(CLI::IsMember({"hp", "reskew", "both"}));
  detect_cmd->add_flag("--json", detect.json, "print a JSON object");
  AddCommon(detect_cmd, common);

  EvalCliOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate detectors over labelled corpora");
  eval_cmd->add_option("--manifest", eval.manifests, "manifest file (repeatable)")->required();
  eval_cmd->add_option("--methods", eval.methods, "comma-separated subset of hp,reskew")
      ->delimiter(',');
  eval_cmd->add_option("--snr", eval.snr_db, "comma-separated SNR levels in dB")->delimiter(',');
  eval_cmd->add_option("--noise", eval.noise, "white, pink or file:<path>");
  eval_cmd->add_option("--seed", eval.seed, "base seed for noise");
  eval_cmd->add_option("--out", eval.out, "write the report here (.csv, .json or .txt)");
  eval_cmd->add_option("--format", eval.format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  eval_cmd->add_option("--jobs", eval.jobs, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  AddCommon(eval_cmd, common);

  SynthCliOptions syn;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic vowel of known polarity");
  synth_cmd->add_option("--pitch", syn.spec.pitch_hz, "mean f0 in Hz");
  synth_cmd->add_option("--duration", syn.spec.duration_s, "seconds");
  synth_cmd->add_option("--rate", syn.spec.sample_rate_hz, "sample rate in Hz");
  synth_cmd->add_option("--polarity", syn.polarity, "positive or negative");
  synth_cmd->add_option("--seed", syn.spec.seed, "jitter seed");
  synth_cmd->add_option("--jitter", syn.spec.jitter_pct, "per-cycle period jitter in percent");
  synth_cmd->add_option("--vowel", syn.vowel, "default, i, e, a or u");
  synth_cmd->add_option("--formants", syn.formants, "explicit list, e.g. 700:80,1220:100");
  synth_cmd->add_option("--encoding", syn.encoding, "pcm16 or float32")
      ->check(CLI::IsMember({"pcm16", "float32"}));
  synth_cmd->add_option("--out", syn.out, "output WAV path")->required();

  harness::CalibrationOptions cal;
  bool cal_verbose = false;
  auto* cal_cmd = app.add_subcommand("calibrate", "Resolve the hp slope sign from synthetic speech");
  cal_cmd->add_option("--pitches", cal.pitches_hz, "comma-separated f0 values")->delimiter(',');
  cal_cmd->add_option("--seeds", cal.seeds_per_condition, "utterances per vowel and pitch")
      ->check(CLI::PositiveNumber);
  cal_cmd->add_flag("-v,--verbose", cal_verbose, "print every utterance");
  AddCommon(cal_cmd, common);

  auto* config_cmd = app.add_subcommand("config", "Print the resolved detector settings");
  AddCommon(config_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::kUsage;
  }

  try {
    if (*detect_cmd) return RunDetect(detect, common);
    if (*eval_cmd) return RunEval(eval, common);
    if (*synth_cmd) return RunSynth(syn);
    if (*cal_cmd) return RunCalibrate(cal, common, cal_verbose);
    if (*config_cmd) {
      for (const auto& [key, value] : harness::ListSettings(ResolveConfig(common))) {
        std::printf("%s = %s\n", key.c_str(), value.c_str());
      }
      return exit_code::kSuccess;
    }
  } catch (const UsageError& e) {
    std::cerr << "polarity: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "polarity: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return exit_code::kUsage;
}
