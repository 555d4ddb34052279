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
#include <filesystem>

#include "doctest.h"
#include "polarity/errors.h"
#include "polarity/synth.h"
#include "polarity/wav_io.h"
#include "test_support.h"

namespace polarity {
namespace {

using namespace polarity::testing;
using synth::NoiseKind;
using synth::NoiseSpec;
using synth::SynthSpec;

TEST_CASE("one excitation instant per pitch period") {
  SynthSpec spec;
  spec.pitch_hz = 100.0;
  spec.duration_s = 1.0;
  spec.seed = 1;
  const synth::Utterance u = synth::Synthesize(spec);
  CHECK(u.signal.size() == 16000);
  CHECK(u.signal.sample_rate_hz == 16000);
  CHECK(u.excitation_instants.size() >= 99);
  CHECK(u.excitation_instants.size() <= 101);
  CHECK(synth::ExcitationInstants(spec) == u.excitation_instants);
}

TEST_CASE("without jitter the closures are exactly periodic") {
  SynthSpec spec;
  spec.pitch_hz = 125.0;  // 128 samples
  spec.jitter_pct = 0.0;
  const auto inst = synth::ExcitationInstants(spec);
  REQUIRE(inst.size() >= 120);
  for (std::size_t i = 1; i < inst.size(); ++i) CHECK(inst[i] - inst[i - 1] == 128);
  // Closure = opening (0.40 T) plus closing (0.16 T) into the cycle.
  CHECK(inst[0] == static_cast<std::size_t>(std::lround(0.56 * 128)));
}

TEST_CASE("negative polarity is the exact negation") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    SynthSpec spec = VowelSpec(180.0, 3, Polarity::kPositive, seed, 2.5);
    const Signal p = synth::GenerateUtterance(spec);
    spec.polarity = Polarity::kNegative;
    const Signal n = synth::GenerateUtterance(spec);
    REQUIRE(p.size() == n.size());
    for (std::size_t i = 0; i < p.size(); ++i) REQUIRE(n.samples[i] == -p.samples[i]);
  }
}

TEST_CASE("output is deterministic, normalised, and the dominant excursion is negative") {
  SynthSpec spec;
  spec.seed = 4;
  const Signal a = synth::GenerateUtterance(spec);
  CHECK(synth::GenerateUtterance(spec).samples == a.samples);
  double mx = 0.0, mn = 0.0;
  for (double v : a.samples) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  CHECK(std::max(mx, -mn) == doctest::Approx(synth::kPeakAmplitude));
  spec.seed = 5;
  CHECK(synth::GenerateUtterance(spec).samples != a.samples);
}

TEST_CASE("glottal-flow derivative source has its sharpest excursion negative") {
  // A single wide formant leaves the source shape visible.
  SynthSpec spec;
  spec.formants = {{3000.0, 2000.0}};
  spec.jitter_pct = 0.0;
  const Signal s = synth::GenerateUtterance(spec);
  double mx = 0.0, mn = 0.0;
  for (double v : s.samples) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  CHECK(-mn > mx);
}

TEST_CASE("synth spec validation") {
  SynthSpec s;
  s.pitch_hz = 20.0;
  CHECK_THROWS_AS(synth::Validate(s), InvalidInputError);
  s = {};
  s.jitter_pct = 6.0;
  CHECK_THROWS_AS(synth::Validate(s), InvalidInputError);
  s = {};
  s.polarity = Polarity::kIndeterminate;
  CHECK_THROWS_AS(synth::Validate(s), InvalidInputError);
  s = {};
  s.formants = {{9000.0, 100.0}};
  CHECK_THROWS_AS(synth::Validate(s), InvalidInputError);
  s = {};
  s.duration_s = 0.0;
  CHECK_THROWS_AS(synth::Validate(s), InvalidInputError);
  CHECK(synth::ReferenceVowels().size() == 5);
}

TEST_CASE("0 dB noise carries the signal's energy") {
  const Signal s = synth::GenerateUtterance({});
  NoiseSpec n;
  n.snr_db = 0.0;
  n.seed = 3;
  const Signal y = synth::MixNoise(s, n);
  double en = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) en += (y.samples[i] - s.samples[i]) * (y.samples[i] - s.samples[i]);
  CHECK(std::abs(en - Energy(s.samples)) <= 1e-9 * Energy(s.samples));
}

TEST_CASE("60 dB noise is a small perturbation") {
  const Signal s = synth::GenerateUtterance({});
  NoiseSpec n;
  n.snr_db = 60.0;
  CHECK(RelativeL2(synth::MixNoise(s, n).samples, s.samples) <= 1e-3 + 1e-9);
}

TEST_CASE("requested SNR is measured back within 0.01 dB") {
  const std::filesystem::path babble =
      std::filesystem::temp_directory_path() / "polarity_test_babble.wav";
  Rng rng(61);
  harness::SaveWav(babble, Scaled(WhiteNoise(rng, 7001, 16000), 0.1), harness::WavEncoding::kFloat32);

  const Signal s = synth::GenerateUtterance(VowelSpec(150.0, 2, Polarity::kPositive, 8));
  for (NoiseKind kind : {NoiseKind::kWhite, NoiseKind::kPink, NoiseKind::kFile}) {
    for (double snr : {0.0, 5.0, 10.0, 15.0, 20.0, 30.0}) {
      NoiseSpec n;
      n.kind = kind;
      n.snr_db = snr;
      n.seed = 12345;
      if (kind == NoiseKind::kFile) n.path = babble.string();
      const Signal y = synth::MixNoise(s, n);
      CHECK(std::abs(synth::MeasuredSnrDb(s, y) - snr) <= 0.01);
      CHECK(synth::MixNoise(s, n).samples == y.samples);
    }
  }
  std::filesystem::remove(babble);
}

TEST_CASE("noise generators") {
  NoiseSpec white;
  white.seed = 9;
  const std::vector<double> w = synth::MakeNoise(white, 1 << 15);
  double mean = 0.0, var = 0.0;
  for (double v : w) mean += v;
  mean /= w.size();
  for (double v : w) var += (v - mean) * (v - mean);
  CHECK(std::abs(mean) <= 1e-12);
  CHECK(var / w.size() == doctest::Approx(1.0));

  // Pink noise has far more power in the lowest octaves than the highest.
  NoiseSpec pink = white;
  pink.kind = NoiseKind::kPink;
  const std::vector<double> p = synth::MakeNoise(pink, 1 << 15);
  const std::vector<double> pw = WelchPower(p);
  const std::vector<double> ww = WelchPower(w);
  auto band = [](const std::vector<double>& v, std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t i = a; i < b; ++i) s += v[i];
    return s / (b - a);
  };
  CHECK(band(pw, 2, 8) > 10.0 * band(pw, 128, 254));
  CHECK(band(ww, 2, 8) < 2.0 * band(ww, 128, 254));
}

TEST_CASE("noise kind parsing and validation") {
  CHECK(synth::ParseNoiseKind("white")->kind == NoiseKind::kWhite);
  CHECK(synth::ParseNoiseKind("pink")->kind == NoiseKind::kPink);
  const auto f = synth::ParseNoiseKind("file:/tmp/babble.wav");
  REQUIRE(f.has_value());
  CHECK(f->kind == NoiseKind::kFile);
  CHECK(*f->path == "/tmp/babble.wav");
  CHECK_FALSE(synth::ParseNoiseKind("brown").has_value());
  CHECK_FALSE(synth::ParseNoiseKind("file:").has_value());
  NoiseSpec n;
  n.snr_db = 61.0;
  CHECK_THROWS_AS(synth::Validate(n), InvalidInputError);
  CHECK_THROWS_AS(synth::MixNoise(Signal{std::vector<double>(100, 0.0), 16000}, NoiseSpec{}),
                  InvalidInputError);
  NoiseSpec missing;
  missing.kind = NoiseKind::kFile;
  missing.path = "/nonexistent/babble.wav";
  CHECK_THROWS_AS(synth::MixNoise(synth::GenerateUtterance({}), missing), IoError);
}

}  // namespace
}  // namespace polarity
