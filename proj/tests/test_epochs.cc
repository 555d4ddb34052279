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

#include "doctest.h"
#include "polarity/errors.h"
#include "polarity/synth.h"
#include "polarity/zff.h"
#include "test_support.h"

namespace polarity {
namespace {

using namespace polarity::testing;
using epochs::EstimateMeanPitch;
using epochs::ExtractEpochs;
using epochs::ResolveTrendWindowMs;
using epochs::ZffConfig;
using epochs::ZffFilter;

Signal Train(double f0, std::uint64_t seed = 1, std::size_t vowel = 0) {
  return synth::GenerateUtterance(VowelSpec(f0, vowel, Polarity::kPositive, seed));
}

TEST_CASE("mean pitch of synthetic trains") {
  CHECK(EstimateMeanPitch(Train(100.0)) == doctest::Approx(100.0).epsilon(0.02));
  CHECK(EstimateMeanPitch(Train(250.0)) == doctest::Approx(250.0).epsilon(0.02));
}

TEST_CASE("mean pitch of noise and of short input falls back") {
  Rng rng(5);
  CHECK(EstimateMeanPitch(WhiteNoise(rng, 16000, 16000)) == 120.0);
  ZffConfig cfg;
  cfg.mean_pitch_fallback_hz = 90.0;
  CHECK(EstimateMeanPitch(Signal{std::vector<double>(800, 0.1), 16000}, cfg) == 90.0);
}

TEST_CASE("mean pitch across vowels and f0") {
  for (std::size_t v = 0; v < synth::ReferenceVowels().size(); ++v) {
    for (double f0 : {80.0, 120.0, 180.0, 300.0}) {
      INFO("vowel " << synth::ReferenceVowels()[v].name << " f0 " << f0);
      CHECK(EstimateMeanPitch(Train(f0, 2, v)) == doctest::Approx(f0).epsilon(0.05));
    }
  }
}

TEST_CASE("trend window follows pitch and is clamped") {
  CHECK(ResolveTrendWindowMs(Train(100.0), {}) == doctest::Approx(15.0).epsilon(0.03));
  Rng rng(1);
  ZffConfig low;
  low.mean_pitch_fallback_hz = 50.0;
  CHECK(ResolveTrendWindowMs(WhiteNoise(rng, 8000, 16000), low) == 25.0);
  ZffConfig high;
  high.mean_pitch_fallback_hz = 1000.0;
  CHECK(ResolveTrendWindowMs(WhiteNoise(rng, 8000, 16000), high) == 3.0);
  ZffConfig fixed;
  fixed.trend_window_ms = 7.5;
  CHECK(ResolveTrendWindowMs(Train(100.0), fixed) == 7.5);
}

// The integrators start at rest, but the last fraction of a trend window
// keeps residual drift, so frequencies are measured one window in from
// either end.
std::vector<double> ZffInterior(const Signal& s) {
  const Signal y = ZffFilter(s);
  return Interior(y.samples, MsToSamples(ResolveTrendWindowMs(s, {}), s.sample_rate_hz));
}

TEST_CASE("zff output oscillates at the pitch") {
  CHECK(DominantFrequencyHz(ZffInterior(Train(100.0)), 16000) ==
        doctest::Approx(100.0).epsilon(0.03));
  for (std::size_t v = 0; v < synth::ReferenceVowels().size(); ++v) {
    for (double f0 : {80.0, 150.0, 220.0, 300.0}) {
      INFO("vowel " << synth::ReferenceVowels()[v].name << " f0 " << f0);
      CHECK(DominantFrequencyHz(ZffInterior(Train(f0, 3, v)), 16000) ==
            doctest::Approx(f0).epsilon(0.03));
    }
  }
}

TEST_CASE("zff is odd and zero-preserving") {
  const Signal s = Train(140.0, 4);
  const Signal y = ZffFilter(s);
  const Signal yn = ZffFilter(Negated(s));
  double scale = 0.0;
  for (double v : y.samples) scale = std::max(scale, std::abs(v));
  CHECK(MaxAbsDiff(yn.samples, Negated(y).samples) <= 1e-9 * scale);

  const Signal z = ZffFilter(Signal{std::vector<double>(8000, 0.0), 16000});
  for (double v : z.samples) REQUIRE(v == 0.0);
}

TEST_CASE("epoch count on a 100 Hz train") {
  const epochs::EpochList e = ExtractEpochs(ZffFilter(Train(100.0)));
  CHECK(e.indices.size() >= 180);
  CHECK(e.indices.size() <= 220);
  CHECK(e.sample_rate_hz == 16000);
}

TEST_CASE("epochs of the negated signal coincide") {
  const Signal s = Train(170.0, 9, 2);
  const auto a = ExtractEpochs(ZffFilter(s)).indices;
  const auto b = ExtractEpochs(ZffFilter(Negated(s))).indices;
  CHECK(a == b);
}

TEST_CASE("silence has no epochs") {
  const Signal silence{std::vector<double>(16000, 0.0), 16000};
  CHECK(ExtractEpochs(ZffFilter(silence)).indices.empty());
  CHECK(ExtractEpochs(silence).indices.empty());
}

TEST_CASE("crossing rules") {
  // Alternating blocks of +1 / -1 with an exact zero in one transition.
  Signal y{std::vector<double>(400, 0.0), 1000};
  for (std::size_t i = 0; i < y.size(); ++i) y.samples[i] = (i / 50) % 2 ? -1.0 : 1.0;
  y.samples[100] = 0.0;
  const auto e = ExtractEpochs(y).indices;
  // Transitions at 50, 100 (through the zero), 150, ..., 350; none near the edges.
  REQUIRE(e.size() == 7);
  CHECK(e[1] == 100);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] > e[i - 1]);

  // Crossings closer than 1 ms collapse onto the first.
  Signal fast{std::vector<double>(200, 0.0), 16000};
  for (std::size_t i = 0; i < fast.size(); ++i) fast.samples[i] = (i / 4) % 2 ? -1.0 : 1.0;
  const auto f = ExtractEpochs(fast).indices;
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] - f[i - 1] >= 16);
}

TEST_CASE("zff rejects short input and bad config") {
  CHECK_THROWS_AS(ZffFilter(Signal{std::vector<double>(100, 1.0), 16000}), InvalidInputError);
  ZffConfig bad;
  bad.trend_passes = 0;
  CHECK_THROWS_AS(epochs::Validate(bad), InvalidInputError);
  bad = {};
  bad.trend_window_ms = 0.5;
  CHECK_THROWS_AS(epochs::Validate(bad), InvalidInputError);
  bad = {};
  bad.mean_pitch_fallback_hz = 0.0;
  CHECK_THROWS_AS(epochs::Validate(bad), InvalidInputError);
}

// Properties --------------------------------------------------------------

TEST_CASE("property: epochs are in range, ascending, and invariant to sign and scale") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const synth::Utterance u = RandomUtterance(rng);
    const double alpha = Uniform(rng, 1e-3, 1e3);
    const auto base = ExtractEpochs(ZffFilter(u.signal)).indices;
    const auto neg = ExtractEpochs(ZffFilter(Negated(u.signal))).indices;
    const auto scaled = ExtractEpochs(ZffFilter(Scaled(u.signal, alpha))).indices;
    CHECK(base == neg);
    CHECK(base == scaled);
    for (std::size_t i = 0; i < base.size(); ++i) {
      REQUIRE(base[i] < u.signal.size());
      if (i) REQUIRE(base[i] > base[i - 1]);
    }
  }
}

TEST_CASE("property: epoch density tracks pitch") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const double f0 = Uniform(rng, 80.0, 300.0);
    const Signal s = synth::GenerateUtterance(
        VowelSpec(f0, 0, Polarity::kPositive, rng(), Uniform(rng, 0.0, 3.0)));
    const auto e = ExtractEpochs(ZffFilter(s)).indices;
    const double per_s = e.size() / s.duration_s();
    INFO("f0 " << f0 << " epochs/s " << per_s);
    CHECK(per_s >= 1.6 * f0);
    CHECK(per_s <= 2.4 * f0);
  }
}

}  // namespace
}  // namespace polarity
