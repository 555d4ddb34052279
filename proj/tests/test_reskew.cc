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
#include "polarity/reskew.h"
#include "polarity/synth.h"
#include "test_support.h"

namespace polarity {
namespace {

using namespace polarity::testing;
using reskew::DetectPolarityReskew;
using reskew::LevinsonDurbin;
using reskew::LpConfig;
using reskew::LpResidual;
using reskew::ReskewStatistic;
using reskew::Skewness;

// Solves the Toeplitz normal equations by Gaussian elimination with partial
// pivoting and returns the prediction-error filter [1, -phi_1, ...].
std::vector<double> YuleWalker(const std::vector<double>& r, int p) {
  std::vector<std::vector<double>> m(p, std::vector<double>(p + 1));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) m[i][j] = r[std::abs(i - j)];
    m[i][p] = r[i + 1];
  }
  for (int c = 0; c < p; ++c) {
    int piv = c;
    for (int i = c + 1; i < p; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    }
    std::swap(m[c], m[piv]);
    for (int i = 0; i < p; ++i) {
      if (i == c) continue;
      const double f = m[i][c] / m[c][c];
      for (int j = c; j <= p; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<double> a{1.0};
  for (int i = 0; i < p; ++i) a.push_back(-m[i][p] / m[i][i]);
  return a;
}

TEST_CASE("skewness examples") {
  CHECK(Skewness(std::vector<double>{1, 2, 3}) == 0.0);
  CHECK(Skewness(std::vector<double>{0, 0, 0, 1}) == doctest::Approx(2.0 / std::sqrt(3.0)));
  CHECK(Skewness(std::vector<double>{0, 0, 0, -1}) == doctest::Approx(-2.0 / std::sqrt(3.0)));
  CHECK_THROWS_AS(Skewness(std::vector<double>{1, 2}), UndefinedStatisticError);
  CHECK_THROWS_AS(Skewness(std::vector<double>{4, 4, 4, 4}), UndefinedStatisticError);
}

TEST_CASE("property: skewness is odd and affine-invariant") {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(static_cast<std::size_t>(UniformInt(rng, 3, 500)));
    std::exponential_distribution<double> ex(1.0);
    for (double& v : x) v = ex(rng);
    const double k = Skewness(x);
    std::vector<double> neg(x), aff(x);
    const double alpha = Uniform(rng, 1e-3, 1e3), beta = Uniform(rng, -10.0, 10.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      neg[i] = -x[i];
      aff[i] = alpha * x[i] + beta;
    }
    CHECK(Skewness(neg) == -k);
    CHECK(std::abs(Skewness(aff) - k) <= 1e-9 * (1.0 + std::abs(k)));
  }
}

TEST_CASE("levinson-durbin agrees with a direct Yule-Walker solve") {
  Rng rng(52);
  for (int p : {1, 2, 4, 10, 18}) {
    const Signal x = WhiteNoise(rng, 2000, 16000);
    std::vector<double> r(static_cast<std::size_t>(p) + 1, 0.0);
    for (int lag = 0; lag <= p; ++lag) {
      for (std::size_t i = static_cast<std::size_t>(lag); i < x.size(); ++i) {
        r[static_cast<std::size_t>(lag)] += x.samples[i] * x.samples[i - lag] * std::exp(-0.001 * i);
      }
    }
    const std::vector<double> a = LevinsonDurbin(r, p);
    const std::vector<double> want = YuleWalker(r, p);
    REQUIRE(a.size() == want.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(want[i]).epsilon(1e-9));
  }
}

TEST_CASE("levinson-durbin on an exact AR(2) autocorrelation") {
  // x(n) = 1.2 x(n-1) - 0.5 x(n-2) + w(n): rho1 = 1.2/1.5 = 0.8,
  // rho2 = 1.2*0.8 - 0.5 = 0.46.
  const std::vector<double> r{1.0, 0.8, 0.46};
  const std::vector<double> a = LevinsonDurbin(r, 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == 1.0);
  CHECK(a[1] == doctest::Approx(-1.2));
  CHECK(a[2] == doctest::Approx(0.5));
}

TEST_CASE("levinson-durbin reports breakdown") {
  CHECK(LevinsonDurbin(std::vector<double>{0.0, 0.0, 0.0}, 2).empty());
  CHECK(LevinsonDurbin(std::vector<double>{1.0, 1.0, 1.0}, 2).empty());
}

TEST_CASE("residual of a synthetic vowel is much flatter than the vowel") {
  synth::SynthSpec spec;
  spec.seed = 2;
  const Signal s = synth::GenerateUtterance(spec);
  const Signal e = LpResidual(s);
  const double fs = SpectralFlatness(s.samples);
  const double fe = SpectralFlatness(e.samples);
  INFO("flatness input " << fs << " residual " << fe);
  CHECK(fe >= 5.0 * fs);
}

TEST_CASE("residual of white noise is the noise") {
  Rng rng(53);
  const Signal s = WhiteNoise(rng, 16000, 16000);
  const Signal e = LpResidual(s);
  double xy = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    xy += s.samples[i] * e.samples[i];
    xx += s.samples[i] * s.samples[i];
    yy += e.samples[i] * e.samples[i];
  }
  CHECK(xy / std::sqrt(xx * yy) >= 0.95);
}

TEST_CASE("residual is odd and silent frames give zeros") {
  const Signal s = synth::GenerateUtterance(VowelSpec(210.0, 1, Polarity::kPositive, 4));
  const Signal e = LpResidual(s);
  const Signal en = LpResidual(Negated(s));
  double scale = 0.0;
  for (double v : e.samples) scale = std::max(scale, std::abs(v));
  CHECK(MaxAbsDiff(en.samples, Negated(e).samples) <= 1e-9 * scale);

  Signal gap = s;
  std::fill(gap.samples.begin() + 4000, gap.samples.begin() + 8000, 0.0);
  const Signal eg = LpResidual(gap);
  for (std::size_t i = 4400; i < 7600; ++i) REQUIRE(eg.samples[i] == 0.0);
  for (double v : eg.samples) REQUIRE(std::isfinite(v));
}

TEST_CASE("leaky integrator") {
  const std::vector<double> g = reskew::LeakyIntegrate(std::vector<double>{1, 0, 0, 2}, 0.5);
  CHECK(g == std::vector<double>{1.0, 0.5, 0.25, 2.125});
}

TEST_CASE("positive synthetic speech is detected as positive") {
  synth::SynthSpec spec;
  spec.seed = 7;
  const PolarityDecision d = DetectPolarityReskew(synth::GenerateUtterance(spec));
  CHECK(d.polarity == Polarity::kPositive);
  REQUIRE(d.statistic.has_value());
  CHECK(*d.statistic < 0.0);
  spec.polarity = Polarity::kNegative;
  CHECK(DetectPolarityReskew(synth::GenerateUtterance(spec)).polarity == Polarity::kNegative);
}

TEST_CASE("silence is indeterminate; short input and bad config are rejected") {
  const PolarityDecision d = DetectPolarityReskew(Signal{std::vector<double>(16000, 0.0), 16000});
  CHECK(d.polarity == Polarity::kIndeterminate);
  CHECK_FALSE(d.statistic.has_value());
  CHECK_THROWS_AS(DetectPolarityReskew(Signal{std::vector<double>(800, 0.1), 16000}),
                  InvalidInputError);
  LpConfig c;
  c.order = 2;
  CHECK_THROWS_AS(reskew::Validate(c), InvalidInputError);
  c = {};
  c.hop_ms = 30.0;
  CHECK_THROWS_AS(reskew::Validate(c), InvalidInputError);
  c = {};
  c.integrator_pole = 1.0;
  CHECK_THROWS_AS(reskew::Validate(c), InvalidInputError);
  CHECK(reskew::ResolveOrder({}, 16000) == 18);
  CHECK(reskew::ResolveOrder({}, 32000) == 34);
}

// Properties --------------------------------------------------------------

TEST_CASE("property: statistic is odd and scale-invariant") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const Signal s = trial % 4 == 3 ? WhiteNoise(rng, 8000, 16000) : RandomUtterance(rng).signal;
    const double d = ReskewStatistic(s);
    CHECK(std::abs(ReskewStatistic(Negated(s)) + d) <= 1e-9);
    // Power-of-two gains are exact in floating point all the way through.
    CHECK(ReskewStatistic(Scaled(s, std::ldexp(1.0, UniformInt(rng, -20, 20)))) == d);
    // Other gains perturb the rounding of nearly singular LPC normal
    // equations on these exactly all-pole vowels; the decision must not move.
    const Signal t = Scaled(s, Uniform(rng, 1e-3, 1e3));
    CHECK(std::abs(ReskewStatistic(t) - d) <= 1e-3 * (1 + std::abs(d)));
    const PolarityDecision a = DetectPolarityReskew(s);
    CHECK(DetectPolarityReskew(t).polarity == a.polarity);
    CHECK(DetectPolarityReskew(Negated(s)).polarity == Opposite(a.polarity));
  }
}

}  // namespace
}  // namespace polarity
