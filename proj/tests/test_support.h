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

// Generators and independent oracles shared by the test binaries.  Nothing
// here calls into the FFT path under test.

#ifndef POLARITY_TESTS_TEST_SUPPORT_H_
#define POLARITY_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "polarity/signal.h"
#include "polarity/synth.h"

namespace polarity::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr std::size_t kEdge = 16;

using Rng = std::mt19937_64;

inline double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Signal Cosine(double freq_hz, std::size_t n, int fs, double amp = 1.0) {
  Signal s{std::vector<double>(n), fs};
  for (std::size_t i = 0; i < n; ++i) s.samples[i] = amp * std::cos(2.0 * kPi * freq_hz * i / fs);
  return s;
}

// Sum of sinusoids on exact DFT bins inside [lo_hz, hi_hz] with random
// amplitudes and phases: zero DC, nothing at Nyquist.
inline Signal RandomBandlimited(Rng& rng, std::size_t n, int fs, double lo_hz, double hi_hz,
                                int components = 64) {
  Signal s{std::vector<double>(n, 0.0), fs};
  const double bin_hz = static_cast<double>(fs) / n;
  const int k_lo = std::max(1, static_cast<int>(std::ceil(lo_hz / bin_hz)));
  const int k_hi = std::min(static_cast<int>((n - 1) / 2), static_cast<int>(hi_hz / bin_hz));
  for (int c = 0; c < components; ++c) {
    const int k = UniformInt(rng, k_lo, k_hi);
    const double a = Uniform(rng, 0.1, 1.0);
    const double ph = Uniform(rng, 0.0, 2.0 * kPi);
    const double w = 2.0 * kPi * k / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) s.samples[i] += a * std::cos(w * i + ph);
  }
  return s;
}

inline Signal WhiteNoise(Rng& rng, std::size_t n, int fs, double sigma = 1.0) {
  std::normal_distribution<double> g(0.0, sigma);
  Signal s{std::vector<double>(n), fs};
  for (double& v : s.samples) v = g(rng);
  return s;
}

// Circular discrete Hilbert kernel for length n: the response to a unit
// impulse at 0, built as a sum over the retained bins.  Multiplying bin k by
// -j for 0 < k < n/2 and +j for the mirrored bins turns each pair into
// 2 sin(2 pi k d / n).
inline std::vector<double> DirectHilbertKernel(std::size_t n) {
  const std::size_t kmax = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  std::vector<double> h(n, 0.0);
  for (std::size_t d = 0; d < n; ++d) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= kmax; ++k) {
      acc += 2.0 * std::sin(2.0 * kPi * static_cast<double>((k * d) % n) / n);
    }
    h[d] = acc / static_cast<double>(n);
  }
  return h;
}

// O(n^2) circular convolution with the kernel above.
inline std::vector<double> DirectHilbert(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const std::vector<double> h = DirectHilbertKernel(n);
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) acc += x[m] * h[(i + n - m) % n];
    y[i] = acc;
  }
  return y;
}

inline double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b,
                         std::size_t edge = 0) {
  double m = 0.0;
  for (std::size_t i = edge; i + edge < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double RelativeL2(const std::vector<double>& got, const std::vector<double>& want) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += (got[i] - want[i]) * (got[i] - want[i]);
    den += want[i] * want[i];
  }
  return std::sqrt(num / den);
}

// x without `margin` samples at each end.
inline std::vector<double> Interior(const std::vector<double>& x, std::size_t margin) {
  if (2 * margin >= x.size()) return {};
  return std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(margin),
                             x.end() - static_cast<std::ptrdiff_t>(margin));
}

// Dominant period of x by normalised autocorrelation over [fmin, fmax],
// taking the shortest-lag local peak within 90% of the best one so that
// period multiples do not win.
inline double DominantFrequencyHz(const std::vector<double>& x, int fs, double fmin = 50.0,
                                  double fmax = 400.0) {
  const std::size_t lo = static_cast<std::size_t>(std::floor(fs / fmax));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(fs / fmin));
  double r0 = 0.0;
  for (double v : x) r0 += v * v;
  std::vector<double> r(hi + 2, 0.0);
  for (std::size_t lag = lo - 1; lag <= hi + 1; ++lag) {
    double acc = 0.0;
    for (std::size_t i = lag; i < x.size(); ++i) acc += x[i] * x[i - lag];
    r[lag] = acc / r0;
  }
  double best = -1.0;
  for (std::size_t lag = lo; lag <= hi; ++lag) best = std::max(best, r[lag]);
  for (std::size_t lag = lo; lag <= hi; ++lag) {
    if (r[lag] >= r[lag - 1] && r[lag] >= r[lag + 1] && r[lag] >= 0.9 * best) {
      // Parabolic refinement of the peak position.
      const double a = r[lag - 1], b = r[lag], c = r[lag + 1];
      const double den = a - 2.0 * b + c;
      const double off = den != 0.0 ? 0.5 * (a - c) / den : 0.0;
      return fs / (static_cast<double>(lag) + off);
    }
  }
  return 0.0;
}

inline synth::SynthSpec VowelSpec(double f0, std::size_t vowel, Polarity p, std::uint64_t seed,
                                  double jitter_pct = 1.0, double duration_s = 1.0) {
  synth::SynthSpec spec;
  spec.pitch_hz = f0;
  spec.formants = synth::ReferenceVowels().at(vowel).formants;
  spec.polarity = p;
  spec.seed = seed;
  spec.jitter_pct = jitter_pct;
  spec.duration_s = duration_s;
  return spec;
}

// Random synthetic utterance: pitch 80-300 Hz, any reference vowel, jitter
// 0-3 %, random polarity.
inline synth::Utterance RandomUtterance(Rng& rng, Polarity* polarity = nullptr) {
  const Polarity p = UniformInt(rng, 0, 1) ? Polarity::kPositive : Polarity::kNegative;
  if (polarity) *polarity = p;
  const std::size_t vowel = static_cast<std::size_t>(
      UniformInt(rng, 0, static_cast<int>(synth::ReferenceVowels().size()) - 1));
  return synth::Synthesize(VowelSpec(Uniform(rng, 80.0, 300.0), vowel, p, rng(),
                                     Uniform(rng, 0.0, 3.0), Uniform(rng, 0.5, 1.0)));
}

// Mean power spectrum over 512-sample Hann frames (direct DFT), bins 1..255.
inline std::vector<double> WelchPower(const std::vector<double>& x) {
  constexpr std::size_t kN = 512;
  std::vector<double> win(kN);
  for (std::size_t i = 0; i < kN; ++i) win[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / kN);
  std::vector<double> cos_t(kN), sin_t(kN);
  for (std::size_t i = 0; i < kN; ++i) {
    cos_t[i] = std::cos(2.0 * kPi * i / kN);
    sin_t[i] = std::sin(2.0 * kPi * i / kN);
  }
  std::vector<double> p(kN / 2 - 1, 0.0);
  std::size_t frames = 0;
  for (std::size_t start = 0; start + kN <= x.size(); start += kN / 2, ++frames) {
    for (std::size_t k = 1; k < kN / 2; ++k) {
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i < kN; ++i) {
        const double v = x[start + i] * win[i];
        re += v * cos_t[(k * i) % kN];
        im -= v * sin_t[(k * i) % kN];
      }
      p[k - 1] += re * re + im * im;
    }
  }
  for (double& v : p) v /= static_cast<double>(std::max<std::size_t>(frames, 1));
  return p;
}

// Geometric over arithmetic mean of the power spectrum, in (0, 1].
inline double SpectralFlatness(const std::vector<double>& x) {
  const std::vector<double> p = WelchPower(x);
  double log_sum = 0.0, sum = 0.0;
  for (double v : p) {
    log_sum += std::log(std::max(v, 1e-300));
    sum += v;
  }
  return std::exp(log_sum / p.size()) / (sum / p.size());
}

}  // namespace polarity::testing

#endif  // POLARITY_TESTS_TEST_SUPPORT_H_
