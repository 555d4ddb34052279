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

// Analytic-signal machinery: the FFT-based Hilbert transform, the Hilbert
// envelope |s + j*H{s}| and the cosine of the instantaneous phase
// s / |s + j*H{s}|.
//
// All transforms operate on the whole utterance with a single FFT whose
// length equals the signal length (no framing, no zero padding), so the
// result is the circular Hilbert transform.  The DC bin and, for even
// lengths, the Nyquist bin are annihilated.

#ifndef POLARITY_ANALYTIC_H_
#define POLARITY_ANALYTIC_H_

#include <vector>

#include "polarity/signal.h"

namespace polarity::dsp {

struct AnalyticSignal {
  std::vector<double> real;  // the source samples, verbatim
  std::vector<double> imag;  // their Hilbert transform
  int sample_rate_hz = 0;

  std::size_t size() const { return real.size(); }
};

// Non-negative magnitude of an AnalyticSignal.
struct EnvelopeSeries {
  std::vector<double> values;
  int sample_rate_hz = 0;
};

// cos(phi(n)), every value in [-1, 1].
struct PhaseSeries {
  std::vector<double> values;
  int sample_rate_hz = 0;
};

// Frequency-domain Hilbert transform: bins 0 < k < N/2 are multiplied by -j,
// bins N/2 < k < N by +j, DC and Nyquist by 0.  Throws InvalidInputError on
// empty or non-finite input.
Signal HilbertTransform(const Signal& s);

// (s, H{s}).  The real part is a copy of the input samples.
AnalyticSignal MakeAnalyticSignal(const Signal& s);

// sqrt(real^2 + imag^2) per sample.  Throws InvalidInputError if the two
// parts differ in length.
EnvelopeSeries HilbertEnvelope(const AnalyticSignal& a);

// Default guard for CosinePhase: 1e-12 times the envelope maximum, or 1e-12
// for an all-zero envelope.
double DefaultPhaseEpsilon(const EnvelopeSeries& env);

// real[n] / max(envelope[n], eps), clamped to [-1, 1].  Zero-envelope
// samples therefore map to 0.  Throws InvalidInputError unless eps > 0.
PhaseSeries CosinePhase(const AnalyticSignal& a, const EnvelopeSeries& env, double eps);

// Convenience overload computing the envelope and the default eps.
PhaseSeries CosinePhase(const AnalyticSignal& a);

}  // namespace polarity::dsp

#endif  // POLARITY_ANALYTIC_H_
