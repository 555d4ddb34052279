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

#include "polarity/analytic.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "polarity/errors.h"

namespace polarity::dsp {
namespace {

// The FFTW planner is not re-entrant; execution of distinct plans is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> AllocFftw(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {}
  ~Plan() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void Execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

Signal HilbertTransform(const Signal& s) {
  ValidateSignal(s, "hilbert_transform input");
  const std::size_t n = s.size();
  const std::size_t bins = n / 2 + 1;
  const int len = static_cast<int>(n);

  // Buffers come from fftw_malloc so the planner always sees the same
  // alignment, and hence picks the same algorithm, for a given length.
  auto time = AllocFftw<double>(n);
  auto freq = AllocFftw<fftw_complex>(bins);

  std::unique_ptr<Plan> forward, inverse;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    forward = std::make_unique<Plan>(
        fftw_plan_dft_r2c_1d(len, time.get(), freq.get(), FFTW_ESTIMATE));
    inverse = std::make_unique<Plan>(
        fftw_plan_dft_c2r_1d(len, freq.get(), time.get(), FFTW_ESTIMATE));
  }

  std::copy(s.samples.begin(), s.samples.end(), time.get());
  forward->Execute();

  // Multiply by -j on the positive-frequency half.  c2r supplies the
  // Hermitian mirror, which is the +j half.
  freq[0][0] = freq[0][1] = 0.0;
  for (std::size_t k = 1; k < bins; ++k) {
    if (2 * k == n) {
      freq[k][0] = freq[k][1] = 0.0;
      continue;
    }
    const double re = freq[k][0];
    const double im = freq[k][1];
    freq[k][0] = im;
    freq[k][1] = -re;
  }

  inverse->Execute();

  Signal out;
  out.sample_rate_hz = s.sample_rate_hz;
  out.samples.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = time[i] * scale;
  return out;
}

AnalyticSignal MakeAnalyticSignal(const Signal& s) {
  Signal h = HilbertTransform(s);
  return AnalyticSignal{s.samples, std::move(h.samples), s.sample_rate_hz};
}

EnvelopeSeries HilbertEnvelope(const AnalyticSignal& a) {
  if (a.real.size() != a.imag.size()) {
    throw InvalidInputError("analytic signal parts differ in length: " +
                            std::to_string(a.real.size()) + " vs " +
                            std::to_string(a.imag.size()));
  }
  EnvelopeSeries env;
  env.sample_rate_hz = a.sample_rate_hz;
  env.values.resize(a.real.size());
  for (std::size_t i = 0; i < a.real.size(); ++i) {
    env.values[i] = std::hypot(a.real[i], a.imag[i]);
  }
  return env;
}

double DefaultPhaseEpsilon(const EnvelopeSeries& env) {
  double peak = 0.0;
  for (double v : env.values) peak = std::max(peak, v);
  return 1e-12 * (peak > 0.0 ? peak : 1.0);
}

PhaseSeries CosinePhase(const AnalyticSignal& a, const EnvelopeSeries& env, double eps) {
  if (!(eps > 0.0)) throw InvalidInputError("cosine phase eps must be positive");
  if (env.values.size() != a.real.size()) {
    throw InvalidInputError("envelope and analytic signal differ in length");
  }
  PhaseSeries phase;
  phase.sample_rate_hz = a.sample_rate_hz;
  phase.values.resize(a.real.size());
  for (std::size_t i = 0; i < a.real.size(); ++i) {
    const double v = a.real[i] / std::max(env.values[i], eps);
    phase.values[i] = std::clamp(v, -1.0, 1.0);
  }
  return phase;
}

PhaseSeries CosinePhase(const AnalyticSignal& a) {
  const EnvelopeSeries env = HilbertEnvelope(a);
  return CosinePhase(a, env, DefaultPhaseEpsilon(env));
}

}  // namespace polarity::dsp
