// Copyright 2026 The fpbqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpbqkd/qnd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fpbqkd {
namespace {

constexpr std::uint64_t kTrialBlock = 4096;

}  // namespace

QndParams::QndParams(double kappa, double n_p) : kappa_(kappa), n_p_(n_p) {
  if (!std::isfinite(kappa) || !(kappa > 0.0)) {
    throw std::invalid_argument("kappa must be a finite positive coupling, got " +
                                std::to_string(kappa));
  }
  if (!std::isfinite(n_p) || !(n_p >= 1.0)) {
    throw std::invalid_argument("probe photon number N_P must be >= 1, got " +
                                std::to_string(n_p));
  }
}

double QndParams::displacement() const { return kappa_ * std::sqrt(n_p_); }

double probe_mean(const QndParams& q, std::int64_t n_signal, Displacement mode) {
  if (n_signal < 0) throw std::invalid_argument("probe_mean: photon count must be non-negative");
  const double n = static_cast<double>(n_signal);
  if (mode == Displacement::kLinearized) return q.displacement() * n;
  return std::sqrt(q.n_p()) * std::sin(q.kappa() * n);
}

HomodyneOutcome homodyne_sample(const QndParams& q, std::int64_t n_signal, RandomStream& rng,
                                Displacement mode) {
  return {rng.normal(probe_mean(q, n_signal, mode), std::sqrt(kHomodyneVariance))};
}

bool qnd_decide(const HomodyneOutcome& o, const QndParams& q) {
  return o.alpha_p2 > q.displacement() / 2.0;
}

double qnd_error_bound(const QndParams& q) {
  return std::exp(-q.kappa() * q.kappa() * q.n_p() / 2.0) / 2.0;
}

double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double qnd_polarization_check(std::complex<double> c_h, std::complex<double> c_v,
                              const QndParams& q) {
  const double norm = std::norm(c_h) + std::norm(c_v);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("qnd_polarization_check: |c_H|^2 + |c_V|^2 must be 1");
  }
  // Each probe Fock component |n> multiplies both signal modes by exp(i kappa n).
  const double spread = 6.0 * std::sqrt(q.n_p());
  const auto lo = static_cast<std::int64_t>(std::max(0.0, std::floor(q.n_p() - spread)));
  const auto hi = static_cast<std::int64_t>(std::ceil(q.n_p() + spread));
  constexpr std::int64_t kSamples = 64;
  const std::int64_t step = std::max<std::int64_t>(1, (hi - lo) / kSamples);
  double worst = 1.0;
  for (std::int64_t n = lo; n <= hi; n += step) {
    const std::complex<double> phase = std::polar(1.0, q.kappa() * static_cast<double>(n));
    const std::complex<double> out_h = phase * c_h;
    const std::complex<double> out_v = phase * c_v;
    const double overlap = std::abs(std::conj(c_h) * out_h + std::conj(c_v) * out_v);
    worst = std::min(worst, overlap);
  }
  return worst;
}

FourModeAmplitudes coherent_pcnot(const FourModeAmplitudes& a) {
  return {a.a_hr, a.a_hl, a.a_vl, a.a_vr};
}

QndTrialSummary run_qnd_trials(const QndParams& q, std::uint64_t trials, std::uint64_t seed,
                               Displacement mode) {
  QndTrialSummary out;
  out.trials = trials;
  for (std::uint64_t start = 0; start < trials; start += kTrialBlock) {
    RandomStream rng = RandomStream::substream(seed, start / kTrialBlock);
    const std::uint64_t end = std::min(trials, start + kTrialBlock);
    for (std::uint64_t i = start; i < end; ++i) {
      const int n_signal = rng.bit();
      const bool present = qnd_decide(homodyne_sample(q, n_signal, rng, mode), q);
      if (present != (n_signal == 1)) ++out.errors;
    }
  }
  out.error_rate = trials > 0 ? static_cast<double>(out.errors) / static_cast<double>(trials) : 0.0;
  out.exact_tail = gaussian_tail(q.displacement());
  out.bound = qnd_error_bound(q);
  return out;
}

}  // namespace fpbqkd
