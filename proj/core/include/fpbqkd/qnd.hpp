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

#ifndef FPBQKD_QND_HPP
#define FPBQKD_QND_HPP

// Cross-phase-modulation QND measurement of a signal beam's total photon
// number with a strong coherent probe read out by homodyne detection, and the
// coherent-state form of the polarization-controlled NOT.
//
// Quadrature convention: Im(a) of a coherent state has variance 1/4, and the
// local-oscillator phase puts the signal-dependent shift entirely in Im(a').

#include <array>
#include <complex>
#include <cstdint>

#include "fpbqkd/random.hpp"

namespace fpbqkd {

inline constexpr double kHomodyneVariance = 0.25;

class QndParams {
 public:
  /// Throws std::invalid_argument unless kappa > 0 and n_p >= 1 (both finite).
  QndParams(double kappa, double n_p);

  double kappa() const { return kappa_; }
  double n_p() const { return n_p_; }

  /// kappa * sqrt(N_P): the one-photon displacement of the probe quadrature.
  double displacement() const;

  /// kappa^2 N_P < 1; the decision rule still runs but separates poorly.
  bool weak_discrimination() const { return kappa_ * kappa_ * n_p_ < 1.0; }

 private:
  double kappa_;
  double n_p_;
};

enum class Displacement { kLinearized, kExact };

/// Mean of the Im quadrature of the probe after interacting with `n_signal`
/// photons: kappa sqrt(N_P) n (linearized) or sqrt(N_P) sin(kappa n) (exact).
double probe_mean(const QndParams& q, std::int64_t n_signal,
                  Displacement mode = Displacement::kLinearized);

struct HomodyneOutcome {
  double alpha_p2 = 0.0;
};

HomodyneOutcome homodyne_sample(const QndParams& q, std::int64_t n_signal, RandomStream& rng,
                                Displacement mode = Displacement::kLinearized);

/// Photon present iff alpha_p2 > kappa sqrt(N_P) / 2 (strict).
bool qnd_decide(const HomodyneOutcome& o, const QndParams& q);

/// exp(-kappa^2 N_P / 2) / 2
double qnd_error_bound(const QndParams& q);

/// Upper Gaussian tail Q(x) of a standard normal.
double gaussian_tail(double x);

/// Overlap |<psi_in|psi_out>| of the single-photon polarization state
/// c_h|1,0> + c_v|0,1> before and after the cross-phase interaction, with the
/// probe resolved over photon numbers within +-6 sqrt(N_P) of N_P. Returns
/// the smallest overlap found. Throws std::invalid_argument for an
/// unnormalized input.
double qnd_polarization_check(std::complex<double> c_h, std::complex<double> c_v,
                              const QndParams& q);

struct FourModeAmplitudes {
  std::complex<double> a_hr;
  std::complex<double> a_hl;
  std::complex<double> a_vr;
  std::complex<double> a_vl;

  std::array<std::complex<double>, 4> as_array() const { return {a_hr, a_hl, a_vr, a_vl}; }
  bool operator==(const FourModeAmplitudes&) const = default;
};

/// P-CNOT on four coherent modes: the VR and VL eigenvalues trade places.
FourModeAmplitudes coherent_pcnot(const FourModeAmplitudes& a);

struct QndTrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double error_rate = 0.0;
  /// Q(kappa sqrt(N_P)), the exact equal-prior error of the decision rule
  /// under the linearized displacement.
  double exact_tail = 0.0;
  double bound = 0.0;
};

/// Equal-prior Monte Carlo over n_signal in {0, 1}. Trials run in fixed-size
/// blocks with independent substreams, so the result depends only on
/// (q, trials, seed, mode).
QndTrialSummary run_qnd_trials(const QndParams& q, std::uint64_t trials, std::uint64_t seed,
                               Displacement mode = Displacement::kLinearized);

}  // namespace fpbqkd

#endif  // FPBQKD_QND_HPP
