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

#ifndef FPBQKD_TESTS_SUPPORT_STAT_ORACLE_HPP
#define FPBQKD_TESTS_SUPPORT_STAT_ORACLE_HPP

// Test-only helpers: binomial/Gaussian confidence bounds and random states.
// Nothing here calls into the library under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace fpbqkd::testing {

/// Standard error of a proportion estimated from n Bernoulli(p) draws.
inline double binomial_se(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

/// |observed - p| <= k standard errors of a proportion from n draws.
inline bool within_binomial(double observed, double p, double n, double k = 3.0) {
  return std::abs(observed - p) <= k * binomial_se(p, n);
}

/// Two-sample proportion z statistic with pooled variance.
inline double two_sample_z(double p1, double n1, double p2, double n2) {
  const double pooled = (p1 * n1 + p2 * n2) / (n1 + n2);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2));
  if (se == 0.0) return p1 == p2 ? 0.0 : INFINITY;
  return std::abs(p1 - p2) / se;
}

inline std::complex<double> random_complex(std::mt19937_64& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(gen), g(gen)};
}

}  // namespace fpbqkd::testing

#endif  // FPBQKD_TESTS_SUPPORT_STAT_ORACLE_HPP
