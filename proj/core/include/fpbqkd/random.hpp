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

#ifndef FPBQKD_RANDOM_HPP
#define FPBQKD_RANDOM_HPP

#include <cstdint>
#include <random>

namespace fpbqkd {

/// Seeded random stream passed explicitly to every stochastic operation.
///
/// Substreams derived from (seed, index) are independent of one another and of
/// the order in which they are created, so Monte Carlo intervals can be
/// evaluated in any order or on any thread and still reproduce bit for bit.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Stream for item `index` of a run seeded with `seed`.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index);

  /// Uniform draw in [0, 1).
  double uniform();

  /// Fair coin, 0 or 1.
  int bit();

  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fpbqkd

#endif  // FPBQKD_RANDOM_HPP
