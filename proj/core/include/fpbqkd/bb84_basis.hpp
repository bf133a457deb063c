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

#ifndef FPBQKD_BB84_BASIS_HPP
#define FPBQKD_BB84_BASIS_HPP

#include <array>
#include <string_view>

#include "fpbqkd/quantum_core.hpp"

namespace fpbqkd {

enum class Basis { kRectilinear, kDiagonal };

std::string_view to_string(Basis b);

/// BB84 polarization kets indexed by bit value: H = 0, V = 1 in the
/// rectilinear basis; +45 = 0, -45 = 1 in the diagonal basis.
std::array<Qubit, 2> bb84_kets(Basis b);

inline Qubit bb84_polarization(Basis b, int bit) { return bb84_kets(b)[bit == 0 ? 0 : 1]; }

}  // namespace fpbqkd

#endif  // FPBQKD_BB84_BASIS_HPP
