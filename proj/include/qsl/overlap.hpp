// Copyright 2026 The qsl-bounds Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "qsl/spectral_state.hpp"

namespace qsl {

/// <psi_0|psi_t> at one time, with its magnitude and Fubini-Study angle.
struct OverlapSample {
  double t;
  std::complex<double> value;
  double magnitude;
  double angle;  // arccos(magnitude), in [0, pi/2]
};

/// sum_n p_n exp(-i E_n t), hbar = 1.
namespace detail {

/// Overlap with the ground-level phase removed: phases (E_n - E_0) t stay
/// bounded by bandwidth * t whatever the absolute energies are.
inline std::complex<double> ground_frame_overlap(const SpectralState& state,
                                                 double t) {
  const double e0 = state.ground_energy();
  std::complex<double> acc{0.0, 0.0};
  for (const Level& level : state.levels()) {
    acc += std::polar(level.population, -(level.energy - e0) * t);
  }
  return acc;
}

}  // namespace detail

inline std::complex<double> overlap_value(const SpectralState& state,
                                          double t) {
  return std::polar(1.0, -state.ground_energy() * t) *
         detail::ground_frame_overlap(state, t);
}

inline OverlapSample overlap(const SpectralState& state, double t) {
  const double magnitude = std::abs(detail::ground_frame_overlap(state, t));
  return {t, overlap_value(state, t), magnitude,
          std::acos(std::min(magnitude, 1.0))};
}

}  // namespace qsl
