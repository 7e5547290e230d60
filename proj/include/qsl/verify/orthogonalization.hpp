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
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsl/error.hpp"
#include "qsl/numerics.hpp"
#include "qsl/overlap.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl::verify {

inline constexpr double kOrthogonalityTolerance = 1e-9;

/**
 * First time in [0, t_max] at which |<psi_0|psi_t>| drops below `tol`.
 *
 * |overlap| is sampled every tau_bw / 20 (tau_bw = pi / bandwidth), each
 * discrete local minimum is bracketed by its neighbours and refined by
 * golden-section search to ~1e-12. |overlap| is (bandwidth / 2)-Lipschitz,
 * so minima whose grid value exceeds tol by more than that times the step
 * cannot reach tol and are skipped.
 */
inline std::optional<double> find_orthogonalization_time(
    const SpectralState& state, double t_max,
    double tol = kOrthogonalityTolerance) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw InputError("t_max must be positive and finite");
  }
  if (!(tol > 0.0)) throw InputError("tol must be positive");
  if (state.size() < 2) return std::nullopt;

  const double bandwidth = state.top_energy() - state.ground_energy();
  const double step = std::numbers::pi / bandwidth / 20.0;
  const double lipschitz_gap = 0.5 * bandwidth * step;
  const auto count = static_cast<std::size_t>(std::ceil(t_max / step));

  auto time_at = [&](std::size_t i) {
    return std::min(static_cast<double>(i) * step, t_max);
  };
  auto magnitude = [&](double t) {
    return std::abs(qsl::detail::ground_frame_overlap(state, t));
  };

  std::vector<double> grid(count + 1);
  for (std::size_t i = 0; i <= count; ++i) grid[i] = magnitude(time_at(i));

  for (std::size_t i = 1; i <= count; ++i) {
    const bool left_ok = grid[i] <= grid[i - 1];
    const bool right_ok = i == count || grid[i] <= grid[i + 1];
    if (!left_ok || !right_ok) continue;
    if (grid[i] - lipschitz_gap > tol) continue;
    const double lo = time_at(i - 1);
    const double hi = time_at(std::min(i + 1, count));
    const double x_tol = std::max(1e-12, 4e-16 * hi);
    const numerics::Minimum best =
        numerics::golden_section_minimize(magnitude, lo, hi, x_tol);
    if (best.value < tol) return best.x;
  }
  return std::nullopt;
}

/// Default search horizon: 20 bandwidth periods.
inline double default_search_horizon(const SpectralState& state) {
  const double bandwidth = state.top_energy() - state.ground_energy();
  return bandwidth > 0.0 ? 20.0 * std::numbers::pi / bandwidth : 1.0;
}

}  // namespace qsl::verify
