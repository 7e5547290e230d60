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
#include <span>
#include <string>
#include <vector>

#include "qsl/error.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl {

/// L^p norms of (H - E_ground) and (E_top - H) over the state.
struct LpNorm {
  double p;
  double ep;
  double ep_star;
};

struct EnergyMoments {
  double e0 = 0.0;         // lowest occupied energy
  double emax = 0.0;       // highest occupied energy
  double mean = 0.0;
  double sigma = 0.0;      // energy uncertainty
  double bandwidth = 0.0;  // emax - e0
  std::vector<LpNorm> lp;
  // Both gaps are accumulated level by level; subtracting from the mean
  // loses every digit when one level holds nearly all the weight.
  double mean_above_ground = 0.0;
  double mean_below_top = 0.0;

  /// Mean energy above the ground level, E - E_0.
  double above_ground() const { return mean_above_ground; }
  /// Gap from the mean to the top occupied level, E_max - E.
  double below_top() const { return mean_below_top; }
};

/// Moments given only by their summary values, as on a regime diagram.
inline EnergyMoments moments_from_summary(double e0, double emax, double mean,
                                          double sigma) {
  EnergyMoments m;
  m.e0 = e0;
  m.emax = emax;
  m.mean = mean;
  m.sigma = sigma;
  m.bandwidth = emax - e0;
  m.mean_above_ground = mean - e0;
  m.mean_below_top = emax - mean;
  return m;
}

/// p values used when callers ask for the L^p families without a list.
inline const std::vector<double>& default_p_grid() {
  static const std::vector<double> grid{1.0, 2.0, 4.0, 10.0, 100.0};
  return grid;
}

namespace detail {

// bw * <((X) / bw)^p>^(1/p): the ratio is at most 1, so large p underflows
// gracefully instead of overflowing.
inline double scaled_lp_norm(std::span<const Level> levels, double p,
                             double bandwidth, auto&& offset) {
  if (bandwidth == 0.0) return 0.0;
  double acc = 0.0;
  for (const Level& level : levels) {
    const double ratio = std::min(offset(level.energy) / bandwidth, 1.0);
    if (ratio > 0.0) acc += level.population * std::pow(ratio, p);
  }
  return acc > 0.0 ? bandwidth * std::pow(acc, 1.0 / p) : 0.0;
}

}  // namespace detail

/**
 * Energy statistics over the occupied levels. When `p_list` is non-empty,
 * E_p = <(H - E_0)^p>^(1/p) and E*_p = <(E_max - H)^p>^(1/p) are filled for
 * every listed p (each must be >= 1).
 */
inline EnergyMoments energy_moments(const SpectralState& state,
                                    std::span<const double> p_list = {}) {
  EnergyMoments m;
  m.e0 = state.ground_energy();
  m.emax = state.top_energy();
  m.bandwidth = m.emax - m.e0;

  // Offsets from the ground level keep the sums well conditioned for
  // spectra far from zero.
  double above = 0.0;
  double below = 0.0;
  for (const Level& level : state.levels()) {
    above += level.population * (level.energy - m.e0);
    below += level.population * (m.emax - level.energy);
  }
  m.mean_above_ground = std::clamp(above, 0.0, m.bandwidth);
  m.mean_below_top = std::clamp(below, 0.0, m.bandwidth);
  m.mean = m.e0 + above;
  double var = 0.0;
  for (const Level& level : state.levels()) {
    const double d = (level.energy - m.e0) - above;
    var += level.population * d * d;
  }
  m.sigma = std::sqrt(var);
  // Keep e0 <= mean <= emax exact under round-off.
  m.mean = std::clamp(m.mean, m.e0, m.emax);

  for (double p : p_list) {
    if (!(p >= 1.0) || std::isnan(p)) {
      throw InputError("L^p order must be >= 1, got " + std::to_string(p));
    }
    const double ep = detail::scaled_lp_norm(
        state.levels(), p, m.bandwidth,
        [&](double energy) { return energy - m.e0; });
    const double ep_star = detail::scaled_lp_norm(
        state.levels(), p, m.bandwidth,
        [&](double energy) { return m.emax - energy; });
    m.lp.push_back({p, ep, ep_star});
  }
  return m;
}

}  // namespace qsl
