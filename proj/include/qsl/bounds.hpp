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

/**
 * @file bounds.hpp
 * @brief Orthogonalization-time bounds and the non-orthogonal envelope.
 *
 * With hbar = 1, for a state with energy moments (E_0, E_max, E, dE):
 *
 *   tau_MT      = pi / (2 dE)
 *   tau_ML      = pi / (2 (E - E_0))
 *   tau_ML_dual = pi / (2 (E_max - E))
 *   tau_bw      = pi / (E_max - E_0)
 *   tau_QSL     = max{tau_MT, tau_ML, tau_ML_dual}
 *
 * and the L^p families tau_ML,p = pi / (2^(1/p) E_p) with the dual analogue
 * on E*_p. A vanishing denominator gives +infinity.
 *
 * The envelope bounds the Fubini-Study angle arccos|<psi_0|psi_t>| from
 * above at every time t; see envelope_angle().
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qsl/error.hpp"
#include "qsl/moments.hpp"

namespace qsl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LpBound {
  double p;
  double tau;
};

struct BoundSet {
  double tau_mt = kInfinity;
  double tau_ml = kInfinity;
  double tau_ml_dual = kInfinity;
  double tau_bw = kInfinity;
  std::vector<LpBound> tau_ml_p;
  std::vector<LpBound> tau_ml_dual_p;
  double tau_qsl = kInfinity;
};

namespace detail {
inline double quarter_period(double rate) {
  return rate > 0.0 ? std::numbers::pi / (2.0 * rate) : kInfinity;
}
inline double lp_time(double p, double norm) {
  return norm > 0.0 ? std::numbers::pi / (std::pow(2.0, 1.0 / p) * norm)
                    : kInfinity;
}
}  // namespace detail

inline BoundSet bound_set(const EnergyMoments& m) {
  BoundSet b;
  b.tau_mt = detail::quarter_period(m.sigma);
  b.tau_ml = detail::quarter_period(m.above_ground());
  b.tau_ml_dual = detail::quarter_period(m.below_top());
  b.tau_bw = m.bandwidth > 0.0 ? std::numbers::pi / m.bandwidth : kInfinity;
  for (const LpNorm& norm : m.lp) {
    b.tau_ml_p.push_back({norm.p, detail::lp_time(norm.p, norm.ep)});
    b.tau_ml_dual_p.push_back({norm.p, detail::lp_time(norm.p, norm.ep_star)});
  }
  b.tau_qsl = std::max({b.tau_mt, b.tau_ml, b.tau_ml_dual});
  return b;
}

/// Slope of the linear correction in xi(x).
inline constexpr double kXiSlope = 0.0395;

/**
 * Near-unity correction of the extended ML-type envelope,
 * xi(x) = 1 - 0.0395 (1 - x) on x in [0, 1]. The true correction exceeds
 * this by less than 5e-4 (see verify::xi_oracle).
 */
inline double xi(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("xi is defined on [0, 1], got " + std::to_string(x));
  }
  return 1.0 - kXiSlope * (1.0 - x);
}

/// Individual angle bounds at time t, each clamped to pi/2.
struct EnvelopeTerms {
  double mt;
  double ml;
  double ml_dual;

  double min() const { return std::min({mt, ml, ml_dual}); }
};

namespace detail {
// (pi/2) * xi(x) * sqrt(x) for x <= 1; beyond x = 1 the term imposes no
// constraint.
inline double ml_type_term(double x) {
  if (x >= 1.0) return std::numbers::pi / 2.0;
  return std::numbers::pi / 2.0 * xi(x) * std::sqrt(x);
}
}  // namespace detail

inline EnvelopeTerms envelope_terms(double t, const BoundSet& bounds) {
  const double half_pi = std::numbers::pi / 2.0;
  return {half_pi * std::min(t / bounds.tau_mt, 1.0),
          detail::ml_type_term(t / bounds.tau_ml),
          detail::ml_type_term(t / bounds.tau_ml_dual)};
}

/// Upper bound on arccos|<psi_0|psi_t>| at time t >= 0, in [0, pi/2].
inline double envelope_angle(double t, const BoundSet& bounds) {
  if (!(t >= 0.0)) {
    throw InputError("envelope time must be >= 0, got " + std::to_string(t));
  }
  return envelope_terms(t, bounds).min();
}

struct PopoviciuResult {
  double max_sigma;
  bool saturated;
};

/// Largest uncertainty a state with this support and mean can have.
/// Saturation means sigma equals it to 1e-9 relative.
inline PopoviciuResult popoviciu(const EnergyMoments& m) {
  const double max_sigma =
      std::sqrt(std::max(0.0, m.above_ground() * m.below_top()));
  const double scale = std::max(max_sigma, m.sigma);
  const bool saturated =
      scale == 0.0 || std::abs(m.sigma - max_sigma) <= 1e-9 * scale;
  return {max_sigma, saturated};
}

}  // namespace qsl
