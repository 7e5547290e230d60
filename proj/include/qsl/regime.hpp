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

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsl/bounds.hpp"
#include "qsl/error.hpp"
#include "qsl/moments.hpp"
#include "qsl/numerics.hpp"

namespace qsl {

enum class Regime { MT, ML, DUAL_ML, BOUNDARY };

inline std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::MT: return "MT";
    case Regime::ML: return "ML";
    case Regime::DUAL_ML: return "DUAL_ML";
    case Regime::BOUNDARY: return "BOUNDARY";
  }
  return "?";
}

/// Relative tolerance for the equalities that delimit the regimes.
inline constexpr double kBoundaryTolerance = 1e-12;

namespace detail {

/**
 * Time where the MT line (pi/2) t / tau_mt meets the ML-type curve
 * (pi/2) xi(t/tau) sqrt(t/tau), i.e. the fixed point of
 * t = xi(t/tau)^2 tau_mt^2 / tau. Exists in (0, tau] exactly when
 * tau_mt <= tau; otherwise the MT line stays below the curve.
 */
inline std::optional<double> crossover_for(double tau_mt, double tau) {
  if (!std::isfinite(tau_mt) || !std::isfinite(tau)) return std::nullopt;
  const double scale = tau_mt * tau_mt / tau;
  // Iterates past tau mean no crossover; xi is pinned to 1 there.
  auto step = [&](double t) {
    const double factor = xi(std::min(t / tau, 1.0));
    return factor * factor * scale;
  };
  const double t = numerics::fixed_point(step, scale, 1e-12, 100).value;
  if (t > 0.0 && t <= tau * (1.0 + kBoundaryTolerance)) return std::min(t, tau);
  return std::nullopt;
}

}  // namespace detail

struct CrossoverTimes {
  std::optional<double> tau_c;       // MT -> ML switch
  std::optional<double> tau_c_star;  // MT -> dual ML switch
};

inline CrossoverTimes crossover_times(const BoundSet& bounds) {
  return {detail::crossover_for(bounds.tau_mt, bounds.tau_ml),
          detail::crossover_for(bounds.tau_mt, bounds.tau_ml_dual)};
}

struct RegimeReport {
  Regime regime = Regime::BOUNDARY;
  std::optional<double> crossover;
  std::vector<std::string> boundary_tags;
};

/**
 * MT when dE < min{E - E_0, E_max - E}; otherwise ML or DUAL_ML depending
 * on which end of the occupied band the mean is closer to. Ties at
 * 1e-12 relative are BOUNDARY. The crossover is recorded whenever the
 * regime has one.
 */
inline RegimeReport classify_regime(const EnergyMoments& m) {
  using numerics::approx_equal;
  const double lo = m.above_ground();
  const double hi = m.below_top();
  const double nearest = std::min(lo, hi);

  RegimeReport report;
  if (approx_equal(m.sigma, lo, kBoundaryTolerance)) {
    report.boundary_tags.emplace_back("sigma=mean-e0");
  }
  if (approx_equal(m.sigma, hi, kBoundaryTolerance)) {
    report.boundary_tags.emplace_back("sigma=emax-mean");
  }
  const bool centered = approx_equal(lo, hi, kBoundaryTolerance);
  if (centered) report.boundary_tags.emplace_back("mean-e0=emax-mean");

  if (approx_equal(m.sigma, nearest, kBoundaryTolerance)) {
    report.regime = Regime::BOUNDARY;
  } else if (m.sigma < nearest) {
    report.regime = Regime::MT;
  } else if (centered) {
    report.regime = Regime::BOUNDARY;
  } else {
    report.regime = lo < hi ? Regime::ML : Regime::DUAL_ML;
  }

  if (report.regime == Regime::MT) return report;
  const CrossoverTimes times = crossover_times(bound_set(m));
  switch (report.regime) {
    case Regime::ML: report.crossover = times.tau_c; break;
    case Regime::DUAL_ML: report.crossover = times.tau_c_star; break;
    default:
      report.crossover = times.tau_c ? times.tau_c : times.tau_c_star;
      break;
  }
  return report;
}

}  // namespace qsl
