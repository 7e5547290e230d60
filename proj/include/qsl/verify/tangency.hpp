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
 * @file tangency.hpp
 * @brief First-principles reconstruction of the xi(x) correction.
 *
 * For q >= 0 the inequality 1 - cos x <= a x + q sin x holds on x >= 0 for
 * the smallest a at which the line a x touches 1 - cos x - q sin x. The
 * contact point x* solves
 *
 *     sin x* = a + q cos x*,     1 - cos x* = a x* + q sin x*.
 *
 * Summing the inequality over the spectrum at x = E_n t gives
 *
 *     1 - Re z + q Im z <= a E t,      z = <psi_0|psi_t>, E above ground.
 *
 * The phase of z is free, and minimizing the left side over it yields
 * |z| >= (1 - a E t) / sqrt(1 + q^2). The best q at t = x tau_ML gives the
 * smallest reachable overlap f(x), and xi(x) = arccos f / ((pi/2) sqrt x).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qsl/error.hpp"
#include "qsl/numerics.hpp"

namespace qsl::verify {

struct TangencySolution {
  double q;
  double a;
  double x_star;
};

/// 1 - cos x - a(x) x - q sin x with a(x) = sin x - q cos x eliminated.
inline double tangency_residual(double x, double q) {
  return 1.0 - std::cos(x) - (std::sin(x) - q * std::cos(x)) * x -
         q * std::sin(x);
}

inline TangencySolution a_of_q(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) {
    throw InputError("q must be finite and >= 0, got " + std::to_string(q));
  }
  constexpr double lo = std::numbers::pi / 2.0;
  constexpr double hi = 2.0 * std::numbers::pi;
  constexpr int cells = 64;

  // The residual is negative at pi/2; take the first cell where it turns
  // non-negative. At q = 0 it also vanishes at 2 pi, which is not a
  // tangency.
  double x_star = std::nan("");
  double prev_x = lo;
  double prev_r = tangency_residual(lo, q);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double r = tangency_residual(x, q);
    if (prev_r < 0.0 && r >= 0.0) {
      x_star = numerics::bisect(
          [q](double y) { return tangency_residual(y, q); }, prev_x, x);
      break;
    }
    prev_x = x;
    prev_r = r;
  }
  if (std::isnan(x_star)) {
    std::ostringstream msg;
    msg << "a_of_q: no tangency bracket in (pi/2, 2pi) for q=" << q
        << "; residual(pi/2)=" << tangency_residual(lo, q)
        << ", residual(2pi)=" << tangency_residual(hi, q);
    throw SolverError(msg.str());
  }
  const double a = std::sin(x_star) - q * std::cos(x_star);

  constexpr int grid = 4096;
  constexpr double span = 4.0 * std::numbers::pi;
  for (int i = 0; i <= grid; ++i) {
    const double x = span * i / grid;
    const double gap = a * x + q * std::sin(x) - (1.0 - std::cos(x));
    if (gap < -1e-10) {
      std::ostringstream msg;
      msg << "a_of_q: line fails to dominate at x=" << x << " (gap " << gap
          << ") for q=" << q << ", a=" << a << ", x*=" << x_star;
      throw SolverError(msg.str());
    }
  }
  return {q, a, x_star};
}

struct XiOracleResult {
  double x;
  double xi;
  double q_opt;          // maximizing q
  double overlap_floor;  // smallest reachable |overlap| at t = x tau_ML
};

inline constexpr double kXiOracleQMax = 10.0;
/// Upper bound on xi_oracle(x) - xi(x) over (0, 1].
inline constexpr double kXiGapBound = 5e-4;
/// Round-off allowed below zero in that gap; at x = 1 both sides equal 1.
inline constexpr double kXiRoundOff = 1e-12;

/// xi(x) from the tangency family, maximizing the overlap floor over
/// q in [0, 10]: 200-cell scan, then golden-section on the best cell.
inline XiOracleResult xi_oracle(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw InputError("xi_oracle is defined on (0, 1], got " +
                     std::to_string(x));
  }
  const double energy_time = std::numbers::pi / 2.0 * x;  // E t
  auto floor_at = [&](double q) {
    return (1.0 - a_of_q(q).a * energy_time) / std::sqrt(1.0 + q * q);
  };

  constexpr int cells = 200;
  int best = 0;
  double best_value = -INFINITY;
  for (int k = 0; k <= cells; ++k) {
    const double value = floor_at(kXiOracleQMax * k / cells);
    if (value > best_value) {
      best_value = value;
      best = k;
    }
  }
  if (best == cells) {
    throw SolverError("xi_oracle: maximizer on the q = 10 boundary for x=" +
                      std::to_string(x));
  }
  const double q_lo = kXiOracleQMax * std::max(best - 1, 0) / cells;
  const double q_hi = kXiOracleQMax * (best + 1) / cells;
  const numerics::Minimum refined = numerics::golden_section_minimize(
      [&](double q) { return -floor_at(q); }, q_lo, q_hi, 1e-10);

  const double floor = std::clamp(-refined.value, -1.0, 1.0);
  const double xi = std::acos(floor) / (std::numbers::pi / 2.0 * std::sqrt(x));
  return {x, xi, refined.x, floor};
}

}  // namespace qsl::verify
