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
 * @file numerics.hpp
 * @brief Small scalar solvers shared by the bound evaluators and the
 *        verification harness: bisection, golden-section minimization and
 *        plain fixed-point iteration.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include "qsl/error.hpp"

namespace qsl::numerics {

template <class F>
concept ScalarFunction = std::regular_invocable<F, double> &&
    std::convertible_to<std::invoke_result_t<F, double>, double>;

/// True when a and b agree to `rel` relative to the larger magnitude.
/// Two zeros compare equal; infinities compare equal only to themselves.
inline bool approx_equal(double a, double b, double rel) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

/**
 * Bisection on [lo, hi] for a sign change of f. Runs until the midpoint
 * coincides with an endpoint or the bracket is narrower than `x_tol`.
 * Throws SolverError if f(lo) and f(hi) share a strict sign.
 */
template <ScalarFunction F>
double bisect(F&& f, double lo, double hi, double x_tol = 0.0) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw SolverError("bisect: no sign change on [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "], f=" +
                      std::to_string(flo) + ", " + std::to_string(fhi));
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <ScalarFunction F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double x_tol) {
  constexpr double inv_phi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 500 && (b - a) > x_tol; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Endpoints are never evaluated by the interior probes; include them so a
  // minimum sitting on the boundary of [lo, hi] is reported correctly.
  Minimum best{c, fc};
  if (fd < best.value) best = {d, fd};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx < best.value) best = {x, fx};
  }
  return best;
}

struct FixedPoint {
  double value;
  int iterations;
};

/// Iterates x <- g(x) from x0 until successive iterates differ by less than
/// `rel_tol` relative to the latest one. Throws SolverError after
/// `max_iter` steps without convergence.
template <ScalarFunction G>
FixedPoint fixed_point(G&& g, double x0, double rel_tol, int max_iter) {
  double x = x0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    const double next = g(x);
    if (!std::isfinite(next)) {
      throw SolverError("fixed_point: non-finite iterate");
    }
    if (std::abs(next - x) <= rel_tol * std::abs(next)) return {next, iter};
    x = next;
  }
  throw SolverError("fixed_point: no convergence after " +
                    std::to_string(max_iter) + " iterations (last " +
                    std::to_string(x) + ")");
}

}  // namespace qsl::numerics
