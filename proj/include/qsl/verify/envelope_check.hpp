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
#include <limits>
#include <string>

#include "qsl/bounds.hpp"
#include "qsl/error.hpp"
#include "qsl/moments.hpp"
#include "qsl/overlap.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl::verify {

/// Slack allowance covering the dropped O(5e-4) part of xi.
inline constexpr double kEnvelopeTolerance = 1e-3;

struct EnvelopeCheck {
  double worst_slack;  // min over samples of envelope - actual angle
  double worst_time;
  bool violated;       // worst_slack < -tolerance
};

/// Samples slack(t) = envelope_angle(t) - arccos|overlap(t)| at `steps`
/// evenly spaced times on [t_begin, t_end].
inline EnvelopeCheck check_envelope_window(const SpectralState& state,
                                           const BoundSet& bounds,
                                           double t_begin, double t_end,
                                           int steps, double tolerance) {
  if (steps < 2) throw InputError("steps must be >= 2");
  if (!(t_end >= t_begin) || !(t_begin >= 0.0)) {
    throw InputError("envelope window must satisfy 0 <= t_begin <= t_end");
  }
  EnvelopeCheck result{std::numeric_limits<double>::infinity(), t_begin,
                       false};
  for (int i = 0; i < steps; ++i) {
    const double t =
        t_begin + (t_end - t_begin) * static_cast<double>(i) / (steps - 1);
    const double slack = envelope_angle(t, bounds) - overlap(state, t).angle;
    if (slack < result.worst_slack) {
      result.worst_slack = slack;
      result.worst_time = t;
    }
  }
  result.violated = result.worst_slack < -tolerance;
  return result;
}

inline EnvelopeCheck check_envelope(const SpectralState& state, double t_max,
                                    int steps,
                                    double tolerance = kEnvelopeTolerance) {
  return check_envelope_window(state, bound_set(energy_moments(state)), 0.0,
                               t_max, steps, tolerance);
}

}  // namespace qsl::verify
