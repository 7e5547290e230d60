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
 * @file falsify.hpp
 * @brief Randomized stress test of every bound on sampled states.
 *
 * State i of a sweep is generated from derive_seed(seed, i) alone, so the
 * report does not depend on how many worker threads split the index range.
 * Per state the sweep checks
 *   - dE <= sqrt((E - E_0)(E_max - E)) and saturation iff <= 2 levels,
 *   - tau_QSL >= tau_bw,
 *   - the dual state swaps tau_ML and tau_ML_dual (and the L^p families),
 *   - envelope slack over [0, horizon * tau_bw],
 *   - any orthogonalization time found is >= tau_QSL, tau_bw and every
 *     L^p bound (less 1e-9).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qsl/bounds.hpp"
#include "qsl/moments.hpp"
#include "qsl/numerics.hpp"
#include "qsl/sampling.hpp"
#include "qsl/serialize.hpp"
#include "qsl/spectral_state.hpp"
#include "qsl/verify/envelope_check.hpp"
#include "qsl/verify/orthogonalization.hpp"

namespace qsl::verify {

struct SweepConfig {
  std::size_t samples = 10000;
  int min_levels = 2;
  int max_levels = 8;
  double emax = 1.0;
  std::uint64_t seed = 42;
  int time_samples = 1000;
  double horizon_bw = 20.0;  // envelope and search window, in units of tau_bw
  double envelope_tolerance = kEnvelopeTolerance;
  double ortho_tolerance = kOrthogonalityTolerance;
  std::vector<double> p_grid = default_p_grid();
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Violation {
  std::size_t index;
  std::string kind;
  SpectralState state;
  double t;      // NaN for time-independent checks
  double slack;  // negative margin by which the check failed
};

struct FalsificationReport {
  std::size_t samples = 0;
  double worst_slack_rad = std::numeric_limits<double>::infinity();
  std::size_t worst_slack_index = 0;
  std::vector<Violation> violations;
  std::size_t ortho_checks = 0;
  std::uint64_t seed = 0;
  std::size_t popoviciu_saturated = 0;
  std::size_t two_level_states = 0;
  double max_popoviciu_excess = -std::numeric_limits<double>::infinity();
};

/// The state checked at position `index` of a sweep.
inline SpectralState sweep_state(const SweepConfig& config,
                                 std::size_t index) {
  std::mt19937_64 rng(derive_seed(config.seed, index));
  std::uniform_int_distribution<int> level_dist(config.min_levels,
                                                config.max_levels);
  const int levels = level_dist(rng);
  return sample_random_state(levels, config.emax, rng());
}

namespace detail {

inline bool swapped(double a, double b) {
  return numerics::approx_equal(a, b, 1e-12);
}

inline void check_state(const SweepConfig& config, std::size_t index,
                        FalsificationReport& report) {
  const SpectralState state = sweep_state(config, index);
  const EnergyMoments m = energy_moments(state, config.p_grid);
  const BoundSet b = bound_set(m);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto flag = [&](std::string kind, double t, double slack) {
    report.violations.push_back({index, std::move(kind), state, t, slack});
  };

  const PopoviciuResult pop = popoviciu(m);
  const bool two_level = state.size() <= 2;
  report.two_level_states += two_level;
  report.popoviciu_saturated += pop.saturated;
  report.max_popoviciu_excess =
      std::max(report.max_popoviciu_excess, m.sigma - pop.max_sigma);
  if (m.sigma > pop.max_sigma + 1e-12) {
    flag("popoviciu_bound", nan, pop.max_sigma - m.sigma);
  }
  if (pop.saturated != two_level) flag("popoviciu_saturation", nan, -1.0);

  if (b.tau_qsl < b.tau_bw * (1.0 - 1e-12)) {
    flag("qsl_vs_bandwidth", nan, b.tau_qsl - b.tau_bw);
  }

  const BoundSet d = bound_set(energy_moments(dual_state(state), config.p_grid));
  bool dual_ok = swapped(d.tau_ml, b.tau_ml_dual) &&
                 swapped(d.tau_ml_dual, b.tau_ml) &&
                 swapped(d.tau_mt, b.tau_mt) && swapped(d.tau_bw, b.tau_bw);
  for (std::size_t k = 0; k < b.tau_ml_p.size(); ++k) {
    dual_ok = dual_ok && swapped(d.tau_ml_p[k].tau, b.tau_ml_dual_p[k].tau) &&
              swapped(d.tau_ml_dual_p[k].tau, b.tau_ml_p[k].tau);
  }
  if (!dual_ok) flag("duality_swap", nan, -1.0);

  const double horizon = std::isfinite(b.tau_bw)
                             ? config.horizon_bw * b.tau_bw
                             : config.horizon_bw;
  const EnvelopeCheck env =
      check_envelope_window(state, b, 0.0, horizon, config.time_samples,
                            config.envelope_tolerance);
  if (env.worst_slack < report.worst_slack_rad) {
    report.worst_slack_rad = env.worst_slack;
    report.worst_slack_index = index;
  }
  if (env.violated) flag("envelope", env.worst_time, env.worst_slack);

  const auto t_perp =
      find_orthogonalization_time(state, horizon, config.ortho_tolerance);
  if (!t_perp) return;
  ++report.ortho_checks;
  if (*t_perp < b.tau_qsl - 1e-9) {
    flag("ortho_vs_qsl", *t_perp, *t_perp - b.tau_qsl);
  }
  if (*t_perp < b.tau_bw - 1e-9) {
    flag("ortho_vs_bandwidth", *t_perp, *t_perp - b.tau_bw);
  }
  for (const auto* family : {&b.tau_ml_p, &b.tau_ml_dual_p}) {
    for (const LpBound& bound : *family) {
      if (*t_perp < bound.tau - 1e-9) {
        flag("ortho_vs_lp", *t_perp, *t_perp - bound.tau);
      }
    }
  }
}

inline void merge_into(FalsificationReport& into,
                       FalsificationReport&& part) {
  if (part.worst_slack_rad < into.worst_slack_rad) {
    into.worst_slack_rad = part.worst_slack_rad;
    into.worst_slack_index = part.worst_slack_index;
  }
  into.ortho_checks += part.ortho_checks;
  into.popoviciu_saturated += part.popoviciu_saturated;
  into.two_level_states += part.two_level_states;
  into.max_popoviciu_excess =
      std::max(into.max_popoviciu_excess, part.max_popoviciu_excess);
  for (Violation& v : part.violations) into.violations.push_back(std::move(v));
}

}  // namespace detail

inline FalsificationReport falsification_sweep(const SweepConfig& config) {
  if (config.samples < 1) throw InputError("sample count must be >= 1");
  if (config.min_levels < 1 || config.max_levels < config.min_levels) {
    throw InputError("level range must satisfy 1 <= min <= max");
  }
  if (config.time_samples < 2) throw InputError("time_samples must be >= 2");

  unsigned workers = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, config.samples));

  std::vector<FalsificationReport> parts(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = config.samples * w / workers;
        const std::size_t end = config.samples * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
          detail::check_state(config, i, parts[w]);
        }
      });
    }
  }

  FalsificationReport report;
  report.samples = config.samples;
  report.seed = config.seed;
  for (FalsificationReport& part : parts) {
    detail::merge_into(report, std::move(part));
  }
  return report;
}

inline nlohmann::json to_json(const FalsificationReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(
        {{"index", v.index},
         {"kind", v.kind},
         {"state", qsl::to_json(v.state)},
         {"t", std::isnan(v.t) ? nlohmann::json(nullptr) : real_to_json(v.t)},
         {"slack", v.slack}});
  }
  return {{"samples", r.samples},
          {"worst_slack_rad", real_to_json(r.worst_slack_rad)},
          {"worst_slack_index", r.worst_slack_index},
          {"violations", violations},
          {"ortho_checks", r.ortho_checks},
          {"seed", r.seed},
          {"popoviciu_saturated", r.popoviciu_saturated},
          {"two_level_states", r.two_level_states},
          {"max_popoviciu_excess", real_to_json(r.max_popoviciu_excess)}};
}

}  // namespace qsl::verify
