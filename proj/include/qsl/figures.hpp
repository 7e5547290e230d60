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
 * @file figures.hpp
 * @brief Datasets for the regime diagram and the qubit / qutrit traces.
 *
 * Traces sample |<psi_0|psi_t>| together with the magnitude floor implied
 * by each envelope term, cos(min(term, pi/2)). The regime grid classifies
 * (E, dE) cell centres on a spectrum normalized to [0, 1].
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsl/bounds.hpp"
#include "qsl/error.hpp"
#include "qsl/moments.hpp"
#include "qsl/overlap.hpp"
#include "qsl/regime.hpp"
#include "qsl/serialize.hpp"
#include "qsl/spectral_state.hpp"
#include "qsl/state_io.hpp"

namespace qsl {

inline constexpr int kDefaultTraceSteps = 2000;
inline constexpr int kDefaultGridResolution = 400;
/// Allowed shortfall of |overlap| below the bound curves.
inline constexpr double kTraceFloorTolerance = 1e-3;

struct TraceMetadata {
  std::string label;
  SpectralState state;
  EnergyMoments moments;
  BoundSet bounds;
  RegimeReport regime;
};

struct TraceDataset {
  std::vector<double> times;
  std::vector<double> overlap_magnitude;
  std::vector<double> mt_curve;
  std::vector<double> ml_curve;
  std::vector<double> ml_dual_curve;
  std::optional<TraceMetadata> metadata;  // absent for traces read from CSV
};

inline constexpr std::array<std::string_view, 5> kTraceColumns{
    "times", "overlap_magnitude", "mt_curve", "ml_curve", "ml_dual_curve"};

/// 1.05 times the largest finite orthogonalization bound (1 if none).
inline double default_time_window(const BoundSet& b) {
  double longest = 0.0;
  for (double tau : {b.tau_mt, b.tau_ml, b.tau_ml_dual}) {
    if (std::isfinite(tau)) longest = std::max(longest, tau);
  }
  return longest > 0.0 ? 1.05 * longest : 1.0;
}

/// Throws std::logic_error when a trace breaks its invariants.
inline void check_trace(const TraceDataset& trace) {
  const std::size_t n = trace.times.size();
  if (trace.overlap_magnitude.size() != n || trace.mt_curve.size() != n ||
      trace.ml_curve.size() != n || trace.ml_dual_curve.size() != n) {
    throw std::logic_error("trace columns have unequal length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double magnitude = trace.overlap_magnitude[i];
    if (!(magnitude >= 0.0 && magnitude <= 1.0)) {
      throw std::logic_error("trace magnitude outside [0, 1]");
    }
    const double floor = std::max(
        {trace.mt_curve[i], trace.ml_curve[i], trace.ml_dual_curve[i]});
    if (magnitude < floor - kTraceFloorTolerance) {
      throw std::logic_error("trace falls below its bound floor at t=" +
                             format_double(trace.times[i]));
    }
  }
}

inline TraceDataset trace_dataset(const SpectralState& state, double t_end,
                                  int steps, std::string label = {}) {
  if (steps < 2) throw InputError("steps must be >= 2");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw InputError("t_end must be positive and finite");
  }
  TraceDataset trace;
  const EnergyMoments moments = energy_moments(state);
  const BoundSet bounds = bound_set(moments);
  trace.metadata = TraceMetadata{std::move(label), state, moments, bounds,
                                 classify_regime(moments)};

  const std::size_t n = static_cast<std::size_t>(steps);
  for (auto* column : {&trace.times, &trace.overlap_magnitude, &trace.mt_curve,
                       &trace.ml_curve, &trace.ml_dual_curve}) {
    column->reserve(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_end * static_cast<double>(i) / (steps - 1);
    const EnvelopeTerms terms = envelope_terms(t, bounds);
    // cos(pi/2) is 6e-17, not 0; a saturated term carries no constraint.
    auto floor_of = [](double angle) {
      return angle >= std::numbers::pi / 2.0 ? 0.0 : std::cos(angle);
    };
    trace.times.push_back(t);
    trace.overlap_magnitude.push_back(
        std::min(overlap(state, t).magnitude, 1.0));
    trace.mt_curve.push_back(floor_of(terms.mt));
    trace.ml_curve.push_back(floor_of(terms.ml));
    trace.ml_dual_curve.push_back(floor_of(terms.ml_dual));
  }
  check_trace(trace);
  return trace;
}

/// Qubit scenarios on E_max = 1: (a) balanced, (b) c0 = 2 c1, (c) 2 c0 = c1.
inline TraceDataset fig2_dataset(char scenario,
                                 int steps = kDefaultTraceSteps) {
  double p1 = 0.0;
  switch (scenario) {
    case 'a': p1 = 0.5; break;
    case 'b': p1 = 0.2; break;
    case 'c': p1 = 0.8; break;
    default:
      throw InputError(std::string("unknown fig2 scenario '") + scenario +
                       "', expected a, b or c");
  }
  const SpectralState state = make_qubit(p1, 1.0);
  const BoundSet bounds = bound_set(energy_moments(state));
  // The balanced qubit ends at its orthogonalization time, where all three
  // curves meet.
  const double t_end =
      scenario == 'a' ? bounds.tau_qsl : default_time_window(bounds);
  return trace_dataset(state, t_end, steps,
                       std::string("fig2") + scenario);
}

struct QutritScenario {
  double mean;
  double sigma;
};

inline QutritScenario fig3_moments(char scenario) {
  switch (scenario) {
    case 'a': return {1.0 / 6.0, 1.0 / 3.0};
    case 'b': return {1.0 / 2.0, 1.0 / 3.0};
    case 'c': return {5.0 / 6.0, 5.0 / 18.0};
    default:
      throw InputError(std::string("unknown fig3 scenario '") + scenario +
                       "', expected a, b or c");
  }
}

/// Qutrit scenarios on {0, 1/2, 1}.
inline TraceDataset fig3_dataset(char scenario,
                                 int steps = kDefaultTraceSteps) {
  const QutritScenario moments = fig3_moments(scenario);
  const SpectralState state =
      qutrit_from_moments(moments.mean, moments.sigma, 0.5, 1.0);
  const BoundSet bounds = bound_set(energy_moments(state));
  return trace_dataset(state, default_time_window(bounds), steps,
                       std::string("fig3") + scenario);
}

inline std::string trace_to_csv(const TraceDataset& trace) {
  check_trace(trace);
  std::string out;
  for (std::size_t c = 0; c < kTraceColumns.size(); ++c) {
    if (c) out += ',';
    out += kTraceColumns[c];
  }
  out += '\n';
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out += format_double(trace.times[i]) + ',' +
           format_double(trace.overlap_magnitude[i]) + ',' +
           format_double(trace.mt_curve[i]) + ',' +
           format_double(trace.ml_curve[i]) + ',' +
           format_double(trace.ml_dual_curve[i]) + '\n';
  }
  return out;
}

/// Reads the numeric columns back; metadata is not part of the CSV.
inline TraceDataset trace_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InputError("trace CSV: empty input");
  std::string expected;
  for (std::size_t c = 0; c < kTraceColumns.size(); ++c) {
    if (c) expected += ',';
    expected += kTraceColumns[c];
  }
  if (line != expected) throw InputError("trace CSV: unexpected header");
  TraceDataset trace;
  std::vector<double>* columns[] = {&trace.times, &trace.overlap_magnitude,
                                    &trace.mt_curve, &trace.ml_curve,
                                    &trace.ml_dual_curve};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t start = 0;
    for (std::size_t c = 0; c < 5; ++c) {
      const std::size_t end = c < 4 ? line.find(',', start) : line.size();
      if (end == std::string::npos) {
        throw InputError("trace CSV: short row '" + line + "'");
      }
      columns[c]->push_back(
          parse_double(std::string_view(line).substr(start, end - start)));
      start = end + 1;
    }
  }
  return trace;
}

inline nlohmann::json to_json(const TraceDataset& trace) {
  check_trace(trace);
  nlohmann::json doc = {{"times", trace.times},
                        {"overlap_magnitude", trace.overlap_magnitude},
                        {"mt_curve", trace.mt_curve},
                        {"ml_curve", trace.ml_curve},
                        {"ml_dual_curve", trace.ml_dual_curve}};
  if (trace.metadata) {
    const TraceMetadata& meta = *trace.metadata;
    doc["metadata"] = {{"label", meta.label},
                       {"state", to_json(meta.state)},
                       {"moments", to_json(meta.moments)},
                       {"bounds", to_json(meta.bounds)},
                       {"regime", to_json(meta.regime)}};
  }
  return doc;
}

// Regime diagram --------------------------------------------------------

enum class CellLabel { MT, ML, DUAL_ML, BOUNDARY, FORBIDDEN };

inline std::string_view to_string(CellLabel label) {
  switch (label) {
    case CellLabel::MT: return "MT";
    case CellLabel::ML: return "ML";
    case CellLabel::DUAL_ML: return "DUAL_ML";
    case CellLabel::BOUNDARY: return "BOUNDARY";
    case CellLabel::FORBIDDEN: return "FORBIDDEN";
  }
  return "?";
}

inline CellLabel to_cell_label(Regime regime) {
  switch (regime) {
    case Regime::MT: return CellLabel::MT;
    case Regime::ML: return CellLabel::ML;
    case Regime::DUAL_ML: return CellLabel::DUAL_ML;
    case Regime::BOUNDARY: return CellLabel::BOUNDARY;
  }
  return CellLabel::BOUNDARY;
}

struct RegimeGrid {
  std::vector<double> e_axis;   // mean energy / E_max, cell centres
  std::vector<double> de_axis;  // uncertainty / E_max, cell centres
  std::vector<std::vector<CellLabel>> cell;  // cell[i][j] at (e_i, de_j)
};

/// Label of one point of the normalized diagram (E_0 = 0, E_max = 1).
inline CellLabel classify_point(double e, double de) {
  // Two-level states sit on the edge; keep them under round-off.
  if (de > std::sqrt(e * (1.0 - e)) * (1.0 + kBoundaryTolerance)) {
    return CellLabel::FORBIDDEN;
  }
  const EnergyMoments m = moments_from_summary(0.0, 1.0, e, de);
  return to_cell_label(classify_regime(m).regime);
}

inline RegimeGrid fig1_dataset(int resolution = kDefaultGridResolution) {
  if (resolution < 2) throw InputError("resolution must be >= 2");
  RegimeGrid grid;
  const auto n = static_cast<std::size_t>(resolution);
  for (std::size_t i = 0; i < n; ++i) {
    const double centre = (static_cast<double>(i) + 0.5) / resolution;
    grid.e_axis.push_back(centre);
    grid.de_axis.push_back(centre);
  }
  grid.cell.assign(n, std::vector<CellLabel>(n, CellLabel::FORBIDDEN));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grid.cell[i][j] = classify_point(grid.e_axis[i], grid.de_axis[j]);
    }
  }
  return grid;
}

inline std::string regime_grid_to_csv(const RegimeGrid& grid) {
  std::string out = "e_axis,de_axis,cell\n";
  for (std::size_t i = 0; i < grid.e_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.de_axis.size(); ++j) {
      out += format_double(grid.e_axis[i]) + ',' +
             format_double(grid.de_axis[j]) + ',' +
             std::string(to_string(grid.cell[i][j])) + '\n';
    }
  }
  return out;
}

inline nlohmann::json to_json(const RegimeGrid& grid) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& row : grid.cell) {
    nlohmann::json out = nlohmann::json::array();
    for (CellLabel label : row) out.push_back(std::string(to_string(label)));
    cells.push_back(std::move(out));
  }
  return {{"e_axis", grid.e_axis}, {"de_axis", grid.de_axis}, {"cell", cells}};
}

}  // namespace qsl
