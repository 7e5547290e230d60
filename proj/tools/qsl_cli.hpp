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
 * @file qsl_cli.hpp
 * @brief The `qsl` command line front end.
 *
 * Exit codes: 0 success, 1 input error, 2 a check found a violation
 * (falsify, xi-check).
 */
#pragma once

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl/qsl.hpp"

namespace qsl::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kViolation = 2 };

namespace detail {

struct StateFlags {
  std::string path;
  std::optional<double> qubit_p1;
  std::optional<double> qutrit_mean;
  std::optional<double> qutrit_sigma;
  double eta = 0.5;
  double emax = 1.0;
};

inline void add_state_flags(CLI::App& cmd, StateFlags& flags) {
  cmd.add_option("--state", flags.path, "State JSON file");
  cmd.add_option("--qubit-p1", flags.qubit_p1,
                 "Build a qubit with this upper-level population");
  cmd.add_option("--qutrit-mean", flags.qutrit_mean,
                 "Build a qutrit with this mean energy");
  cmd.add_option("--qutrit-sigma", flags.qutrit_sigma,
                 "Energy uncertainty of the qutrit");
  cmd.add_option("--eta", flags.eta, "Middle qutrit level, as a fraction of emax")
      ->capture_default_str();
  cmd.add_option("--emax", flags.emax, "Top energy of built states")
      ->capture_default_str();
}

inline SpectralState build_state(const StateFlags& flags) {
  if (!flags.path.empty()) return read_state_file(flags.path);
  if (flags.qubit_p1) return make_qubit(*flags.qubit_p1, flags.emax);
  if (flags.qutrit_mean || flags.qutrit_sigma) {
    if (!flags.qutrit_mean || !flags.qutrit_sigma) {
      throw InputError("--qutrit-mean and --qutrit-sigma must be given together");
    }
    return qutrit_from_moments(*flags.qutrit_mean, *flags.qutrit_sigma,
                               flags.eta, flags.emax);
  }
  throw InputError(
      "no state given: use --state, --qubit-p1 or --qutrit-mean/--qutrit-sigma");
}

inline std::vector<double> parse_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    try {
      values.push_back(parse_double(item));
    } catch (const InputError&) {
      throw InputError(flag + ": '" + item + "' is not a number");
    }
    start = end + 1;
  }
  return values;
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path)
      : fallback_(fallback), path_(path) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw InputError("cannot open output file '" + path_ + "'");
    file << text;
  }

 private:
  std::ostream& fallback_;
  std::string path_;
};

inline std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

inline void require_format(const std::string& format,
                           std::initializer_list<std::string_view> allowed) {
  for (auto option : allowed) {
    if (format == option) return;
  }
  throw InputError("--format: unsupported value '" + format + "'");
}

inline char parse_scenario(const std::string& text) {
  if (text.size() != 1 || text[0] < 'a' || text[0] > 'c') {
    throw InputError("--scenario: expected a, b or c, got '" + text + "'");
  }
  return text[0];
}

}  // namespace detail

/// Runs one CLI invocation, writing results to `out` (or --output) and
/// diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  using namespace detail;
  CLI::App app{"Quantum speed limits for states with a bounded spectrum"};
  app.require_subcommand(1);
  std::string output_path;
  std::function<int()> action;

  auto add_output = [&](CLI::App* cmd, std::string& format) {
    cmd->add_option("-o,--output", output_path, "Write to this file");
    cmd->add_option("--format", format, "Output format")->capture_default_str();
  };

  // moments ---------------------------------------------------------------
  StateFlags moments_state;
  std::string moments_p;
  auto* moments_cmd = app.add_subcommand("moments", "Energy moments of a state");
  add_state_flags(*moments_cmd, moments_state);
  moments_cmd->add_option("--p", moments_p, "Comma-separated L^p orders");
  moments_cmd->add_option("-o,--output", output_path, "Write to this file");
  moments_cmd->callback([&] {
    action = [&] {
      const std::vector<double> p =
          moments_p.empty() ? std::vector<double>{} : parse_list(moments_p, "--p");
      Output(out, output_path)
          .write(dump(to_json(energy_moments(build_state(moments_state), p))));
      return kSuccess;
    };
  });

  // bounds ----------------------------------------------------------------
  StateFlags bounds_state;
  std::string bounds_p;
  bool bounds_lp = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Orthogonalization-time bounds");
  add_state_flags(*bounds_cmd, bounds_state);
  bounds_cmd->add_flag("--lp", bounds_lp, "Include the L^p families (default p grid)");
  bounds_cmd->add_option("--p", bounds_p, "Comma-separated L^p orders");
  bounds_cmd->add_option("-o,--output", output_path, "Write to this file");
  bounds_cmd->callback([&] {
    action = [&] {
      std::vector<double> p;
      if (!bounds_p.empty()) {
        p = parse_list(bounds_p, "--p");
      } else if (bounds_lp) {
        p = default_p_grid();
      }
      const EnergyMoments m = energy_moments(build_state(bounds_state), p);
      Output(out, output_path).write(dump(to_json(bound_set(m))));
      return kSuccess;
    };
  });

  // regime ----------------------------------------------------------------
  StateFlags regime_state;
  std::optional<double> regime_mean;
  std::optional<double> regime_sigma;
  double regime_e0 = 0.0;
  auto* regime_cmd = app.add_subcommand("regime", "Classify the dynamical regime");
  add_state_flags(*regime_cmd, regime_state);
  regime_cmd->add_option("--mean", regime_mean, "Mean energy (with --sigma)");
  regime_cmd->add_option("--sigma", regime_sigma, "Energy uncertainty");
  regime_cmd->add_option("--e0", regime_e0, "Lowest occupied energy")
      ->capture_default_str();
  std::string regime_format = "text";
  add_output(regime_cmd, regime_format);
  regime_cmd->callback([&] {
    action = [&] {
      const std::string& format = regime_format;
      require_format(format, {"text", "json"});
      EnergyMoments m;
      if (regime_mean || regime_sigma) {
        if (!regime_mean || !regime_sigma) {
          throw InputError("--mean and --sigma must be given together");
        }
        m = moments_from_summary(regime_e0, regime_state.emax, *regime_mean,
                                 *regime_sigma);
        if (!(m.emax > m.e0)) throw InputError("--emax must exceed --e0");
        if (!(m.mean >= m.e0 && m.mean <= m.emax)) {
          throw InputError("--mean must lie in [e0, emax]");
        }
        if (!(m.sigma >= 0.0)) throw InputError("--sigma must be >= 0");
        if (m.sigma > popoviciu(m).max_sigma * (1.0 + 1e-12)) {
          throw InputError("--sigma exceeds the largest uncertainty "
                           "sqrt((mean-e0)(emax-mean)) for this mean");
        }
      } else {
        m = energy_moments(build_state(regime_state));
      }
      const RegimeReport report = classify_regime(m);
      Output(out, output_path)
          .write(format == "json" ? dump(to_json(report))
                                  : std::string(to_string(report.regime)) + "\n");
      return kSuccess;
    };
  });

  // evolve ----------------------------------------------------------------
  StateFlags evolve_state;
  std::optional<double> evolve_t_max;
  std::optional<double> evolve_t;
  int evolve_steps = kDefaultTraceSteps;
  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Overlap trace with bound curves, or one sample with --t");
  add_state_flags(*evolve_cmd, evolve_state);
  evolve_cmd->add_option("--t-max", evolve_t_max, "End of the time window");
  evolve_cmd->add_option("--t", evolve_t, "Evaluate a single time (replay)");
  evolve_cmd->add_option("--steps", evolve_steps, "Samples per trace")
      ->capture_default_str();
  std::string evolve_format = "csv";
  add_output(evolve_cmd, evolve_format);
  evolve_cmd->callback([&] {
    action = [&] {
      const std::string& format = evolve_format;
      require_format(format, {"csv", "json"});
      const SpectralState state = build_state(evolve_state);
      const BoundSet bounds = bound_set(energy_moments(state));
      if (evolve_t) {
        if (!(*evolve_t >= 0.0)) throw InputError("--t must be >= 0");
        const OverlapSample s = overlap(state, *evolve_t);
        const double envelope = envelope_angle(*evolve_t, bounds);
        Output(out, output_path)
            .write(dump({{"t", s.t},
                         {"overlap_re", s.value.real()},
                         {"overlap_im", s.value.imag()},
                         {"magnitude", s.magnitude},
                         {"angle", s.angle},
                         {"envelope_angle", envelope},
                         {"slack", envelope - s.angle}}));
        return kSuccess;
      }
      const double t_end = evolve_t_max.value_or(default_time_window(bounds));
      const TraceDataset trace = trace_dataset(state, t_end, evolve_steps, "evolve");
      Output(out, output_path)
          .write(format == "json" ? dump(to_json(trace)) : trace_to_csv(trace));
      return kSuccess;
    };
  });

  // ortho -----------------------------------------------------------------
  StateFlags ortho_state;
  std::optional<double> ortho_t_max;
  double ortho_tol = verify::kOrthogonalityTolerance;
  auto* ortho_cmd = app.add_subcommand("ortho", "Find the orthogonalization time");
  add_state_flags(*ortho_cmd, ortho_state);
  ortho_cmd->add_option("--t-max", ortho_t_max, "Search horizon (default 20 tau_bw)");
  ortho_cmd->add_option("--tol", ortho_tol, "Orthogonality threshold on |overlap|")
      ->capture_default_str();
  ortho_cmd->add_option("-o,--output", output_path, "Write to this file");
  ortho_cmd->callback([&] {
    action = [&] {
      const SpectralState state = build_state(ortho_state);
      const double horizon =
          ortho_t_max.value_or(verify::default_search_horizon(state));
      const auto t_perp =
          verify::find_orthogonalization_time(state, horizon, ortho_tol);
      const BoundSet bounds = bound_set(energy_moments(state));
      Output(out, output_path)
          .write(dump({{"t_perp", t_perp ? nlohmann::json(*t_perp)
                                          : nlohmann::json(nullptr)},
                       {"t_max", horizon},
                       {"tau_qsl", real_to_json(bounds.tau_qsl)},
                       {"tau_bw", real_to_json(bounds.tau_bw)}}));
      return kSuccess;
    };
  });

  // fig1 ------------------------------------------------------------------
  int fig1_resolution = kDefaultGridResolution;
  auto* fig1_cmd = app.add_subcommand("fig1", "Regime diagram over (E, dE)");
  fig1_cmd->add_option("--resolution", fig1_resolution, "Cells per axis")
      ->capture_default_str();
  std::string fig1_format = "csv";
  add_output(fig1_cmd, fig1_format);
  fig1_cmd->callback([&] {
    action = [&] {
      const std::string& format = fig1_format;
      require_format(format, {"csv", "json"});
      const RegimeGrid grid = fig1_dataset(fig1_resolution);
      Output(out, output_path)
          .write(format == "json" ? dump(to_json(grid)) : regime_grid_to_csv(grid));
      return kSuccess;
    };
  });

  // fig2 / fig3 -----------------------------------------------------------
  std::string scenario;
  std::string trace_format = "csv";
  int fig_steps = kDefaultTraceSteps;
  for (const char* name : {"fig2", "fig3"}) {
    const bool qubit = std::string_view(name) == "fig2";
    auto* cmd = app.add_subcommand(
        name, qubit ? "Qubit scenario traces" : "Qutrit scenario traces");
    cmd->add_option("--scenario", scenario, "a, b or c")->required();
    cmd->add_option("--steps", fig_steps, "Samples per trace")->capture_default_str();
    add_output(cmd, trace_format);
    cmd->callback([&, qubit] {
      action = [&, qubit] {
        const std::string& format = trace_format;
        require_format(format, {"csv", "json"});
        const char which = parse_scenario(scenario);
        const TraceDataset trace =
            qubit ? fig2_dataset(which, fig_steps) : fig3_dataset(which, fig_steps);
        Output(out, output_path)
            .write(format == "json" ? dump(to_json(trace)) : trace_to_csv(trace));
        return kSuccess;
      };
    });
  }

  // falsify ---------------------------------------------------------------
  verify::SweepConfig sweep;
  std::string levels = "2:8";
  auto* falsify_cmd = app.add_subcommand("falsify", "Randomized check of every bound");
  falsify_cmd->add_option("--samples", sweep.samples, "Number of random states")
      ->capture_default_str();
  falsify_cmd->add_option("--levels", levels, "Level-count range min:max")
      ->capture_default_str();
  falsify_cmd->add_option("--seed", sweep.seed, "Base seed")->capture_default_str();
  falsify_cmd->add_option("--time-samples", sweep.time_samples,
                          "Envelope samples per state")
      ->capture_default_str();
  falsify_cmd->add_option("--tolerance", sweep.envelope_tolerance,
                          "Allowed negative envelope slack (rad)")
      ->capture_default_str();
  falsify_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  falsify_cmd->add_option("-o,--output", output_path, "Write to this file");
  falsify_cmd->callback([&] {
    action = [&] {
      const std::size_t colon = levels.find(':');
      try {
        if (colon == std::string::npos) {
          sweep.min_levels = sweep.max_levels = std::stoi(levels);
        } else {
          sweep.min_levels = std::stoi(levels.substr(0, colon));
          sweep.max_levels = std::stoi(levels.substr(colon + 1));
        }
      } catch (const std::exception&) {
        throw InputError("--levels: expected N or MIN:MAX, got '" + levels + "'");
      }
      const verify::FalsificationReport report = verify::falsification_sweep(sweep);
      Output(out, output_path).write(dump(verify::to_json(report)));
      return report.violations.empty() ? kSuccess : kViolation;
    };
  });

  // xi-check --------------------------------------------------------------
  std::string xi_points;
  auto* xi_cmd = app.add_subcommand(
      "xi-check", "Compare the linear xi(x) with its tangency reconstruction");
  xi_cmd->add_option("--x", xi_points, "Comma-separated x values (default 0.05..1)");
  std::string xi_format = "csv";
  add_output(xi_cmd, xi_format);
  xi_cmd->callback([&] {
    action = [&] {
      const std::string& format = xi_format;
      require_format(format, {"csv", "json"});
      std::vector<double> xs;
      if (xi_points.empty()) {
        for (int k = 1; k <= 20; ++k) xs.push_back(0.05 * k);
      } else {
        xs = parse_list(xi_points, "--x");
      }
      bool within = true;
      nlohmann::json rows = nlohmann::json::array();
      std::string csv = "x,xi,xi_oracle,delta,q_opt\n";
      for (double x : xs) {
        const verify::XiOracleResult oracle = verify::xi_oracle(x);
        const double linear = xi(x);
        const double delta = oracle.xi - linear;
        within = within && delta >= -verify::kXiRoundOff &&
                 delta < verify::kXiGapBound;
        rows.push_back({{"x", x},
                        {"xi", linear},
                        {"xi_oracle", oracle.xi},
                        {"delta", delta},
                        {"q_opt", oracle.q_opt}});
        csv += format_double(x) + ',' + format_double(linear) + ',' +
               format_double(oracle.xi) + ',' + format_double(delta) + ',' +
               format_double(oracle.q_opt) + '\n';
      }
      Output(out, output_path).write(format == "json" ? dump(rows) : csv);
      return within ? kSuccess : kViolation;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qsl::cli
