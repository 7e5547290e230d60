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


// Acceptance suite: one PASS/FAIL line per criterion, with wall time.
// Exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "qsl/qsl.hpp"
#include "qsl_cli.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& title, double limit_s,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome{false, ""};
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (limit_s > 0 && seconds > limit_s) {
    outcome.pass = false;
    outcome.detail += " [over " + qsl::format_double(limit_s) + " s]";
  }
  if (!outcome.pass) ++failures;
  std::printf("%s %-3s %s (%.3f s): %s\n", outcome.pass ? "PASS" : "FAIL",
              id.c_str(), title.c_str(), seconds, outcome.detail.c_str());
  std::fflush(stdout);
}

std::string num(double v) { return qsl::format_double(v); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Sub-results of a compound criterion, printed as indented lines.
struct Parts {
  bool all = true;
  std::string lines;
  void add(const std::string& id, bool pass, const std::string& detail) {
    all = all && pass;
    lines += std::string("    ") + (pass ? "PASS " : "FAIL ") + id + ": " +
             detail + "\n";
  }
};

// Shared by criteria 5, 6 and 10.
nlohmann::json sweep_report;
int sweep_exit = -1;

}  // namespace

int main() {
  report("1", "balanced-qubit coincidence", 1.0, [] {
    const auto s = qsl::make_qubit(0.5, 1.0);
    const auto b = qsl::bound_set(qsl::energy_moments(s));
    const auto t = qsl::verify::find_orthogonalization_time(s, 10.0);
    const bool ok = close(b.tau_mt, kPi, 1e-12) && close(b.tau_ml, kPi, 1e-12) &&
                    close(b.tau_ml_dual, kPi, 1e-12) && t &&
                    close(*t, kPi, 1e-9);
    return Outcome{ok, "tau_mt=" + num(b.tau_mt) + " tau_ml=" + num(b.tau_ml) +
                           " tau_ml_dual=" + num(b.tau_ml_dual) + " t_perp=" +
                           (t ? num(*t) : "none")};
  });

  report("2", "qubit scenario moments", 0, [] {
    const auto b = qsl::energy_moments(qsl::make_qubit(0.2, 1.0));
    const auto c = qsl::energy_moments(qsl::make_qubit(0.8, 1.0));
    const bool ok = close(b.mean, 0.2, 1e-12) && close(b.sigma, 0.4, 1e-12) &&
                    close(c.mean, 0.8, 1e-12) && close(c.sigma, 0.4, 1e-12);
    return Outcome{ok, "(b) E=" + num(b.mean) + " dE=" + num(b.sigma) +
                           "; (c) E=" + num(c.mean) + " dE=" + num(c.sigma)};
  });

  report("3", "qutrit inversion", 0, [] {
    struct Case {
      double mean, sigma;
      double w[3];
    };
    const Case cases[] = {
        {1.0 / 6, 1.0 / 3, {7.0 / 9, 1.0 / 9, 1.0 / 9}},
        {1.0 / 2, 1.0 / 3, {2.0 / 9, 5.0 / 9, 2.0 / 9}},
        {5.0 / 6, 5.0 / 18, {7.0 / 162, 20.0 / 81, 115.0 / 162}},
    };
    bool ok = true;
    double worst = 0.0;
    for (const Case& c : cases) {
      // The frozen weights must themselves reproduce the target moments.
      const auto ref = oracle::direct_moments(
          {{0.0, c.w[0]}, {0.5, c.w[1]}, {1.0, c.w[2]}});
      ok = ok && close(ref.mean, c.mean, 1e-12) && close(ref.sigma, c.sigma, 1e-12);
      const auto s = qsl::qutrit_from_moments(c.mean, c.sigma, 0.5, 1.0);
      ok = ok && s.size() == 3;
      if (s.size() != 3) continue;
      for (int k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(s[k].population - c.w[k]));
      }
      const auto m = qsl::energy_moments(s);
      worst = std::max({worst, std::abs(m.mean - c.mean), std::abs(m.sigma - c.sigma)});
    }
    ok = ok && worst <= 1e-12;
    return Outcome{ok, "max weight/moment error " + num(worst)};
  });

  report("4", "regime labels of the six scenarios", 0, [] {
    using qsl::Regime;
    const std::pair<qsl::SpectralState, Regime> cases[] = {
        {qsl::make_qubit(0.5, 1.0), Regime::BOUNDARY},
        {qsl::make_qubit(0.2, 1.0), Regime::ML},
        {qsl::make_qubit(0.8, 1.0), Regime::DUAL_ML},
        {qsl::qutrit_from_moments(1.0 / 6, 1.0 / 3, 0.5, 1.0), Regime::ML},
        {qsl::qutrit_from_moments(0.5, 1.0 / 3, 0.5, 1.0), Regime::MT},
        {qsl::qutrit_from_moments(5.0 / 6, 5.0 / 18, 0.5, 1.0), Regime::DUAL_ML},
    };
    bool ok = true;
    std::string got;
    for (const auto& [state, expected] : cases) {
      const Regime r = qsl::classify_regime(qsl::energy_moments(state)).regime;
      ok = ok && r == expected;
      got += std::string(got.empty() ? "" : ",") + std::string(to_string(r));
    }
    return Outcome{ok, got};
  });

  report("5", "envelope soundness sweep", 60.0, [] {
    const char* argv[] = {"qsl", "falsify", "--samples", "10000",
                          "--levels", "2:8", "--seed", "42"};
    std::ostringstream out;
    std::ostringstream err;
    sweep_exit = qsl::cli::run_cli(8, argv, out, err);
    sweep_report = nlohmann::json::parse(out.str());
    const double worst = sweep_report.at("worst_slack_rad").get<double>();
    const auto violations = sweep_report.at("violations").size();
    const bool ok = sweep_exit == 0 && worst >= -1e-3 && violations == 0 &&
                    sweep_report.at("samples") == 10000;
    return Outcome{ok, "exit=" + std::to_string(sweep_exit) + " worst_slack=" +
                           num(worst) + " violations=" +
                           std::to_string(violations)};
  });

  report("6", "Popoviciu bound and saturation", 0, [] {
    std::size_t bad = 0;
    for (const auto& v : sweep_report.at("violations")) {
      const auto kind = v.at("kind").get<std::string>();
      bad += kind == "popoviciu_bound" || kind == "popoviciu_saturation";
    }
    const double excess = sweep_report.at("max_popoviciu_excess").get<double>();
    const auto saturated = sweep_report.at("popoviciu_saturated").get<std::size_t>();
    const auto two = sweep_report.at("two_level_states").get<std::size_t>();
    const bool ok = bad == 0 && excess <= 1e-12 && saturated == two;
    return Outcome{ok, "counterexamples=" + std::to_string(bad) +
                           " max(dE - bound)=" + num(excess) + " saturated=" +
                           std::to_string(saturated) + " two-level=" +
                           std::to_string(two)};
  });

  report("7", "duality", 0, [] {
    double worst_overlap = 0.0;
    double worst_swap = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) {
      std::mt19937_64 rng(qsl::derive_seed(7, i));
      const int levels = std::uniform_int_distribution<int>(2, 8)(rng);
      const auto s = qsl::sample_random_state(levels, 1.0, rng());
      const auto d = qsl::dual_state(s);
      const auto b = qsl::bound_set(qsl::energy_moments(s));
      const auto bd = qsl::bound_set(qsl::energy_moments(d));
      std::uniform_real_distribution<double> time(0.0, 20.0 * b.tau_bw);
      for (int k = 0; k < 100; ++k) {
        const double t = time(rng);
        worst_overlap = std::max(
            worst_overlap,
            std::abs(qsl::overlap(s, t).magnitude - qsl::overlap(d, t).magnitude));
      }
      worst_swap = std::max({worst_swap,
                             std::abs(bd.tau_ml / b.tau_ml_dual - 1.0),
                             std::abs(bd.tau_ml_dual / b.tau_ml - 1.0)});
    }
    const bool ok = worst_overlap <= 1e-12 && worst_swap <= 1e-12;
    return Outcome{ok, "max |overlap| gap " + num(worst_overlap) +
                           ", max relative swap gap " + num(worst_swap)};
  });

  report("8", "xi oracle agreement", 0, [] {
    double worst = 0.0;
    double lowest = 1.0;
    for (int k = 1; k <= 20; ++k) {
      const double x = 0.05 * k;
      const double delta = qsl::verify::xi_oracle(x).xi - qsl::xi(x);
      worst = std::max(worst, std::abs(delta));
      lowest = std::min(lowest, delta);
    }
    const auto sol = qsl::verify::a_of_q(2.0 / kPi);
    const bool ok = worst < qsl::verify::kXiGapBound &&
                    lowest >= -qsl::verify::kXiRoundOff &&
                    close(sol.a, 2.0 / kPi, 1e-9) && close(sol.x_star, kPi, 1e-9);
    return Outcome{ok, "max |delta|=" + num(worst) + " min delta=" + num(lowest) +
                           " a(2/pi)=" + num(sol.a) + " x*=" + num(sol.x_star)};
  });

  report("9", "saturation witnesses", 0, [] {
    auto witness = [](double p1, bool dual) {
      const auto s = qsl::make_qubit(p1, 1.0);
      const auto b = qsl::bound_set(qsl::energy_moments(s));
      const auto times = qsl::crossover_times(b);
      const auto tau_c = dual ? times.tau_c_star : times.tau_c;
      if (!tau_c) return std::optional<double>{};
      const double end = dual ? b.tau_ml_dual : b.tau_ml;
      return std::optional<double>{
          qsl::verify::check_envelope_window(s, b, *tau_c, end, 4001, 1e-3)
              .worst_slack};
    };
    const auto b = witness(0.2, false);
    const auto c = witness(0.8, true);
    const bool ok = b && c && *b <= 2e-3 && *c <= 2e-3;
    return Outcome{ok, "(b) min slack " + (b ? num(*b) : "no crossover") +
                           "; (c) min slack " + (c ? num(*c) : "no crossover")};
  });

  report("10", "tau_QSL vs tau_bw and the L^p family", 0, [] {
    Parts parts;

    std::size_t below_bw = 0;
    for (const auto& v : sweep_report.at("violations")) {
      below_bw += v.at("kind") == "qsl_vs_bandwidth";
    }
    qsl::verify::SweepConfig config;
    std::size_t direct = 0;
    std::size_t ep_drops = 0;
    std::size_t rises[2] = {0, 0};
    std::string example[2];
    const std::vector<double> grid = qsl::default_p_grid();
    for (std::size_t i = 0; i < config.samples; ++i) {
      const auto s = qsl::verify::sweep_state(config, i);
      const auto m = qsl::energy_moments(s, grid);
      const auto b = qsl::bound_set(m);
      direct += b.tau_qsl < b.tau_bw * (1 - 1e-12);
      const std::vector<qsl::LpBound>* families[2] = {&b.tau_ml_p, &b.tau_ml_dual_p};
      for (int f = 0; f < 2; ++f) {
        const auto& family = *families[f];
        bool up = false;
        for (std::size_t k = 1; k < grid.size(); ++k) {
          ep_drops += m.lp[k].ep < m.lp[k - 1].ep * (1 - 1e-12);
          ep_drops += m.lp[k].ep_star < m.lp[k - 1].ep_star * (1 - 1e-12);
          up = up || family[k].tau > family[k - 1].tau * (1 + 1e-12);
        }
        rises[f] += up;
        if (up && example[f].empty()) {
          example[f] = "state " + std::to_string(i) + " (E-E0=" +
                       num(m.above_ground()) + ", bw=" + num(m.bandwidth) + "):";
          for (const auto& l : family) example[f] += " " + num(l.tau);
        }
      }
    }
    ep_drops /= 2;
    parts.add("10a", below_bw == 0 && direct == 0,
              "tau_QSL < tau_bw on " + std::to_string(direct) + " of " +
                  std::to_string(config.samples) + " sweep states");
    parts.add("10b", ep_drops == 0,
              "E_p and E*_p nondecreasing in p on every sweep state (" +
                  std::to_string(ep_drops) + " drops)");

    // Two-level witness: 2^(1/p) E_p = (1.8)^(1/p) shrinks with p.
    const auto witness =
        qsl::bound_set(qsl::energy_moments(qsl::make_qubit(0.9, 1.0), grid));
    std::string series;
    for (const auto& l : witness.tau_ml_p) series += " " + num(l.tau);
    const std::string total = std::to_string(config.samples);
    parts.add("10c", rises[0] == 0 && rises[1] == 0,
              "tau_ML,p nonincreasing in p over p = 1,2,4,10,100: tau_ML,p rises on " +
                  std::to_string(rises[0]) + "/" + total + " states, e.g. " +
                  (example[0].empty() ? "none" : example[0]) +
                  "; tau*_ML,p rises on " + std::to_string(rises[1]) + "/" + total +
                  " states, e.g. " + (example[1].empty() ? "none" : example[1]) +
                  "; qubit p1=0.9 tau_ML,p:" + series);

    const std::vector<std::vector<int>> supports{
        {0, 12}, {0, 5, 12}, {1, 4, 7, 11}, {0, 3, 6, 9, 12}, {2, 3, 5, 7, 11},
        {0, 1}, {0, 6, 11}, {3, 4, 8, 12}};
    double worst = 0.0;
    const std::vector<double> far{1e6};
    for (const auto& ks : supports) {
      std::vector<qsl::Level> levels;
      for (int k : ks) levels.push_back({k / 12.0, 1.0 / ks.size()});
      const auto b = qsl::bound_set(qsl::energy_moments(qsl::validate_state(levels), far));
      worst = std::max({worst, std::abs(b.tau_ml_p[0].tau / b.tau_bw - 1.0),
                        std::abs(b.tau_ml_dual_p[0].tau / b.tau_bw - 1.0)});
    }
    parts.add("10d", worst <= 1e-6,
              "max |tau_ML,p / tau_bw - 1| at p=1e6 on equal-weight k/12 spectra " +
                  num(worst));

    return Outcome{parts.all, "\n" + parts.lines};
  });

  report("11", "orthogonalization finder vs dense grid", 0, [] {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> level(1, 6);
    std::uniform_real_distribution<double> when(0.2, 3.0);
    int checked = 0;
    double worst = 0.0;
    int missing = 0;
    while (checked < 100) {
      int n1 = level(rng);
      int n2 = level(rng);
      const double t_zero = when(rng);
      if (n1 == n2) continue;
      if (n1 > n2) std::swap(n1, n2);
      const auto raw = oracle::orthogonal_qutrit(n1, n2, t_zero);
      if (!raw) continue;
      std::vector<qsl::Level> levels;
      for (const auto& [e, p] : *raw) levels.push_back({e, p});
      const auto s = qsl::validate_state(levels);
      const double horizon = 2.0 * kPi;  // one period of an integer spectrum
      const auto ref = oracle::dense_grid_first_zero(*raw, horizon);
      const auto got = qsl::verify::find_orthogonalization_time(s, horizon);
      if (!ref || !got) {
        ++missing;
      } else {
        worst = std::max(worst, std::abs(*got - *ref));
      }
      ++checked;
    }
    const bool ok = missing == 0 && worst <= 1e-6;
    return Outcome{ok, "100 states, max |t_finder - t_grid| = " + num(worst) +
                           ", unmatched=" + std::to_string(missing)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS",
              failures);
  return failures ? 1 : 0;
}
