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
 * @file spectral_state.hpp
 * @brief Pure states stored by their spectral decomposition.
 *
 * A state is a list of (eigenenergy, population) pairs. Phases of the
 * expansion coefficients are dropped: every quantity computed here depends
 * on |c_n|^2 only. Units use hbar = 1, so times are inverse energies.
 *
 * A SpectralState can only be obtained through validate_state() (or the
 * constructors built on it), which enforces:
 *   - populations >= 0 summing to 1 within 1e-12,
 *   - strictly increasing finite energies,
 *   - every stored level occupied (population >= kPruneThreshold).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qsl/error.hpp"

namespace qsl {

/// Populations below this are treated as unoccupied.
inline constexpr double kPruneThreshold = 1e-15;
/// Largest |sum(populations) - 1| accepted (and silently renormalized).
inline constexpr double kNormalizationTolerance = 1e-9;
/// Energies closer than kMergeTolerance * (1 + |E|) are merged.
inline constexpr double kMergeTolerance = 1e-12;

struct Level {
  double energy;
  double population;

  friend bool operator==(const Level&, const Level&) = default;
};

class SpectralState;
SpectralState validate_state(std::span<const Level> raw);

class SpectralState {
 public:
  std::span<const Level> levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const Level& operator[](std::size_t i) const { return levels_[i]; }

  /// Lowest occupied eigenenergy.
  double ground_energy() const noexcept { return levels_.front().energy; }
  /// Highest occupied eigenenergy.
  double top_energy() const noexcept { return levels_.back().energy; }

  friend bool operator==(const SpectralState&, const SpectralState&) = default;

 private:
  explicit SpectralState(std::vector<Level> levels)
      : levels_(std::move(levels)) {}

  std::vector<Level> levels_;

  friend SpectralState validate_state(std::span<const Level> raw);
};

/**
 * Sorts, merges near-duplicate energies, prunes unoccupied levels and
 * renormalizes. Rejects empty input, non-finite entries, negative
 * populations and totals further than 1e-9 from one.
 */
inline SpectralState validate_state(std::span<const Level> raw) {
  if (raw.empty()) throw InputError("state has no levels");
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& [energy, population] = raw[i];
    if (!std::isfinite(energy)) {
      throw InputError("levels[" + std::to_string(i) +
                       "].energy is not finite");
    }
    if (!std::isfinite(population)) {
      throw InputError("levels[" + std::to_string(i) +
                       "].population is not finite");
    }
    if (population < 0.0) {
      throw InputError("levels[" + std::to_string(i) +
                       "].population is negative: " +
                       std::to_string(population));
    }
    total += population;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw InputError("populations sum to " + std::to_string(total) +
                     ", expected 1 within 1e-9");
  }

  std::vector<Level> sorted(raw.begin(), raw.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Level& a, const Level& b) {
                     return a.energy < b.energy;
                   });

  // Merge runs of near-equal energies; the merged energy is the
  // population-weighted mean so the first moment is preserved.
  std::vector<Level> merged;
  merged.reserve(sorted.size());
  for (const Level& level : sorted) {
    if (!merged.empty()) {
      Level& last = merged.back();
      if (level.energy - last.energy <=
          kMergeTolerance * (1.0 + std::abs(last.energy))) {
        const double pop = last.population + level.population;
        if (pop > 0.0) {
          last.energy = (last.energy * last.population +
                         level.energy * level.population) /
                        pop;
        }
        last.population = pop;
        continue;
      }
    }
    merged.push_back(level);
  }

  std::erase_if(merged, [](const Level& level) {
    return level.population < kPruneThreshold;
  });
  if (merged.empty()) throw InputError("no occupied level after pruning");

  double kept = 0.0;
  for (const Level& level : merged) kept += level.population;
  // Leave already-normalized input untouched so validation is idempotent.
  if (std::abs(kept - 1.0) > 1e-14) {
    for (Level& level : merged) level.population /= kept;
  }
  return SpectralState(std::move(merged));
}

inline SpectralState validate_state(std::initializer_list<Level> raw) {
  return validate_state(std::span<const Level>(raw.begin(), raw.size()));
}

/**
 * Time-reversed state: the spectrum is inverted as E -> E_top - E while
 * populations are kept. Overlap magnitudes are unchanged and the roles of
 * (mean - E_ground) and (E_top - mean) are exchanged. Applying it twice
 * returns the original spectrum shifted so that its ground energy is 0.
 */
inline SpectralState dual_state(const SpectralState& state) {
  const double top = state.top_energy();
  std::vector<Level> inverted;
  inverted.reserve(state.size());
  for (const Level& level : state.levels()) {
    inverted.push_back({top - level.energy, level.population});
  }
  return validate_state(inverted);
}

/// Two-level state with populations (1 - p1) at 0 and p1 at `emax`.
inline SpectralState make_qubit(double p1, double emax) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw InputError("qubit population p1 must lie in [0, 1], got " +
                     std::to_string(p1));
  }
  if (!(emax > 0.0) || !std::isfinite(emax)) {
    throw InputError("emax must be positive and finite, got " +
                     std::to_string(emax));
  }
  return validate_state({{0.0, 1.0 - p1}, {emax, p1}});
}

/**
 * Three-level state on energies {0, eta * emax, emax} with the requested
 * mean energy and energy uncertainty. The populations follow from the first
 * two moments in closed form; any weight outside [0, 1] beyond round-off
 * raises InfeasibleMoments naming the level.
 */
inline SpectralState qutrit_from_moments(double mean, double sigma, double eta,
                                         double emax) {
  if (!(emax > 0.0) || !std::isfinite(emax)) {
    throw InputError("emax must be positive and finite, got " +
                     std::to_string(emax));
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    throw InputError("eta must lie in (0, 1), got " + std::to_string(eta));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma) || !std::isfinite(mean)) {
    throw InputError("mean must be finite and sigma non-negative");
  }
  const double e = mean / emax;
  const double s2 = (sigma / emax) * (sigma / emax);
  const double w1 = ((1.0 - e) * e - s2) / ((1.0 - eta) * eta);
  const double w2 = ((e - eta) * e + s2) / (1.0 - eta);
  const double w0 = 1.0 - w1 - w2;

  constexpr double slack = 1e-12;
  const double weights[3] = {w0, w1, w2};
  for (std::size_t i = 0; i < 3; ++i) {
    if (weights[i] < -slack || weights[i] > 1.0 + slack) {
      throw InfeasibleMoments(i, weights[i]);
    }
  }
  auto clamp = [](double w) { return std::clamp(w, 0.0, 1.0); };
  const double c0 = clamp(w0);
  const double c1 = clamp(w1);
  const double c2 = clamp(w2);
  const double norm = c0 + c1 + c2;
  return validate_state(
      {{0.0, c0 / norm}, {eta * emax, c1 / norm}, {emax, c2 / norm}});
}

}  // namespace qsl
