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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsl/error.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl {

/// SplitMix64 finalizer. Derives independent per-item seeds from a base
/// seed so sweeps can be split across workers without changing results.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/**
 * Random state with `level_count` energies uniform in [0, emax] and
 * populations uniform on the probability simplex (normalized unit
 * exponentials). Deterministic for a given seed; coincident energies are
 * merged, so the result may hold fewer levels.
 */
inline SpectralState sample_random_state(int level_count, double emax,
                                         std::uint64_t seed) {
  if (level_count < 1) {
    throw InputError("level_count must be >= 1, got " +
                     std::to_string(level_count));
  }
  if (!(emax > 0.0)) {
    throw InputError("emax must be positive, got " + std::to_string(emax));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> energy_dist(0.0, emax);
  std::exponential_distribution<double> weight_dist(1.0);

  std::vector<Level> levels(static_cast<std::size_t>(level_count));
  double total = 0.0;
  for (Level& level : levels) {
    level.energy = energy_dist(rng);
    level.population = weight_dist(rng);
    total += level.population;
  }
  for (Level& level : levels) level.population /= total;
  return validate_state(levels);
}

}  // namespace qsl
