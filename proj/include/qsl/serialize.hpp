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

// JSON views of the value types. Field names follow the struct members;
// infinite times are written as the string "inf".
#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "qsl/bounds.hpp"
#include "qsl/error.hpp"
#include "qsl/moments.hpp"
#include "qsl/regime.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl {

inline nlohmann::json real_to_json(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

inline double real_from_json(const nlohmann::json& value,
                             const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
  }
  throw InputError("field '" + field + "' must be a number or \"inf\"");
}

inline nlohmann::json to_json(const SpectralState& state) {
  nlohmann::json levels = nlohmann::json::array();
  for (const Level& level : state.levels()) {
    levels.push_back({{"energy", level.energy},
                      {"population", level.population}});
  }
  return {{"levels", levels}};
}

inline nlohmann::json to_json(const EnergyMoments& m) {
  nlohmann::json lp = nlohmann::json::array();
  for (const LpNorm& norm : m.lp) {
    lp.push_back({{"p", norm.p}, {"ep", norm.ep}, {"ep_star", norm.ep_star}});
  }
  return {{"e0", m.e0},
          {"emax", m.emax},
          {"mean", m.mean},
          {"sigma", m.sigma},
          {"bandwidth", m.bandwidth},
          {"lp", lp}};
}

inline nlohmann::json to_json(const BoundSet& b) {
  auto family = [](const std::vector<LpBound>& bounds) {
    nlohmann::json out = nlohmann::json::array();
    for (const LpBound& bound : bounds) {
      out.push_back({{"p", bound.p}, {"tau", real_to_json(bound.tau)}});
    }
    return out;
  };
  return {{"tau_mt", real_to_json(b.tau_mt)},
          {"tau_ml", real_to_json(b.tau_ml)},
          {"tau_ml_dual", real_to_json(b.tau_ml_dual)},
          {"tau_bw", real_to_json(b.tau_bw)},
          {"tau_ml_p", family(b.tau_ml_p)},
          {"tau_ml_dual_p", family(b.tau_ml_dual_p)},
          {"tau_qsl", real_to_json(b.tau_qsl)}};
}

inline BoundSet bound_set_from_json(const nlohmann::json& doc) {
  BoundSet b;
  b.tau_mt = real_from_json(doc.at("tau_mt"), "tau_mt");
  b.tau_ml = real_from_json(doc.at("tau_ml"), "tau_ml");
  b.tau_ml_dual = real_from_json(doc.at("tau_ml_dual"), "tau_ml_dual");
  b.tau_bw = real_from_json(doc.at("tau_bw"), "tau_bw");
  b.tau_qsl = real_from_json(doc.at("tau_qsl"), "tau_qsl");
  for (const auto& entry : doc.at("tau_ml_p")) {
    b.tau_ml_p.push_back({entry.at("p").get<double>(),
                          real_from_json(entry.at("tau"), "tau_ml_p.tau")});
  }
  for (const auto& entry : doc.at("tau_ml_dual_p")) {
    b.tau_ml_dual_p.push_back(
        {entry.at("p").get<double>(),
         real_from_json(entry.at("tau"), "tau_ml_dual_p.tau")});
  }
  return b;
}

inline nlohmann::json to_json(const RegimeReport& r) {
  return {{"regime", std::string(to_string(r.regime))},
          {"crossover", r.crossover ? real_to_json(*r.crossover)
                                    : nlohmann::json(nullptr)},
          {"boundary_tags", r.boundary_tags}};
}

}  // namespace qsl
