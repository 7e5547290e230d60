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
 * @file state_io.hpp
 * @brief State file format.
 *
 *   {"levels": [{"energy": <number>, "population": <number>}, ...]}
 *
 * The writer emits levels in ascending energy with 17 significant digits so
 * that a read-back reproduces every double exactly.
 */
#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsl/error.hpp"
#include "qsl/spectral_state.hpp"

namespace qsl {

/// 17 significant digits; "inf" / "-inf" for infinities.
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

inline double parse_double(std::string_view text) {
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::string state_to_json(const SpectralState& state) {
  std::string out = "{\"levels\": [";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out += ", ";
    out += "{\"energy\": " + format_double(state[i].energy) +
           ", \"population\": " + format_double(state[i].population) + "}";
  }
  out += "]}\n";
  return out;
}

inline SpectralState state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("levels")) {
    throw InputError("state JSON: missing field 'levels'");
  }
  const auto& levels = doc.at("levels");
  if (!levels.is_array()) {
    throw InputError("state JSON: field 'levels' must be an array");
  }
  std::vector<Level> raw;
  raw.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& entry = levels[i];
    Level level{};
    for (auto [name, slot] : {std::pair{"energy", &level.energy},
                              std::pair{"population", &level.population}}) {
      const std::string field =
          "levels[" + std::to_string(i) + "]." + name;
      if (!entry.is_object() || !entry.contains(name)) {
        throw InputError("state JSON: missing field '" + field + "'");
      }
      if (!entry.at(name).is_number()) {
        throw InputError("state JSON: field '" + field +
                         "' must be a number");
      }
      *slot = entry.at(name).get<double>();
    }
    raw.push_back(level);
  }
  return validate_state(raw);
}

inline SpectralState parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("state JSON: malformed document: ") +
                     e.what());
  }
  return state_from_json(doc);
}

inline SpectralState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open state file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

}  // namespace qsl
