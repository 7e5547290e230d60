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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "qsl/sampling.hpp"
#include "qsl/state_io.hpp"

using Catch::Matchers::ContainsSubstring;

TEST_CASE("state JSON round-trips bit-exactly", "[state_io]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = qsl::sample_random_state(1 + seed % 8, 3.7, seed);
    CHECK(qsl::parse_state_json(qsl::state_to_json(s)) == s);
  }
}

TEST_CASE("format_double keeps 17 significant digits", "[state_io]") {
  CHECK(qsl::format_double(0.1) == "0.10000000000000001");
  CHECK(qsl::format_double(1.0) == "1");
  CHECK(qsl::format_double(INFINITY) == "inf");
  CHECK(qsl::parse_double("inf") == INFINITY);
  CHECK(qsl::parse_double(qsl::format_double(std::numbers::pi)) == std::numbers::pi);
  CHECK_THROWS_AS(qsl::parse_double("1.0x"), qsl::InputError);
}

TEST_CASE("state JSON errors name the offending field", "[state_io]") {
  CHECK_THROWS_WITH(qsl::parse_state_json("{\"levels\": [}"),
                    ContainsSubstring("malformed"));
  CHECK_THROWS_WITH(qsl::parse_state_json("{}"), ContainsSubstring("'levels'"));
  CHECK_THROWS_WITH(qsl::parse_state_json("{\"levels\": 3}"),
                    ContainsSubstring("must be an array"));
  CHECK_THROWS_WITH(
      qsl::parse_state_json(
          R"({"levels": [{"energy": 0, "population": 0.5}, {"energy": 1}]})"),
      ContainsSubstring("levels[1].population"));
  CHECK_THROWS_WITH(
      qsl::parse_state_json(
          R"({"levels": [{"energy": "zero", "population": 1}]})"),
      ContainsSubstring("levels[0].energy"));
  CHECK_THROWS_AS(
      qsl::parse_state_json(
          R"({"levels": [{"energy": 0, "population": 0.5}]})"),
      qsl::InputError);
}

TEST_CASE("read_state_file reads from disk", "[state_io]") {
  const auto path =
      (std::filesystem::temp_directory_path() / "qsl_state_io_test.json").string();
  {
    std::ofstream out(path);
    out << R"({"levels": [{"energy": 1, "population": 0.2},
                          {"energy": 0, "population": 0.8}]})";
  }
  const auto s = qsl::read_state_file(path);
  std::remove(path.c_str());
  REQUIRE(s.size() == 2);
  CHECK(s[0] == qsl::Level{0.0, 0.8});
  CHECK_THROWS_WITH(qsl::read_state_file(path), ContainsSubstring("cannot open"));
}
