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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsl/figures.hpp"

using Catch::Matchers::WithinAbs;
using qsl::CellLabel;

namespace {

CellLabel mirror(CellLabel label) {
  switch (label) {
    case CellLabel::ML: return CellLabel::DUAL_ML;
    case CellLabel::DUAL_ML: return CellLabel::ML;
    default: return label;
  }
}

}  // namespace

TEST_CASE("classify_point on the unit spectrum", "[figures]") {
  CHECK(qsl::classify_point(0.5, 1.0 / 3) == CellLabel::MT);
  CHECK(qsl::classify_point(0.2, 0.4) == CellLabel::ML);
  CHECK(qsl::classify_point(0.8, 0.4) == CellLabel::DUAL_ML);
  CHECK(qsl::classify_point(0.5, 0.5) == CellLabel::BOUNDARY);
  CHECK(qsl::classify_point(0.1, 0.4) == CellLabel::FORBIDDEN);
  CHECK(to_string(CellLabel::FORBIDDEN) == "FORBIDDEN");
}

TEST_CASE("regime grid is mirror-symmetric about e = 1/2", "[figures]") {
  const auto grid = qsl::fig1_dataset(100);
  REQUIRE(grid.cell.size() == 100);
  CHECK_THAT(grid.e_axis.front(), WithinAbs(0.005, 1e-15));
  std::size_t forbidden = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    for (std::size_t j = 0; j < 100; ++j) {
      const CellLabel here = grid.cell[i][j];
      const CellLabel there = grid.cell[99 - i][j];
      if (here == CellLabel::BOUNDARY || there == CellLabel::BOUNDARY) continue;
      CHECK(there == mirror(here));
      forbidden += here == CellLabel::FORBIDDEN;
      const double e = grid.e_axis[i];
      const double de = grid.de_axis[j];
      CHECK((here == CellLabel::FORBIDDEN) ==
            (de > std::sqrt(e * (1 - e)) * (1 + 1e-12)));
    }
  }
  CHECK(forbidden > 0);
  CHECK_THROWS_AS(qsl::fig1_dataset(1), qsl::InputError);
}

TEST_CASE("qubit traces honour their floors", "[figures]") {
  for (char scenario : {'a', 'b', 'c'}) {
    const auto trace = qsl::fig2_dataset(scenario, 500);
    REQUIRE(trace.times.size() == 500);
    CHECK_NOTHROW(qsl::check_trace(trace));
    CHECK(trace.overlap_magnitude.front() == 1.0);
    REQUIRE(trace.metadata.has_value());
  }
  const auto a = qsl::fig2_dataset('a', 500);
  CHECK_THAT(a.times.back(), WithinAbs(std::numbers::pi, 1e-15));
  CHECK(a.overlap_magnitude.back() < 1e-12);
  CHECK(a.mt_curve.back() == 0.0);

  const auto b = qsl::fig2_dataset('b', 500);
  CHECK_THAT(b.times.back(), WithinAbs(1.05 * std::numbers::pi / 0.4, 1e-12));
  CHECK(b.metadata->regime.regime == qsl::Regime::ML);
  CHECK_THROWS_AS(qsl::fig2_dataset('d'), qsl::InputError);
}

TEST_CASE("qutrit traces cover every scenario", "[figures]") {
  const qsl::Regime expected[] = {qsl::Regime::ML, qsl::Regime::MT,
                                  qsl::Regime::DUAL_ML};
  int k = 0;
  for (char scenario : {'a', 'b', 'c'}) {
    const auto trace = qsl::fig3_dataset(scenario, 400);
    CHECK_NOTHROW(qsl::check_trace(trace));
    CHECK(trace.metadata->regime.regime == expected[k++]);
    CHECK(trace.metadata->state.size() == 3);
  }
  CHECK_FALSE(qsl::fig3_dataset('b', 10).metadata->regime.crossover.has_value());
  CHECK(qsl::fig3_dataset('c', 10).metadata->regime.crossover.has_value());
}

TEST_CASE("trace CSV and JSON round-trip exactly", "[figures]") {
  const auto trace = qsl::fig3_dataset('a', 300);
  const auto back = qsl::trace_from_csv(qsl::trace_to_csv(trace));
  CHECK(back.times == trace.times);
  CHECK(back.overlap_magnitude == trace.overlap_magnitude);
  CHECK(back.ml_dual_curve == trace.ml_dual_curve);
  CHECK_FALSE(back.metadata.has_value());

  const auto doc = nlohmann::json::parse(qsl::to_json(trace).dump());
  CHECK(doc.at("mt_curve").get<std::vector<double>>() == trace.mt_curve);
  CHECK(doc.at("metadata").at("label") == "fig3a");

  CHECK(qsl::trace_to_csv(trace).rfind(
            "times,overlap_magnitude,mt_curve,ml_curve,ml_dual_curve\n", 0) == 0);
  CHECK_THROWS_AS(qsl::trace_from_csv("t,x\n1,2\n"), qsl::InputError);
}

TEST_CASE("check_trace rejects broken traces", "[figures]") {
  auto trace = qsl::fig2_dataset('b', 50);
  auto below = trace;
  below.overlap_magnitude[10] = std::max(0.0, below.mt_curve[10] - 0.01);
  below.ml_curve[10] = 1.0;
  CHECK_THROWS_AS(qsl::check_trace(below), std::logic_error);
  auto ragged = trace;
  ragged.ml_curve.pop_back();
  CHECK_THROWS_AS(qsl::check_trace(ragged), std::logic_error);
}

TEST_CASE("regime grid CSV lists every cell", "[figures]") {
  const auto csv = qsl::regime_grid_to_csv(qsl::fig1_dataset(4));
  CHECK(csv.rfind("e_axis,de_axis,cell\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}
