// Copyright 2026 The massdecoh Authors
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "massdecoh/chart.hpp"
#include "massdecoh/csv.hpp"
#include "massdecoh/errors.hpp"
#include "massdecoh/sweep.hpp"

namespace massdecoh {
namespace {

namespace fs = std::filesystem;

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("massdecoh_runner_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SweepPlan quick_ghz() { return parse_config("experiment=ghz sizes=2..8 shots=200 phase_points=20 seed=5"); }

TEST(sweep, GhzRowCountAndOrder) {
  const auto rows = run_sweep(quick_ghz(), 1);
  ASSERT_EQ(rows.size(), 14u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(rows[i].law, "constant");
    EXPECT_EQ(rows[i].size, static_cast<int>(i) + 2);
    EXPECT_EQ(rows[i + 7].law, "power");
    EXPECT_FALSE(rows[i].iterations.has_value());
    EXPECT_EQ(rows[i].shots, 200u);
    EXPECT_EQ(rows[i].backend, "trajectory");
  }
}

TEST(sweep, GroverRowCount) {
  const auto rows = run_sweep(parse_config("experiment=grover sizes=3,4 iterations=1..3 shots=50"), 1);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].iterations, 1);
  EXPECT_EQ(rows[2].iterations, 3);
  EXPECT_EQ(rows[3].size, 4);
}

TEST(sweep, IndependentOfWorkerCount) {
  const SweepPlan plan = quick_ghz();
  const auto serial = run_sweep(plan, 1);
  EXPECT_EQ(serial, run_sweep(plan, 3));
  EXPECT_EQ(serial, run_sweep(plan, 8));
  EXPECT_EQ(format_csv(serial), format_csv(run_sweep(plan, 2)));
}

TEST(sweep, PointSeedsIgnoreNeighbours) {
  SweepPlan small = quick_ghz();
  small.sizes = {4};
  const auto alone = run_sweep(small, 1);
  const auto all = run_sweep(quick_ghz(), 1);
  const auto match = std::find_if(all.begin(), all.end(), [&](const ResultRow& r) {
    return r.size == 4 && r.law == alone.front().law;
  });
  ASSERT_NE(match, all.end());
  EXPECT_EQ(*match, alone.front());
  EXPECT_NE(point_seed(5, "ghz", "power", 4, std::nullopt), point_seed(5, "ghz", "power", 5, std::nullopt));
  EXPECT_NE(point_seed(5, "grover", "power", 4, 1), point_seed(5, "grover", "power", 4, 2));
}

TEST(sweep, RowInvariants) {
  for (const char* text : {"experiment=ghz sizes=2..6 shots=300 law=power,constant,exp",
                           "experiment=branch sizes=0..6 shots=300 law=power,constant,exp",
                           "experiment=grover sizes=3 iterations=0..4 shots=300 law=power,constant,exp"}) {
    const SweepPlan plan = parse_config(text);
    const auto rows = run_sweep(plan, 2);
    for (const ResultRow& r : rows) {
      const auto law = std::find_if(plan.laws.begin(), plan.laws.end(), [&](const auto& l) { return l.label == r.law; });
      ASSERT_NE(law, plan.laws.end());
      EXPECT_NEAR(r.p_effective, noise_probability(law->spec, r.size), 1e-12);
      EXPECT_GE(r.metric, -0.01);
      EXPECT_LE(r.metric, 1.01);
      EXPECT_GE(r.std_error, 0.0);
    }
  }
}

TEST(sweep, MassLawGhzVanishesBeyondFour) {
  const auto rows = run_sweep(parse_config("experiment=ghz sizes=5..8 law=power seed=11"), 1);
  for (const ResultRow& r : rows) EXPECT_LE(r.metric, 0.02) << "n=" << r.size;
}

TEST(sweep, EngineErrorNamesPoint) {
  SweepPlan plan = parse_config("experiment=ghz sizes=2,11 backend=exact law=constant");
  try {
    run_sweep(plan, 1);
    FAIL() << "expected SweepError";
  } catch (const SweepError& e) {
    EXPECT_NE(std::string(e.what()).find("size=11"), std::string::npos) << e.what();
  }
}

TEST(sweep, ExactRowsReportNoShots) {
  const auto rows = run_sweep(parse_config("experiment=branch sizes=2 backend=exact law=power"), 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].shots, 0u);
  EXPECT_EQ(rows[0].std_error, 0.0);
  EXPECT_EQ(rows[0].backend, "exact");
  EXPECT_NEAR(rows[0].metric, 0.84 * 0.84, 1e-9);
}

// --- CSV ----------------------------------------------------------------------

ResultRow sample_row() {
  ResultRow r;
  r.experiment = "grover";
  r.law = "power";
  r.size = 5;
  r.iterations = 3;
  r.p_effective = 0.5;
  r.metric = 0.2051;
  r.std_error = 0.00902;
  r.shots = 2000;
  r.seed = 18446744073709551615ull;
  r.backend = "trajectory";
  return r;
}

TEST(csv, HeaderAndSingleRow) {
  const std::string text = format_csv({sample_row()});
  EXPECT_EQ(text,
            "experiment,law,size,iterations,p_effective,metric,stderr,shots,seed,backend\n"
            "grover,power,5,3,0.5,0.2051,0.00902,2000,18446744073709551615,trajectory\n");
  EXPECT_EQ(count_of(text, "\n"), 2u);
}

TEST(csv, BlankIterationsForNonGrover) {
  ResultRow r = sample_row();
  r.experiment = "ghz";
  r.iterations.reset();
  EXPECT_NE(format_csv({r}).find("ghz,power,5,,0.5"), std::string::npos);
}

TEST(csv, NineSignificantDigits) {
  ResultRow r = sample_row();
  r.metric = 1.0 / 3.0;
  EXPECT_NE(format_csv({r}).find(",0.333333333,"), std::string::npos);
}

TEST(csv, RoundTrip) {
  const fs::path dir = scratch_dir("csv");
  const auto rows = run_sweep(quick_ghz(), 1);
  write_csv(rows, dir / "a.csv");
  const auto back = read_csv(dir / "a.csv");
  ASSERT_EQ(back.size(), rows.size());
  EXPECT_EQ(format_csv(back), slurp(dir / "a.csv"));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].law, rows[i].law);
    EXPECT_EQ(back[i].seed, rows[i].seed);
    EXPECT_NEAR(back[i].metric, rows[i].metric, 1e-8 * std::max(1.0, std::abs(rows[i].metric)));
  }
  const ResultRow exact_row = sample_row();
  EXPECT_EQ(parse_csv(format_csv({exact_row})), std::vector<ResultRow>{exact_row});
}

TEST(csv, Errors) {
  EXPECT_THROW(format_csv({}), InputError);
  EXPECT_THROW(write_csv({}, scratch_dir("empty") / "x.csv"), InputError);
  try {
    write_csv({sample_row()}, "/nonexistent-dir/out.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), "/nonexistent-dir/out.csv");
  }
  EXPECT_THROW(parse_csv("bad,header\n"), InputError);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\nghz,power,x,,0,0,0,0,0,exact\n"), InputError);
}

// --- Chart --------------------------------------------------------------------

TEST(chart, GhzTwoSeries) {
  const std::string svg = render_chart_svg(run_sweep(quick_ghz(), 1));
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
  EXPECT_EQ(count_of(svg, "<polyline"), 2u);
  EXPECT_NE(svg.find("constant"), std::string::npos);
  EXPECT_NE(svg.find("power"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(chart, GroverSixSeries) {
  const auto rows = run_sweep(parse_config("experiment=grover sizes=3,4,5 iterations=1..2 shots=20"), 1);
  EXPECT_EQ(count_of(render_chart_svg(rows), "<polyline"), 6u);
}

TEST(chart, Errors) {
  EXPECT_THROW(render_chart_svg({}), InputError);
  auto rows = run_sweep(quick_ghz(), 1);
  rows.push_back(sample_row());
  EXPECT_THROW(render_chart_svg(rows), InputError);
}

TEST(chart, DeterministicFile) {
  const fs::path dir = scratch_dir("chart");
  const auto rows = run_sweep(quick_ghz(), 2);
  emit_chart(rows, dir / "a.svg");
  emit_chart(run_sweep(quick_ghz(), 1), dir / "b.svg");
  EXPECT_EQ(slurp(dir / "a.svg"), slurp(dir / "b.svg"));
}

}  // namespace
}  // namespace massdecoh
