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

#include "massdecoh/reproduce.hpp"

#include <string>

#include "massdecoh/chart.hpp"
#include "massdecoh/csv.hpp"
#include "massdecoh/errors.hpp"
#include "massdecoh/sweep.hpp"

namespace massdecoh {

std::vector<SweepPlan> standard_plans(std::uint64_t seed) {
  const std::string seed_entry = " seed=" + std::to_string(seed);
  return {
      parse_config("experiment=ghz sizes=2..8" + seed_entry),
      parse_config("experiment=branch sizes=0..12" + seed_entry),
      parse_config("experiment=grover sizes=3,4,5 iterations=1..7" + seed_entry),
  };
}

std::vector<ReproducedFigure> reproduce(const ReproduceOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) throw IoError(options.out_dir.string(), ec.message());

  const char* stems[] = {"fig2_ghz_parity", "fig3_branch_mass", "fig4_grover"};
  std::vector<ReproducedFigure> figures;
  const std::vector<SweepPlan> plans = standard_plans(options.seed);
  for (std::size_t i = 0; i < plans.size(); ++i) {
    ReproducedFigure fig{plans[i], options.out_dir / (std::string(stems[i]) + ".csv"),
                         options.out_dir / (std::string(stems[i]) + ".svg")};
    const std::vector<ResultRow> rows = run_sweep(fig.plan, options.workers);
    write_csv(rows, fig.csv);
    emit_chart(rows, fig.chart);
    figures.push_back(std::move(fig));
  }
  return figures;
}

}  // namespace massdecoh
