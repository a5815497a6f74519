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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "massdecoh/sweep.hpp"

namespace massdecoh {

// Static SVG line chart of one experiment's rows: one series per law (per
// law and size for Grover, plotted against iterations), error bars of
// +-2 stderr, mass-dependent laws dashed. Throws InputError on empty input
// or rows from more than one experiment.
std::string render_chart_svg(const std::vector<ResultRow>& rows);
void emit_chart(const std::vector<ResultRow>& rows, const std::filesystem::path& destination);

}  // namespace massdecoh
