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
#include <string_view>
#include <vector>

#include "massdecoh/sweep.hpp"

namespace massdecoh {

inline constexpr std::string_view kCsvHeader =
    "experiment,law,size,iterations,p_effective,metric,stderr,shots,seed,backend";

// Header plus one line per row; reals use 9 significant digits ("%.9g") and
// the iterations column is blank outside Grover. Throws InputError on empty
// input.
std::string format_csv(const std::vector<ResultRow>& rows);
void write_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& destination);

std::vector<ResultRow> parse_csv(std::string_view text);
std::vector<ResultRow> read_csv(const std::filesystem::path& source);

}  // namespace massdecoh
