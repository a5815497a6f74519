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

#include "massdecoh/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

template <class T>
T parse_field(std::string_view field, std::size_t line, const char* column) {
  T value{};
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("CSV line " + std::to_string(line) + ": bad " + column + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_csv(const std::vector<ResultRow>& rows) {
  if (rows.empty()) throw InputError("refusing to write an empty result set");
  std::string out(kCsvHeader);
  out += '\n';
  for (const ResultRow& r : rows) {
    out += r.experiment + ',' + r.law + ',' + std::to_string(r.size) + ',';
    if (r.iterations) out += std::to_string(*r.iterations);
    out += ',' + format_real(r.p_effective) + ',' + format_real(r.metric) + ',' + format_real(r.std_error) + ',' +
           std::to_string(r.shots) + ',' + std::to_string(r.seed) + ',' + r.backend + '\n';
  }
  return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& destination) {
  const std::string text = format_csv(rows);
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(destination.string(), "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(destination.string(), "write failed");
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kCsvHeader) throw InputError("CSV header mismatch");
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 10) throw InputError("CSV line " + std::to_string(line_no) + ": expected 10 fields");

    ResultRow r;
    r.experiment = std::string(f[0]);
    r.law = std::string(f[1]);
    r.size = parse_field<int>(f[2], line_no, "size");
    if (!f[3].empty()) r.iterations = parse_field<int>(f[3], line_no, "iterations");
    r.p_effective = parse_field<double>(f[4], line_no, "p_effective");
    r.metric = parse_field<double>(f[5], line_no, "metric");
    r.std_error = parse_field<double>(f[6], line_no, "stderr");
    r.shots = parse_field<std::uint64_t>(f[7], line_no, "shots");
    r.seed = parse_field<std::uint64_t>(f[8], line_no, "seed");
    r.backend = std::string(f[9]);
    rows.push_back(std::move(r));
  }
  if (line_no == 0) throw InputError("empty CSV");
  return rows;
}

std::vector<ResultRow> read_csv(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError(source.string(), "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace massdecoh
