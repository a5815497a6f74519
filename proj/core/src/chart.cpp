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

#include "massdecoh/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 190.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr double kYMax = 1.05;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Series {
  std::string label;
  bool dashed = false;
  std::vector<const ResultRow*> points;
};

std::string title_for(const std::string& experiment) {
  if (experiment == "ghz") return "GHZ parity visibility vs qubit count";
  if (experiment == "branch") return "Branch interference visibility vs branch mass";
  if (experiment == "grover") return "Grover success probability vs iterations";
  return experiment;
}

std::string x_label_for(const std::string& experiment) {
  if (experiment == "ghz") return "qubits n";
  if (experiment == "branch") return "branch mass m";
  return "Grover iterations t";
}

std::string y_label_for(const std::string& experiment) {
  return experiment == "grover" ? "success probability" : "visibility";
}

}  // namespace

std::string render_chart_svg(const std::vector<ResultRow>& rows) {
  if (rows.empty()) throw InputError("no rows to chart");
  const std::string experiment = rows.front().experiment;
  for (const ResultRow& r : rows) {
    if (r.experiment != experiment) throw InputError("chart rows mix experiments '" + experiment + "' and '" + r.experiment + "'");
  }
  const bool grover = experiment == "grover";
  auto x_of = [grover](const ResultRow& r) { return static_cast<double>(grover ? r.iterations.value_or(0) : r.size); };

  // Series keyed by (law, size) for Grover, law otherwise; map order keeps
  // the output independent of row order.
  std::map<std::pair<std::string, int>, Series> by_key;
  for (const ResultRow& r : rows) {
    const auto key = std::make_pair(r.law, grover ? r.size : 0);
    Series& s = by_key[key];
    if (s.points.empty()) {
      s.label = grover ? r.law + " n=" + std::to_string(r.size) : r.law;
      s.dashed = r.law == "power" || r.law == "exp";
    }
    s.points.push_back(&r);
  }
  std::vector<Series> series;
  if (grover) {
    // Group colours by size: for each n, constant first then mass laws.
    std::map<std::pair<int, std::string>, Series> regroup;
    for (auto& [key, s] : by_key) regroup[{key.second, key.first}] = std::move(s);
    for (auto& [key, s] : regroup) series.push_back(std::move(s));
  } else {
    for (auto& [key, s] : by_key) series.push_back(std::move(s));
  }
  for (Series& s : series) {
    std::sort(s.points.begin(), s.points.end(),
              [&](const ResultRow* a, const ResultRow* b) { return x_of(*a) < x_of(*b); });
  }

  double x_min = x_of(rows.front());
  double x_max = x_min;
  for (const ResultRow& r : rows) {
    x_min = std::min(x_min, x_of(r));
    x_max = std::max(x_max, x_of(r));
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - std::clamp(y, 0.0, kYMax) / kYMax) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" +
         title_for(experiment) + "</text>\n";

  // Axes, grid and ticks.
  svg += "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double y = py(0.2 * i);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" + num(y) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = 0.2 * i;
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(v) + 4) + "\" text-anchor=\"end\">" + num(v).substr(0, 3) +
           "</text>\n";
  }
  const int first_tick = static_cast<int>(std::ceil(x_min));
  const int last_tick = static_cast<int>(std::floor(x_max));
  for (int x = first_tick; x <= last_tick; ++x) {
    svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(px(x)) + "\" y2=\"" +
           num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kTop + plot_h + 20) + "\" text-anchor=\"middle\">" +
           std::to_string(x) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">" +
         x_label_for(experiment) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(kTop + plot_h / 2) + ")\">" + y_label_for(experiment) + "</text>\n";

  // Data.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const std::string colour = kPalette[i % std::size(kPalette)];
    const std::string dash = s.dashed ? " stroke-dasharray=\"6,4\"" : "";
    svg += "<g stroke=\"" + colour + "\" fill=\"" + colour + "\">\n";
    std::string path;
    for (const ResultRow* r : s.points) path += (path.empty() ? "" : " ") + num(px(x_of(*r))) + "," + num(py(r->metric));
    svg += "<polyline fill=\"none\" stroke-width=\"2\"" + dash + " points=\"" + path + "\"/>\n";
    for (const ResultRow* r : s.points) {
      const double x = px(x_of(*r));
      if (r->std_error > 0.0) {
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(py(r->metric - 2 * r->std_error)) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(py(r->metric + 2 * r->std_error)) + "\" stroke-width=\"1\"/>\n";
      }
      svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(py(r->metric)) + "\" r=\"3\"/>\n";
    }
    svg += "</g>\n";

    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 15;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 30) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + colour + "\" stroke-width=\"2\"" + dash + "/>\n";
    svg += "<text x=\"" + num(lx + 38) + "\" y=\"" + num(ly + 4) + "\">" + s.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_chart(const std::vector<ResultRow>& rows, const std::filesystem::path& destination) {
  const std::string svg = render_chart_svg(rows);
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(destination.string(), "cannot open for writing");
  out << svg;
  out.flush();
  if (!out) throw IoError(destination.string(), "write failed");
}

}  // namespace massdecoh
