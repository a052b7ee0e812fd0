// Copyright 2026 The greedy-mbrl Authors. All rights reserved.
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

#include "gmbrl/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "gmbrl/csv.hpp"
#include "gmbrl/experiment.hpp"

namespace gmbrl {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 935.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 550.0;
constexpr int kTicks = 5;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2"};
constexpr int kPaletteSize = 7;

std::string coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

std::string render_regret_plot(const std::vector<PlotSeries>& series) {
  if (series.empty()) throw std::invalid_argument("plot: no series");
  std::size_t episodes = 0;
  for (const PlotSeries& s : series) {
    if (s.mean.empty()) throw std::invalid_argument("plot: empty series '" + s.label + "'");
    if (s.mean.size() != s.band.size()) {
      throw std::invalid_argument("plot: mean/band length mismatch in '" + s.label + "'");
    }
    episodes = std::max(episodes, s.mean.size());
  }

  double y_max = 0.0;
  for (const PlotSeries& s : series) {
    for (std::size_t k = 0; k < s.mean.size(); ++k) {
      y_max = std::max(y_max, s.mean[k] + s.band[k]);
    }
  }
  if (y_max <= 0.0) y_max = 1.0;

  const double x_max = static_cast<double>(episodes);
  const auto x_of = [&](double episode) {
    return kLeft + (kRight - kLeft) * (episode - 1.0) / std::max(x_max - 1.0, 1.0);
  };
  const auto y_of = [&](double value) {
    return kBottom - (kBottom - kTop) * value / y_max;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(kWidth) + "\" height=\"" +
         coord(kHeight) + "\" viewBox=\"0 0 " + coord(kWidth) + " " + coord(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(kRight) +
         "\" y2=\"" + coord(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(kLeft) +
         "\" y2=\"" + coord(kTop) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double episode = 1.0 + (x_max - 1.0) * i / kTicks;
    const double x = x_of(episode);
    svg += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(x) +
           "\" y2=\"" + coord(kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + coord(x) + "\" y=\"" + coord(kBottom + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(episode) + "</text>\n";
    const double value = y_max * i / kTicks;
    const double y = y_of(value);
    svg += "<line x1=\"" + coord(kLeft - 5) + "\" y1=\"" + coord(y) + "\" x2=\"" + coord(kLeft) +
           "\" y2=\"" + coord(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + coord(kLeft - 10) + "\" y=\"" + coord(y + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" + tick_label(value) + "</text>\n";
  }
  svg += "<text x=\"" + coord((kLeft + kRight) / 2) + "\" y=\"" + coord(kHeight - 10) +
         "\" font-size=\"14\" text-anchor=\"middle\">episode</text>\n";
  svg += "<text x=\"18\" y=\"" + coord((kTop + kBottom) / 2) +
         "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         coord((kTop + kBottom) / 2) + ")\">cumulative regret</text>\n";

  // bands first so the curves draw on top
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    const char* color = kPalette[i % kPaletteSize];
    std::string path = "M";
    for (std::size_t k = 0; k < s.mean.size(); ++k) {
      path += " " + coord(x_of(static_cast<double>(k + 1))) + " " +
              coord(y_of(std::max(s.mean[k] - s.band[k], 0.0)));
    }
    for (std::size_t k = s.mean.size(); k-- > 0;) {
      path += " " + coord(x_of(static_cast<double>(k + 1))) + " " +
              coord(y_of(s.mean[k] + s.band[k]));
    }
    path += " Z";
    svg += "<path d=\"" + path + "\" fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    const char* color = kPalette[i % kPaletteSize];
    std::string points;
    for (std::size_t k = 0; k < s.mean.size(); ++k) {
      if (k > 0) points += " ";
      points += coord(x_of(static_cast<double>(k + 1))) + "," + coord(y_of(s.mean[k]));
    }
    svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
  }

  // legend
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    const double y = kTop + 16.0 + 18.0 * static_cast<double>(i);
    svg += "<line x1=\"" + coord(kLeft + 12) + "\" y1=\"" + coord(y - 4) + "\" x2=\"" +
           coord(kLeft + 40) + "\" y2=\"" + coord(y - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + coord(kLeft + 46) + "\" y=\"" + coord(y) + "\" font-size=\"13\">" +
           series[i].label + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::string plot_from_directory(const std::string& dir) {
  const std::vector<std::string> aggregates = find_aggregates(dir);
  if (aggregates.empty()) {
    throw std::invalid_argument("plot: no *_aggregate.csv files under " + dir);
  }

  std::vector<PlotSeries> series;
  for (const std::string& path : aggregates) {
    const CsvTable table = read_csv(path);
    const int mean_column = table.column("regret_cum_mean");
    const int std_column = table.column("regret_cum_std");
    PlotSeries s;
    std::string name = std::filesystem::path(path).filename().string();
    name.resize(name.size() - std::string("_aggregate.csv").size());
    s.label = name;
    for (const auto& row : table.rows) {
      s.mean.push_back(row[mean_column]);
      s.band.push_back(3.0 * row[std_column]);
    }
    series.push_back(std::move(s));
  }
  return render_regret_plot(series);
}

}  // namespace gmbrl
