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

#ifndef GMBRL_SVG_PLOT_HPP_
#define GMBRL_SVG_PLOT_HPP_

#include <string>
#include <vector>

namespace gmbrl {

struct PlotSeries {
  std::string label;
  std::vector<double> mean;  // one entry per episode
  std::vector<double> band;  // half-width of the error band (3 * std)
};

// Self-contained SVG document: one regret-vs-episode curve per series with
// a +/- band around it. Output bytes depend only on the input. Throws on
// empty input or length mismatches.
std::string render_regret_plot(const std::vector<PlotSeries>& series);

// Builds the series from every `*_aggregate.csv` under `dir` (sorted by
// filename; the label is the file's agent prefix) using the regret_cum
// mean/std columns, bands at 3 standard deviations.
std::string plot_from_directory(const std::string& dir);

}  // namespace gmbrl

#endif  // GMBRL_SVG_PLOT_HPP_
