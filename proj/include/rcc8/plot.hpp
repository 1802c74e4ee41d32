// Copyright 2026 The rcc8 Authors
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

#ifndef RCC8_PLOT_HPP_
#define RCC8_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace rcc8 {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
};

// Standalone SVG line chart, one polyline per series.
std::string line_chart_svg(const ChartSpec& spec,
                           const std::vector<Series>& series);

}  // namespace rcc8

#endif  // RCC8_PLOT_HPP_
