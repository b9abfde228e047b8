// Copyright 2026 The qchan Authors
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

#include "qchan/cli/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace qchan::cli {

namespace {

constexpr double kLeft = 70.0;
constexpr double kTop = 50.0;
constexpr double kPlot = 410.0;
constexpr double kBarX = kLeft + kPlot + 30.0;
constexpr double kBarWidth = 18.0;
constexpr double kTickSpacing = 0.5;

struct Rgb {
  double r, g, b;
};

std::string ramp(double u) {
  constexpr Rgb lo{49, 54, 149};
  constexpr Rgb hi{253, 231, 37};
  u = std::clamp(u, 0.0, 1.0);
  return fmt::format("#{:02x}{:02x}{:02x}", static_cast<int>(std::lround(lo.r + u * (hi.r - lo.r))),
                     static_cast<int>(std::lround(lo.g + u * (hi.g - lo.g))),
                     static_cast<int>(std::lround(lo.b + u * (hi.b - lo.b))));
}

std::string label(double v) { return fmt::format("{:g}", std::abs(v) < 1e-12 ? 0.0 : v); }

}  // namespace

std::string render_heatmap(const SweepResult& sweep, const std::vector<GridAxis>& axes, std::size_t column,
                           const std::string& title) {
  const auto xs = axes.at(0).values();
  const auto ys = axes.at(1).values();
  const double cw = kPlot / static_cast<double>(xs.size());
  const double ch = kPlot / static_cast<double>(ys.size());

  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (const auto& row : sweep.rows) {
    if (std::isfinite(row[column])) {
      vmin = std::min(vmin, row[column]);
      vmax = std::max(vmax, row[column]);
    }
  }
  if (!(vmin <= vmax)) vmin = vmax = 0.0;
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  const double width = kBarX + kBarWidth + 80.0;
  const double height = kTop + kPlot + 60.0;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:g}\" height=\"{:g}\" viewBox=\"0 0 {:g} {:g}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      width, height, width, height);
  out += fmt::format("<rect width=\"{:g}\" height=\"{:g}\" fill=\"white\"/>\n", width, height);
  out += fmt::format("<text x=\"{:g}\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                     kLeft + kPlot / 2.0, title);

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double v = sweep.rows[i * ys.size() + j][column];
      const std::string fill = std::isfinite(v) ? ramp((v - vmin) / span) : std::string("#bbbbbb");
      // y grows upward
      out += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n",
                         kLeft + static_cast<double>(i) * cw, kTop + kPlot - static_cast<double>(j + 1) * ch,
                         cw + 0.05, ch + 0.05, fill);
    }
  }
  out += fmt::format("<rect x=\"{:g}\" y=\"{:g}\" width=\"{:g}\" height=\"{:g}\" fill=\"none\" stroke=\"black\"/>\n",
                     kLeft, kTop, kPlot, kPlot);

  auto ticks = [](const GridAxis& axis) {
    std::vector<double> t;
    for (double v = std::ceil(axis.start / kTickSpacing - 1e-9) * kTickSpacing; v <= axis.stop + 1e-9;
         v += kTickSpacing) {
      t.push_back(v);
    }
    return t;
  };
  for (double v : ticks(axes[0])) {
    const double x = kLeft + ((v - axes[0].start) / axes[0].step + 0.5) * cw;
    out += fmt::format("<line x1=\"{0:.3f}\" y1=\"{1:g}\" x2=\"{0:.3f}\" y2=\"{2:g}\" stroke=\"black\"/>\n", x,
                       kTop + kPlot, kTop + kPlot + 5.0);
    out += fmt::format("<text x=\"{:.3f}\" y=\"{:g}\" text-anchor=\"middle\">{}</text>\n", x, kTop + kPlot + 19.0,
                       label(v));
  }
  for (double v : ticks(axes[1])) {
    const double y = kTop + kPlot - ((v - axes[1].start) / axes[1].step + 0.5) * ch;
    out += fmt::format("<line x1=\"{0:g}\" y1=\"{1:.3f}\" x2=\"{2:g}\" y2=\"{1:.3f}\" stroke=\"black\"/>\n",
                       kLeft - 5.0, y, kLeft);
    out += fmt::format("<text x=\"{:g}\" y=\"{:.3f}\" text-anchor=\"end\">{}</text>\n", kLeft - 8.0, y + 4.0,
                       label(v));
  }
  out += fmt::format("<text x=\"{:g}\" y=\"{:g}\" text-anchor=\"middle\">{}</text>\n", kLeft + kPlot / 2.0,
                     kTop + kPlot + 40.0, axes[0].name);
  out += fmt::format("<text x=\"{0:g}\" y=\"{1:g}\" text-anchor=\"middle\" transform=\"rotate(-90 {0:g} {1:g})\">{2}</text>\n",
                     kLeft - 45.0, kTop + kPlot / 2.0, axes[1].name);

  constexpr int kBarSteps = 64;
  for (int k = 0; k < kBarSteps; ++k) {
    const double h = kPlot / kBarSteps;
    out += fmt::format("<rect x=\"{:g}\" y=\"{:.3f}\" width=\"{:g}\" height=\"{:.3f}\" fill=\"{}\"/>\n", kBarX,
                       kTop + kPlot - (k + 1) * h, kBarWidth, h + 0.05, ramp((k + 0.5) / kBarSteps));
  }
  out += fmt::format("<text x=\"{:g}\" y=\"{:g}\">{}</text>\n", kBarX + kBarWidth + 5.0, kTop + 10.0,
                     format_value(vmax));
  out += fmt::format("<text x=\"{:g}\" y=\"{:g}\">{}</text>\n", kBarX + kBarWidth + 5.0, kTop + kPlot,
                     format_value(vmin));
  out += "</svg>\n";
  return out;
}

}  // namespace qchan::cli
