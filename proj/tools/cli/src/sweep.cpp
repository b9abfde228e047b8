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

#include "qchan/cli/sweep.hpp"

#include <fmt/format.h>

#include <cmath>
#include <optional>
#include <sstream>

#include "qchan/errors.hpp"
#include "qchan/metrics.hpp"
#include "qchan/optimize.hpp"

namespace qchan::cli {

namespace {

bool is_axis_name(const std::string& name) { return name == "T" || name == "r" || name == "phi" || name == "t"; }

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) {
    throw SpecError("--grid: " + what + " \"" + text + "\" is not a number");
  }
  return x;
}

void set_axis(PhysicalParams& p, const std::string& name, double value) {
  if (name == "T") p.temperature = value;
  if (name == "r") p.squeeze_r = value;
  if (name == "phi") p.squeeze_phi = value;
  if (name == "t") p.time = value;
}

}  // namespace

std::vector<double> GridAxis::values() const {
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

GridAxis parse_grid_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw SpecError("--grid: expected NAME=START:STOP:STEP, got \"" + text + "\"");
  GridAxis axis;
  axis.name = text.substr(0, eq);
  if (axis.name == "Phi") axis.name = "phi";
  if (!is_axis_name(axis.name)) throw SpecError("--grid: unknown axis \"" + axis.name + "\" (use T, r, phi or t)");
  std::vector<std::string> parts;
  std::stringstream rest(text.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw SpecError("--grid: expected START:STOP:STEP for axis " + axis.name);
  axis.start = parse_number(parts[0], "start");
  axis.stop = parse_number(parts[1], "stop");
  axis.step = parse_number(parts[2], "step");
  if (!(axis.step > 0.0)) throw SpecError("--grid: step must be > 0 for axis " + axis.name);
  if (axis.stop < axis.start) throw SpecError("--grid: stop must be >= start for axis " + axis.name);
  if ((axis.stop - axis.start) / axis.step >= static_cast<double>(kMaxGridPoints)) {
    throw SpecError("--grid: axis " + axis.name + " has too many points");
  }
  return axis;
}

const std::vector<std::string>& known_metrics() {
  static const std::vector<std::string> names{"entropy",           "concurrence",       "avg_gate_fidelity",
                                              "gate_fidelity_max", "gate_fidelity_min", "kappa",
                                              "trace_distance",    "trace_distance_z",  "rank"};
  return names;
}

const std::vector<std::string>& default_metrics() {
  static const std::vector<std::string> names{"entropy", "concurrence", "avg_gate_fidelity", "kappa",
                                              "trace_distance"};
  return names;
}

std::vector<std::string> parse_metric_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string name; std::getline(in, name, ',');) {
    if (name.empty()) continue;
    if (std::find(known_metrics().begin(), known_metrics().end(), name) == known_metrics().end()) {
      throw SpecError("--metrics: unknown metric \"" + name + "\"");
    }
    out.push_back(name);
  }
  if (out.empty()) throw SpecError("--metrics: empty metric list");
  return out;
}

double evaluate_metric(const std::string& metric, const Channel& channel, double zero_threshold) {
  if (metric == "entropy") return choi_entropy(channel.choi());
  if (metric == "concurrence") return choi_concurrence(channel.choi());
  if (metric == "avg_gate_fidelity") return average_gate_fidelity(channel.choi());
  if (metric == "gate_fidelity_max") return gate_fidelity(channel).max;
  if (metric == "gate_fidelity_min") return gate_fidelity(channel).min;
  if (metric == "kappa") return channel_fidelity_kappa(channel).kappa;
  if (metric == "trace_distance") return max_trace_distance(channel).value;
  if (metric == "trace_distance_z") return trace_distance_z(channel);
  if (metric == "rank") return channel_rank(channel.choi(), zero_threshold).rank;
  throw Error(ErrorKind::ParameterOutOfRange, "unknown metric " + metric);
}

SweepResult run_sweep(const ChannelSpec& spec, const std::vector<GridAxis>& axes,
                      const std::vector<std::string>& metrics, double zero_threshold) {
  if (axes.size() > 2) throw SpecError("--grid: at most two axes");
  if (axes.size() == 2 && axes[0].name == axes[1].name) throw SpecError("--grid: axis " + axes[0].name + " given twice");
  if (!axes.empty() && !spec.physical) {
    throw SpecError("--grid: family \"" + spec.family + "\" has no bath parameters to sweep");
  }

  std::vector<std::vector<double>> axis_values;
  std::size_t total = 1;
  for (const auto& axis : axes) {
    axis_values.push_back(axis.values());
    total *= axis_values.back().size();
  }
  if (total > kMaxGridPoints) throw SpecError("--grid: more than 10^6 grid points");

  SweepResult result;
  for (const auto& axis : axes) result.columns.push_back(axis.name);
  for (const auto& m : metrics) result.columns.push_back(m);
  result.rows.assign(total, {});
  std::vector<std::vector<std::string>> point_failures(total);

  optimize::parallel_for(total, [&](std::size_t index) {
    std::vector<double>& row = result.rows[index];
    std::size_t rem = index;
    std::vector<double> coords(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      coords[k] = axis_values[k][rem % axis_values[k].size()];
      rem /= axis_values[k].size();
    }
    row = coords;

    std::optional<Channel> channel;
    std::string build_error;
    if (spec.physical) {
      PhysicalParams p = *spec.physical;
      for (std::size_t k = 0; k < axes.size(); ++k) set_axis(p, axes[k].name, coords[k]);
      try {
        channel = physical_channel(spec.family, p);
      } catch (const std::exception& e) {
        build_error = e.what();
      }
    } else {
      channel = spec.channel;
    }

    std::string where;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      where += (k ? ", " : "") + axes[k].name + "=" + format_value(coords[k]);
    }
    for (const auto& m : metrics) {
      double value = std::nan("");
      std::string error = build_error;
      if (channel) {
        try {
          value = evaluate_metric(m, *channel, zero_threshold);
        } catch (const std::exception& e) {
          error = e.what();
        }
      }
      if (!error.empty()) {
        point_failures[index].push_back(fmt::format("row {} ({}): {}: {}", index + 1, where, m, error));
      }
      row.push_back(value);
    }
  });

  for (auto& lines : point_failures) {
    for (auto& line : lines) result.failures.push_back(std::move(line));
  }
  return result;
}

std::string format_value(double x) {
  if (std::isnan(x)) return "NaN";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  return fmt::format("{:.9g}", x);
}

std::string to_csv(const SweepResult& result) {
  std::string out;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    out += (i ? "," : "") + result.columns[i];
  }
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_value(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qchan::cli
