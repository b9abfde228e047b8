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

#pragma once

// Parameter sweeps over (T, r, phi, t) and their CSV form.

#include <string>
#include <vector>

#include "qchan/cli/spec.hpp"

namespace qchan::cli {

struct GridAxis {
  std::string name;  // T, r, phi or t
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// start + i * step for every i with the value <= stop (1e-9 step slack).
  std::vector<double> values() const;
};

/// Parses NAME=START:STOP:STEP. Throws SpecError.
GridAxis parse_grid_axis(const std::string& text);

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// entropy, concurrence, avg_gate_fidelity, gate_fidelity_max,
/// gate_fidelity_min, kappa, trace_distance, trace_distance_z, rank.
const std::vector<std::string>& known_metrics();
const std::vector<std::string>& default_metrics();

/// Comma-separated metric names. Throws SpecError on unknown names.
std::vector<std::string> parse_metric_list(const std::string& text);

struct SweepResult {
  std::vector<std::string> columns;  // axes, then metrics
  std::vector<std::vector<double>> rows;
  std::vector<std::string> failures;  // one line per failed point/metric

  bool ok() const { return failures.empty(); }
};

/// Evaluates the metrics at every grid point; the first axis varies
/// slowest. Points run concurrently; row order is fixed. A failing metric
/// yields NaN and a failure line. Throws SpecError for an invalid grid.
SweepResult run_sweep(const ChannelSpec& spec, const std::vector<GridAxis>& axes,
                      const std::vector<std::string>& metrics, double zero_threshold);

/// Value of one metric for one channel. Throws qchan::Error.
double evaluate_metric(const std::string& metric, const Channel& channel, double zero_threshold);

/// Nine significant digits, NaN for NaN.
std::string format_value(double x);

/// Header plus rows, comma-separated, LF line endings.
std::string to_csv(const SweepResult& result);

}  // namespace qchan::cli
