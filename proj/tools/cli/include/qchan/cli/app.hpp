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

// The qchan command set: describe, sweep, figures, probe-convexity, kraus,
// choi, equivalence.

#include <iosfwd>
#include <string>
#include <vector>

#include "qchan/cli/sweep.hpp"

namespace qchan::cli {

enum ExitCode : int { kOk = 0, kSpecError = 2, kMetricFailure = 3, kIoError = 4 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable report printed by `describe`.
std::string describe_report(const ChannelSpec& spec, double zero_threshold);

struct FigureDefinition {
  std::string which;   // 1a, 1b, 2a, 2b
  std::string metric;  // sweep metric
  double phi = 0.0;    // squeezing angle
  std::string title;
};

const std::vector<FigureDefinition>& figure_definitions();
/// SGAD spec at gamma0 = 0.1, omega = 0.01, t = 0.5 and the figure's phi.
ChannelSpec figure_spec(const FigureDefinition& fig);
/// T = 0:2:0.05 (outer), r = 0:2:0.05.
std::vector<GridAxis> figure_axes();

}  // namespace qchan::cli
