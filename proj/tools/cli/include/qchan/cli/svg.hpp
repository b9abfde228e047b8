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

#include <string>

#include "qchan/cli/sweep.hpp"

namespace qchan::cli {

/// Heatmap of one metric column of a two-axis sweep (first axis along x),
/// with a linear color ramp and axis ticks every 0.5.
std::string render_heatmap(const SweepResult& sweep, const std::vector<GridAxis>& axes, std::size_t column,
                           const std::string& title);

}  // namespace qchan::cli
