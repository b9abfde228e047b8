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

// Deterministic derivative-free minimizers used by the fitting and
// extremization routines.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

namespace qchan::optimize {

struct Interval {
  double lo;
  double hi;
};

struct LineMinimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops when the
/// bracket is narrower than tol. Both endpoints are also probed, so a
/// monotone f returns its boundary minimum.
LineMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol);

using Objective = std::function<double(std::span<const double>)>;
/// Bounds of coordinate `i` given the current point (lets a coordinate's
/// range depend on the others, e.g. a simplex constraint).
using BoundsFn = std::function<Interval(std::size_t i, std::span<const double> x)>;

struct DescentOptions {
  /// Stop once a full sweep improves the objective by less than this.
  double convergence = 1e-10;
  /// Golden-section bracket width, relative to the coordinate's range.
  double line_tolerance = 1e-12;
  /// Half-width of the local bracket around the current coordinate,
  /// relative to the coordinate's range. 1 searches the whole range.
  double bracket = 1.0;
  std::size_t max_sweeps = 400;
};

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t sweeps = 0;
};

/// Cyclic coordinate descent with golden-section line searches. A move is
/// only accepted when it lowers the objective.
DescentResult coordinate_descent(const Objective& f, std::vector<double> x0, const BoundsFn& bounds,
                                 const DescentOptions& options = {});

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
/// Each index writes only its own output slot, so results do not depend on
/// scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
}

}  // namespace qchan::optimize
