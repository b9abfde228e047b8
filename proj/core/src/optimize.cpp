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

#include "qchan/optimize.hpp"

#include <cmath>
#include <limits>

namespace qchan::optimize {

LineMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  LineMinimum best{lo, f(lo)};
  const double f_hi = f(hi);
  if (f_hi < best.value) best = {hi, f_hi};
  if (!(hi > lo)) return best;

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

DescentResult coordinate_descent(const Objective& f, std::vector<double> x0, const BoundsFn& bounds,
                                 const DescentOptions& options) {
  DescentResult result;
  result.x = std::move(x0);
  result.value = f(result.x);
  std::vector<double> probe = result.x;

  for (result.sweeps = 0; result.sweeps < options.max_sweeps;) {
    const double start = result.value;
    ++result.sweeps;
    for (std::size_t i = 0; i < result.x.size(); ++i) {
      const Interval range = bounds(i, result.x);
      const double width = range.hi - range.lo;
      if (!(width > 0.0)) continue;
      const double half = options.bracket * width;
      const double lo = std::max(range.lo, result.x[i] - half);
      const double hi = std::min(range.hi, result.x[i] + half);
      probe = result.x;
      const auto line = golden_section(
          [&](double xi) {
            probe[i] = xi;
            return f(probe);
          },
          lo, hi, options.line_tolerance * width);
      if (line.value < result.value) {
        result.x[i] = line.x;
        result.value = line.value;
      }
    }
    if (start - result.value < options.convergence) break;
  }
  return result;
}

}  // namespace qchan::optimize
