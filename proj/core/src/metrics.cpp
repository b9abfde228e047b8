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

#include "qchan/metrics.hpp"

#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <numbers>

#include "qchan/errors.hpp"
#include "qchan/optimize.hpp"

namespace qchan {

namespace {

constexpr double kCpTolerance = 1e-9;
constexpr double kPi = std::numbers::pi;

std::array<double, 2> qubit_eigenvalues(const Mat2& m) {
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double half_gap = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double rad = std::sqrt(half_gap * half_gap + std::norm(m(0, 1)));
  return {mean + rad, mean - rad};
}

Spectrum4 checked_state_spectrum(const ChoiMatrix& choi) {
  Spectrum4 spec = eigh<4>(choi.state());
  if (spec.values(3) < -0.5 * kCpTolerance) {
    throw Error(ErrorKind::CpViolation, "Choi matrix has a negative eigenvalue");
  }
  return spec;
}

Vec3 spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace

double qubit_entropy(const Mat2& rho) {
  const auto ev = qubit_eigenvalues(rho);
  return entropy_bits(ev);
}

double choi_entropy(const ChoiMatrix& choi) {
  const Spectrum4 spec = checked_state_spectrum(choi);
  const std::array<double, 4> ev{spec.values(0), spec.values(1), spec.values(2), spec.values(3)};
  return entropy_bits(ev);
}

double choi_concurrence(const ChoiMatrix& choi) {
  // With rho = W W^dagger, the Wootters lambdas are the singular values of
  // W^T (sy (x) sy) W.
  const Spectrum4 spec = checked_state_spectrum(choi);
  Mat4 w = spec.vectors;
  for (int k = 0; k < 4; ++k) w.col(k) *= std::sqrt(std::max(0.0, spec.values(k)));
  const Mat4 tau = w.transpose() * kron(pauli::y(), pauli::y()) * w;
  const Eigen::JacobiSVD<Mat4> svd(tau);
  const Eigen::Vector4d s = svd.singularValues();
  return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

double average_gate_fidelity(const KrausSet& kraus) {
  if (!(kraus.completeness_residual <= 1e-10)) {
    throw Error(ErrorKind::IncompleteKrausSet, "Kraus set is not complete");
  }
  double overlap = 0.0;
  for (const Mat2& e : kraus.operators) overlap += std::norm(e.trace());
  return (2.0 + overlap) / 6.0;
}

double average_gate_fidelity(const ChoiMatrix& choi) {
  const Mat4& c = choi.matrix();
  const double overlap = (c(0, 0) + c(0, 3) + c(3, 0) + c(3, 3)).real();
  return (2.0 + overlap) / 6.0;
}

double state_fidelity(const Mat2& rho, const Mat2& sigma) {
  // Qubit identity: (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 = Tr(rho sigma) + 2 sqrt(det rho det sigma).
  const double overlap = (rho * sigma).trace().real();
  const double dets = std::max(0.0, rho.determinant().real()) * std::max(0.0, sigma.determinant().real());
  return std::clamp(std::sqrt(std::max(0.0, overlap + 2.0 * std::sqrt(dets))), 0.0, 1.0);
}

double trace_distance(const Mat2& rho, const Mat2& sigma) {
  const auto ev = qubit_eigenvalues(rho - sigma);
  return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]));
}

GateFidelity gate_fidelity(const Channel& channel) {
  constexpr int kGrid = 33;
  const BlochAffineMap map = channel.bloch();
  auto point = [](double radius, double theta, double phi) -> Vec3 { return radius * spherical(theta, phi); };
  auto fidelity = [&](const Vec3& v) {
    return state_fidelity(density_from_bloch(v), density_from_bloch(map.apply(v)));
  };

  GateFidelity out;
  std::array<double, 3> best_max{0.0, 0.0, 0.0};
  std::array<double, 3> best_min{0.0, 0.0, 0.0};
  out.max = -1.0;
  out.min = 2.0;
  for (int i = 0; i < kGrid; ++i) {
    const double radius = static_cast<double>(i) / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double theta = kPi * j / (kGrid - 1);
      for (int k = 0; k < kGrid; ++k) {
        const double phi = 2.0 * kPi * k / kGrid;
        const double f = fidelity(point(radius, theta, phi));
        if (f > out.max) {
          out.max = f;
          best_max = {radius, theta, phi};
        }
        if (f < out.min) {
          out.min = f;
          best_min = {radius, theta, phi};
        }
      }
    }
  }
  out.grid_points = static_cast<std::size_t>(kGrid) * kGrid * kGrid;

  // Refinement in Cartesian coordinates; each coordinate ranges over the
  // chord of the unit ball through the current point.
  const optimize::BoundsFn bounds = [](std::size_t i, std::span<const double> x) -> optimize::Interval {
    double others = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != i) others += x[k] * x[k];
    }
    const double half = std::sqrt(std::max(0.0, 1.0 - others));
    return {-half, half};
  };
  optimize::DescentOptions opts;
  opts.convergence = 1e-12;
  opts.bracket = 1.0 / 16.0;
  auto refine = [&](std::array<double, 3> start, double sign) {
    const Vec3 v0 = point(start[0], start[1], start[2]);
    const optimize::Objective f = [&](std::span<const double> x) {
      const Vec3 v(x[0], x[1], x[2]);
      return sign * fidelity(v.norm() > 1.0 ? Vec3(v.normalized()) : v);
    };
    return optimize::coordinate_descent(f, {v0(0), v0(1), v0(2)}, bounds, opts);
  };
  const auto hi = refine(best_max, -1.0);
  const auto lo = refine(best_min, 1.0);
  out.max = -hi.value;
  out.min = lo.value;
  out.argmax = Vec3(hi.x[0], hi.x[1], hi.x[2]);
  out.argmin = Vec3(lo.x[0], lo.x[1], lo.x[2]);
  out.refinement_sweeps = hi.sweeps + lo.sweeps;
  return out;
}

double holevo_chi(const Vec3& direction, const Channel& channel) {
  const Vec3 n = direction.normalized();
  const Mat2 out_plus = channel.apply(density_from_bloch(n));
  const Mat2 out_minus = channel.apply(density_from_bloch(-n));
  const double mixed = qubit_entropy(0.5 * (out_plus + out_minus));
  return std::max(0.0, mixed - 0.5 * qubit_entropy(out_plus) - 0.5 * qubit_entropy(out_minus));
}

ChannelFidelity channel_fidelity_kappa(const Channel& channel) {
  constexpr int kTheta = 64;
  constexpr int kPhi = 32;
  auto chi = [&](double theta, double phi) { return holevo_chi(spherical(theta, phi), channel); };

  ChannelFidelity out;
  out.kappa = -1.0;
  std::array<double, 2> best{0.0, 0.0};
  // +n and -n give the same pair, so phi in [0, pi) covers every basis.
  for (int i = 0; i < kTheta; ++i) {
    const double theta = kPi * i / (kTheta - 1);
    for (int j = 0; j < kPhi; ++j) {
      const double phi = kPi * j / kPhi;
      const double value = chi(theta, phi);
      if (value > out.kappa) {
        out.kappa = value;
        best = {theta, phi};
      }
    }
  }
  out.grid_points = static_cast<std::size_t>(kTheta) * kPhi;

  const optimize::BoundsFn bounds = [](std::size_t i, std::span<const double>) -> optimize::Interval {
    if (i == 0) return {0.0, kPi};
    return {-kPi, 2.0 * kPi};
  };
  optimize::DescentOptions opts;
  opts.convergence = 1e-12;
  opts.bracket = 0.04;
  const optimize::Objective f = [&](std::span<const double> x) { return -chi(x[0], x[1]); };
  const auto res = optimize::coordinate_descent(f, {best[0], best[1]}, bounds, opts);
  out.kappa = std::min(1.0, -res.value);
  out.direction = spherical(res.x[0], res.x[1]);
  out.refinement_sweeps = res.sweeps;
  return out;
}

TraceDistanceProbe max_trace_distance(const Channel& channel) {
  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(channel.bloch().linear, Eigen::ComputeFullV);
  TraceDistanceProbe out;
  out.value = std::min(1.0, svd.singularValues()(0));
  out.direction = svd.matrixV().col(0);
  return out;
}

double trace_distance_z(const Channel& channel) {
  const Vec3 z = Vec3::UnitZ();
  return trace_distance(channel.apply(density_from_bloch(z)), channel.apply(density_from_bloch(-z)));
}

MetricReport metric_report(const Channel& channel) {
  const ChoiMatrix choi = channel.choi();
  MetricReport report;
  report.entropy_bits = choi_entropy(choi);
  report.concurrence = choi_concurrence(choi);
  report.avg_gate_fidelity = average_gate_fidelity(canonical_kraus(choi));
  report.gate_fidelity = gate_fidelity(channel);
  report.channel_fidelity = channel_fidelity_kappa(channel);
  report.trace_distance = max_trace_distance(channel);
  return report;
}

}  // namespace qchan
