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

#include <cstddef>

#include "qchan/choi.hpp"

namespace qchan {

/// Von Neumann entropy (bits) of the trace-one Choi state C / 2.
/// Throws CpViolation for a Choi matrix that is not PSD.
double choi_entropy(const ChoiMatrix& choi);

/// Wootters concurrence of C / 2. Throws CpViolation.
double choi_concurrence(const ChoiMatrix& choi);

/// (2 + sum_i |Tr E_i|^2) / 6. Throws IncompleteKrausSet.
double average_gate_fidelity(const KrausSet& kraus);
/// Same quantity from the Choi matrix: sum_i |Tr E_i|^2 = <psi~|C|psi~>.
double average_gate_fidelity(const ChoiMatrix& choi);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)) for qubit density matrices.
double state_fidelity(const Mat2& rho, const Mat2& sigma);

/// 1/2 ||rho - sigma||_1.
double trace_distance(const Mat2& rho, const Mat2& sigma);

/// Von Neumann entropy (bits) of a qubit density matrix.
double qubit_entropy(const Mat2& rho);

struct GateFidelity {
  double max = 1.0;
  double min = 1.0;
  Vec3 argmax = Vec3::Zero();  // Bloch vectors of the extremal inputs
  Vec3 argmin = Vec3::Zero();
  /// Always set: every qubit channel has a fixed state, so max is 1.
  bool max_degenerate = true;
  std::size_t grid_points = 0;
  std::size_t refinement_sweeps = 0;
};

/// Extremes of F(rho, E(rho)) over the Bloch ball: 33^3 grid in
/// (radius, theta, phi), then coordinate refinement.
GateFidelity gate_fidelity(const Channel& channel);

/// Holevo quantity (bits) of the equiprobable pair of pure states with
/// Bloch vectors +n and -n sent through the channel.
double holevo_chi(const Vec3& direction, const Channel& channel);

struct ChannelFidelity {
  double kappa = 0.0;
  Vec3 direction = Vec3::UnitZ();
  std::size_t grid_points = 0;
  std::size_t refinement_sweeps = 0;
};

/// kappa = max_n holevo_chi(n): 64 x 32 (theta, phi) grid, then
/// coordinate refinement.
ChannelFidelity channel_fidelity_kappa(const Channel& channel);

struct TraceDistanceProbe {
  double value = 0.0;
  Vec3 direction = Vec3::UnitZ();
};

/// max_n D(E(rho_n), E(rho_-n)) over pure-state pairs, which equals the
/// largest singular value of the Bloch map's linear part.
TraceDistanceProbe max_trace_distance(const Channel& channel);

/// D(E(|0><0|), E(|1><1|)).
double trace_distance_z(const Channel& channel);

struct MetricReport {
  double entropy_bits = 0.0;
  double concurrence = 0.0;
  double avg_gate_fidelity = 0.0;
  GateFidelity gate_fidelity;
  ChannelFidelity channel_fidelity;
  TraceDistanceProbe trace_distance;
};

MetricReport metric_report(const Channel& channel);

}  // namespace qchan
