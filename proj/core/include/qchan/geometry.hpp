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

// Geometry of single-qubit channels through their Choi states: signatures of
// Pauli-diagonal states, the Pauli 3-simplex and its phase-flip,
// phase-damping and depolarizing sub-simplices, twirling, and a numerical
// convexity probe for channel families.

#include <array>
#include <cstdint>
#include <vector>

#include "qchan/choi.hpp"

namespace qchan {

/// rho = 1/4 (I(x)I + sum_j r_j s_j(x)I + s_j I(x)s_j + sum_jk t_jk s_j(x)s_k).
struct TwoQubitState {
  Vec3 r = Vec3::Zero();
  Vec3 s = Vec3::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();

  /// Coefficients of rho / Tr(rho).
  static TwoQubitState from_matrix(const Mat4& rho);
  static TwoQubitState from_choi(const ChoiMatrix& choi) { return from_matrix(choi.matrix()); }
  Mat4 matrix() const;
};

/// Diagonal correlations (t_xx, t_yy, t_zz). `valid` is set iff every other
/// coefficient vanishes within 1e-10, i.e. the state is Pauli-diagonal.
struct Signature {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool valid = true;
};

Signature signature(const TwoQubitState& state);
Signature signature(const ChoiMatrix& choi);

/// Choi matrix (trace 2) of the Pauli-diagonal state with this signature.
/// Throws InvalidSignature for invalid signatures.
ChoiMatrix choi_from_signature(const Signature& sig);

/// Weights of I, X, Y, Z. `member` is set iff all weights are >= -1e-12.
struct PauliWeights {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  bool member = true;

  double sum() const { return alpha + beta + gamma + delta; }
};

/// Unique weights with alpha I + beta X + gamma Y + delta Z = signature.
/// Throws InvalidSignature.
PauliWeights pauli_decompose(const Signature& sig);

/// (alpha + beta - gamma - delta, -alpha + beta - gamma + delta, alpha - beta - gamma + delta).
Signature pauli_signature(const PauliWeights& w);

/// {sqrt(alpha) I, sqrt(beta) X, sqrt(gamma) Y, sqrt(delta) Z}, zero weights
/// omitted. Throws ParameterOutOfRange outside the simplex.
KrausSet pauli_kraus(const PauliWeights& w);

enum class PauliVertex { I, X, Y, Z };

/// Trace-one Choi state of the unitary channel rho -> P rho P.
Mat4 vertex_state(PauliVertex v);

/// Phase flip {sqrt(alpha) I, sqrt(1 - alpha) Z}: (2 alpha - 1, -(2 alpha - 1), 1).
Signature phase_flip_point(double alpha);
/// Phase damping {sqrt(beta) I, sqrt(1 - beta) P0, sqrt(1 - beta) P1}: (beta, -beta, 1).
Signature phase_damping_point(double beta);
/// Depolarizing rho -> p rho + (1 - p) I / 2: (p, -p, p).
Signature depolarizing_point(double p);

/// {sqrt(beta) I, sqrt(1 - beta) P0, sqrt(1 - beta) P1}. Throws ParameterOutOfRange.
KrausSet phase_damping_kraus(double beta);
/// Pauli weights ((1 + 3p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4).
KrausSet depolarizing_kraus(double p);

/// 1 - (a^2 + b^2 + c^2) / 3, i.e. (4/3)(1 - Tr rho^2). Throws InvalidSignature.
double mixedness(const Signature& sig);

/// <phi+|rho|phi+> for rho / Tr(rho), phi+ = (|00> + |11>) / sqrt 2.
double fully_entangled_fraction(const Mat4& rho);

/// Exact U (x) U* twirl: the Werner signature (w, -w, w) with
/// w = (4F - 1) / 3, F the fully entangled fraction (which the twirl keeps).
Signature twirl_exact(const TwoQubitState& state);

struct MonteCarloTwirl {
  Signature mean;
  Vec3 standard_error = Vec3::Zero();
  std::size_t samples = 0;
};

/// Sample average of (U (x) U*) rho (U (x) U*)^dagger over Haar-random U.
MonteCarloTwirl twirl_monte_carlo(const Mat4& rho, std::size_t samples, RandomSource& rng);

struct ProbeOptions {
  double omega = 0.01;  // frequency held fixed while fitting SGAD parameters
  std::size_t starts = 32;
  double convergence = 1e-10;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Best SGAD fit; gamma0_t is the product gamma0 * t (the map depends on
/// them only through it).
struct SgadFit {
  double gamma0_t = 0.0;
  double temperature = 0.0;
  double squeeze_r = 0.0;
  double squeeze_phi = 0.0;
};

struct SgadProbeResult {
  double residual = 0.0;
  SgadFit best_fit;
  std::size_t best_start = 0;
};

struct PauliProbeResult {
  double residual = 0.0;
  PauliWeights best_fit;
  std::size_t best_start = 0;
};

/// Parameter box searched by the SGAD fit.
struct SgadFitBounds {
  static constexpr double gamma0_t_min = 1e-12;
  static constexpr double gamma0_t_max = 10.0;
  static constexpr double temperature_max = 5.0;
  static constexpr double squeeze_r_max = 3.0;
};

/// Choi matrix of the SGAD channel with the given fit parameters.
Mat4 sgad_choi_matrix(const SgadFit& fit, double omega);

/// Inverts the SGAD Choi layout for (gamma0 t, T, r, Phi), exactly for
/// SGAD inputs and approximately otherwise; clamped into SgadFitBounds.
SgadFit estimate_sgad_parameters(const ChoiMatrix& choi, double omega);

/// min over SGAD parameters of ||lambda c1 + (1 - lambda) c2 - C(params)||_F,
/// by multi-start coordinate descent. Start 0 is the analytic inversion of
/// the mixture, the rest are seeded uniform draws in the parameter box. A
/// residual well above zero means the mixture is not an SGAD channel.
SgadProbeResult sgad_convexity_probe(const ChoiMatrix& c1, const ChoiMatrix& c2, double lambda,
                                     const ProbeOptions& options = {});

/// Same probe over the Pauli simplex.
PauliProbeResult pauli_convexity_probe(const ChoiMatrix& c1, const ChoiMatrix& c2, double lambda,
                                       const ProbeOptions& options = {});

}  // namespace qchan
