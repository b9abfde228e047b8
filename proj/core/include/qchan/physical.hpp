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

// Channels built from physical bath and system parameters: the squeezed
// generalized amplitude damping (SGAD) map, the generalized amplitude
// damping Kraus family, QND dephasing from discrete bath modes, and an RK4
// integrator for the underlying master equation.
//
// Units: hbar = k_B = 1.

#include <complex>
#include <optional>
#include <vector>

#include "qchan/types.hpp"

namespace qchan {

struct PhysicalParams {
  double gamma0 = 0.1;       // spontaneous emission rate
  double omega = 0.01;       // system frequency
  double temperature = 0.0;  // bath temperature T >= 0
  double squeeze_r = 0.0;    // bath squeezing magnitude r
  double squeeze_phi = 0.0;  // bath squeezing angle (radians)
  double time = 0.0;         // t >= 0
};

/// Raw parameters plus the bath quantities N_th, N, a and M.
struct DerivedParams {
  PhysicalParams raw;
  double n_thermal = 0.0;
  double n_eff = 0.0;  // N
  double a = 0.0;
  std::complex<double> m{0.0, 0.0};

  double two_n_plus_one() const { return 2.0 * n_eff + 1.0; }
  /// 2N + 1 - a = (2 N_th + 1) e^{-2r}; the decay rate of the quiet quadrature.
  double quiet_rate() const;
  /// 2N + 1 + a = (2 N_th + 1) e^{2r}.
  double loud_rate() const;
};

/// Throws NegativeTemperature for T < 0 and ParameterOutOfRange for
/// omega <= 0, gamma0 < 0 or t < 0.
DerivedParams derive_params(const PhysicalParams& raw);

/// SGAD action on the Bloch vector:
///   linear = [[A, -B, 0], [-B, G, 0], [0, 0, H]], shift = (0, 0, -Y)
/// with H = exp(-gamma0 (2N+1) t) and Y = (1 - H) / (2N + 1).
BlochAffineMap sgad_bloch_map(const DerivedParams& p);
BlochAffineMap sgad_bloch_map(const PhysicalParams& p);

/// The five scalars of the SGAD map, for closed-form consumers.
struct SgadCoefficients {
  double A, B, G, H, Y;
};
SgadCoefficients sgad_coefficients(const DerivedParams& p);
SgadCoefficients sgad_coefficients(const BlochAffineMap& map);

/// Generator of the master equation in Bloch form: dv/dt = drift * v + source.
struct BlochGenerator {
  Eigen::Matrix3d drift;
  Vec3 source;
};

/// Builds the generator by applying the dissipator (with lowering operator
/// (sx - i sy)/2 = |1><0| and squeezing terms M, M*) to the Pauli basis.
BlochGenerator master_equation_generator(const DerivedParams& p);

/// Largest admissible RK4 step: 1e-3 * min(1, 1 / (gamma0 (2N + 1 + a))).
double max_master_equation_step(const DerivedParams& p);

/// Fixed-step RK4 integration of the master equation from time 0 to
/// p.raw.time. Uses the largest admissible step when none is given; throws
/// StepSizeTooLarge when the given step exceeds it.
Vec3 integrate_master_equation(const DerivedParams& p, const Vec3& initial_bloch,
                               std::optional<double> step = std::nullopt);

/// Free parameters of the four-operator GAD family.
struct GadParams {
  double p_weight = 1.0;
  double alpha = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double phi = 0.0;
};

/// E1 = sqrt(p) [[sqrt(1-alpha), 0], [0, 1]]
/// E2 = sqrt(p) [[0, 0], [sqrt(alpha), 0]]
/// E3 = sqrt(1-p) [[sqrt(1-mu), 0], [0, sqrt(1-nu)]]
/// E4 = sqrt(1-p) [[0, sqrt(nu)], [sqrt(mu) e^{-i phi}, 0]]
/// Throws ParameterOutOfRange unless p, alpha, mu, nu lie in [0, 1].
KrausSet gad_kraus(const GadParams& g);

/// GAD parameters reproducing the unsqueezed (r = 0) SGAD channel:
/// alpha = nu = 1 - H, mu = 0, p = (N + 1) / (2N + 1).
/// Throws ParameterOutOfRange when r != 0.
GadParams gad_params_from_physical(const DerivedParams& p);

struct BathMode {
  double omega = 1.0;     // mode frequency, > 0
  double coupling = 0.0;  // g_k
  double squeeze_r = 0.0;
  double squeeze_phi = 0.0;
};

struct BathModeSet {
  std::vector<BathMode> modes;
  double beta = 1.0;  // inverse temperature; +inf for T = 0
};

struct QndDephasing {
  double gamma_t = 0.0;  // decoherence exponent gamma(t)
  double eta_t = 0.0;    // phase eta(t)
  double level_gap = 1.0;

  /// Coherence decay factor exp(-(level gap)^2 gamma(t)).
  double decay() const;
  /// Weight of the identity in the equivalent phase-flip channel, (1 + decay) / 2.
  double phase_flip_alpha() const;
};

/// gamma(t) = 1/2 sum_k (g_k / w_k)^2 coth(beta w_k / 2)
///            |(e^{i w_k t} - 1) cosh r_k + (e^{-i w_k t} - 1) sinh r_k e^{2 i Phi_k}|^2
double qnd_gamma(const BathModeSet& bath, double t);
/// eta(t) = -sum_k (g_k / w_k)^2 sin(w_k t); independent of the bath state.
double qnd_eta(const std::vector<BathMode>& modes, double t);

/// Throws EmptyModeSet for an empty bath and ParameterOutOfRange for a
/// non-positive mode frequency or t < 0.
QndDephasing qnd_dephasing(const BathModeSet& bath, double t, double level_gap);

/// Dephasing part of the QND channel in the interaction frame: transverse
/// components scale by decay(), populations are untouched.
BlochAffineMap qnd_bloch_map(const QndDephasing& q);

}  // namespace qchan
