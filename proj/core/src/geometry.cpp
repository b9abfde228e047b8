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

#include "qchan/geometry.hpp"

#include <cmath>
#include <numbers>

#include "qchan/errors.hpp"
#include "qchan/optimize.hpp"

namespace qchan {

namespace {

constexpr double kSignatureTolerance = 1e-10;

Vec4 bell_phi_plus() { return Vec4(1.0, 0.0, 0.0, 1.0) / std::sqrt(2.0); }

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, std::string(name) + " must lie in [0, 1]");
  }
}

void require_valid(const Signature& sig) {
  if (!sig.valid) throw Error(ErrorKind::InvalidSignature, "state is not Pauli-diagonal");
}

}  // namespace

TwoQubitState TwoQubitState::from_matrix(const Mat4& rho) {
  const Mat4 unit = rho / rho.trace().real();
  const Mat2 id = pauli::identity();
  TwoQubitState st;
  for (int j = 0; j < 3; ++j) {
    st.r(j) = (unit * kron(pauli::sigma(j), id)).trace().real();
    st.s(j) = (unit * kron(id, pauli::sigma(j))).trace().real();
    for (int k = 0; k < 3; ++k) st.t(j, k) = (unit * kron(pauli::sigma(j), pauli::sigma(k))).trace().real();
  }
  return st;
}

Mat4 TwoQubitState::matrix() const {
  const Mat2 id = pauli::identity();
  Mat4 m = kron(id, id);
  for (int j = 0; j < 3; ++j) {
    m += r(j) * kron(pauli::sigma(j), id) + s(j) * kron(id, pauli::sigma(j));
    for (int k = 0; k < 3; ++k) m += t(j, k) * kron(pauli::sigma(j), pauli::sigma(k));
  }
  return 0.25 * m;
}

Signature signature(const TwoQubitState& state) {
  Signature sig{state.t(0, 0), state.t(1, 1), state.t(2, 2), true};
  double stray = std::max(state.r.cwiseAbs().maxCoeff(), state.s.cwiseAbs().maxCoeff());
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (j != k) stray = std::max(stray, std::abs(state.t(j, k)));
    }
  }
  sig.valid = stray <= kSignatureTolerance;
  return sig;
}

Signature signature(const ChoiMatrix& choi) { return signature(TwoQubitState::from_choi(choi)); }

ChoiMatrix choi_from_signature(const Signature& sig) {
  require_valid(sig);
  TwoQubitState st;
  st.t.diagonal() << sig.a, sig.b, sig.c;
  return ChoiMatrix(2.0 * st.matrix());
}

PauliWeights pauli_decompose(const Signature& sig) {
  require_valid(sig);
  // Rows: normalization, then the a, b, c components of alpha I + beta X + gamma Y + delta Z.
  Eigen::Matrix4d system;
  system << 1, 1, 1, 1,   //
      1, 1, -1, -1,       //
      -1, 1, -1, 1,       //
      1, -1, -1, 1;
  const Eigen::Vector4d w = system.partialPivLu().solve(Eigen::Vector4d(1.0, sig.a, sig.b, sig.c));
  PauliWeights out{w(0), w(1), w(2), w(3), true};
  out.member = w.minCoeff() >= -1e-12;
  return out;
}

Signature pauli_signature(const PauliWeights& w) {
  return {w.alpha + w.beta - w.gamma - w.delta, -w.alpha + w.beta - w.gamma + w.delta,
          w.alpha - w.beta - w.gamma + w.delta, true};
}

KrausSet pauli_kraus(const PauliWeights& w) {
  const std::array<double, 4> weights{w.alpha, w.beta, w.gamma, w.delta};
  std::vector<Mat2> ops;
  for (int i = 0; i < 4; ++i) {
    if (weights[i] < -1e-12) throw Error(ErrorKind::ParameterOutOfRange, "Pauli weights must be >= 0");
    if (weights[i] <= 0.0) continue;
    ops.push_back(std::sqrt(weights[i]) * (i == 0 ? pauli::identity() : pauli::sigma(i - 1)));
  }
  return KrausSet::from_operators(std::move(ops));
}

Mat4 vertex_state(PauliVertex v) {
  const Mat2 p = v == PauliVertex::I ? pauli::identity() : pauli::sigma(static_cast<int>(v) - 1);
  const Vec4 psi = kron(pauli::identity(), p) * bell_phi_plus();
  return psi * psi.adjoint();
}

Signature phase_flip_point(double alpha) {
  require_unit_interval(alpha, "alpha");
  const double w = 2.0 * alpha - 1.0;
  return {w, -w, 1.0, true};
}

Signature phase_damping_point(double beta) {
  require_unit_interval(beta, "beta");
  return {beta, -beta, 1.0, true};
}

Signature depolarizing_point(double p) {
  require_unit_interval(p, "p");
  return {p, -p, p, true};
}

KrausSet phase_damping_kraus(double beta) {
  require_unit_interval(beta, "beta");
  const double keep = std::sqrt(1.0 - beta);
  std::vector<Mat2> ops;
  if (beta > 0.0) ops.push_back(std::sqrt(beta) * pauli::identity());
  if (keep > 0.0) {
    Mat2 p0 = Mat2::Zero();
    Mat2 p1 = Mat2::Zero();
    p0(0, 0) = keep;
    p1(1, 1) = keep;
    ops.push_back(p0);
    ops.push_back(p1);
  }
  return KrausSet::from_operators(std::move(ops));
}

KrausSet depolarizing_kraus(double p) {
  require_unit_interval(p, "p");
  const double off = 0.25 * (1.0 - p);
  return pauli_kraus({0.25 * (1.0 + 3.0 * p), off, off, off, true});
}

double mixedness(const Signature& sig) {
  require_valid(sig);
  return 1.0 - (sig.a * sig.a + sig.b * sig.b + sig.c * sig.c) / 3.0;
}

double fully_entangled_fraction(const Mat4& rho) {
  const Vec4 phi = bell_phi_plus();
  return (phi.adjoint() * rho * phi)(0).real() / rho.trace().real();
}

Signature twirl_exact(const TwoQubitState& state) {
  const double w = (4.0 * fully_entangled_fraction(state.matrix()) - 1.0) / 3.0;
  return {w, -w, w, true};
}

MonteCarloTwirl twirl_monte_carlo(const Mat4& rho, std::size_t samples, RandomSource& rng) {
  const Mat4 unit = rho / rho.trace().real();
  std::array<Mat4, 3> corr;
  for (int j = 0; j < 3; ++j) corr[j] = kron(pauli::sigma(j), pauli::sigma(j));
  Vec3 sum = Vec3::Zero();
  Vec3 sum_sq = Vec3::Zero();
  for (std::size_t n = 0; n < samples; ++n) {
    const Mat2 u = haar_random_unitary<2>(rng);
    const Mat4 w = kron(u, u.conjugate());
    const Mat4 out = w * unit * w.adjoint();
    for (int j = 0; j < 3; ++j) {
      const double x = (out * corr[j]).trace().real();
      sum(j) += x;
      sum_sq(j) += x * x;
    }
  }
  const double n = static_cast<double>(samples);
  MonteCarloTwirl out;
  out.samples = samples;
  const Vec3 mean = sum / n;
  out.mean = {mean(0), mean(1), mean(2), true};
  for (int j = 0; j < 3; ++j) {
    const double var = std::max(0.0, (sum_sq(j) - n * mean(j) * mean(j)) / (n - 1.0));
    out.standard_error(j) = std::sqrt(var / n);
  }
  return out;
}

// ---- convexity probe ----

Mat4 sgad_choi_matrix(const SgadFit& fit, double omega) {
  PhysicalParams raw;
  raw.gamma0 = fit.gamma0_t;
  raw.time = 1.0;
  raw.omega = omega;
  raw.temperature = fit.temperature;
  raw.squeeze_r = fit.squeeze_r;
  raw.squeeze_phi = fit.squeeze_phi;
  const auto c = sgad_coefficients(derive_params(raw));
  Mat4 m = Mat4::Zero();
  m(0, 0) = 0.5 * (1.0 + c.H - c.Y);
  m(1, 1) = 0.5 * (1.0 - c.H + c.Y);
  m(2, 2) = 0.5 * (1.0 - c.H - c.Y);
  m(3, 3) = 0.5 * (1.0 + c.H + c.Y);
  m(0, 3) = m(3, 0) = 0.5 * (c.A + c.G);
  m(1, 2) = cplx(0.5 * (c.A - c.G), -c.B);
  m(2, 1) = cplx(0.5 * (c.A - c.G), c.B);
  return m;
}

SgadFit estimate_sgad_parameters(const ChoiMatrix& choi, double omega) {
  using B = SgadFitBounds;
  const Mat4& m = choi.matrix();
  const double h = m(0, 0).real() + m(3, 3).real() - 1.0;
  const double y = m(3, 3).real() - m(0, 0).real();
  const double sum_ag = m(0, 3).real();  // (A + G) / 2
  const double diff_ag = m(1, 2).real();  // (A - G) / 2
  const double b = -m(1, 2).imag();
  const double spread = std::hypot(diff_ag, b);

  SgadFit fit;
  double rate = 1.0;  // 2 N_eff + 1
  if (y > 0.0 && h < 1.0) rate = std::max(1.0, (1.0 - h) / y);
  constexpr double kResolvable = 1e-10;
  const double slow = sum_ag + spread;
  const double fast = sum_ag - spread;
  const double log_slow = slow > 0.0 ? -2.0 * std::log(std::min(slow, 1.0)) : 0.0;
  const double log_fast = fast > 0.0 ? -2.0 * std::log(std::min(fast, 1.0)) : 0.0;

  double r = 0.0;
  if (h > kResolvable) {
    fit.gamma0_t = -std::log(h) / rate;
  } else if (fast > kResolvable && slow > kResolvable) {
    fit.gamma0_t = 0.5 * (log_slow + log_fast) / rate;
  } else if (slow > kResolvable && log_slow > 0.0) {
    // Only the slow quadrature survives: pick the least squeezing that
    // makes the fast one unresolvable.
    const double r_cap = 0.5 * std::acosh(std::max(1.0, rate));
    r = std::clamp(0.25 * std::log(80.0 / log_slow), 0.0, r_cap);
    fit.gamma0_t = log_slow * std::exp(2.0 * r) * std::cosh(2.0 * r) / rate;
  } else {
    fit.gamma0_t = B::gamma0_t_max;
  }
  fit.gamma0_t = std::clamp(fit.gamma0_t, B::gamma0_t_min, B::gamma0_t_max);

  if (h > kResolvable || (fast > kResolvable && slow > kResolvable)) {
    if (log_slow > 0.0) {
      const double e4r = 2.0 * fit.gamma0_t * rate / log_slow - 1.0;
      r = e4r > 1.0 ? 0.25 * std::log(e4r) : 0.0;
    }
  }
  fit.squeeze_r = std::clamp(r, 0.0, B::squeeze_r_max);
  const double n_thermal = 0.5 * (rate / std::cosh(2.0 * fit.squeeze_r) - 1.0);
  fit.temperature = n_thermal > 0.0 ? std::min(B::temperature_max, omega / std::log1p(1.0 / n_thermal)) : 0.0;

  double phi = std::atan2(b, diff_ag);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  fit.squeeze_phi = phi;
  return fit;
}

namespace {

using optimize::DescentOptions;
using optimize::Interval;

template <class Fit>
struct StartOutcome {
  double residual = 0.0;
  Fit fit;
};

// Two-phase descent: whole-range line searches first, then local brackets.
optimize::DescentResult descend(const optimize::Objective& f, std::vector<double> x0,
                                const optimize::BoundsFn& bounds, double convergence) {
  DescentOptions global;
  global.convergence = convergence;
  global.bracket = 1.0;
  global.max_sweeps = 40;
  auto first = optimize::coordinate_descent(f, std::move(x0), bounds, global);
  DescentOptions local = global;
  local.bracket = 0.02;
  local.max_sweeps = 400;
  return optimize::coordinate_descent(f, std::move(first.x), bounds, local);
}

template <class Fit>
std::size_t best_index(const std::vector<StartOutcome<Fit>>& outcomes) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].residual < outcomes[best].residual) best = i;
  }
  return best;
}

}  // namespace

SgadProbeResult sgad_convexity_probe(const ChoiMatrix& c1, const ChoiMatrix& c2, double lambda,
                                     const ProbeOptions& options) {
  require_unit_interval(lambda, "lambda");
  using B = SgadFitBounds;
  const Mat4 target = lambda * c1.matrix() + (1.0 - lambda) * c2.matrix();
  const double omega = options.omega;
  const double two_pi = 2.0 * std::numbers::pi;

  auto to_fit = [](std::span<const double> x) { return SgadFit{x[0], x[1], x[2], x[3]}; };
  const optimize::Objective objective = [&](std::span<const double> x) {
    return (target - sgad_choi_matrix(to_fit(x), omega)).norm();
  };
  const optimize::BoundsFn bounds = [&](std::size_t i, std::span<const double>) -> Interval {
    switch (i) {
      case 0: return {B::gamma0_t_min, B::gamma0_t_max};
      case 1: return {0.0, B::temperature_max};
      case 2: return {0.0, B::squeeze_r_max};
      default: return {0.0, two_pi};
    }
  };

  const std::size_t starts = std::max<std::size_t>(1, options.starts);
  std::vector<std::vector<double>> seeds(starts);
  const SgadFit analytic = estimate_sgad_parameters(ChoiMatrix(target), omega);
  seeds[0] = {analytic.gamma0_t, analytic.temperature, analytic.squeeze_r, analytic.squeeze_phi};
  RandomSource rng(options.seed);
  for (std::size_t s = 1; s < starts; ++s) {
    seeds[s] = {rng.uniform(B::gamma0_t_min, B::gamma0_t_max), rng.uniform(0.0, B::temperature_max),
                rng.uniform(0.0, B::squeeze_r_max), rng.uniform(0.0, two_pi)};
  }

  std::vector<StartOutcome<SgadFit>> outcomes(starts);
  optimize::parallel_for(starts, [&](std::size_t s) {
    const auto res = descend(objective, seeds[s], bounds, options.convergence);
    outcomes[s] = {res.value, to_fit(res.x)};
  });
  const std::size_t best = best_index(outcomes);
  return {outcomes[best].residual, outcomes[best].fit, best};
}

PauliProbeResult pauli_convexity_probe(const ChoiMatrix& c1, const ChoiMatrix& c2, double lambda,
                                       const ProbeOptions& options) {
  require_unit_interval(lambda, "lambda");
  const Mat4 target = lambda * c1.matrix() + (1.0 - lambda) * c2.matrix();
  std::array<Mat4, 4> vertices;
  for (int v = 0; v < 4; ++v) vertices[v] = 2.0 * vertex_state(static_cast<PauliVertex>(v));

  auto to_weights = [](std::span<const double> x) {
    return PauliWeights{x[0], x[1], x[2], 1.0 - x[0] - x[1] - x[2], true};
  };
  const optimize::Objective objective = [&](std::span<const double> x) {
    const PauliWeights w = to_weights(x);
    const Mat4 model = w.alpha * vertices[0] + w.beta * vertices[1] + w.gamma * vertices[2] + w.delta * vertices[3];
    return (target - model).norm();
  };
  const optimize::BoundsFn bounds = [](std::size_t i, std::span<const double> x) -> Interval {
    double others = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != i) others += x[k];
    }
    return {0.0, std::max(0.0, 1.0 - others)};
  };

  const std::size_t starts = std::max<std::size_t>(1, options.starts);
  std::vector<std::vector<double>> seeds(starts);
  {
    // Projection of the target's diagonal correlations onto the simplex.
    const TwoQubitState st = TwoQubitState::from_matrix(target);
    Signature sig{st.t(0, 0), st.t(1, 1), st.t(2, 2), true};
    PauliWeights w = pauli_decompose(sig);
    std::array<double, 4> ws{std::max(0.0, w.alpha), std::max(0.0, w.beta), std::max(0.0, w.gamma),
                             std::max(0.0, w.delta)};
    const double total = ws[0] + ws[1] + ws[2] + ws[3];
    seeds[0] = {ws[0] / total, ws[1] / total, ws[2] / total};
  }
  RandomSource rng(options.seed);
  for (std::size_t s = 1; s < starts; ++s) {
    std::array<double, 4> e;
    for (auto& v : e) v = -std::log(rng.uniform(1e-300, 1.0));
    const double total = e[0] + e[1] + e[2] + e[3];
    seeds[s] = {e[0] / total, e[1] / total, e[2] / total};
  }

  std::vector<StartOutcome<PauliWeights>> outcomes(starts);
  optimize::parallel_for(starts, [&](std::size_t s) {
    const auto res = descend(objective, seeds[s], bounds, options.convergence);
    outcomes[s] = {res.value, to_weights(res.x)};
  });
  const std::size_t best = best_index(outcomes);
  return {outcomes[best].residual, outcomes[best].fit, best};
}

}  // namespace qchan
