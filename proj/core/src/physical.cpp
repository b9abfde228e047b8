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

#include "qchan/physical.hpp"

#include <cmath>
#include <limits>

#include "qchan/errors.hpp"

namespace qchan {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

double DerivedParams::quiet_rate() const {
  return (2.0 * n_thermal + 1.0) * std::exp(-2.0 * raw.squeeze_r);
}

double DerivedParams::loud_rate() const {
  return (2.0 * n_thermal + 1.0) * std::exp(2.0 * raw.squeeze_r);
}

DerivedParams derive_params(const PhysicalParams& raw) {
  if (raw.temperature < 0.0) {
    throw Error(ErrorKind::NegativeTemperature, "temperature must be >= 0");
  }
  if (!(raw.omega > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "omega must be > 0");
  if (!(raw.gamma0 >= 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "gamma0 must be >= 0");
  if (!(raw.time >= 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "time must be >= 0");

  DerivedParams p;
  p.raw = raw;
  // expm1 overflows to +inf for very cold baths, which correctly yields 0.
  p.n_thermal = raw.temperature > 0.0 ? 1.0 / std::expm1(raw.omega / raw.temperature) : 0.0;
  const double r = raw.squeeze_r;
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  p.n_eff = p.n_thermal * (ch * ch + sh * sh) + sh * sh;
  p.a = std::sinh(2.0 * r) * (2.0 * p.n_thermal + 1.0);
  p.m = -0.5 * std::sinh(2.0 * r) * std::polar(1.0, raw.squeeze_phi) * (2.0 * p.n_thermal + 1.0);
  return p;
}

SgadCoefficients sgad_coefficients(const DerivedParams& p) {
  const double g0t = p.raw.gamma0 * p.raw.time;
  const double phi = p.raw.squeeze_phi;
  // A = [cosh u + cos(phi) sinh u] e^{-g0 t (2N+1)/2} with u = g0 a t / 2,
  // regrouped into the two quadrature exponentials so nothing overflows.
  const double slow = std::exp(-0.5 * g0t * p.quiet_rate());
  const double fast = std::exp(-0.5 * g0t * p.loud_rate());
  SgadCoefficients c{};
  c.A = 0.5 * (1.0 + std::cos(phi)) * slow + 0.5 * (1.0 - std::cos(phi)) * fast;
  c.G = 0.5 * (1.0 - std::cos(phi)) * slow + 0.5 * (1.0 + std::cos(phi)) * fast;
  c.B = 0.5 * std::sin(phi) * (slow - fast);
  const double rate = p.two_n_plus_one();
  c.H = std::exp(-g0t * rate);
  c.Y = -std::expm1(-g0t * rate) / rate;
  return c;
}

SgadCoefficients sgad_coefficients(const BlochAffineMap& map) {
  return {map.linear(0, 0), -map.linear(0, 1), map.linear(1, 1), map.linear(2, 2), -map.shift(2)};
}

BlochAffineMap sgad_bloch_map(const DerivedParams& p) {
  const auto c = sgad_coefficients(p);
  BlochAffineMap map;
  map.linear << c.A, -c.B, 0.0, -c.B, c.G, 0.0, 0.0, 0.0, c.H;
  map.shift = Vec3(0.0, 0.0, -c.Y);
  return map;
}

BlochAffineMap sgad_bloch_map(const PhysicalParams& p) { return sgad_bloch_map(derive_params(p)); }

BlochGenerator master_equation_generator(const DerivedParams& p) {
  const double g0 = p.raw.gamma0;
  const double n = p.n_eff;
  const cplx m = p.m;
  Mat2 lower;
  lower << 0, 0, 1, 0;  // |1><0| = (sx - i sy) / 2
  const Mat2 raise = lower.adjoint();
  const Mat2 lr = raise * lower;
  const Mat2 rl = lower * raise;

  auto dissipator = [&](const Mat2& rho) -> Mat2 {
    Mat2 out = g0 * (n + 1.0) * (lower * rho * raise - 0.5 * (lr * rho + rho * lr));
    out += g0 * n * (raise * rho * lower - 0.5 * (rl * rho + rho * rl));
    out -= g0 * m * raise * rho * raise;
    out -= g0 * std::conj(m) * lower * rho * lower;
    return out;
  };

  BlochGenerator gen;
  const Mat2 d_identity = dissipator(0.5 * pauli::identity());
  for (int k = 0; k < 3; ++k) {
    gen.source(k) = (pauli::sigma(k) * d_identity).trace().real();
    for (int j = 0; j < 3; ++j) {
      gen.drift(k, j) = (pauli::sigma(k) * dissipator(0.5 * pauli::sigma(j))).trace().real();
    }
  }
  return gen;
}

double max_master_equation_step(const DerivedParams& p) {
  const double rate = p.raw.gamma0 * p.loud_rate();
  return 1e-3 * (rate > 1.0 ? 1.0 / rate : 1.0);
}

Vec3 integrate_master_equation(const DerivedParams& p, const Vec3& initial_bloch,
                               std::optional<double> step) {
  const double bound = max_master_equation_step(p);
  double h = bound;
  if (step) {
    if (!(*step > 0.0) || *step > bound * (1.0 + 1e-12)) {
      throw Error(ErrorKind::StepSizeTooLarge, "step exceeds 1e-3 * min(1, 1/(gamma0 (2N+1+a)))");
    }
    h = *step;
  }
  const double t = p.raw.time;
  if (t == 0.0) return initial_bloch;
  const auto steps = static_cast<long long>(std::ceil(t / h));
  h = t / static_cast<double>(steps);

  const BlochGenerator gen = master_equation_generator(p);
  const Eigen::Matrix3d& d = gen.drift;
  const Vec3& s = gen.source;
  Vec3 v = initial_bloch;
  for (long long i = 0; i < steps; ++i) {
    const Vec3 k1 = d * v + s;
    const Vec3 k2 = d * (v + 0.5 * h * k1) + s;
    const Vec3 k3 = d * (v + 0.5 * h * k2) + s;
    const Vec3 k4 = d * (v + h * k3) + s;
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return v;
}

KrausSet gad_kraus(const GadParams& g) {
  require_unit_interval(g.p_weight, "p_weight");
  require_unit_interval(g.alpha, "alpha");
  require_unit_interval(g.mu, "mu");
  require_unit_interval(g.nu, "nu");
  const double sp = std::sqrt(g.p_weight);
  const double sq = std::sqrt(1.0 - g.p_weight);
  Mat2 e1, e2, e3, e4;
  e1 << sp * std::sqrt(1.0 - g.alpha), 0, 0, sp;
  e2 << 0, 0, sp * std::sqrt(g.alpha), 0;
  e3 << sq * std::sqrt(1.0 - g.mu), 0, 0, sq * std::sqrt(1.0 - g.nu);
  e4 << 0, sq * std::sqrt(g.nu), sq * std::sqrt(g.mu) * std::polar(1.0, -g.phi), 0;
  return KrausSet::from_operators({e1, e2, e3, e4}, 1e-12);
}

GadParams gad_params_from_physical(const DerivedParams& p) {
  if (p.raw.squeeze_r != 0.0) {
    throw Error(ErrorKind::ParameterOutOfRange, "GAD parameters exist only for r = 0");
  }
  const auto c = sgad_coefficients(p);
  GadParams g;
  g.alpha = 1.0 - c.H;
  g.nu = g.alpha;
  g.mu = 0.0;
  g.p_weight = (p.n_eff + 1.0) / p.two_n_plus_one();
  return g;
}

double QndDephasing::decay() const { return std::exp(-level_gap * level_gap * gamma_t); }

double QndDephasing::phase_flip_alpha() const { return 0.5 * (1.0 + decay()); }

double qnd_gamma(const BathModeSet& bath, double t) {
  double sum = 0.0;
  for (const auto& mode : bath.modes) {
    const double ratio = mode.coupling / mode.omega;
    const double x = 0.5 * bath.beta * mode.omega;
    const double coth = std::isinf(x) ? 1.0 : 1.0 / std::tanh(x);
    const cplx amp = (std::polar(1.0, mode.omega * t) - 1.0) * std::cosh(mode.squeeze_r) +
                     (std::polar(1.0, -mode.omega * t) - 1.0) * std::sinh(mode.squeeze_r) *
                         std::polar(1.0, 2.0 * mode.squeeze_phi);
    sum += ratio * ratio * coth * std::norm(amp);
  }
  return 0.5 * sum;
}

double qnd_eta(const std::vector<BathMode>& modes, double t) {
  double sum = 0.0;
  for (const auto& mode : modes) {
    const double ratio = mode.coupling / mode.omega;
    sum -= ratio * ratio * std::sin(mode.omega * t);
  }
  return sum;
}

QndDephasing qnd_dephasing(const BathModeSet& bath, double t, double level_gap) {
  if (bath.modes.empty()) throw Error(ErrorKind::EmptyModeSet, "bath has no modes");
  if (!(t >= 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "time must be >= 0");
  if (!(bath.beta > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "beta must be > 0");
  for (const auto& mode : bath.modes) {
    if (!(mode.omega > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "mode frequency must be > 0");
  }
  return {qnd_gamma(bath, t), qnd_eta(bath.modes, t), level_gap};
}

BlochAffineMap qnd_bloch_map(const QndDephasing& q) {
  BlochAffineMap map;
  map.linear(0, 0) = q.decay();
  map.linear(1, 1) = q.decay();
  return map;
}

}  // namespace qchan
