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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qchan/errors.hpp"
#include "qchan/geometry.hpp"
#include "qchan/metrics.hpp"
#include "test_util.hpp"

namespace qchan {
namespace {

using testing::figure_params;
using testing::random_kraus;

KrausSet phase_flip(double p) { return pauli_kraus({p, 0.0, 0.0, 1.0 - p, true}); }

/// Haar average of <psi|E(psi)|psi> with its standard error.
std::pair<double, double> monte_carlo_fidelity(const KrausSet& k, RandomSource& rng, int samples) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int n = 0; n < samples; ++n) {
    const Mat2 psi = random_pure_state(rng);
    const double f = (psi * k.apply(psi)).trace().real();
    sum += f;
    sum_sq += f * f;
  }
  const double mean = sum / samples;
  return {mean, std::sqrt(std::max(0.0, sum_sq / samples - mean * mean) / samples)};
}

TEST(ChoiEntropy, UnitaryIsPure) {
  RandomSource rng(61);
  const auto c = choi_from_kraus(KrausSet::from_operators({haar_random_unitary<2>(rng)}));
  EXPECT_NEAR(choi_entropy(c), 0.0, 1e-12);
}

TEST(ChoiEntropy, PhaseFlipIsBinaryEntropy) {
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.9}) {
    EXPECT_NEAR(choi_entropy(choi_from_kraus(phase_flip(p))), binary_entropy(p), 1e-12);
  }
}

TEST(ChoiEntropy, GrowsWithTemperature) {
  const auto hot = choi_from_bloch(sgad_bloch_map(figure_params(2.0, 1.0)));
  const auto cold = choi_from_bloch(sgad_bloch_map(figure_params(0.5, 1.0)));
  EXPECT_GT(choi_entropy(hot), choi_entropy(cold));
}

TEST(ChoiConcurrence, Examples) {
  for (double p : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5}) {
    EXPECT_NEAR(choi_concurrence(choi_from_kraus(phase_flip(p))), 1 - 2 * p, 1e-12);
  }
  EXPECT_NEAR(choi_concurrence(choi_from_bloch(BlochAffineMap::identity())), 1.0, 1e-12);
  EXPECT_NEAR(choi_concurrence(choi_from_kraus(depolarizing_kraus(0.0))), 0.0, 1e-12);
}

TEST(ChoiConcurrence, RandomChannelsStayInRange) {
  RandomSource rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = choi_from_kraus(KrausSet::from_operators(random_kraus(rng, 1 + trial % 4)));
    const double conc = choi_concurrence(c);
    const double s = choi_entropy(c);
    ASSERT_GE(conc, 0.0);
    ASSERT_LE(conc, 1.0);
    ASSERT_GE(s, -1e-12);
    ASSERT_LE(s, 2.0 + 1e-12);
  }
}

TEST(ChoiConcurrence, WernerThreshold) {
  // Werner state with signature (p, -p, p) is entangled iff p > 1/3.
  for (double p : {0.2, 1.0 / 3.0, 0.6}) {
    const double expected = std::max(0.0, (3 * p - 1) / 2);
    EXPECT_NEAR(choi_concurrence(choi_from_signature(depolarizing_point(p))), expected, 1e-12);
  }
}

TEST(ChoiMetrics, PhaseFlipDuality) {
  double last_s = -1.0;
  double last_c = 2.0;
  for (int i = 0; i <= 50; ++i) {
    const double p = 0.01 * i;
    const auto c = choi_from_kraus(phase_flip(1 - p));
    const double s = choi_entropy(c);
    const double conc = choi_concurrence(c);
    ASSERT_GT(s, last_s);
    ASSERT_LT(conc, last_c);
    last_s = s;
    last_c = conc;
  }
}

TEST(AverageGateFidelity, ClosedForms) {
  EXPECT_EQ(average_gate_fidelity(KrausSet::from_operators({Mat2::Identity()})), 1.0);
  for (double p : {0.0, 0.3, 0.8}) {
    EXPECT_NEAR(average_gate_fidelity(phase_flip(p)), (1 + 2 * p) / 3, 1e-14);
    EXPECT_NEAR(average_gate_fidelity(depolarizing_kraus(p)), (1 + p) / 2, 1e-14);
  }
}

TEST(AverageGateFidelity, ChoiFormAgrees) {
  RandomSource rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = KrausSet::from_operators(random_kraus(rng, 1 + trial % 4));
    ASSERT_NEAR(average_gate_fidelity(choi_from_kraus(k)), average_gate_fidelity(k), 1e-14);
  }
}

TEST(AverageGateFidelity, MonteCarloHaarAverage) {
  RandomSource rng(64);
  std::vector<KrausSet> channels{phase_flip(0.3), depolarizing_kraus(0.6)};
  for (int i = 0; i < 20; ++i) channels.push_back(KrausSet::from_operators(random_kraus(rng, 1 + i % 4)));
  for (const auto& k : channels) {
    const auto [mean, se] = monte_carlo_fidelity(k, rng, 100000);
    ASSERT_LE(std::abs(mean - average_gate_fidelity(k)), std::max(3 * se, 1e-10));
  }
}

TEST(AverageGateFidelity, RemixInvariant) {
  RandomSource rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ops = random_kraus(rng, 4);
    const Mat4 u = haar_random_unitary<4>(rng);
    std::vector<Mat2> mixed(4, Mat2::Zero());
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) mixed[j] += u(j, k) * ops[k];
    }
    ASSERT_NEAR(average_gate_fidelity(KrausSet::from_operators(ops)),
                average_gate_fidelity(KrausSet::from_operators(mixed)), 1e-10);
  }
}

TEST(AverageGateFidelity, RejectsIncompleteSet) {
  EXPECT_THROW(average_gate_fidelity(KrausSet{{0.5 * Mat2::Identity()}, 0.75}), Error);
}

TEST(StateFidelity, MatchesMatrixSquareRoots) {
  RandomSource rng(66);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat2 rho = random_density_matrix<2>(rng);
    const Mat2 sigma = random_density_matrix<2>(rng);
    const Mat2 s = psd_sqrt<2>(rho);
    const Mat2 inner = s * sigma * s;
    const double expected = psd_sqrt<2>(Mat2(0.5 * (inner + inner.adjoint()))).trace().real();
    ASSERT_NEAR(state_fidelity(rho, sigma), expected, 1e-10);
  }
}

TEST(GateFidelity, Identity) {
  const auto g = gate_fidelity(BlochAffineMap::identity());
  EXPECT_NEAR(g.max, 1.0, 1e-12);
  EXPECT_NEAR(g.min, 1.0, 1e-12);
  EXPECT_TRUE(g.max_degenerate);
  EXPECT_EQ(g.grid_points, 33u * 33u * 33u);
}

TEST(GateFidelity, DepolarizingMaximumAtCentre) {
  const double p = 0.4;
  const auto g = gate_fidelity(depolarizing_kraus(p));
  EXPECT_NEAR(g.max, 1.0, 1e-12);
  EXPECT_LE(g.argmax.norm(), 1e-6);
  EXPECT_NEAR(g.min, std::sqrt((1 + p) / 2), 1e-8);
}

TEST(GateFidelity, AmplitudeDampingAgainstDenseGrid) {
  PhysicalParams p;
  p.time = 10.0;  // gamma0 t = 1
  const BlochAffineMap map = sgad_bloch_map(p);
  const auto g = gate_fidelity(map);
  EXPECT_NEAR(g.max, 1.0, 1e-8);

  double grid_min = 2.0;
  constexpr int kN = 120;
  for (int i = 0; i <= kN; ++i) {
    for (int j = 0; j <= kN; ++j) {
      const double radius = static_cast<double>(i) / kN;
      const double theta = std::numbers::pi * j / kN;
      const Vec3 v(radius * std::sin(theta), 0.0, radius * std::cos(theta));
      grid_min = std::min(grid_min, state_fidelity(density_from_bloch(v), density_from_bloch(map.apply(v))));
    }
  }
  EXPECT_LE(g.min, grid_min + 1e-12);
  EXPECT_GE(g.min, grid_min - 1e-4);
  EXPECT_NEAR(g.min, std::sqrt(std::exp(-1.0)), 1e-8);
}

TEST(HolevoChi, Examples) {
  RandomSource rng(67);
  const Channel identity = BlochAffineMap::identity();
  for (int i = 0; i < 10; ++i) {
    const Vec3 n(rng.normal(), rng.normal(), rng.normal());
    EXPECT_NEAR(holevo_chi(n.normalized(), identity), 1.0, 1e-12);
  }
  EXPECT_NEAR(holevo_chi(Vec3::UnitX(), depolarizing_kraus(0.0)), 0.0, 1e-12);
  EXPECT_NEAR(holevo_chi(Vec3::UnitZ(), phase_flip(0.3)), 1.0, 1e-12);
}

TEST(ChannelFidelity, Examples) {
  EXPECT_NEAR(channel_fidelity_kappa(BlochAffineMap::identity()).kappa, 1.0, 1e-8);
  const auto pf = channel_fidelity_kappa(phase_flip(0.3));
  EXPECT_NEAR(pf.kappa, 1.0, 1e-8);
  EXPECT_NEAR(std::abs(pf.direction(2)), 1.0, 1e-6);
  EXPECT_EQ(pf.grid_points, 64u * 32u);
}

TEST(ChannelFidelity, DenseGridOracle) {
  const Channel ch = sgad_bloch_map(figure_params(1.0, 1.0, 0.0));
  double best = 0.0;
  for (int i = 0; i <= 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double th = std::numbers::pi * i / 200;
      const double ph = std::numbers::pi * j / 200;
      best = std::max(best, holevo_chi(Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)), ch));
    }
  }
  const double kappa = channel_fidelity_kappa(ch).kappa;
  EXPECT_GE(kappa, best - 1e-12);
  EXPECT_LE(kappa, best + 1e-4);
  EXPECT_LE(kappa, 1.0);
}

TEST(ChannelFidelity, RepresentationIndependent) {
  RandomSource rng(68);
  for (int trial = 0; trial < 10; ++trial) {
    const auto map = sgad_bloch_map(testing::random_physical(rng));
    const auto choi = choi_from_bloch(map);
    const auto kraus = canonical_kraus(choi);
    std::vector<Mat2> mixed(4, Mat2::Zero());
    const Mat4 u = haar_random_unitary<4>(rng);
    for (int j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < kraus.size(); ++k) mixed[j] += u(j, k) * kraus.operators[k];
    }
    const double ref = channel_fidelity_kappa(map).kappa;
    ASSERT_NEAR(channel_fidelity_kappa(choi).kappa, ref, 1e-8);
    ASSERT_NEAR(channel_fidelity_kappa(kraus).kappa, ref, 1e-8);
    ASSERT_NEAR(channel_fidelity_kappa(KrausSet::from_operators(mixed)).kappa, ref, 1e-8);
  }
}

TEST(TraceDistance, Examples) {
  const Mat2 zero = density_from_bloch(Vec3::UnitZ());
  const Mat2 one = density_from_bloch(-Vec3::UnitZ());
  EXPECT_EQ(trace_distance(zero, zero), 0.0);
  EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-15);
  EXPECT_NEAR(trace_distance(density_from_bloch(Vec3(0.3, 0, 0)), density_from_bloch(Vec3(0, 0.4, 0))), 0.25, 1e-15);
}

TEST(TraceDistance, MaximumOverBasesIsLargestSingularValue) {
  const Channel ch = sgad_bloch_map(figure_params(0.5, 0.7, 0.0));
  double best = 0.0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double th = std::numbers::pi * i / 100;
      const double ph = std::numbers::pi * j / 100;
      const Vec3 n(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
      best = std::max(best, trace_distance(ch.apply(density_from_bloch(n)), ch.apply(density_from_bloch(-n))));
    }
  }
  const auto probe = max_trace_distance(ch);
  EXPECT_GE(probe.value, best - 1e-12);
  EXPECT_LE(probe.value, best + 1e-3);
  EXPECT_NEAR(trace_distance(ch.apply(density_from_bloch(probe.direction)), ch.apply(density_from_bloch(-probe.direction))),
              probe.value, 1e-12);
}

TEST(MetricReport, Ranges) {
  const auto r = metric_report(sgad_bloch_map(figure_params()));
  EXPECT_GE(r.entropy_bits, 0.0);
  EXPECT_LE(r.entropy_bits, 2.0);
  EXPECT_LE(r.channel_fidelity.kappa, 1.0);
  EXPECT_LE(r.gate_fidelity.min, r.gate_fidelity.max);
  EXPECT_GE(r.avg_gate_fidelity, 0.0);
  EXPECT_LE(r.avg_gate_fidelity, 1.0);
}

}  // namespace
}  // namespace qchan
