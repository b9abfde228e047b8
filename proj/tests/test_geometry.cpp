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

#include "qchan/errors.hpp"
#include "qchan/geometry.hpp"
#include "test_util.hpp"

namespace qchan {
namespace {

using testing::figure_params;

void expect_signature(const Signature& s, double a, double b, double c, double tol = 1e-12) {
  EXPECT_NEAR(s.a, a, tol);
  EXPECT_NEAR(s.b, b, tol);
  EXPECT_NEAR(s.c, c, tol);
}

void expect_weights(const PauliWeights& w, double alpha, double beta, double gamma, double delta,
                    double tol = 1e-12) {
  EXPECT_NEAR(w.alpha, alpha, tol);
  EXPECT_NEAR(w.beta, beta, tol);
  EXPECT_NEAR(w.gamma, gamma, tol);
  EXPECT_NEAR(w.delta, delta, tol);
}

TEST(Signature, IdentityAndZ) {
  const auto id = signature(choi_from_bloch(BlochAffineMap::identity()));
  EXPECT_TRUE(id.valid);
  expect_signature(id, 1, -1, 1);
  const auto z = signature(choi_from_kraus(KrausSet::from_operators({pauli::z()})));
  EXPECT_TRUE(z.valid);
  expect_signature(z, -1, 1, 1);
}

TEST(Signature, AmplitudeDampingIsNotPauliDiagonal) {
  PhysicalParams p;
  p.time = 0.5;
  const auto choi = choi_from_bloch(sgad_bloch_map(p));
  EXPECT_FALSE(signature(choi).valid);
  EXPECT_GT(std::abs(TwoQubitState::from_choi(choi).s(2)), 1e-3);
}

TEST(Signature, StateExpansionRoundTrip) {
  RandomSource rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 rho = random_density_matrix<4>(rng);
    ASSERT_LE((TwoQubitState::from_matrix(rho).matrix() - rho).norm(), 1e-14);
  }
}

TEST(PauliDecompose, Examples) {
  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const auto w = pauli_decompose(depolarizing_point(p));
    expect_weights(w, (1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4);
    EXPECT_TRUE(w.member);
  }
  expect_weights(pauli_decompose({0, 0, 1, true}), 0.5, 0, 0, 0.5);
  expect_weights(pauli_decompose(depolarizing_point(0.5)), 5.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8);
}

TEST(PauliDecompose, PointOutsideTheTetrahedron) {
  // alpha I + beta X + gamma Y + delta Z = (1, 1, 1) has the unique
  // solution (1/2, 1/2, -1/2, 1/2).
  const auto w = pauli_decompose({1, 1, 1, true});
  expect_weights(w, 0.5, 0.5, -0.5, 0.5);
  EXPECT_FALSE(w.member);
  expect_signature(pauli_signature(w), 1, 1, 1);
}

TEST(PauliDecompose, RejectsInvalidSignature) {
  try {
    pauli_decompose({0.1, 0.2, 0.3, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSignature);
  }
}

TEST(PauliDecompose, UniqueOnTheSimplex) {
  RandomSource rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 4> e;
    for (auto& v : e) v = -std::log(rng.uniform(1e-300, 1.0));
    const double total = e[0] + e[1] + e[2] + e[3];
    const PauliWeights w{e[0] / total, e[1] / total, e[2] / total, e[3] / total, true};
    const auto back = pauli_decompose(pauli_signature(w));
    ASSERT_NEAR(back.alpha, w.alpha, 1e-12);
    ASSERT_NEAR(back.beta, w.beta, 1e-12);
    ASSERT_NEAR(back.gamma, w.gamma, 1e-12);
    ASSERT_NEAR(back.delta, w.delta, 1e-12);
    ASSERT_NEAR(back.sum(), 1.0, 1e-12);
    const auto sig = signature(choi_from_kraus(pauli_kraus(w)));
    ASSERT_TRUE(sig.valid);
    ASSERT_LE(std::max({std::abs(sig.a), std::abs(sig.b), std::abs(sig.c)}), 1.0 + 1e-12);
    const auto direct = pauli_signature(w);
    ASSERT_NEAR(sig.a, direct.a, 1e-12);
    ASSERT_NEAR(sig.b, direct.b, 1e-12);
    ASSERT_NEAR(sig.c, direct.c, 1e-12);
  }
}

TEST(Vertices, MutuallyOrthogonal) {
  const std::array<PauliVertex, 4> all{PauliVertex::I, PauliVertex::X, PauliVertex::Y, PauliVertex::Z};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(hs_product<4>(vertex_state(all[i]), vertex_state(all[i])).real(), 1.0, 1e-12);
    for (int j = i + 1; j < 4; ++j) {
      EXPECT_LE(std::abs(hs_product<4>(vertex_state(all[i]), vertex_state(all[j]))), 1e-12);
    }
  }
  expect_signature(signature(TwoQubitState::from_matrix(vertex_state(PauliVertex::X))), 1, 1, -1);
  expect_signature(signature(TwoQubitState::from_matrix(vertex_state(PauliVertex::Y))), -1, -1, -1);
}

TEST(SubSimplices, PhaseFlipAndDamping) {
  expect_signature(phase_flip_point(1.0), 1, -1, 1);
  expect_signature(phase_damping_point(0.0), 0, 0, 1);
  expect_signature(phase_flip_point(0.5), 0, 0, 1);
  for (int i = 0; i <= 100; ++i) {
    const double alpha = 0.5 + 0.005 * i;
    const auto pf = phase_flip_point(alpha);
    const auto pd = phase_damping_point(2 * alpha - 1);
    ASSERT_NEAR(pf.a, pd.a, 1e-12);
    ASSERT_NEAR(pf.b, pd.b, 1e-12);
    ASSERT_NEAR(pf.c, pd.c, 1e-12);
  }
  expect_signature(phase_damping_point(1.0), 1, -1, 1);
  EXPECT_THROW(phase_flip_point(1.1), Error);
  EXPECT_THROW(depolarizing_point(-0.1), Error);
}

TEST(SubSimplices, KrausFormsMatchPoints) {
  for (double beta : {0.0, 0.3, 1.0}) {
    const auto s = signature(choi_from_kraus(phase_damping_kraus(beta)));
    expect_signature(s, beta, -beta, 1);
  }
  for (double p : {0.0, 0.4, 1.0}) {
    const auto s = signature(choi_from_kraus(depolarizing_kraus(p)));
    expect_signature(s, p, -p, p);
  }
}

TEST(Mixedness, ClosedFormAndPurity) {
  EXPECT_NEAR(mixedness({1, -1, 1, true}), 0.0, 1e-15);
  EXPECT_NEAR(mixedness({0, 0, 0, true}), 1.0, 1e-15);
  for (double p : {0.0, 0.2, 0.7, 1.0}) {
    const Signature s = depolarizing_point(p);
    EXPECT_NEAR(mixedness(s), 1 - p * p, 1e-12);
    const Mat4 rho = choi_from_signature(s).state();
    const double purity = (rho * rho).trace().real();
    EXPECT_NEAR(mixedness(s), 4.0 / 3.0 * (1 - purity), 1e-12);
  }
}

TEST(Twirl, WernerIsFixed) {
  for (double p : {0.0, 0.3, 1.0}) {
    const auto st = TwoQubitState::from_choi(choi_from_signature(depolarizing_point(p)));
    expect_signature(twirl_exact(st), p, -p, p);
    EXPECT_NEAR(fully_entangled_fraction(st.matrix()), (3 * p + 1) / 4, 1e-12);
  }
}

TEST(Twirl, PauliChannelState) {
  const PauliWeights w{0.4, 0.1, 0.2, 0.3, true};
  const auto st = TwoQubitState::from_choi(choi_from_kraus(pauli_kraus(w)));
  const double x = (4 * w.alpha - 1) / 3;
  expect_signature(twirl_exact(st), x, -x, x);
}

TEST(Twirl, PreservesFidelityAndIsIdempotent) {
  RandomSource rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto st = TwoQubitState::from_matrix(random_density_matrix<4>(rng));
    const auto once = twirl_exact(st);
    const auto twice_state = TwoQubitState::from_choi(choi_from_signature(once));
    ASSERT_NEAR(fully_entangled_fraction(twice_state.matrix()), fully_entangled_fraction(st.matrix()), 1e-12);
    const auto twice = twirl_exact(twice_state);
    ASSERT_NEAR(twice.a, once.a, 1e-12);
    ASSERT_NEAR(twice.b, once.b, 1e-12);
    ASSERT_NEAR(twice.c, once.c, 1e-12);
  }
}

TEST(Twirl, MonteCarloAgreesWithExact) {
  RandomSource rng(54);
  const Mat4 rho = random_density_matrix<4>(rng);
  const auto exact = twirl_exact(TwoQubitState::from_matrix(rho));
  const auto mc = twirl_monte_carlo(rho, 100000, rng);
  EXPECT_LE(std::abs(mc.mean.a - exact.a), 3 * mc.standard_error(0));
  EXPECT_LE(std::abs(mc.mean.b - exact.b), 3 * mc.standard_error(1));
  EXPECT_LE(std::abs(mc.mean.c - exact.c), 3 * mc.standard_error(2));
}

ChoiMatrix sgad_choi(double temperature, double r) {
  return choi_from_bloch(sgad_bloch_map(figure_params(temperature, r, 0.3)));
}

TEST(ConvexityProbe, EndpointsAreSgad) {
  const auto c1 = sgad_choi(0.2, 0.0);
  const auto c2 = sgad_choi(2.0, 1.5);
  EXPECT_LE(sgad_convexity_probe(c1, c2, 0.0).residual, 1e-9);
  EXPECT_LE(sgad_convexity_probe(c1, c2, 1.0).residual, 1e-9);
  EXPECT_LE(sgad_convexity_probe(c2, c2, 0.37).residual, 1e-9);
}

TEST(ConvexityProbe, AnalyticSeedInvertsSgad) {
  const auto fit = estimate_sgad_parameters(sgad_choi(0.7, 0.4), 0.01);
  EXPECT_NEAR(fit.gamma0_t, 0.05, 1e-8);
  EXPECT_NEAR(fit.temperature, 0.7, 1e-6);
  EXPECT_NEAR(fit.squeeze_r, 0.4, 1e-6);
  EXPECT_NEAR(fit.squeeze_phi, 0.3, 1e-6);
}

TEST(ConvexityProbe, MixtureOfDocumentedPairIsNotSgad) {
  const auto res = sgad_convexity_probe(sgad_choi(0.2, 0.0), sgad_choi(2.0, 1.5), 0.5);
  EXPECT_GT(res.residual, 1e-3);
  EXPECT_LT(res.best_start, 32u);
}

TEST(ConvexityProbe, Deterministic) {
  const auto a = sgad_convexity_probe(sgad_choi(0.2, 0.0), sgad_choi(2.0, 1.5), 0.5);
  const auto b = sgad_convexity_probe(sgad_choi(0.2, 0.0), sgad_choi(2.0, 1.5), 0.5);
  EXPECT_EQ(a.residual, b.residual);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_EQ(a.best_fit.temperature, b.best_fit.temperature);
}

TEST(ConvexityProbe, PauliFamilyIsConvex) {
  const auto c1 = choi_from_kraus(pauli_kraus({0.7, 0.1, 0.1, 0.1, true}));
  const auto c2 = choi_from_kraus(pauli_kraus({0.1, 0.2, 0.3, 0.4, true}));
  for (int i = 0; i <= 10; ++i) {
    ASSERT_LE(pauli_convexity_probe(c1, c2, 0.1 * i).residual, 1e-9) << "lambda " << 0.1 * i;
  }
}

}  // namespace
}  // namespace qchan
