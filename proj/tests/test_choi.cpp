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

#include "qchan/choi.hpp"
#include "qchan/errors.hpp"
#include "qchan/geometry.hpp"
#include "test_util.hpp"

namespace qchan {
namespace {

using testing::figure_params;
using testing::random_kraus;
using testing::random_physical;

Mat4 bell_projector() {
  const Vec4 psi(1.0, 0.0, 0.0, 1.0);
  return psi * psi.adjoint();
}

std::vector<Mat2> remix(const std::vector<Mat2>& ops, const Mat4& u) {
  std::vector<Mat2> padded = ops;
  padded.resize(4, Mat2::Zero());
  std::vector<Mat2> out(4, Mat2::Zero());
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) out[j] += u(j, k) * padded[k];
  }
  return out;
}

/// Minimum over unit phases of ||a - e^{i theta} b||_F.
double phase_distance(const Mat2& a, const Mat2& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
  return (a - phase * b).norm();
}

TEST(ChoiMatrix, ValidatesInput) {
  Mat4 m = bell_projector();
  m(0, 1) = 0.3;
  try {
    ChoiMatrix c(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHermitianInput);
  }
  try {
    ChoiMatrix c(Mat4(2.0 * bell_projector()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTracePreserving);
  }
}

TEST(ChoiFromBloch, Identity) {
  const auto c = choi_from_bloch(BlochAffineMap::identity());
  EXPECT_LE((c.matrix() - bell_projector()).norm(), 1e-15);
  EXPECT_EQ(channel_rank(c).rank, 1);
}

TEST(ChoiFromBloch, PhaseFlipSpectrum) {
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.8}) {
    const auto c = choi_from_kraus(pauli_kraus({p, 0.0, 0.0, 1.0 - p, true}));
    const auto spec = eigh<4>(c.state());
    EXPECT_NEAR(spec.values(0), std::max(p, 1 - p), 1e-14);
    EXPECT_NEAR(spec.values(1), std::min(p, 1 - p), 1e-14);
    EXPECT_NEAR(spec.values(2), 0.0, 1e-14);
  }
}

TEST(ChoiFromBloch, SgadLayout) {
  const auto d = derive_params(figure_params());
  const auto k = sgad_coefficients(d);
  Mat4 expected = Mat4::Zero();
  expected(0, 0) = (1 + k.H - k.Y) / 2;
  expected(1, 1) = (1 - k.H + k.Y) / 2;
  expected(2, 2) = (1 - k.H - k.Y) / 2;
  expected(3, 3) = (1 + k.H + k.Y) / 2;
  expected(0, 3) = expected(3, 0) = (k.A + k.G) / 2;
  expected(1, 2) = cplx((k.A - k.G) / 2, -k.B);
  expected(2, 1) = std::conj(expected(1, 2));
  const auto c = choi_from_bloch(sgad_bloch_map(d));
  EXPECT_LE((c.matrix() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ChoiFromBloch, RejectsUnphysicalMap) {
  BlochAffineMap map;
  map.linear = 1.2 * Eigen::Matrix3d::Identity();
  try {
    choi_from_bloch(map);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CpViolation);
  }
}

TEST(ChoiFromKraus, IdentityAndRankThreePauli) {
  EXPECT_LE((choi_from_kraus(KrausSet::from_operators({Mat2::Identity()})).matrix() - bell_projector()).norm(), 0.0);
  const double p = 0.5, q = 0.3, r = 0.2;
  const auto c = choi_from_kraus(pauli_kraus({p, q, r, 0.0, true}));
  Mat4 expected;
  expected << p, 0, 0, p,  //
      0, q + r, q - r, 0,  //
      0, q - r, q + r, 0,  //
      p, 0, 0, p;
  EXPECT_LE((c.matrix() - expected).norm(), 1e-15);
  EXPECT_EQ(channel_rank(c).rank, 3);
}

TEST(ChoiFromKraus, AgreesWithBlochRoute) {
  RandomSource rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = KrausSet::from_operators(random_kraus(rng, 1 + trial % 4));
    const auto c = choi_from_kraus(k);
    ASSERT_LE((choi_from_bloch(bloch_from_choi(c)).matrix() - c.matrix()).norm(), 1e-10);
    ASSERT_LE((partial_trace(c.matrix(), Subsystem::second) - Mat2::Identity()).norm(), 1e-10);
  }
}

TEST(ChoiFromKraus, RejectsIncompleteSet) {
  try {
    choi_from_kraus(KrausSet{{0.5 * Mat2::Identity()}, 0.75});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteKrausSet);
  }
}

TEST(CanonicalKraus, IdentityGivesSingleOperator) {
  const auto k = canonical_kraus(choi_from_bloch(BlochAffineMap::identity()));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_LE((k.operators[0] - Mat2::Identity()).norm(), 1e-14);
}

TEST(CanonicalKraus, AmplitudeDampingHasTwoOperators) {
  PhysicalParams p;
  p.time = 0.5;
  EXPECT_EQ(canonical_kraus(choi_from_bloch(sgad_bloch_map(p))).size(), 2u);
}

TEST(CanonicalKraus, RandomSgadReproducesBlochAction) {
  RandomSource rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_physical(rng);
    p.temperature = 0.05 + p.temperature;
    p.squeeze_r = 0.05 + p.squeeze_r;
    const auto map = sgad_bloch_map(p);
    const auto k = canonical_kraus(choi_from_bloch(map));
    ASSERT_EQ(k.size(), 4u);
    for (int s = 0; s < 100; ++s) {
      const Mat2 rho = random_density_matrix<2>(rng);
      ASSERT_LE((k.apply(rho) - map.apply(rho)).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(CanonicalKraus, RoundTripOrthogonalityAndPhase) {
  RandomSource rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto original = KrausSet::from_operators(random_kraus(rng, 1 + trial % 4));
    const auto c = choi_from_kraus(original);
    const auto k = canonical_kraus(c);
    ASSERT_LE(k.completeness_residual, 1e-10);
    ASSERT_LE((choi_from_kraus(k).matrix() - c.matrix()).norm(), 1e-10);
    const auto spec = eigh<4>(c.matrix());
    for (std::size_t j = 0; j < k.size(); ++j) {
      ASSERT_NEAR(hs_product<2>(k.operators[j], k.operators[j]).real(), spec.values(j), 1e-10);
      for (std::size_t l = j + 1; l < k.size(); ++l) {
        ASSERT_LE(std::abs(hs_product<2>(k.operators[j], k.operators[l])), 1e-10);
      }
    }
    const Mat2 rho = random_density_matrix<2>(rng);
    ASSERT_LE((k.apply(rho) - original.apply(rho)).cwiseAbs().maxCoeff(), 1e-9);
    for (const auto& e : k.operators) ASSERT_LE((fix_kraus_phase(e) - e).norm(), 1e-15);
  }
}

TEST(KrausInvariants, TraceNormUnderRemixing) {
  RandomSource rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ops = random_kraus(rng, 4);
    const auto mixed = remix(ops, haar_random_unitary<4>(rng));
    double before = 0.0;
    double after = 0.0;
    for (const auto& e : ops) before += std::norm(e.trace());
    for (const auto& e : mixed) after += std::norm(e.trace());
    ASSERT_NEAR(before, after, 1e-10);
  }
}

TEST(ChannelRank, SgadEigenvaluesMatchClosedForm) {
  RandomSource rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = derive_params(random_physical(rng));
    const auto ev = sgad_choi_eigenvalues(sgad_coefficients(d));
    const auto rank = channel_rank(choi_from_bloch(sgad_bloch_map(d)));
    std::array<double, 4> closed{ev.e_plus, ev.e_minus, ev.f_plus, ev.f_minus};
    std::sort(closed.begin(), closed.end(), std::greater<>());
    for (int i = 0; i < 4; ++i) ASSERT_NEAR(rank.eigenvalues[i], closed[i], 1e-10);
    ASSERT_GE(ev.e_plus, ev.e_minus);
    ASSERT_GE(ev.f_plus, ev.f_minus);
  }
}

TEST(ChannelRank, TwoOrFour) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double temperature = 0.1 * i;
      const double r = 0.1 * j;
      const auto d = derive_params(figure_params(temperature, r));
      const auto ev = sgad_choi_eigenvalues(sgad_coefficients(d));
      const double scale = std::max(ev.e_plus, ev.f_plus);
      const bool e_zero = ev.e_minus <= kZeroEigenvalueThreshold * scale;
      const bool f_zero = ev.f_minus <= kZeroEigenvalueThreshold * scale;
      EXPECT_EQ(e_zero, f_zero) << "T=" << temperature << " r=" << r;
      const int rank = channel_rank(choi_from_bloch(sgad_bloch_map(d))).rank;
      EXPECT_EQ(rank, temperature == 0.0 && r == 0.0 ? 2 : 4) << "T=" << temperature << " r=" << r;
    }
  }
}

TEST(ChannelRank, UnitaryHasSingleUnitEigenvalue) {
  RandomSource rng(36);
  const auto c = choi_from_kraus(KrausSet::from_operators({haar_random_unitary<2>(rng)}));
  const auto rank = channel_rank(c);
  EXPECT_EQ(rank.rank, 1);
  EXPECT_NEAR(rank.eigenvalues[0] / 2.0, 1.0, 1e-14);
}

TEST(ClosedFormKraus, FigureParameters) {
  const auto d = derive_params(figure_params());
  const auto cf = sgad_closed_form_kraus(d);
  const auto set = cf.kraus_set();
  EXPECT_LE(set.completeness_residual, 1e-8);
  const auto map = sgad_bloch_map(d);
  RandomSource rng(37);
  for (int s = 0; s < 50; ++s) {
    const Mat2 rho = random_density_matrix<2>(rng);
    EXPECT_LE((set.apply(rho) - map.apply(rho)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(ClosedFormKraus, MatchesCanonicalUpToPhase) {
  RandomSource rng(38);
  for (int trial = 0; trial < 20; ++trial) {
    PhysicalParams p;
    p.temperature = rng.uniform(0.05, 1.0);
    p.squeeze_r = rng.uniform(0.05, 1.0);
    p.squeeze_phi = rng.uniform(0.0, 2 * std::numbers::pi);
    p.time = rng.uniform(0.05, 1.0);
    const auto d = derive_params(p);
    const auto cf = sgad_closed_form_kraus(d);
    const auto canon = canonical_kraus(choi_from_bloch(sgad_bloch_map(d)));
    ASSERT_EQ(canon.size(), 4u);
    const auto ev = sgad_choi_eigenvalues(sgad_coefficients(d));
    const std::array<std::pair<double, const Mat2*>, 4> tagged{
        {{ev.e_plus, &cf.J_plus}, {ev.e_minus, &cf.J_minus}, {ev.f_plus, &cf.K_plus}, {ev.f_minus, &cf.K_minus}}};
    for (const auto& [lambda, op] : tagged) {
      double best = 1e300;
      for (const auto& e : canon.operators) best = std::min(best, phase_distance(e, *op));
      ASSERT_LE(best, 1e-8) << "trial " << trial << " eigenvalue " << lambda;
    }
  }
}

TEST(ClosedFormKraus, DegenerateWithoutSqueezing) {
  PhysicalParams p;
  p.time = 0.5;
  try {
    sgad_closed_form_kraus(derive_params(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateDenominator);
  }
}

TEST(ConnectingUnitary, SameSetGivesIdentity) {
  RandomSource rng(39);
  const auto k = KrausSet::from_operators(random_kraus(rng, 4));
  const auto u = connecting_unitary(k, k);
  ASSERT_TRUE(u.has_value());
  EXPECT_LE((*u - Mat4::Identity()).norm(), 1e-8);
}

TEST(ConnectingUnitary, RecoversKnownRemix) {
  RandomSource rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = KrausSet::from_operators(random_kraus(rng, 4));
    const Mat4 v = haar_random_unitary<4>(rng);
    const auto b = KrausSet::from_operators(remix(a.operators, v));
    const auto u = connecting_unitary(a, b);
    ASSERT_TRUE(u.has_value());
    ASSERT_LE((*u - v).norm(), 1e-8);
  }
}

TEST(ConnectingUnitary, PhaseDampingForms) {
  const double beta = 0.36;
  const auto three = phase_damping_kraus(beta);
  const auto two = canonical_kraus(choi_from_kraus(three));
  ASSERT_EQ(two.size(), 2u);
  const auto u = connecting_unitary(three, two);
  ASSERT_TRUE(u.has_value());
  EXPECT_LE((*u * u->adjoint() - Mat4::Identity()).norm(), 1e-8);
}

TEST(ConnectingUnitary, ExistsIffSameChoi) {
  RandomSource rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = KrausSet::from_operators(random_kraus(rng, 1 + trial % 4));
    const auto b = trial % 2 ? KrausSet::from_operators(remix(a.operators, haar_random_unitary<4>(rng)))
                             : KrausSet::from_operators(random_kraus(rng, 1 + trial % 4));
    const bool same = (choi_from_kraus(a).matrix() - choi_from_kraus(b).matrix()).norm() <= 1e-8;
    ASSERT_EQ(connecting_unitary(a, b).has_value(), same);
  }
}

TEST(Dissipativity, Examples) {
  const std::array<Vec2, 2> computational{Vec2(1, 0), Vec2(0, 1)};
  EXPECT_EQ(classify_dissipativity(pauli_kraus({0.3, 0, 0, 0.7, true}), computational),
            Dissipativity::nondissipative);
  PhysicalParams ad;
  ad.time = 1.0;
  EXPECT_EQ(classify_dissipativity(canonical_kraus(choi_from_bloch(sgad_bloch_map(ad))), computational),
            Dissipativity::dissipative);
  RandomSource rng(42);
  const Mat2 u = haar_random_unitary<2>(rng);
  const std::array<Vec2, 2> rotated{u.col(0), u.col(1)};
  for (const auto& basis : {computational, rotated}) {
    EXPECT_EQ(classify_dissipativity(depolarizing_kraus(0.4), basis), Dissipativity::dissipative);
  }
}

TEST(Dissipativity, InvariantUnderRemixing) {
  RandomSource rng(43);
  const std::array<Vec2, 2> computational{Vec2(1, 0), Vec2(0, 1)};
  const auto pf = pauli_kraus({0.6, 0, 0, 0.4, true});
  for (int trial = 0; trial < 20; ++trial) {
    const auto mixed = KrausSet::from_operators(remix(pf.operators, haar_random_unitary<4>(rng)));
    ASSERT_EQ(classify_dissipativity(mixed, computational), Dissipativity::nondissipative);
    const auto random = KrausSet::from_operators(random_kraus(rng, 3));
    const auto random_mixed = KrausSet::from_operators(remix(random.operators, haar_random_unitary<4>(rng)));
    ASSERT_EQ(classify_dissipativity(random, computational), classify_dissipativity(random_mixed, computational));
  }
}

}  // namespace
}  // namespace qchan
