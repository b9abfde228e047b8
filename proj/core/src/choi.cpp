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

#include "qchan/choi.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/errors.hpp"

namespace qchan {

// ---- shared value types ----

namespace {

// E(X) for an arbitrary (not necessarily Hermitian) 2x2 operator X.
Mat2 affine_on_operator(const BlochAffineMap& map, const Mat2& x) {
  const cplx tr = x.trace();
  Eigen::Vector3cd comps;
  for (int k = 0; k < 3; ++k) comps(k) = (x * pauli::sigma(k)).trace();
  const Eigen::Vector3cd image = map.linear.cast<cplx>() * comps;
  Mat2 out = 0.5 * tr * pauli::identity();
  for (int k = 0; k < 3; ++k) out += 0.5 * (tr * map.shift(k) + image(k)) * pauli::sigma(k);
  return out;
}

Mat2 unit_operator(int i, int j) {
  Mat2 m = Mat2::Zero();
  m(i, j) = 1.0;
  return m;
}

}  // namespace

Mat2 BlochAffineMap::apply(const Mat2& rho) const { return affine_on_operator(*this, rho); }

ChoiMatrix::ChoiMatrix(const Mat4& m, double tolerance) : m_(m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!(hermiticity_defect<4>(m) <= tolerance * scale)) {
    throw Error(ErrorKind::NonHermitianInput, "Choi matrix is not Hermitian");
  }
  const Mat2 input_marginal = partial_trace(m, Subsystem::second);
  if (!((input_marginal - Mat2::Identity()).norm() <= tolerance * scale)) {
    throw Error(ErrorKind::NotTracePreserving, "tracing out the output slot does not give I");
  }
  m_ = 0.5 * (m + m.adjoint());
}

bool ChoiMatrix::is_completely_positive(double tolerance) const {
  return eigh<4>(m_).values(3) >= -tolerance;
}

double completeness_residual(const std::vector<Mat2>& ops) {
  Mat2 sum = Mat2::Zero();
  for (const auto& e : ops) sum += e.adjoint() * e;
  return (sum - Mat2::Identity()).norm();
}

KrausSet KrausSet::from_operators(std::vector<Mat2> ops, double tolerance) {
  KrausSet k;
  k.completeness_residual = qchan::completeness_residual(ops);
  if (!(k.completeness_residual <= tolerance)) {
    throw Error(ErrorKind::IncompleteKrausSet,
                "sum E^dagger E deviates from I by " + std::to_string(k.completeness_residual));
  }
  k.operators = std::move(ops);
  return k;
}

Mat2 KrausSet::apply(const Mat2& rho) const {
  Mat2 out = Mat2::Zero();
  for (const auto& e : operators) out += e * rho * e.adjoint();
  return out;
}

// ---- Channel ----

Mat2 Channel::apply(const Mat2& rho) const {
  return std::visit(
      [&](const auto& r) -> Mat2 {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ChoiMatrix>) {
          return apply_choi(r, rho);
        } else {
          return r.apply(rho);
        }
      },
      rep_);
}

ChoiMatrix Channel::choi() const {
  return std::visit(
      [](const auto& r) -> ChoiMatrix {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ChoiMatrix>) {
          return r;
        } else if constexpr (std::is_same_v<T, KrausSet>) {
          return choi_from_kraus(r);
        } else {
          return choi_from_bloch(r);
        }
      },
      rep_);
}

BlochAffineMap Channel::bloch() const {
  if (const auto* map = std::get_if<BlochAffineMap>(&rep_)) return *map;
  BlochAffineMap map;
  map.shift = bloch_vector(apply(0.5 * pauli::identity()));
  for (int j = 0; j < 3; ++j) {
    const Mat2 out = apply(0.5 * pauli::sigma(j));
    for (int k = 0; k < 3; ++k) map.linear(k, j) = (pauli::sigma(k) * out).trace().real();
  }
  return map;
}

// ---- Choi construction ----


ChoiMatrix choi_from_bloch(const BlochAffineMap& map) {
  Mat4 c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c.block<2, 2>(2 * i, 2 * j) = affine_on_operator(map, unit_operator(i, j));
    }
  }
  ChoiMatrix choi(c);
  if (!choi.is_completely_positive(1e-9)) {
    throw Error(ErrorKind::CpViolation, "Bloch map is not completely positive");
  }
  return choi;
}

ChoiMatrix choi_from_kraus(const KrausSet& kraus) {
  if (!(completeness_residual(kraus.operators) <= 1e-10)) {
    throw Error(ErrorKind::IncompleteKrausSet, "Kraus set is not complete");
  }
  Mat4 c = Mat4::Zero();
  for (const auto& e : kraus.operators) {
    Vec4 v;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) v(2 * i + j) = e(j, i);
    }
    c += v * v.adjoint();
  }
  return ChoiMatrix(c);
}

Mat2 apply_choi(const ChoiMatrix& choi, const Mat2& rho) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out += rho(i, j) * choi.matrix().block<2, 2>(2 * i, 2 * j);
  }
  return out;
}

BlochAffineMap bloch_from_choi(const ChoiMatrix& choi) { return Channel(choi).bloch(); }

// ---- canonical Kraus ----

Mat2 fix_kraus_phase(const Mat2& m) {
  const double top = m.cwiseAbs().maxCoeff();
  if (top == 0.0) return m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (std::abs(m(i, j)) >= top - 1e-12) return m * (std::conj(m(i, j)) / std::abs(m(i, j)));
    }
  }
  return m;
}

KrausSet canonical_kraus(const ChoiMatrix& choi, double zero_threshold) {
  const Spectrum4 spec = eigh<4>(choi.matrix());
  if (spec.values(3) < -1e-9) {
    throw Error(ErrorKind::CpViolation, "Choi matrix has a negative eigenvalue");
  }
  const double cutoff = zero_threshold * spec.values(0);
  std::vector<Mat2> ops;
  for (int k = 0; k < 4; ++k) {
    if (!(spec.values(k) > cutoff)) continue;
    const Vec4 v = std::sqrt(spec.values(k)) * spec.vectors.col(k);
    Mat2 e;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) e(j, i) = v(2 * i + j);
    }
    ops.push_back(fix_kraus_phase(e));
  }
  KrausSet out;
  out.completeness_residual = completeness_residual(ops);
  out.operators = std::move(ops);
  return out;
}

RankSpectrum channel_rank(const ChoiMatrix& choi, double zero_threshold) {
  const Spectrum4 spec = eigh<4>(choi.matrix());
  RankSpectrum out;
  out.zero_threshold = zero_threshold;
  for (int k = 0; k < 4; ++k) {
    out.eigenvalues[k] = spec.values(k);
    if (spec.values(k) > zero_threshold * spec.values(0)) ++out.rank;
  }
  return out;
}

SgadEigenvalues sgad_choi_eigenvalues(const SgadCoefficients& c) {
  const double psi = std::sqrt((c.A - c.G) * (c.A - c.G) + 4.0 * c.B * c.B + c.Y * c.Y);
  const double eta = std::sqrt((c.A + c.G) * (c.A + c.G) + c.Y * c.Y);
  return {0.5 * (1.0 - c.H + psi), 0.5 * (1.0 - c.H - psi), 0.5 * (1.0 + c.H + eta),
          0.5 * (1.0 + c.H - eta)};
}

// ---- closed-form SGAD Kraus ----

KrausSet SgadClosedFormKraus::kraus_set() const {
  KrausSet k;
  k.operators = {J_plus, J_minus, K_plus, K_minus};
  k.completeness_residual = completeness_residual(k.operators);
  return k;
}

SgadClosedFormKraus sgad_closed_form_kraus(const DerivedParams& p) {
  const auto c = sgad_coefficients(p);
  const cplx den(2.0 * c.B, c.G - c.A);  // 2B + i(G - A)
  if (std::abs(den) < 1e-12 || std::abs(c.A + c.G) < 1e-12) {
    throw Error(ErrorKind::DegenerateDenominator, "closed-form SGAD Kraus is singular here (r = 0 limit)");
  }
  SgadClosedFormKraus out;
  out.psi = std::sqrt((c.A - c.G) * (c.A - c.G) + 4.0 * c.B * c.B + c.Y * c.Y);
  out.eta_cf = std::sqrt((c.A + c.G) * (c.A + c.G) + c.Y * c.Y);

  // Off-diagonal block {|01>, |10>}: component ratio <01|v> / <10|v>.
  auto make_j = [&](double s, double& norm) {
    const cplx ratio = cplx(0.0, -1.0) * (s * out.psi + c.Y) / den;
    norm = std::sqrt(2.0) * std::sqrt(1.0 + std::norm(ratio));
    Mat2 j;
    j << 0.0, 1.0, ratio, 0.0;
    return Mat2(std::sqrt(std::max(0.0, 1.0 - c.H + s * out.psi)) / norm * j);
  };
  // Diagonal block {|00>, |11>}: ratio <00|v> / <11|v>.
  auto make_k = [&](double s, double& norm) {
    const double ratio = (s * out.eta_cf - c.Y) / (c.A + c.G);
    norm = std::sqrt(2.0) * std::sqrt(1.0 + ratio * ratio);
    Mat2 k;
    k << ratio, 0.0, 0.0, 1.0;
    return Mat2(std::sqrt(std::max(0.0, 1.0 + c.H + s * out.eta_cf)) / norm * k);
  };
  out.J_plus = make_j(+1.0, out.M_plus);
  out.J_minus = make_j(-1.0, out.M_minus);
  out.K_plus = make_k(+1.0, out.N_plus);
  out.K_minus = make_k(-1.0, out.N_minus);
  return out;
}

// ---- equivalence ----

namespace {

Mat4 stack_operators(const KrausSet& k) {
  if (k.size() > 4) {
    throw Error(ErrorKind::ParameterOutOfRange, "qubit Kraus sets have at most four independent operators");
  }
  Mat4 rows = Mat4::Zero();
  for (std::size_t n = 0; n < k.size(); ++n) {
    const Mat2& e = k.operators[n];
    rows.row(static_cast<int>(n)) << e(0, 0), e(0, 1), e(1, 0), e(1, 1);
  }
  return rows;
}

}  // namespace

std::optional<Mat4> connecting_unitary(const KrausSet& a, const KrausSet& b, double tolerance) {
  const Mat4 av = stack_operators(a);
  const Mat4 bv = stack_operators(b);
  // argmin over unitaries of ||bv - U av||_F is the polar factor of bv av^dagger.
  const Mat4 u = polar_unitary(bv * av.adjoint());
  const Mat4 diff = bv - u * av;
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) worst = std::max(worst, diff.row(j).norm());
  if (!(worst <= tolerance)) return std::nullopt;
  return u;
}

Dissipativity classify_dissipativity(const KrausSet& kraus, const std::array<Vec2, 2>& signal_basis) {
  for (const auto& b : signal_basis) {
    const Mat2 proj = b * b.adjoint();
    for (const auto& e : kraus.operators) {
      if ((proj * e - e * proj).norm() > 1e-10) return Dissipativity::dissipative;
    }
  }
  return Dissipativity::nondissipative;
}

}  // namespace qchan
