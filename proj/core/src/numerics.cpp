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

#include "qchan/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "qchan/errors.hpp"

namespace qchan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NegativeTemperature: return "NegativeTemperature";
    case ErrorKind::StepSizeTooLarge: return "StepSizeTooLarge";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::EmptyModeSet: return "EmptyModeSet";
    case ErrorKind::CpViolation: return "CpViolation";
    case ErrorKind::IncompleteKrausSet: return "IncompleteKrausSet";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
  }
  return "Unknown";
}

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
Mat2 sigma(int axis) {
  switch (axis) {
    case 0: return x();
    case 1: return y();
    default: return z();
  }
}
}  // namespace pauli

template <int N>
double hermiticity_defect(const CMat<N>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr double kDegenerateGap = 1e-9;
constexpr int kMaxSweeps = 100;

template <int N>
double off_diagonal_norm(const CMat<N>& a) {
  double s = 0.0;
  for (int p = 0; p < N; ++p) {
    for (int q = 0; q < N; ++q) {
      if (p != q) s += std::norm(a(p, q));
    }
  }
  return std::sqrt(s);
}

// Index of the first component whose magnitude is within 1e-12 of the largest.
template <class V>
Eigen::Index leading_index(const V& v) {
  const double top = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top - 1e-12) return i;
  }
  return 0;
}

template <int N>
void gram_schmidt_columns(CMat<N>& vectors, int begin, int end) {
  for (int j = begin; j < end; ++j) {
    for (int k = begin; k < j; ++k) {
      vectors.col(j) -= vectors.col(k).dot(vectors.col(j)) * vectors.col(k);
    }
    vectors.col(j).normalize();
  }
}

}  // namespace

template <int N>
HermitianSpectrum<N> eigh(const CMat<N>& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!(hermiticity_defect<N>(m) <= 1e-10 * scale)) {
    throw Error(ErrorKind::NonHermitianInput, "eigh: matrix is not Hermitian");
  }
  CMat<N> a = 0.5 * (m + m.adjoint());
  CMat<N> v = CMat<N>::Identity();
  const double stop = kOffDiagonalTolerance * std::max(1.0, a.norm());

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm<N>(a) >= stop; ++sweep) {
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq == 0.0) continue;
        const cplx phase = a(p, q) / apq;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // R = diag(1, conj(phase)) on (p,q) followed by the real rotation.
        CMat<N> r = CMat<N>::Identity();
        r(p, p) = c;
        r(p, q) = s;
        r(q, p) = -s * std::conj(phase);
        r(q, q) = c * std::conj(phase);
        a = r.adjoint() * a * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * r;
      }
    }
  }

  std::array<int, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  HermitianSpectrum<N> out;
  for (int k = 0; k < N; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }

  for (int begin = 0; begin < N;) {
    int end = begin + 1;
    while (end < N && out.values(end - 1) - out.values(end) < kDegenerateGap) ++end;
    if (end - begin > 1) gram_schmidt_columns<N>(out.vectors, begin, end);
    begin = end;
  }

  for (int k = 0; k < N; ++k) {
    auto col = out.vectors.col(k);
    const cplx lead = col(leading_index(col));
    if (std::abs(lead) > 0.0) col *= std::conj(lead) / std::abs(lead);
  }
  return out;
}

template double hermiticity_defect<2>(const CMat<2>&);
template double hermiticity_defect<4>(const CMat<4>&);
template HermitianSpectrum<2> eigh<2>(const CMat<2>&);
template HermitianSpectrum<4> eigh<4>(const CMat<4>&);

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Mat2 partial_trace(const Mat4& m, Subsystem traced) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        // Row index is 2*first + second.
        out(i, j) += traced == Subsystem::second ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

template <int N>
CMat<N> psd_sqrt(const CMat<N>& m) {
  return hermitian_function<N>(m, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

template CMat<2> psd_sqrt<2>(const CMat<2>&);
template CMat<4> psd_sqrt<4>(const CMat<4>&);

double entropy_bits(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double x : eigenvalues) {
    if (x > 1e-15) s -= x * std::log2(x);
  }
  return s;
}

double binary_entropy(double p) {
  const double pair[2] = {p, 1.0 - p};
  return entropy_bits(pair);
}

Mat4 polar_unitary(const Mat4& m) {
  const Spectrum4 gram = eigh<4>(Mat4(m.adjoint() * m));
  const double top = std::max(gram.values(0), 0.0);
  Mat4 w = Mat4::Zero();
  int kept = 0;
  for (int i = 0; i < 4; ++i) {
    const double sigma = std::sqrt(std::max(gram.values(i), 0.0));
    if (top == 0.0 || sigma <= 1e-6 * std::sqrt(top)) break;
    w.col(i) = m * gram.vectors.col(i) / sigma;
    ++kept;
  }
  gram_schmidt_columns<4>(w, 0, kept);
  // Complete the left singular basis from the standard basis vectors.
  for (int i = kept; i < 4; ++i) {
    Vec4 best = Vec4::Zero();
    double best_norm = -1.0;
    for (int e = 0; e < 4; ++e) {
      Vec4 cand = Vec4::Unit(e);
      for (int k = 0; k < i; ++k) cand -= w.col(k).dot(cand) * w.col(k);
      if (cand.norm() > best_norm) {
        best_norm = cand.norm();
        best = cand;
      }
    }
    w.col(i) = best.normalized();
  }
  return w * gram.vectors.adjoint();
}

template <int N>
CMat<N> haar_random_unitary(RandomSource& rng) {
  CMat<N> z;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      z(i, j) = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMat<N>> qr(z);
  CMat<N> q = qr.householderQ();
  const CMat<N> r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    const cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

template CMat<2> haar_random_unitary<2>(RandomSource&);
template CMat<4> haar_random_unitary<4>(RandomSource&);

Mat2 random_pure_state(RandomSource& rng) {
  Vec2 psi(cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal()));
  psi.normalize();
  return psi * psi.adjoint();
}

template <int N>
CMat<N> random_density_matrix(RandomSource& rng) {
  CMat<N> g;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
  }
  CMat<N> rho = g * g.adjoint();
  return rho / rho.trace().real();
}

template CMat<2> random_density_matrix<2>(RandomSource&);
template CMat<4> random_density_matrix<4>(RandomSource&);

Vec3 bloch_vector(const Mat2& rho) {
  return Vec3((rho * pauli::x()).trace().real(), (rho * pauli::y()).trace().real(),
              (rho * pauli::z()).trace().real());
}

Mat2 density_from_bloch(const Vec3& v) {
  return 0.5 * (pauli::identity() + v(0) * pauli::x() + v(1) * pauli::y() + v(2) * pauli::z());
}

}  // namespace qchan
