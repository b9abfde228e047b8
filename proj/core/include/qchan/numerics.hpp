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

// Small dense complex linear algebra for one and two qubits.

#include <complex>
#include <cstdint>
#include <random>
#include <span>

#include <Eigen/Dense>

namespace qchan {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;

template <int N>
using CMat = Eigen::Matrix<cplx, N, N>;

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
/// sigma_{x,y,z} for index 0,1,2.
Mat2 sigma(int axis);
}  // namespace pauli

/// Eigenvalues sorted descending; eigenvectors are the matching columns.
template <int N>
struct HermitianSpectrum {
  Eigen::Matrix<double, N, 1> values;
  CMat<N> vectors;
};

using Spectrum2 = HermitianSpectrum<2>;
using Spectrum4 = HermitianSpectrum<4>;

/// max |m_ij - conj(m_ji)|.
template <int N>
double hermiticity_defect(const CMat<N>& m);

/// Cyclic complex Jacobi eigensolver for Hermitian matrices (N = 2 or 4).
///
/// Eigenvalues come out descending. Vectors inside a degenerate cluster
/// (gap < 1e-9) are re-orthonormalized and their basis is arbitrary. Each
/// eigenvector is rephased so that its first component of largest magnitude
/// is real and nonnegative.
///
/// Throws Error{NonHermitianInput} when the defect exceeds 1e-10 (relative
/// to the largest entry once that exceeds 1).
template <int N>
HermitianSpectrum<N> eigh(const CMat<N>& m);

Mat4 kron(const Mat2& a, const Mat2& b);

enum class Subsystem { first, second };

/// Traces out `traced` of a two-qubit operator.
Mat2 partial_trace(const Mat4& m, Subsystem traced);

/// Tr(a^dagger b).
template <int N>
cplx hs_product(const CMat<N>& a, const CMat<N>& b) {
  return (a.adjoint() * b).trace();
}

/// f(m) for Hermitian m, applied through the spectrum.
template <int N, class F>
CMat<N> hermitian_function(const CMat<N>& m, F&& f) {
  const auto spec = eigh<N>(m);
  CMat<N> out = CMat<N>::Zero();
  for (int i = 0; i < N; ++i) {
    out += f(spec.values(i)) * spec.vectors.col(i) * spec.vectors.col(i).adjoint();
  }
  return out;
}

/// Principal square root of a positive semidefinite matrix; eigenvalues
/// below zero (rounding) are clamped.
template <int N>
CMat<N> psd_sqrt(const CMat<N>& m);

/// Von Neumann entropy in bits of a spectrum; eigenvalues <= 1e-15
/// contribute nothing.
double entropy_bits(std::span<const double> eigenvalues);

/// Binary Shannon entropy in bits.
double binary_entropy(double p);

/// Unitary factor of the polar decomposition of m. Singular directions are
/// completed to an orthonormal basis, so the result is always unitary.
Mat4 polar_unitary(const Mat4& m);

/// Deterministic seeded random source. Passed explicitly; there is no
/// global generator.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Haar-distributed unitary (N = 2 or 4) from QR of a complex Ginibre
/// matrix with the R-diagonal phases divided out.
template <int N>
CMat<N> haar_random_unitary(RandomSource& rng);

/// Haar-random pure state projector |psi><psi|.
Mat2 random_pure_state(RandomSource& rng);

/// Random full-rank density matrix (Ginibre ensemble, G G^dagger / Tr).
template <int N>
CMat<N> random_density_matrix(RandomSource& rng);

/// Bloch vector of a single-qubit operator: (Tr(rho sx), Tr(rho sy), Tr(rho sz)).
Vec3 bloch_vector(const Mat2& rho);

/// (I + v.sigma) / 2.
Mat2 density_from_bloch(const Vec3& v);

}  // namespace qchan
