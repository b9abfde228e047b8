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

// Value types shared by the channel modules.

#include <vector>

#include "qchan/numerics.hpp"

namespace qchan {

/// Single-qubit channel as an affine map on Bloch vectors:
/// v -> linear * v + shift.
struct BlochAffineMap {
  Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
  Vec3 shift = Vec3::Zero();

  Vec3 apply(const Vec3& v) const { return linear * v + shift; }
  Mat2 apply(const Mat2& rho) const;

  static BlochAffineMap identity() { return {}; }
};

/// Choi matrix C = (I (x) E)|psi~><psi~| with |psi~> = |00> + |11>, so
/// Tr C = 2. The first tensor factor is the untouched reference, the second
/// carries the channel output.
class ChoiMatrix {
 public:
  /// Validates Hermiticity (NonHermitianInput) and trace preservation,
  /// i.e. that tracing out the output slot leaves I (NotTracePreserving).
  explicit ChoiMatrix(const Mat4& m, double tolerance = 1e-9);

  const Mat4& matrix() const { return m_; }
  /// The trace-one two-qubit state C / 2.
  Mat4 state() const { return 0.5 * m_; }

  /// Smallest eigenvalue >= -tolerance.
  bool is_completely_positive(double tolerance = 1e-9) const;

 private:
  Mat4 m_;
};

/// Ordered Kraus operators with their completeness residual
/// ||sum E^dagger E - I||_F.
struct KrausSet {
  std::vector<Mat2> operators;
  double completeness_residual = 0.0;

  /// Computes the residual and throws IncompleteKrausSet above tolerance.
  static KrausSet from_operators(std::vector<Mat2> ops, double tolerance = 1e-10);

  Mat2 apply(const Mat2& rho) const;
  std::size_t size() const { return operators.size(); }
};

double completeness_residual(const std::vector<Mat2>& ops);

}  // namespace qchan
