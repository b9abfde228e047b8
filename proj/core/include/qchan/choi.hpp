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

// Channel-state isomorphism: Choi matrices from Bloch maps and Kraus sets,
// canonical Kraus extraction, channel rank, the closed-form SGAD Kraus
// operators, Kraus-set equivalence and the dissipativity test.

#include <array>
#include <optional>
#include <variant>

#include "qchan/physical.hpp"
#include "qchan/types.hpp"

namespace qchan {

/// Any of the three channel representations; apply() evaluates the channel
/// on a density operator directly in whichever form was supplied.
class Channel {
 public:
  using Representation = std::variant<BlochAffineMap, ChoiMatrix, KrausSet>;

  Channel(BlochAffineMap map) : rep_(std::move(map)) {}  // NOLINT(implicit)
  Channel(ChoiMatrix choi) : rep_(std::move(choi)) {}    // NOLINT(implicit)
  Channel(KrausSet kraus) : rep_(std::move(kraus)) {}    // NOLINT(implicit)

  Mat2 apply(const Mat2& rho) const;
  ChoiMatrix choi() const;
  BlochAffineMap bloch() const;
  const Representation& representation() const { return rep_; }

 private:
  Representation rep_;
};

/// Throws CpViolation when the resulting matrix has an eigenvalue below -1e-9.
ChoiMatrix choi_from_bloch(const BlochAffineMap& map);

/// Sum_j (I (x) E_j)|psi~><psi~|(I (x) E_j)^dagger. Throws IncompleteKrausSet
/// when the completeness residual exceeds 1e-10.
ChoiMatrix choi_from_kraus(const KrausSet& kraus);

BlochAffineMap bloch_from_choi(const ChoiMatrix& choi);

/// E(rho) = sum_ij rho_ij C_[ij], C_[ij] the 2x2 output block (i, j).
Mat2 apply_choi(const ChoiMatrix& choi, const Mat2& rho);

inline constexpr double kZeroEigenvalueThreshold = 1e-9;

/// Kraus operators from the Choi eigenvectors scaled by sqrt(lambda): the
/// eigenvector's 2-element segments become the operator's columns.
/// Operators whose eigenvalue is below zero_threshold * (largest eigenvalue)
/// are dropped. Each operator is rephased so that its first entry of largest
/// magnitude (row-major) is real and nonnegative. Throws CpViolation when an
/// eigenvalue is below -1e-9.
KrausSet canonical_kraus(const ChoiMatrix& choi, double zero_threshold = kZeroEigenvalueThreshold);

/// Rephases m so that its first largest-magnitude entry is real >= 0.
Mat2 fix_kraus_phase(const Mat2& m);

struct RankSpectrum {
  std::array<double, 4> eigenvalues{};  // descending, trace-2 scale
  int rank = 0;
  double zero_threshold = kZeroEigenvalueThreshold;
};

/// rank = number of eigenvalues above zero_threshold * (largest eigenvalue).
RankSpectrum channel_rank(const ChoiMatrix& choi, double zero_threshold = kZeroEigenvalueThreshold);

/// Closed-form Choi eigenvalues of an SGAD-shaped map:
///   e_pm = (1 - H pm sqrt((A - G)^2 + 4 B^2 + Y^2)) / 2
///   f_pm = (1 + H pm sqrt((A + G)^2 + Y^2)) / 2
struct SgadEigenvalues {
  double e_plus, e_minus, f_plus, f_minus;
};
SgadEigenvalues sgad_choi_eigenvalues(const SgadCoefficients& c);

/// Closed-form canonical Kraus operators of the SGAD channel. J_pm live on
/// the off-diagonal Choi block and carry eigenvalue e_pm; K_pm are diagonal
/// and carry f_pm.
struct SgadClosedFormKraus {
  Mat2 J_plus, J_minus, K_plus, K_minus;
  double psi = 0.0;     // sqrt((A - G)^2 + 4 B^2 + Y^2)
  double eta_cf = 0.0;  // sqrt((A + G)^2 + Y^2)
  double M_plus = 0.0, M_minus = 0.0;
  double N_plus = 0.0, N_minus = 0.0;

  KrausSet kraus_set() const;
};

/// Throws DegenerateDenominator when |A + G| or |2B + i(G - A)| is below
/// 1e-12 (the unsqueezed limits); use canonical_kraus there.
SgadClosedFormKraus sgad_closed_form_kraus(const DerivedParams& p);

/// Unitary U with b_j = sum_k U_jk a_k (both sets zero-padded to four
/// operators), found as the unitary closest to the least-squares solution.
/// Returns nullopt when the best residual max_j ||b_j - sum_k U_jk a_k||_F
/// exceeds tolerance, i.e. the sets describe different channels.
std::optional<Mat4> connecting_unitary(const KrausSet& a, const KrausSet& b, double tolerance = 1e-8);

enum class Dissipativity { dissipative, nondissipative };

/// Nondissipative iff every Kraus operator commutes with both signal-basis
/// projectors |b><b| (Frobenius norm of the commutator <= 1e-10).
Dissipativity classify_dissipativity(const KrausSet& kraus, const std::array<Vec2, 2>& signal_basis);

}  // namespace qchan
