// Copyright 2026 The trisqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRISQUEEZE_ENTANGLEMENT_HPP
#define TRISQUEEZE_ENTANGLEMENT_HPP

#include "trisqueeze/linalg.hpp"

namespace trisqueeze {

/// An eigenvalue counts as negative only below this value, so separable
/// states come out at exactly N = 0.
inline constexpr double kNegativeEigenvalueThreshold = 1e-10;

/// Negativities below this are "zero" for classification purposes.
inline constexpr double kZeroNegativity = 1e-9;

struct EntanglementReport {
    double n_ij = 0.0;
    double n_ik = 0.0;
    double n_jk = 0.0;
    double n_i_jk = 0.0;
    double n_j_ik = 0.0;
    double n_k_ij = 0.0;
    double n_ijk = 0.0;

    double pair(Mode a, Mode b) const;
    double bipartition(Mode single) const;
};

/// -2 * (sum of eigenvalues below -kNegativeEigenvalueThreshold).
double negativity_of(const ComplexMatrix &partially_transposed);

/// Two-mode negativity of the reduction onto {a, b}.
double negativity_pair(const DensityMatrix &rho, Mode a, Mode b);

/// One-versus-two negativity with `single` transposed.
double negativity_bipartition(const DensityMatrix &rho, Mode single);

/// All seven negativities; n_ijk is the geometric mean of the bipartitions.
EntanglementReport tripartite_negativity(const DensityMatrix &rho);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_ENTANGLEMENT_HPP
