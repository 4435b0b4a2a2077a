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

#include "trisqueeze/entanglement.hpp"

#include <cmath>

namespace trisqueeze {

double EntanglementReport::pair(Mode a, Mode b) const {
    switch (pair_index(a, b)) {
        case 0:
            return n_ij;
        case 1:
            return n_ik;
        default:
            return n_jk;
    }
}

double EntanglementReport::bipartition(Mode single) const {
    switch (single) {
        case Mode::i:
            return n_i_jk;
        case Mode::j:
            return n_j_ik;
        case Mode::k:
            return n_k_ij;
    }
    return 0.0;
}

double negativity_of(const ComplexMatrix &partially_transposed) {
    const EigenResult eig = eigen_hermitian(partially_transposed);
    double sum = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -kNegativeEigenvalueThreshold) sum += lambda;
    }
    return sum == 0.0 ? 0.0 : -2.0 * sum;
}

double negativity_pair(const DensityMatrix &rho, Mode a, Mode b) {
    // pair_index rejects a == b.
    (void)pair_index(a, b);
    const ComplexMatrix reduced = partial_trace(rho.matrix(), ModeSet{a, b});
    return negativity_of(partial_transpose(reduced, a));
}

double negativity_bipartition(const DensityMatrix &rho, Mode single) {
    return negativity_of(partial_transpose(rho.matrix(), single));
}

EntanglementReport tripartite_negativity(const DensityMatrix &rho) {
    EntanglementReport r;
    r.n_ij = negativity_pair(rho, Mode::i, Mode::j);
    r.n_ik = negativity_pair(rho, Mode::i, Mode::k);
    r.n_jk = negativity_pair(rho, Mode::j, Mode::k);
    r.n_i_jk = negativity_bipartition(rho, Mode::i);
    r.n_j_ik = negativity_bipartition(rho, Mode::j);
    r.n_k_ij = negativity_bipartition(rho, Mode::k);
    r.n_ijk = std::cbrt(r.n_i_jk * r.n_j_ik * r.n_k_ij);
    return r;
}

}  // namespace trisqueeze
