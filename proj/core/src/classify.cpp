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

#include "trisqueeze/classify.hpp"

#include "trisqueeze/error.hpp"

namespace trisqueeze {

std::string_view to_string(MajorType t) {
    switch (t) {
        case MajorType::I_Separable:
            return "I";
        case MajorType::II_BipartiteOnly:
            return "II";
        case MajorType::III_Tripartite:
            return "III";
    }
    return "?";
}

std::string_view to_string(Subtype s) {
    switch (s) {
        case Subtype::III_0:
            return "III_0";
        case Subtype::III_1:
            return "III_1";
        case Subtype::III_2:
            return "III_2";
        case Subtype::III_3:
            return "III_3";
    }
    return "?";
}

StateClass classify_report(const EntanglementReport &r, double epsilon) {
    if (!(epsilon > 0.0)) throw ContractViolation("classification epsilon must be positive");
    StateClass out;
    out.pattern = {r.n_ij > epsilon, r.n_ik > epsilon, r.n_jk > epsilon};
    const int nonzero = static_cast<int>(out.pattern[0]) + out.pattern[1] + out.pattern[2];

    if (!(r.n_ijk > epsilon)) {
        const bool any = nonzero > 0 || r.n_i_jk > epsilon || r.n_j_ik > epsilon || r.n_k_ij > epsilon;
        out.major = any ? MajorType::II_BipartiteOnly : MajorType::I_Separable;
        return out;
    }

    out.major = MajorType::III_Tripartite;
    out.subtype = static_cast<Subtype>(nonzero);
    if (nonzero == 1) {
        for (std::size_t pair = 0; pair < 3; ++pair) {
            if (out.pattern[pair]) {
                const auto [a, b] = pair_modes(pair);
                out.pivot = third_mode(a, b);
            }
        }
    } else if (nonzero == 2) {
        for (std::size_t pair = 0; pair < 3; ++pair) {
            if (!out.pattern[pair]) {
                // Both entangled pairs contain the mode missing from the unentangled one.
                const auto [a, b] = pair_modes(pair);
                out.pivot = third_mode(a, b);
            }
        }
    }
    return out;
}

StateClass classify_state(const DensityMatrix &rho, double epsilon) {
    return classify_report(tripartite_negativity(rho), epsilon);
}

Subtype expected_subtype(Family f) {
    switch (f) {
        case Family::III_0:
            return Subtype::III_0;
        case Family::III_1A:
        case Family::III_1B:
            return Subtype::III_1;
        case Family::III_2:
            return Subtype::III_2;
        case Family::III_3:
            return Subtype::III_3;
        case Family::General:
            break;
    }
    throw ContractViolation("GENERAL states have no declared subtype");
}

}  // namespace trisqueeze
