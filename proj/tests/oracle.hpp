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

#ifndef TRISQUEEZE_TESTS_ORACLE_HPP
#define TRISQUEEZE_TESTS_ORACLE_HPP

// Independent reference computations on Eigen matrices. Nothing here calls
// into the library except for converting its types.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "trisqueeze/linalg.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat to_eigen(const trisqueeze::ComplexMatrix &m) {
    Mat out(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
    }
    return out;
}

inline Vec to_eigen(const trisqueeze::StateVector &s) {
    Vec v(8);
    for (int n = 0; n < 8; ++n) v(n) = s[n];
    return v;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

// a|1> = |0>
inline Mat lower_qubit() {
    Mat a = Mat::Zero(2, 2);
    a(0, 1) = 1.0;
    return a;
}

// `single` on qubit q (0 = most significant) of an n-qubit register.
inline Mat on_qubit(int q, const Mat &single, int n = 3) {
    Mat out = Mat::Identity(1, 1);
    for (int m = 0; m < n; ++m) out = kron(out, m == q ? single : Mat::Identity(2, 2));
    return out;
}

inline Mat density(const Vec &psi) { return psi * psi.adjoint(); }

inline int bit(int index, int q, int n) { return (index >> (n - 1 - q)) & 1; }

inline Mat partial_transpose(const Mat &rho, int q, int n) {
    Mat out(rho.rows(), rho.cols());
    const int mask = 1 << (n - 1 - q);
    for (int r = 0; r < rho.rows(); ++r) {
        for (int c = 0; c < rho.cols(); ++c) {
            // Swap the q-th occupation between row and column.
            const int r2 = (r & ~mask) | (c & mask);
            const int c2 = (c & ~mask) | (r & mask);
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

inline Mat partial_trace(const Mat &rho, const std::vector<int> &keep, int n = 3) {
    const int dk = 1 << keep.size();
    Mat out = Mat::Zero(dk, dk);
    auto reduced = [&](int index) {
        int k = 0;
        for (int q : keep) k = (k << 1) | bit(index, q, n);
        return k;
    };
    auto traced_equal = [&](int r, int c) {
        for (int q = 0; q < n; ++q) {
            bool kept = false;
            for (int kq : keep) kept = kept || kq == q;
            if (!kept && bit(r, q, n) != bit(c, q, n)) return false;
        }
        return true;
    };
    for (int r = 0; r < rho.rows(); ++r) {
        for (int c = 0; c < rho.cols(); ++c) {
            if (traced_equal(r, c)) out(reduced(r), reduced(c)) += rho(r, c);
        }
    }
    return out;
}

inline Eigen::VectorXd eigenvalues(const Mat &m) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline double negativity(const Mat &pt) {
    double sum = 0.0;
    for (double e : eigenvalues(pt)) {
        if (e < -1e-10) sum += e;
    }
    return -2.0 * sum;
}

inline double negativity_pair(const Mat &rho, int a, int b) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    return negativity(partial_transpose(partial_trace(rho, {lo, hi}), a == lo ? 0 : 1, 2));
}

inline double negativity_bipartition(const Mat &rho, int q) { return negativity(partial_transpose(rho, q, 3)); }

// Principal squeeze variance of M modes through the collective operator
// A = sum a_m: M + 2 <dA^dagger dA> - 2 |<dA^2>|.
inline double principal_variance(const Mat &rho, const std::vector<int> &modes) {
    Mat A = Mat::Zero(8, 8);
    for (int q : modes) A += on_qubit(q, lower_qubit());
    const C mean = (rho * A).trace();
    const Mat dA = A - mean * Mat::Identity(8, 8);
    const double n = (rho * dA.adjoint() * dA).trace().real();
    const C sq = (rho * dA * dA).trace();
    const double m = static_cast<double>(modes.size());
    return m + 2.0 * n - 2.0 * std::abs(sq);
}

}  // namespace oracle

#endif  // TRISQUEEZE_TESTS_ORACLE_HPP
