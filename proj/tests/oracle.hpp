// Copyright 2026 The catlab Authors
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

#pragma once

// Independent reference constructions for the test suite. Nothing here calls
// into catlab: Paulis are built with Eigen's Kronecker product, exponentials
// with Eigen's Pade-based MatrixFunctions, binomials with Pascal's triangle.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char a) {
    Mat p(2, 2);
    switch (a) {
        case 'X': p << 0, 1, 1, 0; break;
        case 'Y': p << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': p << 1, 0, 0, -1; break;
        default: p << 1, 0, 0, 1; break;
    }
    return p;
}

inline Mat string_op(const std::string& labels) {
    Mat out = Mat::Identity(1, 1);
    for (char c : labels) {
        Mat next = Eigen::kroneckerProduct(out, pauli(c)).eval();
        out = next;
    }
    return out;
}

inline Mat site_op(char a, int site, int n) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(site - 1)] = a;
    return string_op(s);
}

inline Mat total(char a, int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Mat m = Mat::Zero(d, d);
    for (int i = 1; i <= n; ++i) m += site_op(a, i, n);
    return m;
}

/// -h M_x - sum_i J_a s_a^i s_a^{i+1} on a ring.
inline Mat xyz_hamiltonian(int n, double h, double jx, double jy, double jz) {
    Mat hm = -h * total('X', n);
    const double j[3] = {jx, jy, jz};
    const char ax[3] = {'X', 'Y', 'Z'};
    for (int i = 1; i <= n; ++i) {
        const int k = i % n + 1;
        for (int a = 0; a < 3; ++a) {
            if (j[a] == 0.0) continue;
            hm -= j[a] * (site_op(ax[a], i, n) * site_op(ax[a], k, n));
        }
    }
    return hm;
}

inline Mat expm(const Mat& a) { return a.exp(); }

inline Mat gibbs(const Mat& h, double beta) {
    Mat w = expm(-beta * h);
    return w / w.trace();
}

/// Projector on M_z = m, built from the diagonal of the Kronecker-built M_z.
inline Mat mz_projector(int n, int m) {
    const Mat mz = total('Z', n);
    Mat p = Mat::Zero(mz.rows(), mz.cols());
    for (Eigen::Index k = 0; k < mz.rows(); ++k) {
        if (std::abs(mz(k, k).real() - m) < 0.5) p(k, k) = 1.0;
    }
    return p;
}

inline Mat interval_projector(int n, int lo, int hi) {
    const Mat mz = total('Z', n);
    Mat p = Mat::Zero(mz.rows(), mz.cols());
    for (Eigen::Index k = 0; k < mz.rows(); ++k) {
        const double v = mz(k, k).real();
        if (v > lo - 0.5 && v < hi + 0.5) p(k, k) = 1.0;
    }
    return p;
}

inline Mat post(const Mat& rho, const Mat& p) {
    Mat r = p * rho * p;
    return r / r.trace();
}

inline Mat dcomm(const Mat& a, const Mat& x) { return a * a * x - 2.0 * a * x * a + x * a * a; }

inline double c_value(const Mat& rho, const Mat& a, const Mat& eta) { return (rho * dcomm(a, eta)).trace().real(); }

inline double trace_norm(const Mat& h) {
    Eigen::SelfAdjointEigenSolver<Mat> s(h);
    return s.eigenvalues().cwiseAbs().sum();
}

/// Pascal-triangle binomial as double (exact for the sizes used in tests).
inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
    row[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(k)];
}

inline Mat random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
    std::normal_distribution<double> g;
    Mat a(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) a(r, c) = C(g(rng), g(rng));
    return 0.5 * (a + a.adjoint());
}

/// Random full-rank density matrix G G^dagger / Tr.
inline Mat random_density(std::mt19937_64& rng, Eigen::Index d, Eigen::Index rank = -1) {
    std::normal_distribution<double> g;
    if (rank < 0) rank = d;
    Mat a(d, rank);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < rank; ++c) a(r, c) = C(g(rng), g(rng));
    Mat rho = a * a.adjoint();
    rho /= rho.trace();
    return 0.5 * (rho + rho.adjoint());
}

inline Vec random_vector(std::mt19937_64& rng, Eigen::Index d) {
    std::normal_distribution<double> g;
    Vec v(d);
    for (Eigen::Index k = 0; k < d; ++k) v(k) = C(g(rng), g(rng));
    return v / v.norm();
}

/// Random projector of the given rank.
inline Mat random_projector(std::mt19937_64& rng, Eigen::Index d, Eigen::Index rank) {
    std::normal_distribution<double> g;
    Mat a(d, rank);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < rank; ++c) a(r, c) = C(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ() * Mat::Identity(d, rank);
    return q * q.adjoint();
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
