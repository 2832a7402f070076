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

#include "catlab/thermal.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace catlab {

namespace {

void require_parity(long long n, long long m) {
    if (n < 0 || std::llabs(m) > n || ((n + m) % 2 != 0)) {
        throw InvalidOutcomeError("M = " + std::to_string(m) + " is not an M_z eigenvalue for " + std::to_string(n) +
                                  " spins");
    }
}

void require_expansion_domain(int n, int m) {
    if (n < 3) {
        throw DomainError("the XYZ expansion has (N-1) and (N-2) denominators and needs n >= 3, got n = " +
                          std::to_string(n));
    }
    require_parity(n, m);
}

}  // namespace

Operator SpinHamiltonian::interaction(const DenseLimits& limits) const {
    require_capacity(n, limits);
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(d, d);
    if (j.is_zero()) return Operator(std::move(m));
    const int bonds = boundary == Boundary::Periodic ? n : n - 1;
    const Complex i_unit(0.0, 1.0);
    for (int bond = 0; bond < bonds; ++bond) {
        const int s1 = bond + 1;
        const int s2 = (bond + 1) % n + 1;
        const Eigen::Index m1 = Eigen::Index{1} << (n - s1);
        const Eigen::Index m2 = Eigen::Index{1} << (n - s2);
        for (Eigen::Index b = 0; b < d; ++b) {
            const bool d1 = (b & m1) != 0;
            const bool d2 = (b & m2) != 0;
            const Eigen::Index f = b ^ m1 ^ m2;
            if (s1 == s2) {
                // n == 1 ring: sigma_a sigma_a = I
                m(b, b) -= j.x + j.y + j.z;
                continue;
            }
            m(b, b) -= j.z * ((d1 == d2) ? 1.0 : -1.0);
            const Complex ph1 = d1 ? -i_unit : i_unit;
            const Complex ph2 = d2 ? -i_unit : i_unit;
            m(f, b) -= j.x + j.y * ph1 * ph2;
        }
    }
    return Operator(std::move(m));
}

Operator SpinHamiltonian::realize(const DenseLimits& limits) const {
    Operator mx = total_magnetization(Axis::X, n).realize(limits);
    return Operator(Matrix(-h * mx.matrix() + interaction(limits).matrix()));
}

QuantumState gibbs_state(const SpinHamiltonian& ham, double beta, const DenseLimits& limits) {
    require_capacity(ham.n, limits);
    return gibbs_state(ham.realize(limits), beta);
}

QuantumState gibbs_state(const Operator& h_op, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ContractViolation("inverse temperature must be finite and non-negative; use ground_state for T = 0");
    }
    if (beta == 0.0) return QuantumState::maximally_mixed(h_op.num_spins());
    const HermitianSpectrum spec = eigh(h_op);
    const double e0 = spec.values.minCoeff();
    RealVector w = (-beta * (spec.values.array() - e0)).exp().matrix();
    w /= w.sum();
    Matrix rho = spec.vectors * w.asDiagonal() * spec.vectors.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    return QuantumState::from_density(std::move(rho), QuantumState::Check::Structural);
}

QuantumState ground_state(const Operator& h_op, double degeneracy_tol) {
    const HermitianSpectrum spec = eigh(h_op);
    const double e0 = spec.values(0);
    const double tol = degeneracy_tol * std::max(1.0, std::abs(e0));
    Eigen::Index k = 1;
    while (k < spec.values.size() && spec.values(k) - e0 <= tol) ++k;
    if (k == 1) return QuantumState::from_pure(spec.vectors.col(0));
    const Matrix v = spec.vectors.leftCols(k);
    Matrix rho = v * v.adjoint() / static_cast<double>(k);
    rho = 0.5 * (rho + rho.adjoint());
    return QuantumState::from_density(std::move(rho), QuantumState::Check::Structural);
}

QuantumState ground_state(const SpinHamiltonian& ham, const DenseLimits& limits) {
    return ground_state(ham.realize(limits));
}

double log_binomial(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

double log_free_partition_eq(long long n, double betah) {
    const double nn = static_cast<double>(n);
    return nn * std::log(2.0) + nn * log_cosh(betah);
}

double log_free_partition_post(long long n, long long m, double betah) {
    require_parity(n, m);
    return log_binomial(n, (n + m) / 2) + static_cast<double>(n) * log_cosh(betah);
}

double log_interval_partition_post(long long n, long long m_lo, long long m_hi, double betah) {
    if (m_lo > m_hi || m_lo < -n || m_hi > n) {
        throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                  "] is not inside [-n, n]");
    }
    long long first = m_lo;
    if ((n + first) % 2 != 0) ++first;
    if (first > m_hi) {
        throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                  "] contains no M_z eigenvalue of matching parity");
    }
    double acc = -std::numeric_limits<double>::infinity();
    for (long long m = first; m <= m_hi; m += 2) {
        acc = log_add_exp(acc, log_binomial(n, (n + m) / 2));
    }
    return acc + static_cast<double>(n) * log_cosh(betah);
}

double xyz_c_expansion(int n, int m, double beta, double h, Couplings j) {
    require_expansion_domain(n, m);
    const double nn = n;
    const double mm = m;
    const double d = nn * nn - mm * mm;
    const double first = 2.0 * beta * (j.x + j.y) * d / (nn - 1.0);
    const double second =
        2.0 * beta * beta * d *
        (h * h / 2.0 + (j.x * j.x + j.y * j.y) / (nn - 1.0) +
         j.z * (j.x + j.y) * (mm * mm - nn * nn + 4.0 * nn - 4.0) / ((nn - 1.0) * (nn - 1.0) * (nn - 2.0)));
    return 2.0 * nn + first + second;
}

double xyz_c_expansion_jperp(int n, int m, double beta, double h, double j_x, double j_perp) {
    require_expansion_domain(n, m);
    const double nn = n;
    const double mm = m;
    const double d = nn * nn - mm * mm;
    const double t = std::tanh(beta * h);
    const double denom = (nn - 1.0) * (nn - 1.0) * (nn - 2.0);
    const double first = 2.0 * beta * (j_x + j_perp) * d / (nn - 1.0);
    const double second = 2.0 * beta * beta * d *
                          (j_x * j_x / (nn - 1.0) + j_x * j_perp * (mm * mm - nn * nn + 4.0 * nn - 4.0) / denom +
                           j_perp * j_perp * (mm * mm + nn - 2.0) / denom);
    return 2.0 * nn + d * t * t + first + second;
}

}  // namespace catlab
