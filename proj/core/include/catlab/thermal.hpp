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

// Hamiltonians, Gibbs states and closed-form free-spin partition functions.

#include "catlab/spin_core.hpp"

namespace catlab {

enum class Boundary { Periodic, Open };

struct Couplings {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool is_zero() const { return x == 0.0 && y == 0.0 && z == 0.0; }
};

/// H = -h M_x - sum_i sum_a J_a sigma_a^i sigma_a^{i+1}
/// on a ring (periodic) or chain (open). The coupling sum is empty for J = 0.
struct SpinHamiltonian {
    int n = 1;
    double h = 0.0;
    Couplings j{};
    Boundary boundary = Boundary::Periodic;

    static SpinHamiltonian free(int n, double h) { return {n, h, {}, Boundary::Periodic}; }

    /// The interaction part -sum J_a sigma_a sigma_a alone.
    Operator interaction(const DenseLimits& limits = {}) const;
    Operator realize(const DenseLimits& limits = {}) const;
};

/// exp(-beta H) / Tr exp(-beta H), computed from the spectrum of H with the
/// ground energy shifted out so that large beta does not overflow.
QuantumState gibbs_state(const SpinHamiltonian& ham, double beta, const DenseLimits& limits = {});
QuantumState gibbs_state(const Operator& h_op, double beta);

/// Pure-state projector onto the lowest eigenvector, or the uniform mixture
/// over the ground manifold when it is degenerate (energies within
/// degeneracy_tol of the minimum).
QuantumState ground_state(const Operator& h_op, double degeneracy_tol = 1e-9);
QuantumState ground_state(const SpinHamiltonian& ham, const DenseLimits& limits = {});

/// ln binom(n, k) via log-gamma.
double log_binomial(long long n, long long k);

/// ln(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b);

/// ln cosh(x), stable for large |x|.
double log_cosh(double x);

/// ln Z_eq for free spins: n ln 2 + n ln cosh(beta h).
double log_free_partition_eq(long long n, double betah);

/// ln Tr[P_z exp(-beta H0) P_z] = ln binom(n, (n+m)/2) + n ln cosh(beta h).
double log_free_partition_post(long long n, long long m, double betah);

/// ln of the interval partition function: log-sum-exp of the binomials with
/// parity-valid M in [m_lo, m_hi], plus n ln cosh(beta h).
double log_interval_partition_post(long long n, long long m_lo, long long m_hi, double betah);

/// <C_{M_x, P_z}> of the periodic XYZ post-measurement state to second order
/// in beta. Requires n >= 3.
double xyz_c_expansion(int n, int m, double beta, double h, Couplings j);

/// Variant for J_y = J_z = j_perp that keeps the free-spin tanh^2(beta h)
/// exactly and expands only in the couplings. Requires n >= 3.
double xyz_c_expansion_jperp(int n, int m, double beta, double h, double j_x, double j_perp);

}  // namespace catlab
