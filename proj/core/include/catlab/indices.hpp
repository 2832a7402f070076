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

// Macroscopic-superposition indices: <C_{A,eta}>, the optimal witness
// projector, the trace-norm functional behind index q, the VCM behind
// index p, and finite-size exponent fits.

#include <optional>
#include <span>
#include <vector>

#include "catlab/spin_core.hpp"

namespace catlab {

/// Tr[rho [A, [A, eta]]]. eta must be Hermitian.
double expect_c(const QuantumState& rho, const Operator& a, const Operator& eta);
double expect_c(const QuantumState& rho, const AdditiveObservable& a, const Operator& eta);

/// 2N + (N^2 - M^2) tanh^2(beta h). Infinite betah gives the T = 0 value.
double c_closed_form_free(int n, int m, double betah);

/// Exact finite-N <C_{M_x, P'_z}> for free spins after an interval
/// measurement, evaluated in the log domain (valid for very large n).
/// It equals N^2 tanh^2(beta h) I(N, M+, M-) plus a remainder in [0, 2N].
double c_closed_form_interval(long long n, long long m_lo, long long m_hi, double betah);

/// ln sum_k binom(N, (N + M)/2) over parity-valid M in [a, b].
double interval_r_count(long long n, long long a, long long b);

/// I(N, M+, M-) = [r(M+,M+)(1 - a+^2) + r(M-,M-)(1 - a-^2)] / (2 r(M-,M+)),
/// a = M/N, with the endpoints snapped inward to the nearest admissible parity.
double i_function(long long n, long long m_lo, long long m_hi);

struct Witness {
    Operator projector;  ///< onto the positive eigenspace of [A, [A, rho]]
    double value = 0.0;  ///< sum of the positive eigenvalues = trace_norm / 2
};

/// Exact maximizer of Tr[rho C_{A, eta}] over projectors eta. When the
/// double commutator has no positive eigenvalue the projector is zero.
Witness optimal_witness(const QuantumState& rho, const Operator& a);
Witness optimal_witness(const QuantumState& rho, const AdditiveObservable& a);

/// Tr |[A, [A, rho]]|.
double q_functional(const QuantumState& rho, const Operator& a);
double q_functional(const QuantumState& rho, const AdditiveObservable& a);

/// Unit vector (sin t cos p, sin t sin p, cos t).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    PauliTriple unit() const;
};

/// `count` golden-spiral points on the upper hemisphere. A(-d) = -A(d)
/// leaves C invariant, so the hemisphere covers every uniform observable.
std::vector<Direction> golden_spiral_hemisphere(int count);

struct SearchOptions {
    int grid_points = 312;
    bool refine = true;
    int refine_starts = 3;
    int refine_max_evals = 120;
    /// For pure states, also score the top-VCM observable (site dependent).
    bool include_vcm_candidate = true;
};

struct ExponentFit {
    double exponent = 0.0;
    double stderr_ = 0.0;
    double intercept = 0.0;
};

struct CatnessReport {
    double c_value = 0.0;
    AdditiveObservable a_used = AdditiveObservable::uniform(1, {0.0, 0.0, 1.0});
    Operator eta;
    double eta_trace = 0.0;
    std::optional<Direction> direction;  ///< empty when the VCM candidate won
    int evaluations = 0;
    std::optional<ExponentFit> q_fit;
    std::optional<ExponentFit> p_fit;
};

/// Best Tr[rho C_{A, eta}] over uniform unit-direction observables (grid plus
/// Nelder-Mead refinement) with the exact optimal eta for each candidate.
/// Deterministic for fixed options.
CatnessReport observable_search(const QuantumState& rho, const SearchOptions& options = {});

/// Value of the optimal witness for the uniform observable along `dir`.
double direction_value(const QuantumState& rho, const Direction& dir);

/// V_{ai,bj} = <s_a^i s_b^j> - <s_a^i><s_b^j>, row index 3*(i-1) + a with a in (x,y,z).
struct VcmMatrix {
    int n = 0;
    Matrix entries;
    double e_max = 0.0;

    /// Additive observable from the top eigenvector of Re V (the part that
    /// determines <(Delta A)^2> for real coefficients), scaled so that
    /// sum_i |c_i|^2 = n.
    AdditiveObservable top_observable() const;
};

/// Throws ContractViolation unless purity > 1 - 1e-10.
VcmMatrix vcm(const QuantumState& pure);

struct ScalingPoint {
    double n = 0.0;
    double value = 0.0;
};

/// Least-squares slope of ln(value) against ln(n). With apply_q_floor each
/// value is replaced by max(value, n) first. Needs at least 3 points with
/// positive values.
ExponentFit fit_exponent(std::span<const ScalingPoint> points, bool apply_q_floor = false);

enum class Fixture { CatPlus, CatMinus, RhoEx1, RhoEx2, RhoEx3, Psi1, Psi2 };

// Fixture states use the labelling in which |0> is spin down (sigma_z = -1)
// and |1> is spin up, so |0_i> has M_z = -(N-2) as in the usual presentation.

QuantumState fixture_state(Fixture kind, int n);

/// |psi_i> = (|0_i> + |1_i>)/sqrt(2), the i-th component of rho_ex1 (1-based i).
QuantumState ex1_component(int i, int n);

/// W = sum_i (|0_i><1_i| + |1_i><0_i|).
Operator witness_w(int n);

}  // namespace catlab
