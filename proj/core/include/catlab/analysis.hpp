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

// Diagnostics around the conversion: purity, energy and transverse moments,
// symmetry and sufficiency checks, time evolution, the Pauli decomposition of
// the verification observable, and feasibility arithmetic.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catlab/indices.hpp"
#include "catlab/measurement.hpp"
#include "catlab/thermal.hpp"

namespace catlab {

double purity(const QuantumState& rho);

/// Z_post(2 beta h) / Z_post(beta h)^2 for free spins, an upper bound on the
/// purity of the post-measurement state.
double purity_bound_free(int n, int m, double betah);

struct EnergyMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// <H> and <H^2> - <H>^2 in state rho.
EnergyMoments energy_moments(const QuantumState& rho, const Operator& h_op);

/// Free spins after an M_z = m outcome: mean 0, variance h^2 (N + (N^2 - M^2)/2 tanh^2(beta h)).
EnergyMoments energy_moments_free_closed(int n, int m, double betah, double h);

/// Inverse temperature at which free spins in equilibrium have mean energy
/// `mean_energy`: -N h tanh(beta h) = E. Returns +-infinity at the edges of
/// the caloric curve.
double equivalent_beta_free(int n, double h, double mean_energy);

struct TransverseMoments {
    double mx = 0.0;
    double my = 0.0;
    double mx2 = 0.0;
};

TransverseMoments transverse_moments(const QuantumState& rho);

struct EvennessPoint {
    double h = 0.0;
    double log_z_plus = 0.0;
    double log_z_minus = 0.0;
    double c_plus = 0.0;
    double c_minus = 0.0;
};

struct EvennessReport {
    /// max-entry residual of R_z V R_z^dagger - V, R_z = prod_i sigma_z^i
    double rz_residual = 0.0;
    std::vector<EvennessPoint> points;
    double max_log_z_diff = 0.0;
    double max_c_diff = 0.0;  ///< relative to 1 + |C|

    bool rz_invariant(double tol = 1e-10) const { return rz_residual <= tol; }
    bool even(double tol = 1e-10) const { return max_log_z_diff <= tol && max_c_diff <= tol; }
};

/// Compares Z_post and <C_{M_x, P_z}> at +h and -h for H = -h M_x + V over
/// the h grid at fixed beta.
EvennessReport symmetry_even_in_h(const Operator& interaction, int m, double beta, std::span<const double> h_grid);

struct SectorCheck {
    double b_value = 0.0;
    double probability = 0.0;
    bool skipped = false;          ///< probability below kImpossibleOutcomeFloor
    double leak_residual = 0.0;   ///< max_xi |P_b A |b, xi>|
    std::optional<double> ratio;   ///< Tr[P rho P A^2] / Tr[P rho P]
};

struct SufficiencyReport {
    std::vector<SectorCheck> sectors;
    double max_leak_residual = 0.0;
    std::vector<std::string> notices;

    bool leak_free(double tol = 1e-10) const { return max_leak_residual <= tol; }
};

/// Checks that A maps every eigenvector of B with an outcome value out of
/// its own eigenspace, and records <A^2> in each post-measurement state.
SufficiencyReport sufficient_conditions_check(const Operator& a, const Operator& b, const QuantumState& rho_pre,
                                              std::span<const double> outcomes);

struct AveragedIdentityReport {
    double averaged_post = 0.0;  ///< sum_M Pr(M) <M_x^2 + M_y^2>_post
    double pre_value = 0.0;      ///< <M_x^2 + M_y^2>_pre
    double mx2_pre = 0.0;
    double mx_pre_sq = 0.0;
    double residual = 0.0;

    bool holds(double tol = 1e-10) const { return residual <= tol * (1.0 + std::abs(pre_value)); }
    bool chain_holds(double tol = 1e-10) const {
        return pre_value >= mx2_pre - tol && mx2_pre >= mx_pre_sq - tol;
    }
};

AveragedIdentityReport averaged_identity_check(const QuantumState& rho_pre);

struct TimeEvolutionReport {
    bool applicable = false;
    double commutator_norm = 0.0;  ///< max-entry norm of [H, M_x]
    double c_initial = 0.0;
    std::vector<double> times;
    std::vector<double> values;
    double max_deviation = 0.0;
    std::string notice;
};

/// Tr[U rho U^dagger C_{M_x, U eta U^dagger}] over the time grid with
/// U = exp(-i H t). Skipped with a notice unless [H, M_x] = 0.
TimeEvolutionReport time_evolution_invariance(const QuantumState& rho_post, const Operator& eta,
                                              const Operator& h_op, std::span<const double> t_grid);

struct PauliTerm {
    double coefficient = 0.0;
    std::string label;  ///< over {I, X, Y, Z}, site 1 first
};

struct PauliDecomposition {
    std::vector<PauliTerm> terms;
    int settings = 0;
    double reconstruction_error = 0.0;
};

/// Real Pauli expansion of an arbitrary Hermitian operator.
std::vector<PauliTerm> pauli_terms(const Operator& op, double drop_tol = 1e-12);

/// Number of measurement settings after greedy grouping of strings whose
/// axes agree site by site (I matches anything).
int count_settings(std::span<const PauliTerm> terms);

/// Expansion of [M_x, [M_x, P_z(m)]].
PauliDecomposition pauli_decomposition_c(int n, int m, const DenseLimits& limits = {});

struct PhysicalConstants {
    double mu_b = 0.0;  ///< J/T
    double mu0 = 0.0;   ///< T m / A
};

inline constexpr PhysicalConstants kCodataConstants{9.2740100783e-24, 1.25663706212e-6};
inline constexpr PhysicalConstants kRoundedConstants{9.3e-24, 1.2e-6};

struct FeasibilityInput {
    double tau_single = 0.0;    ///< s
    int n_spins = 0;
    double distance_r = 0.0;    ///< m
    double sensitivity = 0.0;   ///< T / sqrt(Hz)
    double duty_fraction = 1.0;
};

struct FeasibilityReport {
    double tau_coh = 0.0;           ///< s
    double window = 0.0;            ///< s
    double resolvable_field = 0.0;  ///< T
    double single_spin_field = 0.0; ///< T
    bool feasible = false;
};

/// delta_B sqrt(1 / (2 t)).
double resolvable_field(double sensitivity, double window);

/// mu_B mu0 / (2 pi r^3).
double single_spin_field(double distance_r, const PhysicalConstants& constants = kCodataConstants);

FeasibilityReport feasibility_calc(const FeasibilityInput& inp, const PhysicalConstants& constants = kCodataConstants);

}  // namespace catlab
