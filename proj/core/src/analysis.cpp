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

#include "catlab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace catlab {

namespace {

Operator mx_op(int n) { return total_magnetization(Axis::X, n).realize(); }

double real_trace_product(const Matrix& a, const Matrix& b) {
    // Re Tr[a b]
    return a.transpose().cwiseProduct(b).sum().real();
}

// Unitary exp(-i H t) from the spectrum of H.
Matrix propagator(const HermitianSpectrum& spec, double t) {
    Vector phases(spec.values.size());
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) phases(k) = std::polar(1.0, -spec.values(k) * t);
    return spec.vectors * phases.asDiagonal() * spec.vectors.adjoint();
}

// ln Tr[P exp(-beta H)] and the normalized post-measurement state.
std::pair<double, QuantumState> post_from_hamiltonian(const Operator& h_op, double beta, const Operator& p) {
    const HermitianSpectrum spec = eigh(h_op);
    const double e0 = spec.values.minCoeff();
    const Matrix w = spec.map([&](double e) { return std::exp(-beta * (e - e0)); });
    const Matrix pwp = p.matrix() * w * p.matrix();
    const double tr = pwp.trace().real();
    return {std::log(tr) - beta * e0,
            QuantumState::from_density(pwp / tr, QuantumState::Check::Structural)};
}

}  // namespace

double purity(const QuantumState& rho) { return rho.purity(); }

double purity_bound_free(int n, int m, double betah) {
    return std::exp(log_free_partition_post(n, m, 2.0 * betah) - 2.0 * log_free_partition_post(n, m, betah));
}

EnergyMoments energy_moments(const QuantumState& rho, const Operator& h_op) {
    if (rho.dim() != h_op.dim()) throw ContractViolation("energy_moments: dimension mismatch");
    const Matrix rh = rho.matrix() * h_op.matrix();
    const double mean = rh.trace().real();
    const double second = real_trace_product(rh, h_op.matrix());
    return {mean, second - mean * mean};
}

EnergyMoments energy_moments_free_closed(int n, int m, double betah, double h) {
    if (!is_valid_mz(n, m)) {
        throw InvalidOutcomeError("M = " + std::to_string(m) + " is not an M_z eigenvalue for " + std::to_string(n) +
                                  " spins");
    }
    const double t = std::tanh(betah);
    const double nn = n;
    const double mm = m;
    return {0.0, h * h * (nn + (nn * nn - mm * mm) / 2.0 * t * t)};
}

double equivalent_beta_free(int n, double h, double mean_energy) {
    if (n < 1 || h == 0.0) throw DomainError("equivalent temperature needs n >= 1 and h != 0");
    const double x = -mean_energy / (n * h);
    if (x >= 1.0) return std::numeric_limits<double>::infinity() * (h > 0 ? 1.0 : -1.0);
    if (x <= -1.0) return -std::numeric_limits<double>::infinity() * (h > 0 ? 1.0 : -1.0);
    return std::atanh(x) / h;
}

TransverseMoments transverse_moments(const QuantumState& rho) {
    const int n = rho.num_spins();
    const Operator mx = mx_op(n);
    const Operator my = total_magnetization(Axis::Y, n).realize();
    const Matrix rmx = rho.matrix() * mx.matrix();
    return {rmx.trace().real(), expectation(rho, my).real(), real_trace_product(rmx, mx.matrix())};
}

EvennessReport symmetry_even_in_h(const Operator& interaction, int m, double beta, std::span<const double> h_grid) {
    const int n = interaction.num_spins();
    if (!interaction.is_hermitian()) throw ContractViolation("interaction is not Hermitian");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and non-negative");
    EvennessReport report;
    // R_z is diagonal with entries (-1)^{popcount}
    const Eigen::Index d = interaction.dim();
    const Matrix& v = interaction.matrix();
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const int sign = (std::popcount(static_cast<std::uint64_t>(r ^ c)) % 2) ? -1 : 1;
            report.rz_residual = std::max(report.rz_residual, std::abs(static_cast<double>(sign) * v(r, c) - v(r, c)));
        }
    }
    const Operator mx = mx_op(n);
    const Operator p = mz_projector(n, m);
    for (double h : h_grid) {
        EvennessPoint pt;
        pt.h = h;
        const auto [lz_p, rho_p] = post_from_hamiltonian(interaction - Complex(h) * mx, beta, p);
        const auto [lz_m, rho_m] = post_from_hamiltonian(interaction + Complex(h) * mx, beta, p);
        pt.log_z_plus = lz_p;
        pt.log_z_minus = lz_m;
        pt.c_plus = expect_c(rho_p, mx, p);
        pt.c_minus = expect_c(rho_m, mx, p);
        report.max_log_z_diff = std::max(report.max_log_z_diff, std::abs(lz_p - lz_m));
        report.max_c_diff =
            std::max(report.max_c_diff, std::abs(pt.c_plus - pt.c_minus) / (1.0 + std::abs(pt.c_plus)));
        report.points.push_back(pt);
    }
    return report;
}

SufficiencyReport sufficient_conditions_check(const Operator& a, const Operator& b, const QuantumState& rho_pre,
                                              std::span<const double> outcomes) {
    if (a.dim() != b.dim() || a.dim() != rho_pre.dim()) throw ContractViolation("sufficiency check: dimension mismatch");
    if (!a.is_hermitian() || !b.is_hermitian()) throw ContractViolation("sufficiency check: observables must be Hermitian");
    const HermitianSpectrum spec = eigh(b);
    const Matrix a2 = a.matrix() * a.matrix();
    SufficiencyReport report;
    for (double value : outcomes) {
        SectorCheck sc;
        sc.b_value = value;
        std::vector<Eigen::Index> cols;
        for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
            if (std::abs(spec.values(k) - value) <= 1e-9 * (1.0 + std::abs(value))) cols.push_back(k);
        }
        if (cols.empty()) {
            sc.skipped = true;
            report.notices.push_back("no eigenvalue " + std::to_string(value) + " of b; sector skipped");
            report.sectors.push_back(sc);
            continue;
        }
        Matrix basis(b.dim(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = spec.vectors.col(cols[c]);
        // P_b A |b, xi> expressed in the sector basis
        const Matrix block = basis.adjoint() * a.matrix() * basis;
        for (Eigen::Index c = 0; c < block.cols(); ++c) sc.leak_residual = std::max(sc.leak_residual, block.col(c).norm());
        report.max_leak_residual = std::max(report.max_leak_residual, sc.leak_residual);

        const Matrix rho_sector = basis.adjoint() * rho_pre.matrix() * basis;
        sc.probability = std::max(0.0, rho_sector.trace().real());
        if (sc.probability < kImpossibleOutcomeFloor) {
            sc.skipped = true;
            report.notices.push_back("outcome " + std::to_string(value) + " has zero probability; ratio skipped");
        } else {
            const Matrix a2_sector = basis.adjoint() * a2 * basis;
            sc.ratio = real_trace_product(rho_sector, a2_sector) / sc.probability;
        }
        report.sectors.push_back(sc);
    }
    return report;
}

AveragedIdentityReport averaged_identity_check(const QuantumState& rho_pre) {
    const int n = rho_pre.num_spins();
    const Operator mx = mx_op(n);
    const Operator my = total_magnetization(Axis::Y, n).realize();
    const Matrix t = mx.matrix() * mx.matrix() + my.matrix() * my.matrix();
    AveragedIdentityReport r;
    r.pre_value = real_trace_product(rho_pre.matrix(), t);
    r.mx2_pre = real_trace_product(rho_pre.matrix(), mx.matrix() * mx.matrix());
    const double mx_mean = expectation(rho_pre, mx).real();
    r.mx_pre_sq = mx_mean * mx_mean;
    for (int m = -n; m <= n; m += 2) {
        const OutcomeSpec spec = OutcomeSpec::exact(m);
        if (outcome_probability(rho_pre, spec) < kImpossibleOutcomeFloor) continue;
        const double pr = outcome_probability(rho_pre, spec);
        const QuantumState post = post_state(rho_pre, spec);
        r.averaged_post += pr * real_trace_product(post.matrix(), t);
    }
    r.residual = std::abs(r.averaged_post - r.pre_value);
    return r;
}

TimeEvolutionReport time_evolution_invariance(const QuantumState& rho_post, const Operator& eta,
                                              const Operator& h_op, std::span<const double> t_grid) {
    const int n = rho_post.num_spins();
    if (h_op.dim() != rho_post.dim() || eta.dim() != rho_post.dim()) {
        throw ContractViolation("time evolution: dimension mismatch");
    }
    const Operator mx = mx_op(n);
    TimeEvolutionReport r;
    r.commutator_norm = commutator(h_op, mx).matrix().cwiseAbs().maxCoeff();
    r.c_initial = expect_c(rho_post, mx, eta);
    if (r.commutator_norm > 1e-10) {
        r.notice = "[H, M_x] != 0 (max entry " + std::to_string(r.commutator_norm) + "); invariance not applicable";
        return r;
    }
    r.applicable = true;
    const HermitianSpectrum spec = eigh(h_op);
    for (double t : t_grid) {
        const Matrix u = propagator(spec, t);
        Matrix rho_t = u * rho_post.matrix() * u.adjoint();
        Matrix eta_t = u * eta.matrix() * u.adjoint();
        rho_t = 0.5 * (rho_t + rho_t.adjoint());
        eta_t = 0.5 * (eta_t + eta_t.adjoint());
        const double v = expect_c(QuantumState::from_density(std::move(rho_t), QuantumState::Check::Structural), mx,
                                  Operator(std::move(eta_t)));
        r.times.push_back(t);
        r.values.push_back(v);
        r.max_deviation = std::max(r.max_deviation, std::abs(v - r.c_initial));
    }
    return r;
}

std::vector<PauliTerm> pauli_terms(const Operator& op, double drop_tol) {
    const int n = op.num_spins();
    const Eigen::Index d = op.dim();
    Matrix t = op.matrix();
    // After processing a site, its (row bit, column bit) pair holds the Pauli
    // label: (0,0) I, (0,1) X, (1,0) Y, (1,1) Z.
    const Complex i_unit(0.0, 1.0);
    for (int site = 1; site <= n; ++site) {
        const Eigen::Index mask = Eigen::Index{1} << (n - site);
        for (Eigen::Index r = 0; r < d; ++r) {
            if (r & mask) continue;
            for (Eigen::Index c = 0; c < d; ++c) {
                if (c & mask) continue;
                const Complex m00 = t(r, c), m01 = t(r, c | mask), m10 = t(r | mask, c), m11 = t(r | mask, c | mask);
                t(r, c) = 0.5 * (m00 + m11);
                t(r, c | mask) = 0.5 * (m01 + m10);
                t(r | mask, c) = 0.5 * i_unit * (m01 - m10);
                t(r | mask, c | mask) = 0.5 * (m00 - m11);
            }
        }
    }
    std::vector<PauliTerm> out;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const Complex v = t(r, c);
            if (std::abs(v) <= drop_tol) continue;
            if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v))) {
                throw ContractViolation("operator has a complex Pauli coefficient; it is not Hermitian");
            }
            std::string label(static_cast<std::size_t>(n), 'I');
            for (int site = 1; site <= n; ++site) {
                const Eigen::Index mask = Eigen::Index{1} << (n - site);
                const bool rb = (r & mask) != 0;
                const bool cb = (c & mask) != 0;
                label[static_cast<std::size_t>(site - 1)] = rb ? (cb ? 'Z' : 'Y') : (cb ? 'X' : 'I');
            }
            out.push_back({v.real(), std::move(label)});
        }
    }
    std::sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) { return a.label < b.label; });
    return out;
}

int count_settings(std::span<const PauliTerm> terms) {
    std::vector<std::string> strings;
    for (const PauliTerm& t : terms) {
        if (t.label.find_first_not_of('I') != std::string::npos) strings.push_back(t.label);
    }
    auto weight = [](const std::string& s) { return std::count_if(s.begin(), s.end(), [](char c) { return c != 'I'; }); };
    std::stable_sort(strings.begin(), strings.end(), [&](const std::string& a, const std::string& b) {
        return weight(a) != weight(b) ? weight(a) > weight(b) : a < b;
    });
    std::vector<std::string> groups;
    for (const std::string& s : strings) {
        bool placed = false;
        for (std::string& g : groups) {
            bool ok = g.size() == s.size();
            for (std::size_t k = 0; ok && k < s.size(); ++k) ok = s[k] == 'I' || g[k] == 'I' || s[k] == g[k];
            if (!ok) continue;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (g[k] == 'I') g[k] = s[k];
            }
            placed = true;
            break;
        }
        if (!placed) groups.push_back(s);
    }
    return static_cast<int>(groups.size());
}

PauliDecomposition pauli_decomposition_c(int n, int m, const DenseLimits& limits) {
    require_capacity(n, limits);
    if (!is_valid_mz(n, m)) {
        throw InvalidOutcomeError("M = " + std::to_string(m) + " is not an M_z eigenvalue for " + std::to_string(n) +
                                  " spins");
    }
    const Operator c = double_commutator(total_magnetization(Axis::X, n).realize(limits), mz_projector(n, m, limits));
    PauliDecomposition out;
    out.terms = pauli_terms(c);
    out.settings = count_settings(out.terms);
    Matrix rebuilt = Matrix::Zero(c.dim(), c.dim());
    for (const PauliTerm& t : out.terms) rebuilt += t.coefficient * pauli_string(t.label, limits).matrix();
    out.reconstruction_error = max_abs_diff(rebuilt, c.matrix());
    return out;
}

double resolvable_field(double sensitivity, double window) {
    if (!(sensitivity > 0.0) || !(window > 0.0)) throw DomainError("sensitivity and window must be positive");
    return sensitivity * std::sqrt(1.0 / (2.0 * window));
}

double single_spin_field(double distance_r, const PhysicalConstants& constants) {
    if (!(distance_r > 0.0)) throw DomainError("distance must be positive");
    return constants.mu_b * constants.mu0 / (2.0 * std::numbers::pi * distance_r * distance_r * distance_r);
}

FeasibilityReport feasibility_calc(const FeasibilityInput& inp, const PhysicalConstants& constants) {
    if (!(inp.tau_single > 0.0) || inp.n_spins < 1 || !(inp.distance_r > 0.0) || !(inp.sensitivity > 0.0)) {
        throw DomainError("feasibility inputs must be positive");
    }
    if (!(inp.duty_fraction > 0.0) || inp.duty_fraction > 1.0) throw DomainError("duty_fraction must be in (0, 1]");
    FeasibilityReport r;
    r.tau_coh = inp.tau_single / inp.n_spins;
    r.window = inp.duty_fraction * r.tau_coh;
    r.resolvable_field = resolvable_field(inp.sensitivity, r.window);
    r.single_spin_field = single_spin_field(inp.distance_r, constants);
    r.feasible = r.single_spin_field > r.resolvable_field;
    return r;
}

}  // namespace catlab
