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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "catlab/analysis.hpp"
#include "catlab/executor.hpp"
#include "catlab/indices.hpp"
#include "catlab/measurement.hpp"
#include "catlab/runners.hpp"
#include "catlab/thermal.hpp"

namespace catlab::cli {

namespace {

struct Tracker {
    double worst = 0.0;
    double tol = 0.0;
    bool ok = true;
    std::string detail;

    // Records |got - want| relative to 1 + |want|.
    void rel(double got, double want, const std::string& where) {
        const double r = std::abs(got - want) / (1.0 + std::abs(want));
        bump(r, where);
    }
    void abs(double residual, const std::string& where) { bump(std::abs(residual), where); }
    void require(bool cond, const std::string& where) {
        if (!cond && ok) detail = where;
        ok = ok && cond;
    }

   private:
    void bump(double r, const std::string& where) {
        if (!(r <= tol)) {
            if (ok) detail = where;
            ok = false;
        }
        if (!(r <= worst)) worst = r;
    }
};

FamilyResult finish(const std::string& name, const Tracker& t) {
    return FamilyResult{name, t.ok, t.worst, t.tol, t.detail};
}

std::string at(int n, double x) {
    std::ostringstream os;
    os << "n=" << n << " at " << x;
    return os.str();
}

std::vector<int> even_sizes(int n_max) {
    std::vector<int> ns;
    for (int n = 2; n <= std::min(n_max, 8); n += 2) ns.push_back(n);
    return ns;
}

const std::vector<double> kBetahGrid = {0.0, 0.3, -0.3, 1.0, -1.0, 3.0, -3.0};

// Free-spin Gibbs state at h = 1 built site by site from
// exp(b sigma_x) = cosh(b) + sinh(b) sigma_x.
Matrix product_gibbs(int n, double betah) {
    Matrix site(2, 2);
    const double c = std::cosh(betah), s = std::sinh(betah);
    site << c, s, s, c;
    site /= 2.0 * c;
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) out = kron(out, site);
    return out;
}

// Diagonal projector onto M_z = m, with M_z counted from the bit pattern directly.
Matrix diag_projector(int n, int m_lo, int m_hi) {
    const Eigen::Index d = Eigen::Index(1) << n;
    Matrix p = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        int down = 0;
        for (int b = 0; b < n; ++b) down += (i >> b) & 1;
        const int mz = n - 2 * down;
        if (mz >= m_lo && mz <= m_hi) p(i, i) = 1.0;
    }
    return p;
}

Matrix mx_matrix(int n) { return total_magnetization(Axis::X, n).realize().matrix(); }

// <C> = Tr[rho (A^2 eta + eta A^2 - 2 A eta A)] written out by hand.
double c_of(const Matrix& rho, const Matrix& a, const Matrix& eta) {
    const Matrix a2 = a * a;
    const Matrix cop = a2 * eta + eta * a2 - 2.0 * a * eta * a;
    return (rho * cop).trace().real();
}

Matrix random_density(std::mt19937_64& rng, Eigen::Index d, Eigen::Index rank) {
    std::normal_distribution<double> g;
    Matrix x(d, rank);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < rank; ++j) x(i, j) = Complex(g(rng), g(rng));
    }
    Matrix rho = x * x.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

double binom(int n, int k) { return std::exp(log_binomial(n, k)); }

FamilyResult closed_form_c(int n_max, bool fault) {
    Tracker t{0.0, 1e-10};
    for (int n : even_sizes(n_max)) {
        const Matrix mx = mx_matrix(n);
        for (double bh : kBetahGrid) {
            // negative beta h runs as a flipped field
            const QuantumState rho = gibbs_state(SpinHamiltonian::free(n, bh < 0 ? -1.0 : 1.0), std::abs(bh));
            for (int m = -n; m <= n; m += 2) {
                const QuantumState post = post_state(rho, OutcomeSpec::exact(m));
                const double dense = expect_c(post, Operator(mx), mz_projector(n, m));
                double closed = c_closed_form_free(n, m, bh);
                if (fault) closed *= 1.0 + 1e-6;
                t.rel(dense, closed, at(n, bh));
            }
        }
    }
    return finish("closed_form_c", t);
}

FamilyResult partition_functions(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n : even_sizes(n_max)) {
        const Operator h = SpinHamiltonian::free(n, 1.0).realize();
        for (double bh : kBetahGrid) {
            const Matrix e = herm_expm(h, -bh).matrix();
            t.rel(std::exp(log_free_partition_eq(n, bh)), e.trace().real(), at(n, bh));
            for (int m = -n; m <= n; m += 2) {
                const Matrix p = diag_projector(n, m, m);
                t.rel(std::exp(log_free_partition_post(n, m, bh)), (p * e * p).trace().real(), at(n, bh));
            }
        }
    }
    // log-domain normalization at large N
    for (int n : {100, 1000}) {
        for (double bh : {0.3, 1.0, 3.0}) {
            double s = -INFINITY;
            for (int m = -n; m <= n; m += 2) s = log_add_exp(s, log_free_partition_post(n, m, bh));
            t.abs(std::expm1(s - log_free_partition_eq(n, bh)), at(n, bh));
        }
    }
    return finish("partition_functions", t);
}

FamilyResult probability_normalization(int n_max) {
    Tracker t{0.0, 1e-12};
    for (int n : even_sizes(n_max)) {
        for (double bh : kBetahGrid) {
            const Matrix rho = product_gibbs(n, bh);
            const OutcomeDistribution dist = outcome_distribution(QuantumState::from_density(rho));
            double total = 0.0;
            for (std::size_t k = 0; k < dist.support.size(); ++k) {
                const int m = dist.support[k];
                total += dist.probs[k];
                t.abs(dist.probs[k] - binom(n, (n - m) / 2) / std::ldexp(1.0, n), at(n, bh));
            }
            t.abs(total - 1.0, at(n, bh));
        }
    }
    return finish("probability_normalization", t);
}

FamilyResult interval_closed_form(int n_max) {
    Tracker t{0.0, 1e-9};
    const int n = std::min(n_max, 8);
    const Matrix mx = mx_matrix(n);
    for (double bh : {0.3, 1.0, 3.0}) {
        const Matrix rho = product_gibbs(n, bh);
        for (int lo = -n; lo <= n; lo += 2) {
            for (int hi = lo; hi <= n; hi += 2) {
                const Matrix p = diag_projector(n, lo, hi);
                Matrix post = p * rho * p;
                post /= post.trace().real();
                const double dense = c_of(post, mx, p);
                t.rel(c_closed_form_interval(n, lo, hi, bh), dense, at(n, bh));
                const double iv = i_function(n, lo, hi);
                t.require(iv >= 0.0 && iv <= 1.0, "I outside [0, 1]");
            }
        }
    }
    t.abs(i_function(n, -n, n), "full range I");
    return finish("interval_closed_form", t);
}

FamilyResult purity_bound(int n_max) {
    Tracker t{0.0, 1e-12};
    for (int n : even_sizes(n_max)) {
        for (double bh : kBetahGrid) {
            const Matrix rho = product_gibbs(n, bh);
            for (int m = -n; m <= n; m += 2) {
                const Matrix p = diag_projector(n, m, m);
                Matrix post = p * rho * p;
                post /= post.trace().real();
                const double pur = (post * post).trace().real();
                const double bound = purity_bound_free(n, m, bh);
                t.abs(std::max(0.0, pur - bound) / (1.0 + bound), at(n, bh));
                if (bh == 0.0) t.rel(pur, bound, at(n, bh));
            }
        }
    }
    return finish("purity_bound", t);
}

FamilyResult energy_moments_family(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n : even_sizes(n_max)) {
        const Matrix h = -mx_matrix(n);
        for (double bh : kBetahGrid) {
            const Matrix rho = product_gibbs(n, bh);
            for (int m = -n; m <= n; m += 2) {
                const Matrix p = diag_projector(n, m, m);
                Matrix post = p * rho * p;
                post /= post.trace().real();
                const double mean = (post * h).trace().real();
                const double var = (post * h * h).trace().real() - mean * mean;
                const EnergyMoments cf = energy_moments_free_closed(n, m, bh, 1.0);
                t.abs(mean - cf.mean, at(n, bh));
                t.rel(var, cf.variance, at(n, bh));
            }
        }
    }
    return finish("energy_moments", t);
}

FamilyResult xyz_expansion(int n_max) {
    Tracker t{0.0, 2.0};
    const int n = std::min(n_max, 6);
    const Couplings j{0.3, 0.2, 0.4};
    const Operator h = SpinHamiltonian{n, 1.0, j, Boundary::Periodic}.realize();
    const Operator mx = total_magnetization(Axis::X, n).realize();
    for (int m : {0, 2}) {
        double residual[2];
        const double betas[2] = {0.05, 0.025};
        for (int k = 0; k < 2; ++k) {
            const QuantumState post = post_state(gibbs_state(h, betas[k]), OutcomeSpec::exact(m));
            residual[k] = std::abs(expect_c(post, mx, mz_projector(n, m)) - xyz_c_expansion(n, m, betas[k], 1.0, j));
        }
        // distance of the halving ratio from 8
        t.abs(residual[0] / residual[1] - 8.0, "m=" + std::to_string(m));
    }
    return finish("xyz_expansion", t);
}

FamilyResult evenness_in_h(int n_max) {
    Tracker t{0.0, 1e-10};
    const int n = std::min(n_max, 6);
    const std::vector<double> grid = {0.3, 1.0, 2.0};
    const Operator xyz = SpinHamiltonian{n, 0.0, {0.3, 0.2, 0.4}, Boundary::Periodic}.interaction();
    for (int m : {0, 2}) {
        const EvennessReport r = symmetry_even_in_h(xyz, m, 1.0, grid);
        t.abs(r.rz_residual, "rz m=" + std::to_string(m));
        t.abs(r.max_log_z_diff, "log Z m=" + std::to_string(m));
        t.abs(r.max_c_diff, "C m=" + std::to_string(m));
    }
    return finish("evenness_in_h", t);
}

FamilyResult witness_half_trace_norm() {
    Tracker t{0.0, 1e-10};
    std::mt19937_64 rng(4);
    const int n = 4;
    const Matrix mz = total_magnetization(Axis::Z, n).realize().matrix();
    for (int k = 0; k < 50; ++k) {
        const Matrix rho = random_density(rng, 16, 1 + k % 16);
        Matrix g(16, 16);
        std::normal_distribution<double> nd;
        for (Eigen::Index i = 0; i < 16; ++i) {
            for (Eigen::Index c = 0; c < 16; ++c) g(i, c) = Complex(nd(rng), nd(rng));
        }
        const Matrix a = (k % 2) ? Matrix(0.5 * (g + g.adjoint())) : mz;
        const Matrix dc = a * (a * rho - rho * a) - (a * rho - rho * a) * a;
        const Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (dc + dc.adjoint()));
        const double half = 0.5 * es.eigenvalues().cwiseAbs().sum();
        const Witness w = optimal_witness(QuantumState::from_density(rho), Operator(a));
        t.rel(w.value, half, "instance " + std::to_string(k));
        t.rel(c_of(rho, a, w.projector.matrix()), half, "realized " + std::to_string(k));
    }
    return finish("witness_half_trace_norm", t);
}

FamilyResult vcm_cat(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n = 2; n <= std::min(n_max, 6); n += 2) {
        const VcmMatrix v = vcm(fixture_state(Fixture::CatPlus, n));
        t.rel(v.e_max, n, "n=" + std::to_string(n));
    }
    return finish("vcm_cat", t);
}

FamilyResult fixtures(int n_max) {
    Tracker t{0.0, 1e-12};
    for (int n = 4; n <= std::min(n_max, 8); n += 2) {
        const QuantumState ex1 = fixture_state(Fixture::RhoEx1, n);
        t.abs((ex1.matrix() * witness_w(n).matrix()).trace().real() - 1.0, "W n=" + std::to_string(n));
        t.abs(q_functional(fixture_state(Fixture::RhoEx2, n), total_magnetization(Axis::Z, n)),
              "Q n=" + std::to_string(n));
        const QuantumState cat = fixture_state(Fixture::CatPlus, n);
        const double four_n2 = 4.0 * n * n;
        t.rel(q_functional(cat, total_magnetization(Axis::Z, n)), four_n2, "cat n=" + std::to_string(n));
    }
    return finish("fixtures", t);
}

FamilyResult pauli_decomposition(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n = 2; n <= std::min(n_max, 6); n += 2) {
        const PauliDecomposition d = pauli_decomposition_c(n, 0);
        t.abs(d.reconstruction_error, "n=" + std::to_string(n));
        t.require(d.settings <= (n * n - n) / 2 + 1, "settings bound n=" + std::to_string(n));
        if (n == 4) t.require(d.settings == 7, "n=4 settings");
    }
    return finish("pauli_decomposition", t);
}

FamilyResult feasibility() {
    Tracker t{0.0, 0.02};
    const FeasibilityInput in{470e-6, 100, 3e-6, 160e-18, 0.75};
    const FeasibilityReport r = feasibility_calc(in, kRoundedConstants);
    t.abs(r.tau_coh / 4.7e-6 - 1.0, "tau_coh");
    t.abs(resolvable_field(160e-18, 3.5e-6) / 60e-15 - 1.0, "resolvable field");
    t.abs(r.single_spin_field / 65e-15 - 1.0, "single-spin field");
    return finish("feasibility", t);
}

FamilyResult averaged_identity() {
    Tracker t{0.0, 1e-10};
    std::mt19937_64 rng(100);
    const int n = 4;
    const Matrix mx = mx_matrix(n);
    const Matrix my = total_magnetization(Axis::Y, n).realize().matrix();
    const Matrix t2 = mx * mx + my * my;
    for (int k = 0; k < 100; ++k) {
        const Matrix rho = random_density(rng, 16, 1 + k % 16);
        const AveragedIdentityReport r = averaged_identity_check(QuantumState::from_density(rho));
        double avg = 0.0;
        for (int m = -n; m <= n; m += 2) {
            const Matrix p = diag_projector(n, m, m);
            avg += (p * rho * p * t2).trace().real();
        }
        t.rel(r.averaged_post, avg, "instance " + std::to_string(k));
        t.rel(r.averaged_post, (rho * t2).trace().real(), "identity " + std::to_string(k));
        t.require(r.chain_holds(), "chain " + std::to_string(k));
    }
    return finish("averaged_identity", t);
}

FamilyResult double_projection(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n = 4; n <= std::min(n_max, 8); n += 2) {
        const Matrix mx = mx_matrix(n);
        // x-basis projector: conjugate the z projector by the site-wise Hadamard
        Matrix had(2, 2);
        had << 1, 1, 1, -1;
        had /= std::sqrt(2.0);
        Matrix u = Matrix::Identity(1, 1);
        for (int k = 0; k < n; ++k) u = kron(u, had);
        for (int mxv = -n; mxv <= n; mxv += 2) {
            const Matrix px = u * diag_projector(n, mxv, mxv) * u.adjoint();
            for (int mzv = -n; mzv <= n; mzv += 2) {
                const Matrix pz = diag_projector(n, mzv, mzv);
                Matrix s = pz * px * pz;
                const double tr = s.trace().real();
                if (tr < 1e-12) continue;
                s /= tr;
                t.rel(c_of(s, mx, pz), double_projection_c(n, mxv, mzv), at(n, mxv));
            }
        }
    }
    return finish("double_projection", t);
}

FamilyResult time_evolution(int n_max) {
    Tracker t{0.0, 1e-9};
    const int n = std::min(n_max, 6);
    const Operator h = SpinHamiltonian::free(n, 1.0).realize();
    const QuantumState post = post_state(gibbs_state(h, 1.0), OutcomeSpec::exact(0));
    const std::vector<double> ts = {0.1, 1.0, 10.0};
    const TimeEvolutionReport r = time_evolution_invariance(post, mz_projector(n, 0), h, ts);
    t.require(r.applicable, "not applicable");
    t.abs(r.max_deviation, "deviation");
    t.rel(r.c_initial, c_closed_form_free(n, 0, 1.0), "initial value");
    return finish("time_evolution", t);
}

FamilyResult sector_leakage(int n_max) {
    Tracker t{0.0, 1e-10};
    for (int n = 2; n <= std::min(n_max, 8); n += 2) {
        const Operator mx = total_magnetization(Axis::X, n).realize();
        const Operator mz = total_magnetization(Axis::Z, n).realize();
        std::vector<double> outcomes;
        for (int m = -n; m <= n; m += 2) outcomes.push_back(m);
        const SufficiencyReport r = sufficient_conditions_check(mx, mz, gibbs_state(SpinHamiltonian::free(n, 1.0), 1.0), outcomes);
        t.abs(r.max_leak_residual, "n=" + std::to_string(n));
    }
    return finish("sector_leakage", t);
}

FamilyResult projector_algebra(int n_max) {
    Tracker t{0.0, 1e-12};
    for (int n = 1; n <= std::min(n_max, 8); ++n) {
        const Eigen::Index d = Eigen::Index(1) << n;
        Matrix sum = Matrix::Zero(d, d);
        for (int m = -n; m <= n; m += 2) {
            const Matrix p = mz_projector(n, m).matrix();
            t.abs((p * p - p).cwiseAbs().maxCoeff(), "idempotent n=" + std::to_string(n));
            t.abs((p - diag_projector(n, m, m)).cwiseAbs().maxCoeff(), "basis n=" + std::to_string(n));
            t.abs(p.trace().real() - binom(n, (n - m) / 2), "rank n=" + std::to_string(n));
            sum += p;
        }
        t.abs((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), "resolution n=" + std::to_string(n));
        const Matrix pi = mz_interval_projector(n, -n, n).matrix();
        t.abs((pi - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), "full interval n=" + std::to_string(n));
    }
    return finish("projector_algebra", t);
}

}  // namespace

std::vector<FamilyResult> run_oracle_suite(int n_max, bool inject_fault, int workers) {
    const std::vector<std::function<FamilyResult()>> families = {
        [&] { return closed_form_c(n_max, inject_fault); },
        [&] { return partition_functions(n_max); },
        [&] { return probability_normalization(n_max); },
        [&] { return interval_closed_form(n_max); },
        [&] { return purity_bound(n_max); },
        [&] { return energy_moments_family(n_max); },
        [&] { return xyz_expansion(n_max); },
        [&] { return evenness_in_h(n_max); },
        [] { return witness_half_trace_norm(); },
        [&] { return vcm_cat(n_max); },
        [&] { return fixtures(n_max); },
        [&] { return pauli_decomposition(n_max); },
        [] { return feasibility(); },
        [] { return averaged_identity(); },
        [&] { return double_projection(n_max); },
        [&] { return time_evolution(n_max); },
        [&] { return sector_leakage(n_max); },
        [&] { return projector_algebra(n_max); },
    };
    return run_ordered<FamilyResult>(families.size(), workers, [&](std::size_t k) {
        try {
            return families[k]();
        } catch (const std::exception& e) {
            return FamilyResult{"family " + std::to_string(k), false, INFINITY, 0.0, e.what()};
        }
    });
}

}  // namespace catlab::cli
