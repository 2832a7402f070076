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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "catlab/analysis.hpp"
#include "catlab/indices.hpp"
#include "catlab/measurement.hpp"
#include "catlab/runners.hpp"
#include "catlab/thermal.hpp"

using namespace catlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string summary;
};

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

const std::vector<double> kGrid = {0.0, 0.3, -0.3, 1.0, -1.0, 3.0, -3.0};

// Library pipeline for the free-spin post-measurement state; negative beta h
// becomes a flipped field at |beta h|.
QuantumState lib_post(int n, int m, double bh) {
    const QuantumState rho = gibbs_state(SpinHamiltonian::free(n, bh < 0 ? -1.0 : 1.0), std::abs(bh));
    return post_state(rho, OutcomeSpec::exact(m));
}

oracle::Mat oracle_post(int n, int lo, int hi, double bh) {
    const oracle::Mat rho = oracle::gibbs(oracle::xyz_hamiltonian(n, 1.0, 0, 0, 0), bh);
    return oracle::post(rho, oracle::interval_projector(n, lo, hi));
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

Verdict criterion1() {
    const auto start = Clock::now();
    double worst = 0.0, worst_oracle = 0.0;
    for (int n : {2, 4, 6, 8}) {
        const Operator mx = total_magnetization(Axis::X, n).realize();
        const oracle::Mat omx = oracle::total('X', n);
        for (double bh : kGrid) {
            for (int m = -n; m <= n; m += 2) {
                const double dense = expect_c(lib_post(n, m, bh), mx, mz_projector(n, m));
                const double closed = c_closed_form_free(n, m, bh);
                worst = std::max(worst, rel(dense, closed));
                const double od = oracle::c_value(oracle_post(n, m, m, bh), omx, oracle::mz_projector(n, m));
                worst_oracle = std::max(worst_oracle, rel(od, closed));
            }
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {worst <= 1e-10 && worst_oracle <= 1e-10 && secs < 120.0,
            fmt("max rel |dense - closed| = %.2e, kron oracle %.2e (tol 1e-10), %.1f s (limit 120 s)", worst,
                worst_oracle, secs)};
}

Verdict criterion2() {
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const oracle::Mat h = oracle::xyz_hamiltonian(n, 1.0, 0, 0, 0);
        for (double bh : kGrid) {
            const oracle::Mat w = oracle::expm(-bh * h);
            worst = std::max(worst, rel(std::exp(log_free_partition_eq(n, bh)), w.trace().real()));
            for (int m = -n; m <= n; m += 2) {
                const oracle::Mat p = oracle::mz_projector(n, m);
                worst = std::max(worst, rel(std::exp(log_free_partition_post(n, m, bh)), (p * w * p).trace().real()));
            }
        }
    }
    double worst_sum = 0.0;
    for (int n : {10, 100, 999, 1000}) {
        for (double bh : kGrid) {
            const double lz = log_free_partition_eq(n, bh);
            double total = 0.0;
            for (int m = -n; m <= n; m += 2) total += std::exp(log_free_partition_post(n, m, bh) - lz);
            worst_sum = std::max(worst_sum, std::abs(total - 1.0));
        }
    }
    return {worst <= 1e-10 && worst_sum <= 1e-12,
            fmt("max rel partition residual = %.2e (tol 1e-10), max |sum Pr - 1| up to n=1000 = %.2e (tol 1e-12)",
                worst, worst_sum)};
}

Verdict criterion3() {
    const int n = 8;
    const oracle::Mat omx = oracle::total('X', n);
    const std::vector<std::pair<int, int>> cases = {{0, 0}, {-2, 2}, {2, 6}, {-8, 8}};
    double c_fit = 0.0, min_rem = INFINITY;
    bool i_ok = true;
    for (double bh : {0.3, 1.0, 3.0}) {
        const double t = std::tanh(bh);
        for (auto [lo, hi] : cases) {
            const double iv = i_function(n, lo, hi);
            i_ok = i_ok && iv >= 0.0 && iv <= 1.0;
            const double dense = oracle::c_value(oracle_post(n, lo, hi, bh), omx, oracle::interval_projector(n, lo, hi));
            const double rem = dense - n * n * t * t * iv;
            c_fit = std::max(c_fit, std::abs(rem) / n);
            min_rem = std::min(min_rem, rem);
        }
    }
    const double full = i_function(n, -n, n);
    // a single constant serves every case and stays O(1)
    const bool pass = i_ok && full == 0.0 && c_fit <= 2.0 + 1e-12;
    return {pass, fmt("fitted c = %.4f (remainder in [%.3f, c N]), I in [0,1]: %.0f, full-range I = %.1f", c_fit,
                      min_rem, i_ok ? 1.0 : 0.0, full)};
}

Verdict criterion4() {
    double worst_excess = -INFINITY, worst_eq = 0.0;
    for (int n : {2, 4, 6, 8}) {
        for (double bh : kGrid) {
            for (int m = -n; m <= n; m += 2) {
                const double p = purity(lib_post(n, m, bh));
                const double b = purity_bound_free(n, m, bh);
                worst_excess = std::max(worst_excess, p - b);
                if (bh == 0.0) worst_eq = std::max(worst_eq, std::abs(p - b));
            }
        }
    }
    return {worst_excess <= 1e-12 && worst_eq <= 1e-12,
            fmt("max (purity - bound) = %.2e, max |purity - bound| at beta = 0 is %.2e (tol 1e-12)", worst_excess,
                worst_eq)};
}

Verdict criterion5() {
    double worst_mean = 0.0, worst_var = 0.0;
    for (int n : {2, 4, 6, 8}) {
        const Operator h = SpinHamiltonian::free(n, 1.0).realize();
        for (double bh : kGrid) {
            const double t = std::tanh(bh);
            for (int m = -n; m <= n; m += 2) {
                const EnergyMoments e = energy_moments(lib_post(n, m, bh), h);
                worst_mean = std::max(worst_mean, std::abs(e.mean));
                worst_var = std::max(worst_var, rel(e.variance, n + (double(n) * n - double(m) * m) / 2.0 * t * t));
            }
        }
    }
    return {worst_mean <= 1e-11 && worst_var <= 1e-10,
            fmt("max |mean| = %.2e (tol 1e-11), max rel variance residual = %.2e (tol 1e-10)", worst_mean, worst_var)};
}

Verdict criterion6() {
    const int n = 6;
    const oracle::Mat h = oracle::xyz_hamiltonian(n, 1.0, 0.3, 0.2, 0.4);
    const oracle::Mat omx = oracle::total('X', n);
    double lo_ratio = INFINITY, hi_ratio = 0.0;
    for (int m : {0, 2}) {
        double residual[2];
        const double betas[2] = {0.05, 0.025};
        for (int k = 0; k < 2; ++k) {
            const oracle::Mat p = oracle::mz_projector(n, m);
            const double dense = oracle::c_value(oracle::post(oracle::gibbs(h, betas[k]), p), omx, p);
            residual[k] = std::abs(dense - xyz_c_expansion(n, m, betas[k], 1.0, {0.3, 0.2, 0.4}));
        }
        lo_ratio = std::min(lo_ratio, residual[0] / residual[1]);
        hi_ratio = std::max(hi_ratio, residual[0] / residual[1]);
    }
    const Operator v = SpinHamiltonian{n, 0.0, {0.3, 0.2, 0.4}, Boundary::Periodic}.interaction();
    const std::vector<double> hs = {0.3, 1.0, 2.0};
    double even = 0.0;
    for (int m : {0, 2, 4}) {
        const EvennessReport r = symmetry_even_in_h(v, m, 1.0, hs);
        even = std::max({even, r.max_log_z_diff, r.max_c_diff});
    }
    return {lo_ratio >= 6.0 && hi_ratio <= 10.0 && even <= 1e-10,
            fmt("residual ratio beta 0.05/0.025 in [%.3f, %.3f] (window [6, 10]), evenness residual %.2e (tol 1e-10)",
                lo_ratio, hi_ratio, even)};
}

Verdict criterion7() {
    double vcm_err = 0.0;
    for (int n : {2, 4, 6}) vcm_err = std::max(vcm_err, std::abs(vcm(fixture_state(Fixture::CatPlus, n)).e_max - n));
    double w_err = 0.0, q_err = 0.0;
    for (int n : {4, 6, 8}) {
        w_err = std::max(w_err, std::abs((fixture_state(Fixture::RhoEx1, n).matrix() * witness_w(n).matrix()).trace().real() - 1.0));
        q_err = std::max(q_err, std::abs(q_functional(fixture_state(Fixture::RhoEx2, n), total_magnetization(Axis::Z, n))));
    }
    std::mt19937_64 rng(2026);
    double wit_err = 0.0;
    for (int k = 0; k < 50; ++k) {
        const oracle::Mat rho = oracle::random_density(rng, 16, 1 + k % 16);
        const oracle::Mat a = (k % 2) ? oracle::random_hermitian(rng, 16) : oracle::total('Z', 4);
        const double half = 0.5 * oracle::trace_norm(oracle::dcomm(a, rho));
        const Witness w = optimal_witness(QuantumState::from_density(rho), Operator(a));
        wit_err = std::max(wit_err, rel(w.value, half));
    }
    return {vcm_err <= 1e-10 && w_err <= 1e-12 && q_err <= 1e-12 && wit_err <= 1e-10,
            fmt("|e_max - n| = %.2e, |Tr[rho_ex1 W] - 1| = %.2e, |Q(rho_ex2, M_z)| = %.2e, witness vs half trace norm %.2e",
                vcm_err, w_err, q_err, wit_err)};
}

Verdict criterion8() {
    using namespace catlab::cli;
    const RunOutput thermal = run_sweep(parse_config("[sweep]\nn_list = 4, 6, 8, 10\nm = 0\nbetah = 1\n"), {});
    const RunOutput ex2 = run_sweep(parse_config("[sweep]\nn_list = 4, 6, 8, 10\nfixture = rho_ex2\n"), {});
    const double q1 = *thermal.records.front().q_fit;
    const double q2 = *ex2.records.front().q_fit;
    const bool pass = q1 >= 1.85 && q1 <= 2.0 && q2 >= 0.95 && q2 <= 1.05;
    return {pass, fmt("free-spin q_fit = %.4f (window [1.85, 2.0]), rho_ex2 q_fit = %.4f (window [0.95, 1.05])", q1, q2)};
}

Verdict criterion9() {
    const PauliDecomposition d4 = pauli_decomposition_c(4, 0);
    // rebuild C from the labels with Kronecker products
    const oracle::Mat target = oracle::dcomm(oracle::total('X', 4), oracle::mz_projector(4, 0));
    oracle::Mat rebuilt = oracle::Mat::Zero(16, 16);
    for (const PauliTerm& t : d4.terms) rebuilt += t.coefficient * oracle::string_op(t.label);
    const double recon = oracle::max_diff(rebuilt, target);
    bool bounds = true;
    std::ostringstream counts;
    for (int n : {2, 4, 6}) {
        const int s = pauli_decomposition_c(n, 0).settings;
        bounds = bounds && s <= (n * n - n) / 2 + 1;
        counts << " n=" << n << ":" << s << "/" << (n * n - n) / 2 + 1;
    }
    return {recon <= 1e-10 && d4.settings == 7 && bounds,
            fmt("reconstruction error %.2e (tol 1e-10), n=4 settings %.0f (want 7);", recon, d4.settings) +
                " settings/bound" + counts.str()};
}

Verdict criterion10() {
    const FeasibilityInput in{470e-6, 100, 3e-6, 160e-18, 0.75};
    const FeasibilityReport r = feasibility_calc(in, kRoundedConstants);
    const double e1 = std::abs(r.tau_coh / 4.7e-6 - 1.0);
    const double e2 = std::abs(resolvable_field(160e-18, 3.5e-6) / 60e-15 - 1.0);
    const double e3 = std::abs(r.single_spin_field / 65e-15 - 1.0);
    return {e1 <= 0.02 && e2 <= 0.02 && e3 <= 0.02,
            fmt("tau_coh off by %.2f%%, resolvable field %.2f%%, single-spin field %.2f%% (limit 2%%)", 100 * e1,
                100 * e2, 100 * e3)};
}

Verdict criterion11() {
    double leak = 0.0;
    for (int n : {2, 4, 6, 8}) {
        std::vector<double> outs;
        for (int m = -n; m <= n; m += 2) outs.push_back(m);
        const SufficiencyReport r = sufficient_conditions_check(total_magnetization(Axis::X, n).realize(),
                                                                total_magnetization(Axis::Z, n).realize(),
                                                                gibbs_state(SpinHamiltonian::free(n, 1.0), 1.0), outs);
        leak = std::max(leak, r.max_leak_residual);
    }
    std::mt19937_64 rng(11);
    double avg = 0.0;
    const oracle::Mat t2 = oracle::total('X', 4) * oracle::total('X', 4) + oracle::total('Y', 4) * oracle::total('Y', 4);
    for (int k = 0; k < 100; ++k) {
        const oracle::Mat rho = oracle::random_density(rng, 16, 1 + k % 16);
        const AveragedIdentityReport r = averaged_identity_check(QuantumState::from_density(rho));
        avg = std::max(avg, rel(r.averaged_post, (rho * t2).trace().real()));
    }
    double dp = 0.0;
    for (int n : {4, 6, 8}) {
        const oracle::Mat mx = oracle::total('X', n);
        const Eigen::SelfAdjointEigenSolver<oracle::Mat> es(mx);
        for (int mxv = -n; mxv <= n; mxv += 2) {
            oracle::Mat px = oracle::Mat::Zero(mx.rows(), mx.cols());
            for (Eigen::Index k = 0; k < mx.rows(); ++k) {
                if (std::abs(es.eigenvalues()(k) - mxv) < 0.5) px += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
            }
            for (int mzv = -n; mzv <= n; mzv += 2) {
                const oracle::Mat pz = oracle::mz_projector(n, mzv);
                if ((pz * px * pz).trace().real() < 1e-12) continue;
                const double dense = oracle::c_value(oracle::post(px, pz), mx, pz);
                dp = std::max(dp, rel(double_projection_c(n, mxv, mzv), dense));
            }
        }
    }
    const int n = 6;
    const Operator h = SpinHamiltonian::free(n, 1.0).realize();
    const std::vector<double> ts = {0.1, 1.0, 10.0};
    const TimeEvolutionReport te = time_evolution_invariance(lib_post(n, 0, 1.0), mz_projector(n, 0), h, ts);
    const double tdev = te.applicable ? te.max_deviation : INFINITY;
    return {leak <= 1e-10 && avg <= 1e-10 && dp <= 1e-10 && tdev <= 1e-9,
            fmt("sector leakage %.2e, averaged identity %.2e, double projection %.2e (tol 1e-10), "
                "time evolution %.2e (tol 1e-9)",
                leak, avg, dp, tdev)};
}

Verdict criterion12() {
    using namespace catlab::cli;
    const auto start = Clock::now();
    const RunOutput oracle_run = run_oracle(Config{}, RunOptions{std::nullopt, 4, false, false});
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const auto csv = [](const std::string& mode, const std::string& text, int workers) {
        RunOptions o;
        o.workers = workers;
        o.seed = 12;
        std::ostringstream os;
        write_csv(os, run_mode(mode, parse_config(text), o).records);
        return os.str();
    };
    const std::string sweep = "[sweep]\nn_list = 4, 6, 8, 10\nm = 2\nbetah = 0.7\n";
    const std::string convert = "[convert]\nn = 8\nbeta = 0.1, 0.4, 0.9, 1.6, 2.5\n";
    const bool same = csv("sweep", sweep, 1) == csv("sweep", sweep, 4) && csv("convert", convert, 1) == csv("convert", convert, 4);
    return {oracle_run.exit_code == kExitOk && secs < 600.0 && same,
            fmt("oracle suite exit %.0f over %.0f families in %.1f s (limit 600 s); CSV identical across workers {1, 4}: %.0f",
                oracle_run.exit_code, double(oracle_run.json_lines.size()), secs, same ? 1.0 : 0.0)};
}

}  // namespace

int main() {
    const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3,  criterion4,
                                                            criterion5, criterion6, criterion7,  criterion8,
                                                            criterion9, criterion10, criterion11, criterion12};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        try {
            v = criteria[k]();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s criterion %zu: %s\n", v.pass ? "PASS" : "FAIL", k + 1, v.summary.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
