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

#include "catlab/measurement.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "catlab/errors.hpp"
#include "catlab/indices.hpp"
#include "catlab/thermal.hpp"
#include "oracle.hpp"

using namespace catlab;

TEST(outcome_distribution, counting_cases) {
    const OutcomeDistribution d2 = outcome_distribution(QuantumState::maximally_mixed(2));
    ASSERT_EQ(d2.support, (std::vector<int>{-2, 0, 2}));
    EXPECT_NEAR(d2.probs[0], 0.25, 1e-15);
    EXPECT_NEAR(d2.probs[1], 0.5, 1e-15);
    EXPECT_NEAR(d2.probs[2], 0.25, 1e-15);
    const OutcomeDistribution d4 = outcome_distribution(gibbs_state(SpinHamiltonian::free(4, 1.0), 0.0));
    EXPECT_NEAR(d4.probability_of(0), 6.0 / 16.0, 1e-15);
    EXPECT_EQ(d4.probability_of(1), 0.0);
}

TEST(outcome_distribution, free_spins_independent_of_betah) {
    for (int n = 1; n <= 8; ++n) {
        for (double bh : {0.0, 0.4, 2.5}) {
            const OutcomeDistribution d = outcome_distribution(gibbs_state(SpinHamiltonian::free(n, 1.0), bh));
            double total = 0.0;
            for (std::size_t k = 0; k < d.support.size(); ++k) {
                EXPECT_NEAR(d.probs[k], oracle::binom(n, (n + d.support[k]) / 2) / std::ldexp(1.0, n), 1e-12);
                total += d.probs[k];
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
}

TEST(outcome_distribution, complete_for_random_states) {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 6; ++n) {
        const QuantumState rho = QuantumState::from_density(oracle::random_density(rng, Eigen::Index{1} << n));
        double total = 0.0;
        for (double p : outcome_distribution(rho).probs) total += p;
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(post_state, maximally_mixed_gives_normalized_projector) {
    for (int n = 1; n <= 6; ++n) {
        for (int m = -n; m <= n; m += 2) {
            const QuantumState post = post_state(QuantumState::maximally_mixed(n), OutcomeSpec::exact(m));
            EXPECT_LE(max_abs_diff(post.matrix(), oracle::mz_projector(n, m) / oracle::binom(n, (n + m) / 2)), 1e-15);
        }
    }
}

TEST(post_state, ground_state_projection_n2) {
    const QuantumState g = ground_state(SpinHamiltonian::free(2, 1.0));
    const QuantumState post = post_state(g, OutcomeSpec::exact(0));
    Vector singlet_free = Vector::Zero(4);
    singlet_free(1) = singlet_free(2) = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(post.is_pure());
    EXPECT_LE(max_abs_diff(post.matrix(), singlet_free * singlet_free.adjoint()), 1e-12);
}

TEST(post_state, matches_oracle_and_support_invariants) {
    std::mt19937_64 rng(8);
    const int n = 5;
    const oracle::Mat rho = oracle::random_density(rng, 32);
    const QuantumState s = QuantumState::from_density(rho);
    const Operator mz = total_magnetization(Axis::Z, n).realize();
    for (int m = -n; m <= n; m += 2) {
        const QuantumState post = post_state(s, OutcomeSpec::exact(m));
        EXPECT_LE(max_abs_diff(post.matrix(), oracle::post(rho, oracle::mz_projector(n, m))), 1e-12);
        EXPECT_NEAR(expectation(post, mz).real(), m, 1e-12);
        const QuantumState again = post_state(post, OutcomeSpec::exact(m));
        EXPECT_LE(max_abs_diff(again.matrix(), post.matrix()), 1e-12);
        const Matrix p = mz_projector(n, m).matrix();
        EXPECT_LE(max_abs_diff(p * post.matrix() * p, post.matrix()), 1e-12);
    }
    for (auto [lo, hi] : {std::pair{-3, 1}, std::pair{0, 5}, std::pair{-5, 5}}) {
        const QuantumState post = post_state(s, OutcomeSpec::interval(lo, hi));
        EXPECT_LE(max_abs_diff(post.matrix(), oracle::post(rho, oracle::interval_projector(n, lo, hi))), 1e-12);
        const double mean = expectation(post, mz).real();
        EXPECT_GE(mean, lo - 1e-12);
        EXPECT_LE(mean, hi + 1e-12);
    }
}

TEST(post_state, errors) {
    const QuantumState up = QuantumState::from_pure(Vector::Unit(8, 0));
    EXPECT_THROW(post_state(up, OutcomeSpec::exact(1)), ImpossibleOutcomeError);
    EXPECT_THROW(post_state(up, OutcomeSpec::exact(2)), InvalidOutcomeError);
    EXPECT_THROW(post_state(up, OutcomeSpec::interval(-3, 1)), ImpossibleOutcomeError);
    EXPECT_THROW(post_state(up, OutcomeSpec::interval(2, 2)), InvalidOutcomeError);
    EXPECT_THROW(post_state(up, OutcomeSpec::interval(1, -1)), InvalidOutcomeError);
    EXPECT_NO_THROW(post_state(up, OutcomeSpec::exact(3)));
}

TEST(post_state, free_spin_transverse_means_vanish) {
    for (int n = 2; n <= 7; ++n) {
        const QuantumState rho = gibbs_state(SpinHamiltonian::free(n, 1.0), 1.2);
        const Operator mx = total_magnetization(Axis::X, n).realize();
        const Operator my = total_magnetization(Axis::Y, n).realize();
        for (int m = -n; m <= n; m += 2) {
            const QuantumState post = post_state(rho, OutcomeSpec::exact(m));
            EXPECT_NEAR(expectation(post, mx).real(), 0.0, 1e-12);
            EXPECT_NEAR(expectation(post, my).real(), 0.0, 1e-12);
        }
    }
}

TEST(sample_outcome, determinism_and_point_mass) {
    OutcomeDistribution point{{-2, 0, 2}, {0.0, 1.0, 0.0}};
    for (std::uint64_t s = 0; s < 50; ++s) EXPECT_EQ(sample_outcome(point, s), 0);
    const OutcomeDistribution d = outcome_distribution(QuantumState::maximally_mixed(6));
    for (std::uint64_t s : {0ULL, 7ULL, 123456789ULL}) EXPECT_EQ(sample_outcome(d, s), sample_outcome(d, s));
    std::set<int> seen;
    for (std::uint64_t s = 0; s < 200; ++s) seen.insert(sample_outcome(d, derive_seed(7, s)));
    EXPECT_GE(seen.size(), 4u);
    EXPECT_THROW(sample_outcome(OutcomeDistribution{}, 1), ContractViolation);
}

TEST(sample_outcome, chi_square_against_binomial) {
    const OutcomeDistribution d = outcome_distribution(QuantumState::maximally_mixed(4));
    std::vector<double> counts(d.support.size(), 0.0);
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
        const int m = sample_outcome(d, derive_seed(2024, static_cast<std::uint64_t>(k)));
        counts[static_cast<std::size_t>((m + 4) / 2)] += 1.0;
    }
    double chi2 = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double expected = draws * d.probs[k];
        chi2 += (counts[k] - expected) * (counts[k] - expected) / expected;
    }
    // 4 degrees of freedom: P(chi2 > 18.467) = 0.001
    EXPECT_LT(chi2, 18.467);
}

TEST(counter_rng, stream_is_a_function_of_key_and_counter) {
    CounterRng a(99), b(99), c(100);
    for (int k = 0; k < 10; ++k) {
        const auto va = a.next_u64();
        EXPECT_EQ(va, b.next_u64());
        EXPECT_NE(va, c.next_u64());
    }
    CounterRng u(5);
    for (int k = 0; k < 1000; ++k) {
        const double x = u.next_unit();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    // splitmix64 reference output for state 0 after one increment
    EXPECT_EQ(mix64(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
}

TEST(double_projection, closed_form_edges) {
    EXPECT_NEAR(double_projection_c(2, 2, 0), 8.0, 1e-14);
    // m_x^2 = n leaves no cat term
    for (auto [n, mxv] : {std::pair{4, 2}, std::pair{9, 3}, std::pair{9, -3}}) {
        for (int mz = -n; mz <= n; mz += 2) EXPECT_NEAR(double_projection_c(n, mxv, mz), 2.0 * n, 1e-12);
    }
    for (int n : {4, 7}) {
        for (int mxv = -n; mxv <= n; mxv += 2) {
            EXPECT_NEAR(double_projection_c(n, mxv, n), 2.0 * n, 1e-12);
            EXPECT_NEAR(double_projection_c(n, mxv, -n), 2.0 * n, 1e-12);
        }
    }
    EXPECT_THROW(double_projection_c(1, 1, 1), DomainError);
    EXPECT_THROW(double_projection_c(4, 1, 0), InvalidOutcomeError);
    EXPECT_THROW(double_projection_c(4, 0, 3), InvalidOutcomeError);
}

TEST(double_projection, dense_pipeline_matches_closed_form) {
    for (int n = 2; n <= 8; ++n) {
        const Operator mx = total_magnetization(Axis::X, n).realize();
        for (int mxv = -n; mxv <= n; mxv += 2) {
            for (int mzv = -n; mzv <= n; mzv += 2) {
                const QuantumState s = double_projection_state(n, mxv, mzv);
                EXPECT_NEAR(expect_c(s, mx, mz_projector(n, mzv)), double_projection_c(n, mxv, mzv), 1e-10)
                    << n << " " << mxv << " " << mzv;
            }
        }
    }
}
