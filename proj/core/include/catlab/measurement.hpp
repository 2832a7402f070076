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

// Projective measurement of the total z magnetization.

#include <cstdint>
#include <vector>

#include "catlab/spin_core.hpp"

namespace catlab {

inline constexpr double kImpossibleOutcomeFloor = 1e-14;

/// Exact outcome M_z = m, or the interval m_lo <= M_z <= m_hi. Raw integers
/// are stored as given; parity filtering happens when the projector is built.
struct OutcomeSpec {
    enum class Kind { Exact, Interval };

    Kind kind = Kind::Exact;
    int m_lo = 0;
    int m_hi = 0;

    static OutcomeSpec exact(int m) { return {Kind::Exact, m, m}; }
    static OutcomeSpec interval(int m_lo, int m_hi) { return {Kind::Interval, m_lo, m_hi}; }

    bool is_exact() const { return kind == Kind::Exact; }

    /// Throws InvalidOutcomeError when no admissible eigenvalue exists for n spins.
    void validate(int n) const;
    Operator projector(int n, const DenseLimits& limits = {}) const;
};

struct OutcomeDistribution {
    std::vector<int> support;
    std::vector<double> probs;

    double probability_of(int m) const;
};

/// Pr[M_z = M] = Tr[P(M) rho] for every M in {-N, -N+2, ..., N}.
OutcomeDistribution outcome_distribution(const QuantumState& rho);

/// Tr[P rho P] for the projector of spec.
double outcome_probability(const QuantumState& rho, const OutcomeSpec& spec);

/// P rho P / Tr[P rho P]. Throws ImpossibleOutcomeError when the probability
/// is below kImpossibleOutcomeFloor.
QuantumState post_state(const QuantumState& rho, const OutcomeSpec& spec);

/// Stable 64-bit mix (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

/// Seed for work item `index` derived from a configuration seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Counter-based generator: the k-th draw is a pure function of (key, k).
class CounterRng {
   public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++ + 0x9e3779b97f4a7c15ULL)); }
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Draws one outcome by inverse-CDF sampling; deterministic in seed.
int sample_outcome(const OutcomeDistribution& dist, std::uint64_t seed);

/// Closed form for <C_{M_x, P_z}> after projecting I/2^N onto M_x = m_x and
/// then onto M_z = m_z: 2N + (N^2 - m_z^2)(m_x^2 - N) / (N(N-1)).
double double_projection_c(int n, int m_x, int m_z);

/// Dense version of the same pipeline; returns the state after both projections.
QuantumState double_projection_state(int n, int m_x, int m_z, const DenseLimits& limits = {});

}  // namespace catlab
