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

#include <cmath>
#include <sstream>
#include <string>

namespace catlab {

void OutcomeSpec::validate(int n) const {
    if (is_exact()) {
        if (!is_valid_mz(n, m_lo)) {
            throw InvalidOutcomeError("M_z = " + std::to_string(m_lo) + " is not an eigenvalue for " +
                                      std::to_string(n) + " spins");
        }
        return;
    }
    if (m_lo > m_hi || m_lo < -n || m_hi > n) {
        throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                  "] is not inside [-n, n]");
    }
    for (int m = m_lo; m <= m_hi; ++m) {
        if (is_valid_mz(n, m)) return;
    }
    throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                              "] contains no M_z eigenvalue of matching parity");
}

Operator OutcomeSpec::projector(int n, const DenseLimits& limits) const {
    validate(n);
    return is_exact() ? mz_projector(n, m_lo, limits) : mz_interval_projector(n, m_lo, m_hi, limits);
}

double OutcomeDistribution::probability_of(int m) const {
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (support[k] == m) return probs[k];
    }
    return 0.0;
}

OutcomeDistribution outcome_distribution(const QuantumState& rho) {
    const int n = rho.num_spins();
    OutcomeDistribution dist;
    for (int m = -n; m <= n; m += 2) dist.support.push_back(m);
    dist.probs.assign(dist.support.size(), 0.0);
    const Matrix& r = rho.matrix();
    for (Eigen::Index b = 0; b < r.rows(); ++b) {
        const int mz = mz_of_index(static_cast<std::uint64_t>(b), n);
        dist.probs[static_cast<std::size_t>((mz + n) / 2)] += r(b, b).real();
    }
    for (double& p : dist.probs) p = std::max(p, 0.0);
    return dist;
}

namespace {

// Diagonal mask of the projector for spec (P is diagonal in the z basis).
std::vector<char> in_range_mask(int n, const OutcomeSpec& spec) {
    spec.validate(n);
    const std::size_t d = std::size_t{1} << n;
    std::vector<char> mask(d, 0);
    for (std::size_t b = 0; b < d; ++b) {
        const int mz = mz_of_index(b, n);
        mask[b] = (mz >= spec.m_lo && mz <= spec.m_hi) ? 1 : 0;
    }
    return mask;
}

}  // namespace

double outcome_probability(const QuantumState& rho, const OutcomeSpec& spec) {
    const auto mask = in_range_mask(rho.num_spins(), spec);
    double p = 0.0;
    for (Eigen::Index b = 0; b < rho.dim(); ++b) {
        if (mask[static_cast<std::size_t>(b)]) p += rho.matrix()(b, b).real();
    }
    return std::max(p, 0.0);
}

QuantumState post_state(const QuantumState& rho, const OutcomeSpec& spec) {
    const int n = rho.num_spins();
    const auto mask = in_range_mask(n, spec);
    const double p = outcome_probability(rho, spec);
    if (!(p > kImpossibleOutcomeFloor)) {
        std::ostringstream os;
        os << "outcome ";
        if (spec.is_exact()) {
            os << "M_z = " << spec.m_lo;
        } else {
            os << "M_z in [" << spec.m_lo << ", " << spec.m_hi << "]";
        }
        os << " has probability " << p << " (below " << kImpossibleOutcomeFloor << ")";
        throw ImpossibleOutcomeError(os.str());
    }
    if (rho.pure_vector()) {
        Vector psi = *rho.pure_vector();
        for (Eigen::Index b = 0; b < psi.size(); ++b) {
            if (!mask[static_cast<std::size_t>(b)]) psi(b) = 0.0;
        }
        return QuantumState::from_pure(psi);
    }
    Matrix out = rho.matrix();
    for (Eigen::Index b = 0; b < out.rows(); ++b) {
        if (!mask[static_cast<std::size_t>(b)]) {
            out.row(b).setZero();
            out.col(b).setZero();
        }
    }
    out /= p;
    return QuantumState::from_density(std::move(out), QuantumState::Check::Structural);
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ (index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

int sample_outcome(const OutcomeDistribution& dist, std::uint64_t seed) {
    if (dist.support.empty() || dist.support.size() != dist.probs.size()) {
        throw ContractViolation("sample_outcome: malformed distribution");
    }
    double total = 0.0;
    for (double p : dist.probs) total += p;
    if (!(total > 0.0)) throw ContractViolation("sample_outcome: distribution has zero mass");
    CounterRng rng(seed);
    const double u = rng.next_unit() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        if (dist.probs[k] <= 0.0) continue;
        last_positive = k;
        acc += dist.probs[k];
        if (u < acc) return dist.support[k];
    }
    return dist.support[last_positive];
}

double double_projection_c(int n, int m_x, int m_z) {
    if (n < 2) throw DomainError("double projection needs n >= 2");
    if (!is_valid_mz(n, m_x)) throw InvalidOutcomeError("M_x = " + std::to_string(m_x) + " has the wrong parity");
    if (!is_valid_mz(n, m_z)) throw InvalidOutcomeError("M_z = " + std::to_string(m_z) + " has the wrong parity");
    const double nn = n;
    const double mx = m_x;
    const double mz = m_z;
    return 2.0 * nn + (nn * nn - mz * mz) * (mx * mx - nn) / (nn * (nn - 1.0));
}

QuantumState double_projection_state(int n, int m_x, int m_z, const DenseLimits& limits) {
    require_capacity(n, limits);
    // Hadamard^{(x)n} maps the z basis to the x basis, so H P_z(m) H projects onto M_x = m.
    Matrix had(2, 2);
    had << 1.0, 1.0, 1.0, -1.0;
    had /= std::sqrt(2.0);
    Matrix hn = had;
    for (int k = 1; k < n; ++k) hn = kron(hn, had);
    const Matrix px = hn * mz_projector(n, m_x, limits).matrix() * hn;
    Matrix rho_x = px / px.trace().real();
    rho_x = 0.5 * (rho_x + rho_x.adjoint());
    const QuantumState after_x = QuantumState::from_density(std::move(rho_x), QuantumState::Check::Structural);
    return post_state(after_x, OutcomeSpec::exact(m_z));
}

}  // namespace catlab
