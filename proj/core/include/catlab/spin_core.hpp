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

// Dense complex operator algebra on N spin-1/2 sites.
//
// Basis convention: computational z-basis, site 1 is the most significant
// tensor factor. Bit value 0 of a site is |up> (sigma_z = +1), bit value 1 is
// |down>. Basis index 0 is therefore |up up ... up> with M_z = +N.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "catlab/errors.hpp"

namespace catlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr int kDefaultMaxSpins = 12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kTraceTol = 1e-12;

/// Upper bound on the number of spins for dense constructions.
struct DenseLimits {
    int max_spins = kDefaultMaxSpins;
};

/// Throws CapacityError when n is outside [1, limits.max_spins].
void require_capacity(int n, const DenseLimits& limits = {});

enum class Axis { X, Y, Z };

char axis_name(Axis axis);

/// max_{jk} |a_jk - conj(a_kj)| <= rel_tol * (1 + max |a_jk|)
bool is_hermitian(const Matrix& m, double rel_tol = kHermitianTol);

double max_abs_diff(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

/// Square matrix of dimension 2^N. The Hermitian flag is computed once at
/// construction and cached.
class Operator {
   public:
    Operator() = default;
    explicit Operator(Matrix m);

    static Operator identity(int n);
    static Operator zero(int n);

    int num_spins() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    bool is_hermitian() const { return hermitian_; }

    Complex trace() const { return m_.trace(); }
    Operator adjoint() const { return Operator(m_.adjoint()); }

    /// Replaces the matrix by (M + M^dagger)/2. Used after products that are
    /// Hermitian in exact arithmetic.
    Operator hermitian_part() const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(Complex s, const Operator& a);

   private:
    Matrix m_;
    int n_ = 0;
    bool hermitian_ = false;
};

/// Eigendecomposition of a Hermitian operator, ascending eigenvalues.
struct HermitianSpectrum {
    RealVector values;
    Matrix vectors;

    /// V f(Lambda) V^dagger for a real function f.
    template <class F>
    Matrix map(F f) const {
        RealVector fv = values.unaryExpr(f);
        return vectors * fv.asDiagonal() * vectors.adjoint();
    }
};

HermitianSpectrum eigh(const Operator& op);
RealVector eigenvalues(const Operator& op);

/// Density matrix with unit trace, Hermitian and PSD up to kPsdFloor.
/// Pure states additionally keep their state vector.
class QuantumState {
   public:
    enum class Check { Full, Structural };

    /// Validates Hermiticity and trace; Check::Full also checks the spectrum
    /// against kPsdFloor. Structural checks are for library constructions
    /// that are PSD by construction (P rho P, V e^L V^dagger, ...).
    static QuantumState from_density(Matrix rho, Check check = Check::Full);
    /// Normalizes psi; throws ContractViolation on a zero vector.
    static QuantumState from_pure(const Vector& psi);
    static QuantumState maximally_mixed(int n);

    const Operator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }
    int num_spins() const { return op_.num_spins(); }
    Eigen::Index dim() const { return op_.dim(); }

    /// Tr[rho^2], computed once.
    double purity() const { return purity_; }
    bool is_pure(double tol = 1e-10) const { return purity_ > 1.0 - tol; }
    const std::optional<Vector>& pure_vector() const { return psi_; }

   private:
    QuantumState(Operator op, std::optional<Vector> psi);

    Operator op_;
    std::optional<Vector> psi_;
    double purity_ = 0.0;
};

/// Per-site Pauli coefficients (c_x, c_y, c_z).
struct PauliTriple {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const PauliTriple&) const = default;
};

/// A = sum_i (c_x sigma_x^i + c_y sigma_y^i + c_z sigma_z^i).
class AdditiveObservable {
   public:
    explicit AdditiveObservable(std::vector<PauliTriple> site_coeffs);
    static AdditiveObservable uniform(int n, PauliTriple c);

    int num_spins() const { return static_cast<int>(coeffs_.size()); }
    std::span<const PauliTriple> site_coeffs() const { return coeffs_; }
    bool is_uniform() const { return uniform_; }

    /// Dense realization built directly from bit operations on basis indices.
    Operator realize(const DenseLimits& limits = {}) const;

   private:
    std::vector<PauliTriple> coeffs_;
    bool uniform_ = false;
};

/// I x ... x sigma_axis (at 1-based site) x ... x I by explicit tensor products.
Operator pauli_site(Axis axis, int site, int n, const DenseLimits& limits = {});

/// Tensor product of single-site Paulis given as a string over {I,X,Y,Z},
/// first character acting on site 1.
Operator pauli_string(std::string_view labels, const DenseLimits& limits = {});

/// sigma_axis^site |psi> via bit operations (site is 1-based).
Vector apply_pauli(Axis axis, int site, int n, const Vector& psi);

AdditiveObservable total_magnetization(Axis axis, int n);

/// M_z eigenvalue of a computational basis index: N - 2 * popcount(index).
int mz_of_index(std::uint64_t index, int n);

/// True when |m| <= n and n + m is even.
bool is_valid_mz(int n, int m);

/// Projector onto the M_z = m eigenspace.
Operator mz_projector(int n, int m, const DenseLimits& limits = {});

/// Projector onto m_lo <= M_z <= m_hi. Parity filtering happens here;
/// throws InvalidOutcomeError if no admissible eigenvalue remains.
Operator mz_interval_projector(int n, int m_lo, int m_hi, const DenseLimits& limits = {});

/// V exp(scale * Lambda) V^dagger for Hermitian h_op = V Lambda V^dagger.
Operator herm_expm(const Operator& h_op, double scale);

Operator commutator(const Operator& a, const Operator& b);

/// [a, [a, eta]].
Operator double_commutator(const Operator& a, const Operator& eta);

/// Sum of absolute eigenvalues of a Hermitian operator.
double trace_norm(const Operator& op);

/// Tr[rho O].
Complex expectation(const QuantumState& rho, const Operator& op);

}  // namespace catlab
