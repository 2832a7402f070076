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

#include "catlab/spin_core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

namespace catlab {

namespace {

bool is_power_of_two(Eigen::Index d) { return d > 0 && (d & (d - 1)) == 0; }

int log2_dim(Eigen::Index d) { return std::countr_zero(static_cast<std::uint64_t>(d)); }

Matrix single_pauli(char label) {
    Matrix s = Matrix::Zero(2, 2);
    switch (label) {
        case 'I':
            s(0, 0) = 1.0;
            s(1, 1) = 1.0;
            break;
        case 'X':
            s(0, 1) = 1.0;
            s(1, 0) = 1.0;
            break;
        case 'Y':
            s(0, 1) = Complex(0.0, -1.0);
            s(1, 0) = Complex(0.0, 1.0);
            break;
        case 'Z':
            s(0, 0) = 1.0;
            s(1, 1) = -1.0;
            break;
        default:
            throw ContractViolation(std::string("unknown Pauli label '") + label + "'");
    }
    return s;
}

// Bit position (from least significant) of a 1-based site.
int site_bit(int site, int n) { return n - site; }

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw ContractViolation(os.str());
    }
}

void require_hermitian(const Operator& op, const char* what) {
    if (!op.is_hermitian()) {
        throw ContractViolation(std::string(what) + ": operator is not Hermitian");
    }
}

}  // namespace

void require_capacity(int n, const DenseLimits& limits) {
    if (n < 1) {
        throw ContractViolation("number of spins must be positive, got " + std::to_string(n));
    }
    if (n > limits.max_spins) {
        throw CapacityError("dense construction for " + std::to_string(n) + " spins exceeds the cap of " +
                            std::to_string(limits.max_spins));
    }
}

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return 'x';
        case Axis::Y:
            return 'y';
        case Axis::Z:
            return 'z';
    }
    return '?';
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    const double dev = m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
    return dev <= rel_tol * (1.0 + scale);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ContractViolation("max_abs_diff: shape mismatch");
    }
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_power_of_two(m_.rows())) {
        std::ostringstream os;
        os << "operator must be square with power-of-two dimension, got " << m_.rows() << "x" << m_.cols();
        throw ContractViolation(os.str());
    }
    n_ = log2_dim(m_.rows());
    hermitian_ = catlab::is_hermitian(m_);
}

Operator Operator::identity(int n) {
    require_capacity(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    return Operator(Matrix::Identity(d, d));
}

Operator Operator::zero(int n) {
    require_capacity(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    return Operator(Matrix::Zero(d, d));
}

Operator Operator::hermitian_part() const { return Operator(Matrix(0.5 * (m_ + m_.adjoint()))); }

Operator operator+(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "operator+");
    return Operator(Matrix(a.m_ + b.m_));
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "operator-");
    return Operator(Matrix(a.m_ - b.m_));
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "operator*");
    return Operator(Matrix(a.m_ * b.m_));
}

Operator operator*(Complex s, const Operator& a) { return Operator(Matrix(s * a.m_)); }

// ---------------------------------------------------------------------------
// Spectra

HermitianSpectrum eigh(const Operator& op) {
    require_hermitian(op, "eigh");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) {
        throw ContractViolation("eigh: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues(const Operator& op) {
    require_hermitian(op, "eigenvalues");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ContractViolation("eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState::QuantumState(Operator op, std::optional<Vector> psi) : op_(std::move(op)), psi_(std::move(psi)) {
    // Tr[rho^2] = sum |rho_jk|^2 for Hermitian rho.
    purity_ = op_.matrix().squaredNorm();
}

QuantumState QuantumState::from_density(Matrix rho, Check check) {
    Operator op(std::move(rho));
    if (!op.is_hermitian()) {
        throw ContractViolation("density matrix is not Hermitian");
    }
    const Complex tr = op.trace();
    if (std::abs(tr - 1.0) > kTraceTol * std::max<double>(1.0, static_cast<double>(op.dim()))) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix trace is " << tr.real() << "+" << tr.imag() << "i, expected 1";
        throw ContractViolation(os.str());
    }
    if (check == Check::Full) {
        const RealVector ev = eigenvalues(op);
        if (ev.size() > 0 && ev.minCoeff() < kPsdFloor) {
            std::ostringstream os;
            os << "density matrix has eigenvalue " << ev.minCoeff() << " below the PSD floor";
            throw ContractViolation(os.str());
        }
    }
    return QuantumState(std::move(op), std::nullopt);
}

QuantumState QuantumState::from_pure(const Vector& psi) {
    if (!is_power_of_two(psi.size())) {
        throw ContractViolation("state vector length must be a power of two");
    }
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw ContractViolation("cannot normalize a zero state vector");
    }
    Vector v = psi / norm;
    Matrix rho = v * v.adjoint();
    return QuantumState(Operator(std::move(rho)), std::move(v));
}

QuantumState QuantumState::maximally_mixed(int n) {
    require_capacity(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    return QuantumState(Operator(Matrix(Matrix::Identity(d, d) / static_cast<double>(d))), std::nullopt);
}

// ---------------------------------------------------------------------------
// Additive observables and Paulis

AdditiveObservable::AdditiveObservable(std::vector<PauliTriple> site_coeffs) : coeffs_(std::move(site_coeffs)) {
    if (coeffs_.empty()) {
        throw ContractViolation("additive observable needs at least one site");
    }
    uniform_ = std::all_of(coeffs_.begin(), coeffs_.end(), [&](const PauliTriple& c) { return c == coeffs_.front(); });
}

AdditiveObservable AdditiveObservable::uniform(int n, PauliTriple c) {
    if (n < 1) throw ContractViolation("additive observable needs at least one site");
    return AdditiveObservable(std::vector<PauliTriple>(static_cast<std::size_t>(n), c));
}

Operator AdditiveObservable::realize(const DenseLimits& limits) const {
    const int n = num_spins();
    require_capacity(n, limits);
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(d, d);
    const Complex i_unit(0.0, 1.0);
    for (Eigen::Index b = 0; b < d; ++b) {
        for (int site = 1; site <= n; ++site) {
            const PauliTriple& c = coeffs_[static_cast<std::size_t>(site - 1)];
            const Eigen::Index mask = Eigen::Index{1} << site_bit(site, n);
            const bool down = (b & mask) != 0;
            m(b, b) += c.z * (down ? -1.0 : 1.0);
            const Eigen::Index flipped = b ^ mask;
            // sigma_x |s> = |s'>, sigma_y |up> = i |down>, sigma_y |down> = -i |up>.
            m(flipped, b) += c.x + c.y * (down ? -i_unit : i_unit);
        }
    }
    return Operator(std::move(m));
}

Operator pauli_site(Axis axis, int site, int n, const DenseLimits& limits) {
    require_capacity(n, limits);
    if (site < 1 || site > n) {
        throw ContractViolation("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
    }
    std::string labels(static_cast<std::size_t>(n), 'I');
    labels[static_cast<std::size_t>(site - 1)] = static_cast<char>(std::toupper(axis_name(axis)));
    return pauli_string(labels, limits);
}

Operator pauli_string(std::string_view labels, const DenseLimits& limits) {
    const int n = static_cast<int>(labels.size());
    require_capacity(n, limits);
    Matrix m = single_pauli(labels[0]);
    for (std::size_t k = 1; k < labels.size(); ++k) {
        m = kron(m, single_pauli(labels[k]));
    }
    return Operator(std::move(m));
}

Vector apply_pauli(Axis axis, int site, int n, const Vector& psi) {
    const Eigen::Index d = Eigen::Index{1} << n;
    if (psi.size() != d) throw ContractViolation("apply_pauli: vector length does not match 2^n");
    if (site < 1 || site > n) throw ContractViolation("apply_pauli: site out of range");
    const Eigen::Index mask = Eigen::Index{1} << site_bit(site, n);
    Vector out(d);
    const Complex i_unit(0.0, 1.0);
    for (Eigen::Index b = 0; b < d; ++b) {
        const bool down = (b & mask) != 0;
        switch (axis) {
            case Axis::X:
                out(b ^ mask) = psi(b);
                break;
            case Axis::Y:
                out(b ^ mask) = (down ? -i_unit : i_unit) * psi(b);
                break;
            case Axis::Z:
                out(b) = down ? -psi(b) : psi(b);
                break;
        }
    }
    return out;
}

AdditiveObservable total_magnetization(Axis axis, int n) {
    PauliTriple c;
    switch (axis) {
        case Axis::X:
            c.x = 1.0;
            break;
        case Axis::Y:
            c.y = 1.0;
            break;
        case Axis::Z:
            c.z = 1.0;
            break;
    }
    return AdditiveObservable::uniform(n, c);
}

int mz_of_index(std::uint64_t index, int n) { return n - 2 * std::popcount(index); }

bool is_valid_mz(int n, int m) { return n >= 0 && std::abs(m) <= n && ((n + m) % 2 == 0); }

Operator mz_projector(int n, int m, const DenseLimits& limits) {
    require_capacity(n, limits);
    if (!is_valid_mz(n, m)) {
        throw InvalidOutcomeError("M_z = " + std::to_string(m) + " is not an eigenvalue for " + std::to_string(n) +
                                  " spins");
    }
    return mz_interval_projector(n, m, m, limits);
}

Operator mz_interval_projector(int n, int m_lo, int m_hi, const DenseLimits& limits) {
    require_capacity(n, limits);
    if (m_lo > m_hi) {
        throw InvalidOutcomeError("interval lower end exceeds upper end");
    }
    if (m_lo < -n || m_hi > n) {
        throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                  "] leaves the range [-n, n]");
    }
    bool any = false;
    for (int m = m_lo; m <= m_hi; ++m) any = any || is_valid_mz(n, m);
    if (!any) {
        throw InvalidOutcomeError("interval [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                  "] contains no M_z eigenvalue of matching parity");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix p = Matrix::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        const int mz = mz_of_index(static_cast<std::uint64_t>(b), n);
        if (mz >= m_lo && mz <= m_hi) p(b, b) = 1.0;
    }
    return Operator(std::move(p));
}

// ---------------------------------------------------------------------------
// Matrix functions

Operator herm_expm(const Operator& h_op, double scale) {
    require_hermitian(h_op, "herm_expm");
    const HermitianSpectrum spec = eigh(h_op);
    Matrix e = spec.map([scale](double lambda) { return std::exp(scale * lambda); });
    return Operator(Matrix(0.5 * (e + e.adjoint())));
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "commutator");
    return Operator(Matrix(a.matrix() * b.matrix() - b.matrix() * a.matrix()));
}

Operator double_commutator(const Operator& a, const Operator& eta) {
    require_same_dim(a, eta, "double_commutator");
    const Matrix inner = a.matrix() * eta.matrix() - eta.matrix() * a.matrix();
    return Operator(Matrix(a.matrix() * inner - inner * a.matrix()));
}

double trace_norm(const Operator& op) {
    require_hermitian(op, "trace_norm");
    return eigenvalues(op).cwiseAbs().sum();
}

Complex expectation(const QuantumState& rho, const Operator& op) {
    if (rho.dim() != op.dim()) throw ContractViolation("expectation: dimension mismatch");
    // Tr[rho O] = sum_jk rho_jk O_kj
    return (rho.matrix().transpose().cwiseProduct(op.matrix())).sum();
}

}  // namespace catlab
