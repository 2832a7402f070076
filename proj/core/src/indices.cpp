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

#include "catlab/indices.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "catlab/thermal.hpp"

namespace catlab {

namespace {

// rho = V diag(w) V^dagger restricted to its numerical support.
struct LowRank {
    RealVector weights;
    Matrix vectors;
};

LowRank low_rank(const QuantumState& rho) {
    if (rho.pure_vector()) {
        LowRank lr;
        lr.weights = RealVector::Ones(1);
        lr.vectors = *rho.pure_vector();
        return lr;
    }
    const HermitianSpectrum spec = eigh(rho.op());
    const double cutoff = 1e-14 * std::max(1.0, spec.values.cwiseAbs().maxCoeff());
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        if (spec.values(k) > cutoff) keep.push_back(k);
    }
    LowRank lr;
    lr.weights.resize(static_cast<Eigen::Index>(keep.size()));
    lr.vectors.resize(rho.dim(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        lr.weights(static_cast<Eigen::Index>(c)) = spec.values(keep[c]);
        lr.vectors.col(static_cast<Eigen::Index>(c)) = spec.vectors.col(keep[c]);
    }
    return lr;
}

// Eigenpairs of D = [A, [A, rho]] on the subspace where D can be nonzero.
struct DcSpectrum {
    RealVector values;
    Matrix vectors;
};

DcSpectrum hermitian_spectrum(Matrix h) {
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw ContractViolation("double-commutator eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// D = A^2 rho - 2 A rho A + rho A^2 maps into span{V, AV, A^2 V}, so its
// nonzero spectrum is the spectrum of Q^dagger D Q for an orthonormal basis Q
// of that span.
DcSpectrum reduced_spectrum(const LowRank& lr, const Matrix& av, const Matrix& aav) {
    const Matrix& v = lr.vectors;
    const Eigen::Index d = v.rows();
    const Eigen::Index r = v.cols();
    Matrix k(d, 3 * r);
    k << v, av, aav;
    Eigen::ColPivHouseholderQR<Matrix> qr(k);
    qr.setThreshold(1e-12);
    const Eigen::Index rank = qr.rank();
    if (rank == 0) return {RealVector(), Matrix(d, 0)};
    const Matrix q = qr.householderQ() * Matrix::Identity(d, rank);
    const auto w = lr.weights.cast<Complex>().asDiagonal();
    const Matrix dq = aav * (w * (v.adjoint() * q)) - 2.0 * av * (w * (av.adjoint() * q)) + v * (w * (aav.adjoint() * q));
    DcSpectrum small = hermitian_spectrum(q.adjoint() * dq);
    small.vectors = q * small.vectors;
    return small;
}

bool use_reduced(const LowRank& lr, Eigen::Index d) { return 3 * lr.vectors.cols() < d; }

DcSpectrum dc_spectrum(const QuantumState& rho, const Operator& a) {
    if (a.dim() != rho.dim()) throw ContractViolation("observable and state dimensions differ");
    if (!a.is_hermitian()) throw ContractViolation("observable is not Hermitian");
    if (rho.pure_vector() || rho.num_spins() >= 5) {
        const LowRank lr = low_rank(rho);
        if (use_reduced(lr, rho.dim())) {
            const Matrix av = a.matrix() * lr.vectors;
            const Matrix aav = a.matrix() * av;
            return reduced_spectrum(lr, av, aav);
        }
    }
    return hermitian_spectrum(double_commutator(a, rho.op()).matrix());
}

double positive_cutoff(const RealVector& mu) {
    return 1e-12 * (1.0 + (mu.size() ? mu.cwiseAbs().maxCoeff() : 0.0));
}

Witness witness_from(const DcSpectrum& s, Eigen::Index d) {
    const double cut = positive_cutoff(s.values);
    Matrix proj = Matrix::Zero(d, d);
    double value = 0.0;
    for (Eigen::Index k = 0; k < s.values.size(); ++k) {
        if (s.values(k) > cut) {
            value += s.values(k);
            proj += s.vectors.col(k) * s.vectors.col(k).adjoint();
        }
    }
    proj = 0.5 * (proj + proj.adjoint());
    return {Operator(std::move(proj)), value};
}

double positive_sum(const RealVector& mu) {
    const double cut = positive_cutoff(mu);
    double v = 0.0;
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        if (mu(k) > cut) v += mu(k);
    }
    return v;
}

// Single-site unitary u with u sigma_z u^dagger = d . sigma.
Eigen::Matrix2cd direction_unitary(const Direction& dir) {
    const double c = std::cos(dir.theta / 2.0);
    const double s = std::sin(dir.theta / 2.0);
    Eigen::Matrix2cd ry;
    ry << c, -s, s, c;
    Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
    rz(0, 0) = std::polar(1.0, -dir.phi / 2.0);
    rz(1, 1) = std::polar(1.0, dir.phi / 2.0);
    return rz * ry;
}

// rows <- (g on every site) rows
void apply_product_rows(Matrix& m, const Eigen::Matrix2cd& g, int n) {
    const Eigen::Index d = m.rows();
    for (int site = 1; site <= n; ++site) {
        const Eigen::Index mask = Eigen::Index{1} << (n - site);
        for (Eigen::Index b = 0; b < d; ++b) {
            if (b & mask) continue;
            const Eigen::Index b1 = b | mask;
            const auto r0 = m.row(b).eval();
            const auto r1 = m.row(b1).eval();
            m.row(b) = g(0, 0) * r0 + g(0, 1) * r1;
            m.row(b1) = g(1, 0) * r0 + g(1, 1) * r1;
        }
    }
}

RealVector mz_diagonal(int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    RealVector m(d);
    for (Eigen::Index b = 0; b < d; ++b) m(b) = mz_of_index(static_cast<std::uint64_t>(b), n);
    return m;
}

// Positive-part value of D for the uniform observable along dir, evaluated in
// the frame where that observable is M_z.
class DirectionEvaluator {
   public:
    explicit DirectionEvaluator(const QuantumState& rho) : rho_(rho), n_(rho.num_spins()), mz_(mz_diagonal(n_)) {
        lr_ = low_rank(rho);
        reduced_ = use_reduced(lr_, rho.dim());
    }

    double operator()(const Direction& dir) {
        ++evaluations_;
        const Eigen::Matrix2cd udag = direction_unitary(dir).adjoint();
        if (reduced_) {
            Matrix v = lr_.vectors;
            apply_product_rows(v, udag, n_);
            const Matrix av = mz_.cast<Complex>().asDiagonal() * v;
            const Matrix aav = mz_.cast<Complex>().asDiagonal() * av;
            LowRank rot{lr_.weights, std::move(v)};
            return positive_sum(reduced_spectrum(rot, av, aav).values);
        }
        // rho' = U^dagger rho U
        Matrix m = rho_.matrix();
        apply_product_rows(m, udag, n_);
        Matrix mt = m.adjoint();
        apply_product_rows(mt, udag, n_);
        Matrix rho_rot = mt.adjoint();
        const Eigen::Index d = rho_rot.rows();
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                const double diff = mz_(j) - mz_(k);
                rho_rot(j, k) *= diff * diff;
            }
        }
        return positive_sum(hermitian_spectrum(std::move(rho_rot)).values);
    }

    int evaluations() const { return evaluations_; }

   private:
    const QuantumState& rho_;
    int n_;
    RealVector mz_;
    LowRank lr_;
    bool reduced_ = false;
    int evaluations_ = 0;
};

// Nelder-Mead maximization over (theta, phi).
Direction nelder_mead_max(DirectionEvaluator& f, Direction start, double step, int max_evals, double& best_value) {
    using Pt = std::array<double, 2>;
    auto eval = [&](const Pt& p) { return f(Direction{p[0], p[1]}); };
    std::array<Pt, 3> x = {Pt{start.theta, start.phi}, Pt{start.theta + step, start.phi},
                           Pt{start.theta, start.phi + step}};
    std::array<double, 3> fx = {best_value, eval(x[1]), eval(x[2])};
    int evals = 2;
    while (evals < max_evals) {
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[static_cast<std::size_t>(a)] > fx[static_cast<std::size_t>(b)]; });
        const Pt best = x[static_cast<std::size_t>(idx[0])];
        const Pt mid = x[static_cast<std::size_t>(idx[1])];
        const Pt worst = x[static_cast<std::size_t>(idx[2])];
        const double f_best = fx[static_cast<std::size_t>(idx[0])];
        const double f_mid = fx[static_cast<std::size_t>(idx[1])];
        const double f_worst = fx[static_cast<std::size_t>(idx[2])];
        const double size = std::max(std::hypot(mid[0] - best[0], mid[1] - best[1]),
                                     std::hypot(worst[0] - best[0], worst[1] - best[1]));
        if (size < 1e-7 || std::abs(f_best - f_worst) <= 1e-13 * (1.0 + std::abs(f_best))) break;
        const Pt c = {(best[0] + mid[0]) / 2.0, (best[1] + mid[1]) / 2.0};
        auto along = [&](double t) { return Pt{c[0] + t * (worst[0] - c[0]), c[1] + t * (worst[1] - c[1])}; };
        const Pt xr = along(-1.0);
        const double fr = eval(xr);
        ++evals;
        const auto w = static_cast<std::size_t>(idx[2]);
        if (fr > f_best) {
            const Pt xe = along(-2.0);
            const double fe = eval(xe);
            ++evals;
            if (fe > fr) {
                x[w] = xe;
                fx[w] = fe;
            } else {
                x[w] = xr;
                fx[w] = fr;
            }
        } else if (fr > f_mid) {
            x[w] = xr;
            fx[w] = fr;
        } else {
            const Pt xc = fr > f_worst ? along(-0.5) : along(0.5);
            const double fc = eval(xc);
            ++evals;
            if (fc > std::max(fr, f_worst)) {
                x[w] = xc;
                fx[w] = fc;
            } else {
                // shrink toward the best vertex
                for (int k = 1; k < 3; ++k) {
                    const auto s = static_cast<std::size_t>(idx[static_cast<std::size_t>(k)]);
                    x[s] = {best[0] + 0.5 * (x[s][0] - best[0]), best[1] + 0.5 * (x[s][1] - best[1])};
                    fx[s] = eval(x[s]);
                    ++evals;
                }
            }
        }
    }
    std::size_t arg = 0;
    for (std::size_t k = 1; k < 3; ++k) {
        if (fx[k] > fx[arg]) arg = k;
    }
    best_value = fx[arg];
    return Direction{x[arg][0], x[arg][1]};
}

void require_snapped_interval(long long n, long long& lo, long long& hi) {
    if (n < 1 || lo > hi || lo < -n || hi > n) {
        throw InvalidOutcomeError("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  "] is not inside [-n, n]");
    }
    if ((n + lo) % 2 != 0) ++lo;
    if ((n + hi) % 2 != 0) --hi;
    if (lo > hi) {
        throw InvalidOutcomeError("interval contains no M_z eigenvalue of matching parity");
    }
}

// Fixture labels: 0 = spin down, 1 = spin up; site 1 first.
Eigen::Index index_of_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    Eigen::Index idx = 0;
    for (int i = 0; i < n; ++i) {
        if (labels[static_cast<std::size_t>(i)] == 0) idx |= Eigen::Index{1} << (n - 1 - i);
    }
    return idx;
}

Eigen::Index zero_i(int i, int n) {
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    l[static_cast<std::size_t>(i - 1)] = 1;
    return index_of_labels(l);
}

Eigen::Index one_i(int i, int n) {
    std::vector<int> l(static_cast<std::size_t>(n), 1);
    l[static_cast<std::size_t>(i - 1)] = 0;
    return index_of_labels(l);
}

Eigen::Index all_label(int label, int n) { return index_of_labels(std::vector<int>(static_cast<std::size_t>(n), label)); }

void require_fixture_n(int n, int minimum, const char* name) {
    if (n < minimum) {
        throw DomainError(std::string(name) + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
    }
    require_capacity(n);
}

}  // namespace

// ---------------------------------------------------------------------------

double expect_c(const QuantumState& rho, const Operator& a, const Operator& eta) {
    if (rho.dim() != a.dim() || rho.dim() != eta.dim()) throw ContractViolation("expect_c: dimension mismatch");
    if (!eta.is_hermitian()) throw ContractViolation("expect_c: eta is not Hermitian");
    // Tr[rho (A^2 eta - 2 A eta A + eta A^2)] = 2 Re Tr[(rho A)(A eta)] - 2 Tr[(rho A)(eta A)]
    const Matrix ra = rho.matrix() * a.matrix();
    const Matrix ae = a.matrix() * eta.matrix();
    const Matrix ea = eta.matrix() * a.matrix();
    const Complex t1 = ra.transpose().cwiseProduct(ae).sum();
    const Complex t2 = ra.transpose().cwiseProduct(ea).sum();
    const Complex c = t1 + std::conj(t1) - 2.0 * t2;
    if (std::abs(c.imag()) > 1e-10 * (1.0 + std::abs(c.real()))) {
        throw ContractViolation("expect_c: imaginary residue " + std::to_string(c.imag()));
    }
    return c.real();
}

double expect_c(const QuantumState& rho, const AdditiveObservable& a, const Operator& eta) {
    return expect_c(rho, a.realize(), eta);
}

double c_closed_form_free(int n, int m, double betah) {
    if (!is_valid_mz(n, m)) {
        throw InvalidOutcomeError("M = " + std::to_string(m) + " is not an M_z eigenvalue for " + std::to_string(n) +
                                  " spins");
    }
    const double t = std::tanh(betah);
    const double nn = n;
    const double mm = m;
    return 2.0 * nn + (nn * nn - mm * mm) * t * t;
}

double c_closed_form_interval(long long n, long long m_lo, long long m_hi, double betah) {
    require_snapped_interval(n, m_lo, m_hi);
    const double log_r = interval_r_count(n, m_lo, m_hi);
    const double t2 = std::pow(std::tanh(betah), 2);
    const double nn = static_cast<double>(n);
    // exits above the top edge (flip a down spin) and below the bottom edge (flip an up spin)
    const double k_top = static_cast<double>((n - m_hi) / 2);
    const double k_bot = static_cast<double>((n + m_lo) / 2);
    const double w_top = std::exp(log_binomial(n, (n + m_hi) / 2) - log_r);
    const double w_bot = std::exp(log_binomial(n, (n + m_lo) / 2) - log_r);
    return 2.0 * (w_top * (k_top + t2 * k_top * (nn - k_top)) + w_bot * (k_bot + t2 * k_bot * (nn - k_bot)));
}

double interval_r_count(long long n, long long a, long long b) { return log_interval_partition_post(n, a, b, 0.0); }

double i_function(long long n, long long m_lo, long long m_hi) {
    require_snapped_interval(n, m_lo, m_hi);
    const double log_r = interval_r_count(n, m_lo, m_hi);
    const double nn = static_cast<double>(n);
    const double a_hi = static_cast<double>(m_hi) / nn;
    const double a_lo = static_cast<double>(m_lo) / nn;
    const double top = std::exp(log_binomial(n, (n + m_hi) / 2) - log_r) * (1.0 - a_hi * a_hi);
    const double bot = std::exp(log_binomial(n, (n + m_lo) / 2) - log_r) * (1.0 - a_lo * a_lo);
    return 0.5 * (top + bot);
}

Witness optimal_witness(const QuantumState& rho, const Operator& a) {
    return witness_from(dc_spectrum(rho, a), rho.dim());
}

Witness optimal_witness(const QuantumState& rho, const AdditiveObservable& a) {
    return optimal_witness(rho, a.realize());
}

double q_functional(const QuantumState& rho, const Operator& a) {
    return dc_spectrum(rho, a).values.cwiseAbs().sum();
}

double q_functional(const QuantumState& rho, const AdditiveObservable& a) { return q_functional(rho, a.realize()); }

PauliTriple Direction::unit() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::vector<Direction> golden_spiral_hemisphere(int count) {
    if (count < 1) throw ContractViolation("grid needs at least one direction");
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(count));
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        // cos(theta) uniform in (0, 1]
        const double z = 1.0 - (k + 0.5) / count;
        out.push_back({std::acos(z), std::remainder(golden_angle * k, 2.0 * std::numbers::pi)});
    }
    return out;
}

double direction_value(const QuantumState& rho, const Direction& dir) {
    DirectionEvaluator eval(rho);
    return eval(dir);
}

CatnessReport observable_search(const QuantumState& rho, const SearchOptions& options) {
    const int n = rho.num_spins();
    DirectionEvaluator eval(rho);
    const auto grid = golden_spiral_hemisphere(options.grid_points);
    std::vector<std::pair<double, Direction>> scored;
    scored.reserve(grid.size());
    for (const Direction& d : grid) scored.emplace_back(eval(d), d);
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    Direction best_dir = scored.front().second;
    double best_val = scored.front().first;
    if (options.refine && best_val > 0.0) {
        const double step = std::sqrt(2.0 * std::numbers::pi / options.grid_points);
        const int starts = std::min<int>(options.refine_starts, static_cast<int>(scored.size()));
        for (int s = 0; s < starts; ++s) {
            double v = scored[static_cast<std::size_t>(s)].first;
            const Direction d = nelder_mead_max(eval, scored[static_cast<std::size_t>(s)].second, step,
                                                options.refine_max_evals, v);
            if (v > best_val) {
                best_val = v;
                best_dir = d;
            }
        }
    }

    CatnessReport report;
    report.evaluations = eval.evaluations();
    AdditiveObservable best_a = AdditiveObservable::uniform(n, best_dir.unit());
    std::optional<Direction> dir = best_dir;
    if (options.include_vcm_candidate && rho.is_pure()) {
        const AdditiveObservable vcm_a = vcm(rho).top_observable();
        const double v = optimal_witness(rho, vcm_a).value;
        ++report.evaluations;
        if (v > best_val * (1.0 + 1e-12) + 1e-12) {
            best_val = v;
            best_a = vcm_a;
            dir.reset();
        }
    }
    Witness w = optimal_witness(rho, best_a);
    report.c_value = w.value;
    report.eta_trace = w.projector.trace().real();
    report.eta = std::move(w.projector);
    report.a_used = std::move(best_a);
    report.direction = dir;
    return report;
}

AdditiveObservable VcmMatrix::top_observable() const {
    const Eigen::MatrixXd re = entries.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (re + re.transpose()));
    const Eigen::VectorXd top = solver.eigenvectors().col(solver.eigenvectors().cols() - 1) * std::sqrt(double(n));
    std::vector<PauliTriple> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = {top(3 * i), top(3 * i + 1), top(3 * i + 2)};
    }
    return AdditiveObservable(std::move(c));
}

VcmMatrix vcm(const QuantumState& pure) {
    if (!pure.is_pure(1e-10)) {
        throw ContractViolation("VCM is defined for pure states; purity is " + std::to_string(pure.purity()));
    }
    const int n = pure.num_spins();
    Vector psi;
    if (pure.pure_vector()) {
        psi = *pure.pure_vector();
    } else {
        const HermitianSpectrum spec = eigh(pure.op());
        psi = spec.vectors.col(spec.vectors.cols() - 1);
    }
    const Eigen::Index d = psi.size();
    Matrix phi(d, 3 * n);
    constexpr std::array<Axis, 3> axes = {Axis::X, Axis::Y, Axis::Z};
    for (int i = 1; i <= n; ++i) {
        for (int a = 0; a < 3; ++a) phi.col(3 * (i - 1) + a) = apply_pauli(axes[static_cast<std::size_t>(a)], i, n, psi);
    }
    const Vector mean = phi.adjoint() * psi;  // <psi| s_a^i |psi>
    Matrix v = phi.adjoint() * phi - mean.conjugate() * mean.transpose();
    v = 0.5 * (v + v.adjoint());
    VcmMatrix out;
    out.n = n;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(v, Eigen::EigenvaluesOnly);
    out.e_max = solver.eigenvalues().maxCoeff();
    out.entries = std::move(v);
    return out;
}

ExponentFit fit_exponent(std::span<const ScalingPoint> points, bool apply_q_floor) {
    if (points.size() < 3) {
        throw DomainError("exponent fit needs at least 3 points, got " + std::to_string(points.size()));
    }
    const double k = static_cast<double>(points.size());
    std::vector<double> xs, ys;
    for (const ScalingPoint& p : points) {
        const double v = apply_q_floor ? std::max(p.value, p.n) : p.value;
        if (!(p.n > 0.0) || !(v > 0.0)) throw DomainError("exponent fit needs positive n and values");
        xs.push_back(std::log(p.n));
        ys.push_back(std::log(v));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw DomainError("exponent fit needs at least two distinct n");
    ExponentFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - fit.intercept - fit.exponent * xs[i];
        ssr += r * r;
    }
    fit.stderr_ = std::sqrt(ssr / (k - 2.0) / sxx);
    return fit;
}

QuantumState ex1_component(int i, int n) {
    require_fixture_n(n, 2, "rho_ex1 component");
    if (i < 1 || i > n) throw DomainError("component index outside 1..n");
    const Eigen::Index d = Eigen::Index{1} << n;
    Vector psi = Vector::Zero(d);
    psi(zero_i(i, n)) += 1.0;
    psi(one_i(i, n)) += 1.0;
    return QuantumState::from_pure(psi);
}

Operator witness_w(int n) {
    require_fixture_n(n, 2, "witness W");
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix w = Matrix::Zero(d, d);
    for (int i = 1; i <= n; ++i) {
        w(zero_i(i, n), one_i(i, n)) += 1.0;
        w(one_i(i, n), zero_i(i, n)) += 1.0;
    }
    return Operator(std::move(w));
}

QuantumState fixture_state(Fixture kind, int n) {
    const Eigen::Index d = Eigen::Index{1} << std::min(n, 30);
    switch (kind) {
        case Fixture::CatPlus:
        case Fixture::CatMinus: {
            require_fixture_n(n, 2, "cat state");
            Vector psi = Vector::Zero(d);
            psi(all_label(0, n)) = 1.0;
            psi(all_label(1, n)) = kind == Fixture::CatPlus ? 1.0 : -1.0;
            return QuantumState::from_pure(psi);
        }
        case Fixture::RhoEx1: {
            require_fixture_n(n, 2, "rho_ex1");
            Matrix rho = Matrix::Zero(d, d);
            for (int i = 1; i <= n; ++i) rho += ex1_component(i, n).matrix();
            rho /= static_cast<double>(n);
            return QuantumState::from_density(std::move(rho), QuantumState::Check::Structural);
        }
        case Fixture::RhoEx2: {
            require_fixture_n(n, 2, "rho_ex2");
            Matrix rho = Matrix::Zero(d, d);
            rho(all_label(0, n), all_label(0, n)) = 0.5;
            rho(all_label(1, n), all_label(1, n)) = 0.5;
            return QuantumState::from_density(std::move(rho), QuantumState::Check::Structural);
        }
        case Fixture::RhoEx3: {
            require_fixture_n(n, 3, "rho_ex3");
            if (n % 3 != 0) throw DomainError("rho_ex3 needs n divisible by 3, got " + std::to_string(n));
            Matrix rho = Matrix::Zero(d, d);
            for (int i = 1; i <= n / 3; ++i) {
                // |i>: the first i sites up, the rest down; |i-bar> is its complement.
                std::vector<int> up(static_cast<std::size_t>(n), 0);
                std::vector<int> bar(static_cast<std::size_t>(n), 1);
                for (int s = 0; s < i; ++s) {
                    up[static_cast<std::size_t>(s)] = 1;
                    bar[static_cast<std::size_t>(s)] = 0;
                }
                Vector phi = Vector::Zero(d);
                phi(index_of_labels(up)) = 1.0;
                phi(index_of_labels(bar)) = 1.0;
                phi /= std::sqrt(2.0);
                rho += phi * phi.adjoint();
            }
            rho *= 3.0 / n;
            return QuantumState::from_density(std::move(rho), QuantumState::Check::Structural);
        }
        case Fixture::Psi1: {
            require_fixture_n(n, 2, "psi1");
            Vector psi = Vector::Zero(d);
            psi(all_label(0, n)) = std::sqrt(1.0 - 1.0 / n);
            psi(all_label(1, n)) = std::sqrt(1.0 / n);
            return QuantumState::from_pure(psi);
        }
        case Fixture::Psi2: {
            require_fixture_n(n, 2, "psi2");
            Vector psi = Vector::Zero(d);
            for (int k = 0; k <= n; ++k) {
                std::vector<int> l(static_cast<std::size_t>(n), 0);
                for (int s = 0; s < k; ++s) l[static_cast<std::size_t>(s)] = 1;
                psi(index_of_labels(l)) += 1.0;
            }
            return QuantumState::from_pure(psi);
        }
    }
    throw ContractViolation("unknown fixture");
}

}  // namespace catlab
