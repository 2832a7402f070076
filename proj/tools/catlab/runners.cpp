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

#include "catlab/runners.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "catlab/analysis.hpp"
#include "catlab/errors.hpp"
#include "catlab/executor.hpp"
#include "catlab/indices.hpp"
#include "catlab/measurement.hpp"
#include "catlab/thermal.hpp"
#include "json.hpp"

namespace catlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

int workers_of(const Config& cfg, const RunOptions& opts) {
    const int w = opts.workers ? *opts.workers : cfg.global.get_int("workers", 1);
    if (w < 1) throw UsageError("workers must be at least 1");
    return w;
}

std::optional<std::uint64_t> seed_of(const Config& cfg, const RunOptions& opts) {
    return opts.seed ? opts.seed : cfg.global.get_u64("seed");
}

DenseLimits limits_of(const Section& s) {
    const int cap = s.get_int("max_spins", kDefaultMaxSpins);
    if (cap < 1) throw UsageError(s.name() + ".max_spins must be positive");
    return DenseLimits{cap};
}

Boundary boundary_of(const Section& s) {
    const std::string b = s.get_string("boundary", "periodic");
    if (b == "periodic") return Boundary::Periodic;
    if (b == "open") return Boundary::Open;
    throw UsageError(s.name() + ".boundary must be periodic or open, got '" + b + "'");
}

double finite_beta(double beta, const std::string& what) {
    if (!std::isfinite(beta) || beta < 0.0) throw UsageError(what + " must be finite and non-negative");
    return beta;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

// Diagnostics shared by every post-measurement record.
void fill_post_diagnostics(Record& r, const QuantumState& post, const Operator& p, const Operator& h_op) {
    const int n = post.num_spins();
    r.c_dense = expect_c(post, total_magnetization(Axis::X, n).realize(), p);
    r.purity = purity(post);
    const EnergyMoments e = energy_moments(post, h_op);
    r.e_mean = e.mean;
    r.e_var = e.variance;
    r.mx2 = transverse_moments(post).mx2;
}

std::vector<Record> finalize(std::vector<Record> records) {
    for (const Record& r : records) check_finite(r);
    return records;
}

Fixture parse_fixture(const std::string& name) {
    static const std::map<std::string, Fixture> table = {
        {"cat_plus", Fixture::CatPlus}, {"cat_minus", Fixture::CatMinus}, {"rho_ex1", Fixture::RhoEx1},
        {"rho_ex2", Fixture::RhoEx2},   {"rho_ex3", Fixture::RhoEx3},     {"psi1", Fixture::Psi1},
        {"psi2", Fixture::Psi2}};
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown fixture '" + name + "'");
    return it->second;
}

}  // namespace

int exit_code_for(std::exception_ptr error) {
    try {
        std::rethrow_exception(error);
    } catch (const UsageError&) {
        return kExitUsage;
    } catch (const InvalidOutcomeError&) {
        return kExitUsage;
    } catch (const ImpossibleOutcomeError&) {
        return kExitUsage;
    } catch (const DomainError&) {
        return kExitUsage;
    } catch (const CapacityError&) {
        return kExitCapacity;
    } catch (...) {
        return kExitInvariant;
    }
}

RunOutput run_convert(const Config& cfg, const RunOptions& opts) {
    const Section s = cfg.section("convert");
    s.check_keys({"n", "beta", "h", "jx", "jy", "jz", "boundary", "outcome", "m_lo", "m_hi", "max_spins"});
    const int n = s.require_int("n");
    const double h = s.get_double("h", 1.0);
    const Couplings j{s.get_double("jx", 0.0), s.get_double("jy", 0.0), s.get_double("jz", 0.0)};
    const Boundary boundary = boundary_of(s);
    const DenseLimits limits = limits_of(s);
    std::vector<double> betas = s.get_double_list("beta");
    for (double b : betas) finite_beta(b, "convert.beta");
    require_capacity(n, limits);

    const bool interval = s.has("m_lo") || s.has("m_hi");
    const std::string outcome = s.get_string("outcome", interval ? "" : "sample");
    if (interval && s.has("outcome")) throw UsageError("convert: give either outcome or m_lo/m_hi, not both");
    const bool sample = !interval && outcome == "sample";
    const auto seed = seed_of(cfg, opts);
    if (sample && !seed) throw UsageError("convert: sampled outcomes need a seed (config 'seed' or --seed)");
    std::optional<OutcomeSpec> fixed;
    if (interval) {
        fixed = OutcomeSpec::interval(s.require_int("m_lo"), s.require_int("m_hi"));
    } else if (!sample) {
        fixed = OutcomeSpec::exact(parse_int(outcome, "convert.outcome"));
    }
    if (fixed) fixed->validate(n);

    const SpinHamiltonian ham{n, h, j, boundary};
    const Operator h_op = ham.realize(limits);
    RunOutput out;
    out.records = run_ordered<Record>(betas.size(), workers_of(cfg, opts), [&](std::size_t k) {
        const auto start = Clock::now();
        const double beta = betas[k];
        const QuantumState rho = gibbs_state(h_op, beta);
        Record r;
        r.n = n;
        r.beta = beta;
        r.h = h;
        r.jx = j.x;
        r.jy = j.y;
        r.jz = j.z;
        OutcomeSpec spec = fixed ? *fixed : OutcomeSpec::exact(0);
        if (!fixed) {
            const std::uint64_t rs = derive_seed(*seed, k);
            spec = OutcomeSpec::exact(sample_outcome(outcome_distribution(rho), rs));
            r.seed = rs;
        }
        r.m_lo = spec.m_lo;
        r.m_hi = spec.m_hi;
        r.prob = outcome_probability(rho, spec);
        const QuantumState post = post_state(rho, spec);
        fill_post_diagnostics(r, post, spec.projector(n, limits), h_op);
        r.i_value = i_function(n, spec.m_lo, spec.m_hi);
        if (j.is_zero()) {
            r.c_closed = spec.is_exact() ? c_closed_form_free(n, spec.m_lo, beta * h)
                                         : c_closed_form_interval(n, spec.m_lo, spec.m_hi, beta * h);
            if (spec.is_exact()) r.purity_bound = purity_bound_free(n, spec.m_lo, beta * h);
        }
        if (opts.timing) r.wall_ms = elapsed_ms(start);
        return r;
    });
    out.records = finalize(std::move(out.records));
    for (const Record& r : out.records) {
        if (r.c_closed && !close_rel(*r.c_dense, *r.c_closed, 1e-9)) {
            out.notices.push_back("dense <C> " + format_number(*r.c_dense) + " disagrees with closed form " +
                                  format_number(*r.c_closed));
            out.exit_code = kExitInvariant;
        }
        if (r.purity_bound && *r.purity > *r.purity_bound * (1.0 + 1e-12) + 1e-12) {
            out.notices.push_back("purity exceeds the free-spin bound");
            out.exit_code = kExitInvariant;
        }
    }
    return out;
}

RunOutput run_sweep(const Config& cfg, const RunOptions& opts) {
    const Section s = cfg.section("sweep");
    s.check_keys({"n_list", "m", "betah", "h", "fixture", "observable", "grid_points", "on_capacity", "max_spins"});
    const std::vector<int> ns = s.get_int_list("n_list");
    if (ns.size() < 3) throw UsageError("sweep: n_list needs at least 3 values to fit an exponent");
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (ns[k] < 2 || ns[k] % 2 != 0) throw UsageError("sweep: n_list values must be even and >= 2");
        if (k && ns[k] <= ns[k - 1]) throw UsageError("sweep: n_list must be strictly increasing");
    }
    const int m = s.get_int("m", 0);
    const double betah = s.get_double("betah", 1.0);
    const double h = s.get_double("h", 1.0);
    if (h == 0.0) throw UsageError("sweep: h must be nonzero");
    finite_beta(betah / h, "sweep.betah / h");
    const std::string fixture_name = s.get_string("fixture", "none");
    const bool thermal = fixture_name == "none";
    const std::optional<Fixture> fixture = thermal ? std::nullopt : std::optional<Fixture>(parse_fixture(fixture_name));
    const std::string observable = s.get_string("observable", thermal ? "mx_pz" : "search");
    if (observable != "mx_pz" && observable != "search") throw UsageError("sweep.observable must be mx_pz or search");
    if (!thermal && observable != "search") throw UsageError("sweep: fixtures are scored with observable = search");
    const std::string on_capacity = s.get_string("on_capacity", "fail");
    if (on_capacity != "fail" && on_capacity != "skip") throw UsageError("sweep.on_capacity must be fail or skip");
    SearchOptions search;
    search.grid_points = s.get_int("grid_points", search.grid_points);
    if (search.grid_points < 1) throw UsageError("sweep.grid_points must be positive");
    const DenseLimits limits = limits_of(s);
    for (int n : ns) {
        if (thermal && !is_valid_mz(n, m)) throw InvalidOutcomeError("sweep: m = " + std::to_string(m) + " is invalid for n = " + std::to_string(n));
    }

    RunOutput out;
    using Item = std::optional<Record>;
    std::vector<std::string> skipped(ns.size());
    std::vector<Item> items = run_ordered<Item>(ns.size(), workers_of(cfg, opts), [&](std::size_t k) -> Item {
        const auto start = Clock::now();
        const int n = ns[k];
        try {
            require_capacity(n, limits);
        } catch (const CapacityError& e) {
            if (on_capacity == "fail") throw;
            skipped[k] = e.what();
            return std::nullopt;
        }
        Record r;
        r.n = n;
        if (thermal) {
            const SpinHamiltonian ham = SpinHamiltonian::free(n, h);
            const Operator h_op = ham.realize(limits);
            const QuantumState rho = gibbs_state(h_op, betah / h);
            const OutcomeSpec spec = OutcomeSpec::exact(m);
            const QuantumState post = post_state(rho, spec);
            r.m_lo = r.m_hi = m;
            r.beta = betah / h;
            r.h = h;
            r.jx = r.jy = r.jz = 0.0;
            r.prob = outcome_probability(rho, spec);
            fill_post_diagnostics(r, post, mz_projector(n, m, limits), h_op);
            if (observable == "search") r.c_dense = observable_search(post, search).c_value;
            r.c_closed = c_closed_form_free(n, m, betah);
            r.purity_bound = purity_bound_free(n, m, betah);
            r.i_value = i_function(n, m, m);
        } else {
            const QuantumState state = fixture_state(*fixture, n);
            r.c_dense = observable_search(state, search).c_value;
            r.purity = purity(state);
            r.mx2 = transverse_moments(state).mx2;
        }
        if (opts.timing) r.wall_ms = elapsed_ms(start);
        return r;
    });
    std::vector<ScalingPoint> points;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!items[k]) {
            out.notices.push_back("skipped n = " + std::to_string(ns[k]) + ": " + skipped[k]);
            continue;
        }
        points.push_back({double(items[k]->n), *items[k]->c_dense});
        out.records.push_back(*items[k]);
    }
    if (points.size() >= 3) {
        const ExponentFit fit = fit_exponent(points, true);
        for (Record& r : out.records) {
            r.q_fit = fit.exponent;
            r.q_fit_err = fit.stderr_;
        }
    } else {
        out.notices.push_back("fewer than 3 sizes survived; no exponent fit");
    }
    out.records = finalize(std::move(out.records));
    return out;
}

RunOutput run_interval(const Config& cfg, const RunOptions& opts) {
    const Section s = cfg.section("interval");
    s.check_keys({"n", "betah", "h", "intervals", "dense", "max_spins"});
    const int n = s.require_int("n");
    if (n < 1) throw UsageError("interval.n must be positive");
    const double betah = s.get_double("betah", 1.0);
    const double h = s.get_double("h", 1.0);
    if (h == 0.0) throw UsageError("interval: h must be nonzero");
    finite_beta(betah / h, "interval.betah / h");
    const DenseLimits limits = limits_of(s);
    const std::string dense_mode = s.get_string("dense", "auto");
    bool dense = false;
    if (dense_mode == "auto") {
        dense = n <= 8;
    } else if (dense_mode == "true") {
        dense = true;
        require_capacity(n, limits);
    } else if (dense_mode != "false") {
        throw UsageError("interval.dense must be auto, true or false");
    }
    std::vector<std::pair<int, int>> intervals;
    for (const std::string& item : split(s.require_string("intervals"), ';')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw UsageError("interval.intervals: expected lo:hi, got '" + item + "'");
        intervals.emplace_back(parse_int(parts[0], "interval lower end"), parse_int(parts[1], "interval upper end"));
        OutcomeSpec::interval(intervals.back().first, intervals.back().second).validate(n);
    }
    std::optional<Operator> h_op;
    std::optional<QuantumState> rho;
    if (dense) {
        h_op = SpinHamiltonian::free(n, h).realize(limits);
        rho = gibbs_state(*h_op, betah / h);
    }
    RunOutput out;
    out.records = run_ordered<Record>(intervals.size(), workers_of(cfg, opts), [&](std::size_t k) {
        const auto start = Clock::now();
        const auto [lo, hi] = intervals[k];
        Record r;
        r.n = n;
        r.m_lo = lo;
        r.m_hi = hi;
        r.beta = betah / h;
        r.h = h;
        r.jx = r.jy = r.jz = 0.0;
        r.prob = std::exp(log_interval_partition_post(n, lo, hi, betah) - log_free_partition_eq(n, betah));
        r.i_value = i_function(n, lo, hi);
        r.c_closed = c_closed_form_interval(n, lo, hi, betah);
        if (dense) {
            const OutcomeSpec spec = OutcomeSpec::interval(lo, hi);
            fill_post_diagnostics(r, post_state(*rho, spec), spec.projector(n, limits), *h_op);
        }
        if (opts.timing) r.wall_ms = elapsed_ms(start);
        return r;
    });
    out.records = finalize(std::move(out.records));
    for (const Record& r : out.records) {
        if (r.c_dense && !close_rel(*r.c_dense, *r.c_closed, 1e-9)) {
            out.notices.push_back("dense interval <C> disagrees with the closed form");
            out.exit_code = kExitInvariant;
        }
    }
    return out;
}

RunOutput run_fit(const Config& cfg, const RunOptions&) {
    const Section s = cfg.section("fit");
    s.check_keys({"n_list", "values", "m", "betah", "floor"});
    const std::vector<int> ns = s.get_int_list("n_list");
    for (std::size_t k = 1; k < ns.size(); ++k) {
        if (ns[k] <= ns[k - 1]) throw UsageError("fit: n_list must be strictly increasing");
    }
    const bool floor = s.get_bool("floor", true);
    std::vector<double> values;
    const bool given = s.has("values");
    if (given) {
        values = s.get_double_list("values");
        if (values.size() != ns.size()) throw UsageError("fit: values and n_list differ in length");
        if (s.has("m") || s.has("betah")) throw UsageError("fit: m and betah apply only without values");
    } else {
        const int m = s.get_int("m", 0);
        const double betah = s.get_double("betah", 1.0);
        for (int n : ns) values.push_back(c_closed_form_free(n, m, betah));
    }
    std::vector<ScalingPoint> pts;
    for (std::size_t k = 0; k < ns.size(); ++k) pts.push_back({double(ns[k]), values[k]});
    const ExponentFit fit = fit_exponent(pts, floor);
    RunOutput out;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        Record r;
        r.n = ns[k];
        if (given) {
            r.c_dense = values[k];
        } else {
            r.m_lo = r.m_hi = s.get_int("m", 0);
            r.beta = s.get_double("betah", 1.0);
            r.h = 1.0;
            r.c_closed = values[k];
        }
        r.q_fit = fit.exponent;
        r.q_fit_err = fit.stderr_;
        out.records.push_back(r);
    }
    out.records = finalize(std::move(out.records));
    return out;
}

RunOutput run_verify(const Config& cfg, const RunOptions&) {
    const Section s = cfg.section("verify");
    s.check_keys({"n", "m", "betah", "ground", "max_spins"});
    const int n = s.require_int("n");
    const int m = s.get_int("m", 0);
    const bool ground = s.get_bool("ground", false);
    if (ground && s.has("betah")) throw UsageError("verify: ground = true excludes betah");
    const double betah = finite_beta(s.get_double("betah", 1.0), "verify.betah");
    const DenseLimits limits = limits_of(s);
    require_capacity(n, limits);
    if (!is_valid_mz(n, m)) throw InvalidOutcomeError("verify: m = " + std::to_string(m) + " is invalid for n = " + std::to_string(n));
    const SpinHamiltonian ham = SpinHamiltonian::free(n, 1.0);
    const Operator h_op = ham.realize(limits);
    const QuantumState pre = ground ? ground_state(h_op) : gibbs_state(h_op, betah);
    const QuantumState post = post_state(pre, OutcomeSpec::exact(m));
    const double t = ground ? 1.0 : std::tanh(betah);
    const double expected_mx2 = n + (double(n) * n - double(m) * m) / 2.0 * t * t;
    const PauliDecomposition dec = pauli_decomposition_c(n, m, limits);

    RunOutput out;
    Record r;
    r.n = n;
    r.m_lo = r.m_hi = m;
    if (!ground) r.beta = betah;
    r.h = 1.0;
    r.jx = r.jy = r.jz = 0.0;
    r.prob = outcome_probability(pre, OutcomeSpec::exact(m));
    fill_post_diagnostics(r, post, mz_projector(n, m, limits), h_op);
    r.c_closed = c_closed_form_free(n, m, ground ? INFINITY : betah);
    out.records.push_back(r);
    out.records = finalize(std::move(out.records));

    const int bound = (n * n - n) / 2 + 1;
    std::ostringstream os;
    os << "mx2 = " << format_number(*r.mx2) << " expected " << format_number(expected_mx2);
    out.notices.push_back(os.str());
    os.str("");
    os << "pauli terms = " << dec.terms.size() << ", settings = " << dec.settings << " (bound " << bound
       << "), reconstruction error = " << format_number(dec.reconstruction_error);
    out.notices.push_back(os.str());
    for (const PauliTerm& term : dec.terms) out.notices.push_back("  " + format_number(term.coefficient) + " " + term.label);
    if (!close_rel(*r.mx2, expected_mx2, 1e-9) || dec.reconstruction_error > 1e-10 || dec.settings > bound ||
        !close_rel(*r.c_dense, *r.c_closed, 1e-9)) {
        out.notices.push_back("verification failed");
        out.exit_code = kExitInvariant;
    }
    return out;
}

RunOutput run_feasibility(const Config& cfg, const RunOptions&) {
    const Section s = cfg.section("feasibility");
    s.check_keys({"tau_single", "n_spins", "distance_r", "sensitivity", "duty_fraction", "constants"});
    FeasibilityInput in;
    in.tau_single = s.require_double("tau_single");
    in.n_spins = s.require_int("n_spins");
    in.distance_r = s.require_double("distance_r");
    in.sensitivity = s.require_double("sensitivity");
    in.duty_fraction = s.get_double("duty_fraction", 1.0);
    const std::string which = s.get_string("constants", "codata");
    if (which != "codata" && which != "rounded") throw UsageError("feasibility.constants must be codata or rounded");
    const PhysicalConstants& c = which == "rounded" ? kRoundedConstants : kCodataConstants;
    const PhysicalConstants& other = which == "rounded" ? kCodataConstants : kRoundedConstants;
    const FeasibilityReport rep = feasibility_calc(in, c);
    const double other_field = single_spin_field(in.distance_r, other);

    RunOutput out;
    out.has_records = false;
    const std::vector<std::pair<std::string, double>> fields = {
        {"tau_coh_s", rep.tau_coh},
        {"window_s", rep.window},
        {"resolvable_field_t", rep.resolvable_field},
        {"single_spin_field_t", rep.single_spin_field},
        {which == "rounded" ? "single_spin_field_codata_t" : "single_spin_field_rounded_t", other_field}};
    nlohmann::ordered_json j;
    j["constants"] = which;
    for (const auto& [k, v] : fields) {
        out.report_lines.push_back(k + " = " + format_number(v));
        j[k] = v;
    }
    out.report_lines.push_back(std::string("feasible = ") + (rep.feasible ? "true" : "false"));
    j["feasible"] = rep.feasible;
    out.json_lines.push_back(j.dump());
    return out;
}

RunOutput run_oracle(const Config& cfg, const RunOptions& opts) {
    const Section s = cfg.section("oracle");
    s.check_keys({"n_max"});
    const int n_max = s.get_int("n_max", 8);
    if (n_max < 4 || n_max > kDefaultMaxSpins) throw UsageError("oracle.n_max must be in [4, 12]");
    const auto families = run_oracle_suite(n_max, opts.inject_fault, workers_of(cfg, opts));
    RunOutput out;
    out.has_records = false;
    int failed = 0;
    for (const FamilyResult& f : families) {
        std::ostringstream os;
        os << (f.passed ? "PASS " : "FAIL ") << f.name << " max_residual=" << format_number(f.max_residual)
           << " tolerance=" << format_number(f.tolerance);
        if (!f.detail.empty()) os << " (" << f.detail << ")";
        out.report_lines.push_back(os.str());
        nlohmann::ordered_json j;
        j["family"] = f.name;
        j["passed"] = f.passed;
        j["max_residual"] = f.max_residual;
        j["tolerance"] = f.tolerance;
        j["detail"] = f.detail;
        out.json_lines.push_back(j.dump());
        failed += f.passed ? 0 : 1;
    }
    out.report_lines.push_back(std::to_string(families.size() - failed) + "/" + std::to_string(families.size()) +
                               " families passed");
    if (failed) out.exit_code = kExitInvariant;
    return out;
}

RunOutput run_mode(const std::string& mode, const Config& cfg, const RunOptions& opts) {
    if (mode == "convert") return run_convert(cfg, opts);
    if (mode == "sweep") return run_sweep(cfg, opts);
    if (mode == "interval") return run_interval(cfg, opts);
    if (mode == "fit") return run_fit(cfg, opts);
    if (mode == "verify") return run_verify(cfg, opts);
    if (mode == "feasibility") return run_feasibility(cfg, opts);
    if (mode == "oracle") return run_oracle(cfg, opts);
    throw UsageError("unknown mode '" + mode + "'");
}

}  // namespace catlab::cli
