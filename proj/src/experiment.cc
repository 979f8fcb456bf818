// Copyright 2026 The qdamp Authors
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

#include "qdamp/experiment.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "json.hpp"
#include "qdamp/damping.h"
#include "qdamp/lindblad.h"
#include "qdamp/sampling.h"

namespace qdamp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kGridPoints = 10;
constexpr double kTimeStep = 0.005;

// Runs body(i) for i in [0, n). Each index writes only its own slot, so the
// result is the same for any thread count.
void for_each_index(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &body) {
    std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

struct Sampled {
    double mean = 0;
    double var = 0;
    std::vector<std::uint64_t> totals;
};

Sampled sample_rounds(const std::vector<double> &probs, const ExperimentConfig &config, std::size_t time_index,
                      double (*estimator)(const ShotRecord &)) {
    Sampled out;
    out.totals.assign(probs.size(), 0);
    std::vector<double> estimates;
    estimates.reserve(config.n_ave);
    for (std::uint64_t round = 0; round < config.n_ave; round++) {
        ShotRecord rec = sample_counts(probs, config.n_shots, stream_seed(config.seed, round, time_index), time_index);
        estimates.push_back(estimator(rec));
        for (std::size_t k = 0; k < probs.size(); k++) {
            out.totals[k] += rec.counts[k];
        }
    }
    MeanVariance mv = average_and_variance(estimates);
    out.mean = mv.mean;
    out.var = mv.variance;
    return out;
}

std::vector<double> weights_from_totals(const std::vector<std::uint64_t> &totals, std::size_t n_qubits,
                                        std::size_t n_system) {
    ShotRecord r;
    r.n_qubits = n_qubits;
    r.counts = totals;
    for (auto c : totals) {
        r.n_shots += c;
    }
    return system_weights(r, n_system);
}

ExperimentResult result_header(const ExperimentConfig &config, std::size_t n_qubits) {
    ExperimentResult res;
    res.kind = config.kind;
    res.initial = config.kind == ExperimentKind::Collective ? config.initial : 0;
    res.gamma = config.gamma;
    res.n_shots = config.exact ? 0 : config.n_shots;
    res.n_ave = config.exact ? 0 : config.n_ave;
    res.seed = config.seed;
    res.exact = config.exact;
    res.n_qubits = n_qubits;
    return res;
}

std::string fmt(double x) {
    if (std::isnan(x)) {
        return "";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::json num(double x) {
    if (std::isnan(x)) {
        return nullptr;
    }
    return x;
}

}  // namespace

ExperimentKind parse_kind(const std::string &name) {
    if (name == "single") {
        return ExperimentKind::Single;
    }
    if (name == "collective") {
        return ExperimentKind::Collective;
    }
    if (name == "verify") {
        return ExperimentKind::Verify;
    }
    throw ConfigError("unknown experiment '" + name + "'");
}

std::string kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Single:
            return "single";
        case ExperimentKind::Collective:
            return "collective";
        case ExperimentKind::Verify:
            return "verify";
    }
    return "?";
}

void validate(const ExperimentConfig &config) {
    if (config.n_shots < 1) {
        throw ConfigError("n_shots must be at least 1");
    }
    if (config.n_ave < 1) {
        throw ConfigError("n_ave must be at least 1");
    }
    if (config.threads < 1) {
        throw ConfigError("threads must be at least 1");
    }
    if (!std::isfinite(config.gamma) || !(config.gamma > 0)) {
        throw ConfigError("gamma must be a positive finite number");
    }
    if (config.kind == ExperimentKind::Collective) {
        if (config.initial < 1 || config.initial > 6) {
            throw ConfigError("initial must be in 1..6, got " + std::to_string(config.initial));
        }
        double t_max = kTimeStep * static_cast<double>(kGridPoints - 1);
        if (config.gamma * t_max > kMaxGammaT) {
            throw ConfigError("gamma * t_max = " + fmt(config.gamma * t_max) + " exceeds " + fmt(kMaxGammaT));
        }
    }
}

Circuit prepare_initial(int l) {
    Circuit c(2);
    switch (l) {
        case 1:
            break;
        case 2:
        case 6:
            c.x(0).x(1);
            break;
        case 3:
        case 5:
            c.x(1);
            break;
        case 4:
            c.x(0);
            break;
        default:
            throw ConfigError("initial condition must be in 1..6, got " + std::to_string(l));
    }
    if (l >= 5) {
        c.swap(0, 1);
        c.controlled("H", gate_h(), {0}, 1);
        c.swap(0, 1);
    }
    return c;
}

ComplexMatrix initial_system_density(int l) { return prepare_initial(l).apply(StateVector::basis(4, 0)).density(); }

Circuit collective_input_circuit(int l) {
    Circuit prep = prepare_initial(l);
    Circuit c(4);
    c.x(2).x(3);
    for (const auto &g : prep.gates()) {
        c.append(g);
    }
    return c;
}

ExperimentResult run_single(const ExperimentConfig &config) {
    validate(config);
    ExperimentResult res = result_header(config, 2);
    std::vector<double> thetas = single_theta_grid(kGridPoints);
    res.rows.resize(thetas.size());
    ComplexMatrix excited{{1, 0}, {0, 0}};

    for_each_index(thetas.size(), config.threads, [&](std::size_t i) {
        double theta = thetas[i];
        Circuit c(2);
        c.x(1);
        c.append(u_ad_single_circuit(theta));
        std::vector<double> probs = outcome_probs(c.apply(StateVector::basis(4, 0)));

        ResultRow &row = res.rows[i];
        row.t = time_from_theta_single(theta, config.gamma);
        row.theta21 = row.theta32 = row.theta31 = theta;
        row.jz_exact = jz_single_exact(analytic_single(excited, row.t, config.gamma));
        std::vector<double> w;
        if (config.exact) {
            row.jz_mean = jz_single_from_probs(probs);
            row.jz_var = 0;
            w = system_weights(probs, 1);
        } else {
            Sampled s = sample_rounds(probs, config, i, jz_single);
            row.jz_mean = s.mean;
            row.jz_var = s.var;
            w = weights_from_totals(s.totals, 2, 1);
            row.outcome_totals = std::move(s.totals);
        }
        row.w[0] = w[0];
        row.w[1] = w[1];
        row.w[2] = kNaN;
        row.w[3] = kNaN;
    });
    return res;
}

ExperimentResult run_collective(const ExperimentConfig &config) {
    validate(config);
    ExperimentResult res = result_header(config, 4);
    std::vector<double> times = collective_time_grid(kGridPoints, kTimeStep);
    res.rows.resize(times.size());
    ComplexMatrix rho_in = initial_system_density(config.initial);
    Circuit input = collective_input_circuit(config.initial);
    StateVector start = input.apply(StateVector::basis(16, 0));

    std::size_t dark = 0;
    if (config.initial == 1) {
        dark = 0b0011;
    } else if (config.initial == 2) {
        dark = 0b1111;
    }

    for_each_index(times.size(), config.threads, [&](std::size_t i) {
        double t = times[i];
        TwoQubitAngles a = thetas_two(t, config.gamma);
        std::vector<double> probs = outcome_probs(u_ad_two_circuit(a).apply(start));

        ResultRow &row = res.rows[i];
        row.t = t;
        row.theta21 = a.theta21;
        row.theta32 = a.theta32;
        row.theta31 = a.theta31;
        row.jz_exact = jz_two_exact(analytic_two(rho_in, t, config.gamma));
        std::vector<double> w;
        if (config.exact) {
            row.jz_mean = jz_two_from_probs(probs);
            row.jz_var = 0;
            w = system_weights(probs, 2);
            if (dark && 1 - probs[dark] > 1e-12) {
                throw ExperimentFailure("initial condition " + std::to_string(config.initial) + " decayed at t = " +
                                        fmt(t));
            }
        } else {
            Sampled s = sample_rounds(probs, config, i, jz_two);
            row.jz_mean = s.mean;
            row.jz_var = s.var;
            w = weights_from_totals(s.totals, 4, 2);
            if (dark && s.totals[dark] != config.n_shots * config.n_ave) {
                throw ExperimentFailure("initial condition " + std::to_string(config.initial) +
                                        " produced outcomes other than |" + basis_label(dark, 4) + "> at t = " +
                                        fmt(t));
            }
            row.outcome_totals = std::move(s.totals);
        }
        std::copy(w.begin(), w.end(), row.w);
    });
    return res;
}

std::string to_csv(const ExperimentResult &result) {
    std::string out = "t,theta21,theta32,theta31,w0,w1,w2,w3,jz_mean,jz_var,jz_exact_me,n_shots,n_ave,seed\n";
    for (const auto &r : result.rows) {
        std::array<double, 11> vals{r.t, r.theta21, r.theta32, r.theta31, r.w[0],     r.w[1],
                                    r.w[2], r.w[3],   r.jz_mean, r.jz_var, r.jz_exact};
        for (double v : vals) {
            out += fmt(v);
            out += ',';
        }
        out += std::to_string(result.n_shots) + ',' + std::to_string(result.n_ave) + ',' +
               std::to_string(result.seed) + '\n';
    }
    return out;
}

std::string to_json(const ExperimentResult &result) {
    nlohmann::ordered_json j;
    j["experiment"] = kind_name(result.kind);
    if (result.kind == ExperimentKind::Collective) {
        j["initial"] = result.initial;
    }
    j["gamma"] = result.gamma;
    j["n_shots"] = result.n_shots;
    j["n_ave"] = result.n_ave;
    j["seed"] = result.seed;
    j["exact"] = result.exact;
    j["n_qubits"] = result.n_qubits;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : result.rows) {
        nlohmann::ordered_json row;
        row["t"] = num(r.t);
        row["theta21"] = num(r.theta21);
        row["theta32"] = num(r.theta32);
        row["theta31"] = num(r.theta31);
        row["w0"] = num(r.w[0]);
        row["w1"] = num(r.w[1]);
        row["w2"] = num(r.w[2]);
        row["w3"] = num(r.w[3]);
        row["jz_mean"] = num(r.jz_mean);
        row["jz_var"] = num(r.jz_var);
        row["jz_exact_me"] = num(r.jz_exact);
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < r.outcome_totals.size(); k++) {
            if (r.outcome_totals[k]) {
                counts[basis_label(k, result.n_qubits)] = r.outcome_totals[k];
            }
        }
        row["counts"] = counts;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

bool VerifySummary::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry &e) { return e.informational || e.passed; });
}

VerifySummary run_verify() {
    VerifySummary sum;
    auto add = [&](std::string name, const VerifyReport &r) {
        sum.entries.push_back({std::move(name), r.max_abs_diff, r.tol, r.passed, r.worst_row, r.worst_col, false});
    };
    auto add_scalar = [&](std::string name, double err, double tol) {
        sum.entries.push_back({std::move(name), err, tol, err <= tol, 0, 0, false});
    };
    auto label = [](const std::string &base, double x) { return base + "(" + fmt(x) + ")"; };

    std::vector<double> thetas = single_theta_grid(kGridPoints);
    std::vector<double> times = collective_time_grid(kGridPoints, kTimeStep);
    constexpr double kTol = 1e-10;
    constexpr double kChannelTol = 1e-9;
    constexpr double kKrausTol = 1e-12;

    for (double th : thetas) {
        add(label("single_circuit", th), verify_decomposition(u_ad_single_circuit(th), u_ad_single(th), kTol));
    }

    using W = std::vector<std::size_t>;
    auto target = [](std::size_t n, W controls, std::size_t t, const ComplexMatrix &u) {
        return controlled_unitary(n, controls, W{t}, u);
    };
    for (double th : thetas) {
        add(label("c2ry[1,2;0]", th), verify_decomposition(decompose_c2ry(th, 1, 2, 0, 4), target(4, {1, 2}, 0, gate_ry(th)), kTol));
        add(label("c2ry[0,2;1]", th), verify_decomposition(decompose_c2ry(th, 0, 2, 1, 4), target(4, {0, 2}, 1, gate_ry(th)), kTol));
        for (bool expand : {false, true}) {
            add(label(expand ? "c3ry_expanded[1,2,3;0]" : "c3ry[1,2,3;0]", th),
                verify_decomposition(decompose_c3ry(th, 1, 2, 3, 0, 4, expand), target(4, {1, 2, 3}, 0, gate_ry(th)), kTol));
        }
    }
    add("toffoli[0,1;2]", verify_decomposition(decompose_toffoli(0, 1, 2, 3), target(3, {0, 1}, 2, gate_x()), kTol));
    add("c2_sqrtx[0,1;3]", verify_decomposition(decompose_c2_sqrtx(0, 1, 3, 4), target(4, {0, 1}, 3, gate_sqrt_x()), kTol));
    const std::array<std::array<std::size_t, 4>, 3> c3x_wirings{{{2, 1, 0, 3}, {3, 1, 0, 2}, {0, 2, 3, 1}}};
    for (const auto &w : c3x_wirings) {
        for (bool expand : {false, true}) {
            std::string name = std::string(expand ? "c3x_expanded[" : "c3x[") + std::to_string(w[0]) + "," +
                               std::to_string(w[1]) + "," + std::to_string(w[2]) + ";" + std::to_string(w[3]) + "]";
            add(name, verify_decomposition(decompose_c3x(w[0], w[1], w[2], w[3], 4, expand),
                                           target(4, {w[0], w[1], w[2]}, w[3], gate_x()), kTol));
        }
    }

    const std::array<std::pair<int, int>, 6> taus{{{15, 16}, {14, 16}, {12, 16}, {10, 12}, {12, 15}, {11, 16}}};
    for (auto [i, j] : taus) {
        for (bool expand : {false, true}) {
            std::string name = std::string(expand ? "tau_expanded_" : "tau_") + std::to_string(i) + "_" + std::to_string(j);
            add(name, verify_decomposition(build_tau(i, j, expand), tau_matrix(i, j), kTol));
        }
    }
    for (bool expand : {false, true}) {
        add(expand ? "tau_expanded_12_15_alternate" : "tau_12_15_alternate",
            verify_decomposition(build_tau_12_15_alternate(expand), tau_matrix(12, 15), kTol));
    }

    for (double t : times) {
        TwoQubitAngles a = thetas_two(t, 1);
        ComplexMatrix explicit_u = u_ad_two_explicit(a);
        add(label("two_circuit", t), verify_decomposition(u_ad_two_circuit(a), explicit_u, kChannelTol));
        add(label("two_circuit_expanded", t), verify_decomposition(u_ad_two_circuit(a, true), explicit_u, kChannelTol));
        add(label("two_controlled", t), verify_matrix(u_ad_two_from_controlled(a), explicit_u, kChannelTol));
    }

    for (double th : thetas) {
        add_scalar(label("kraus_single", th), kraus_single(th).completeness_error(), kKrausTol);
    }
    for (double t : times) {
        add_scalar(label("kraus_two", t), extract_kraus(u_ad_two_explicit(thetas_two(t, 1)), 4, 3).completeness_error(),
                   kKrausTol);
    }

    // Other factor orderings differ at second order in the angles.
    TwoQubitAngles a = thetas_two(times.back(), 1);
    ComplexMatrix explicit_u = u_ad_two_explicit(a);
    std::array<DecayChannel, 3> order{DecayChannel::C21, DecayChannel::C31, DecayChannel::C32};
    const char *names[] = {"21", "31", "32"};
    do {
        std::string name = "ordering";
        for (auto ch : order) {
            name += std::string("_") + names[static_cast<int>(ch)];
        }
        VerifyReport r = verify_matrix(u_ad_two_ordered(a, order), explicit_u, kChannelTol);
        sum.entries.push_back({name, r.max_abs_diff, r.tol, r.passed, r.worst_row, r.worst_col, true});
    } while (std::next_permutation(order.begin(), order.end()));
    return sum;
}

std::string verify_text(const VerifySummary &summary) {
    std::string out;
    std::size_t failed = 0;
    for (const auto &e : summary.entries) {
        const char *tag = e.informational ? "INFO" : (e.passed ? "PASS" : "FAIL");
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s %s max_abs_diff=%.3e tol=%.1e", tag, e.name.c_str(), e.max_abs_diff, e.tol);
        out += buf;
        if (!e.passed) {
            out += " worst=(" + std::to_string(e.worst_row) + "," + std::to_string(e.worst_col) + ")";
        }
        out += '\n';
        if (!e.informational && !e.passed) {
            failed++;
        }
    }
    out += failed ? "verify: " + std::to_string(failed) + " check(s) failed\n" : "verify: all checks passed\n";
    return out;
}

std::string verify_json(const VerifySummary &summary) {
    nlohmann::ordered_json j;
    j["passed"] = summary.all_passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto &e : summary.entries) {
        nlohmann::ordered_json c;
        c["name"] = e.name;
        c["max_abs_diff"] = e.max_abs_diff;
        c["tol"] = e.tol;
        c["passed"] = e.passed;
        c["informational"] = e.informational;
        c["worst_row"] = e.worst_row;
        c["worst_col"] = e.worst_col;
        j["checks"].push_back(c);
    }
    return j.dump(2) + "\n";
}

}  // namespace qdamp
