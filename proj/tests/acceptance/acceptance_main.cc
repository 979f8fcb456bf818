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

// Acceptance run. One PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qdamp/damping.h"
#include "qdamp/experiment.h"
#include "qdamp/lindblad.h"
#include "qdamp/sampling.h"
#include "test_util.h"

using namespace qdamp;
using qdamp::testing::oracle_controlled;
using qdamp::testing::oracle_ry;
using qdamp::testing::oracle_x;
using qdamp::testing::random_density;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

int failures = 0;
constexpr double kNoLimit = std::numeric_limits<double>::infinity();

void criterion(const char *name, double time_limit_s, const std::function<Outcome()> &body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > time_limit_s) {
        out.ok = false;
        out.detail = "runtime " + num(secs) + " s over limit " + num(time_limit_s) + " s";
    }
    failures += !out.ok;
    std::printf("%s %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", name, secs, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
}

std::vector<double> grid_times() { return collective_time_grid(10, 0.005); }

Outcome kraus_completeness() {
    Outcome o;
    double worst = 0;
    for (double th : single_theta_grid(10)) {
        worst = std::max(worst, kraus_single(th).completeness_error());
    }
    for (double t : grid_times()) {
        worst = std::max(worst, extract_kraus(u_ad_two_explicit(thetas_two(t, 1)), 4, 3).completeness_error());
    }
    o.require(worst <= 1e-12, "completeness error " + num(worst));
    o.detail = o.ok ? "max error " + num(worst) : o.detail;
    return o;
}

Outcome decomposition_corpus() {
    Outcome o;
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    double worst = 0;
    auto check = [&](const std::string &name, const Circuit &c, const ComplexMatrix &target) {
        double d = max_abs_diff(c.unitary(), target);
        worst = std::max(worst, d);
        o.require(d <= 1e-10, name + " diff " + num(d));
    };
    for (int k = 0; k < 20; k++) {
        double th = angle(rng);
        check("c2ry[1,2;0]", decompose_c2ry(th, 1, 2, 0, 4), oracle_controlled(4, {1, 2}, 0, oracle_ry(th)));
        check("c2ry[0,2;1]", decompose_c2ry(th, 0, 2, 1, 4), oracle_controlled(4, {0, 2}, 1, oracle_ry(th)));
        check("c2ry[3,1;2]", decompose_c2ry(th, 3, 1, 2, 4), oracle_controlled(4, {3, 1}, 2, oracle_ry(th)));
        for (bool expand : {false, true}) {
            check("c3ry[1,2,3;0]", decompose_c3ry(th, 1, 2, 3, 0, 4, expand),
                  oracle_controlled(4, {1, 2, 3}, 0, oracle_ry(th)));
            check("c3ry[0,1,2;3]", decompose_c3ry(th, 0, 1, 2, 3, 4, expand),
                  oracle_controlled(4, {0, 1, 2}, 3, oracle_ry(th)));
        }
    }
    double h = 0.5;
    ComplexMatrix sqrt_x{{Complex(h, h), Complex(h, -h)}, {Complex(h, -h), Complex(h, h)}};
    check("c2_sqrtx[0,1;3]", decompose_c2_sqrtx(0, 1, 3, 4), oracle_controlled(4, {0, 1}, 3, sqrt_x));
    check("c2_sqrtx[2,3;0]", decompose_c2_sqrtx(2, 3, 0, 4), oracle_controlled(4, {2, 3}, 0, sqrt_x));
    check("toffoli[0,1;2]", decompose_toffoli(0, 1, 2, 4), oracle_controlled(4, {0, 1}, 2, oracle_x()));
    const std::vector<std::vector<std::size_t>> wirings{{2, 1, 0, 3}, {3, 1, 0, 2}, {0, 2, 3, 1}};
    for (const auto &w : wirings) {
        for (bool expand : {false, true}) {
            check("c3x", decompose_c3x(w[0], w[1], w[2], w[3], 4, expand),
                  oracle_controlled(4, {w[0], w[1], w[2]}, w[3], oracle_x()));
        }
    }
    const std::vector<std::pair<int, int>> taus{{15, 16}, {14, 16}, {12, 16}, {10, 12}, {12, 15}, {11, 16}};
    for (auto [i, j] : taus) {
        ComplexMatrix target = ComplexMatrix::identity(16);
        target(i - 1, i - 1) = 0;
        target(j - 1, j - 1) = 0;
        target(i - 1, j - 1) = 1;
        target(j - 1, i - 1) = 1;
        for (bool expand : {false, true}) {
            check("tau_" + std::to_string(i) + "_" + std::to_string(j), build_tau(i, j, expand), target);
        }
        if (i == 12 && j == 15) {
            for (bool expand : {false, true}) {
                check("tau_12_15_alternate", build_tau_12_15_alternate(expand), target);
            }
        }
    }
    if (o.ok) {
        o.detail = "max diff " + num(worst);
    }
    return o;
}

Outcome circuit_kraus_explicit() {
    Outcome o;
    double worst_u = 0;
    double worst_rho = 0;
    for (double t : grid_times()) {
        TwoQubitAngles a = thetas_two(t, 1);
        for (bool expand : {false, true}) {
            double d = max_abs_diff(u_ad_two_circuit(a, expand).unitary(), u_ad_two_explicit(a));
            worst_u = std::max(worst_u, d);
            o.require(d <= 1e-9, "circuit vs explicit at t=" + num(t) + ": " + num(d));
        }
    }
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> time(0, kMaxGammaT);
    ComplexMatrix env = StateVector::basis(4, 3).density();
    const std::size_t dims[] = {4, 4};
    const std::size_t keep[] = {0};
    for (int k = 0; k < 50; k++) {
        ComplexMatrix rho = random_density(4, rng);
        TwoQubitAngles a = thetas_two(time(rng), 1);
        ComplexMatrix u = u_ad_two_circuit(a).unitary();
        ComplexMatrix full = u * kron(rho, env) * u.adjoint();
        ComplexMatrix reduced = partial_trace(full, dims, keep);
        double d = max_abs_diff(reduced, rho_out_two(rho, a));
        worst_rho = std::max(worst_rho, d);
        o.require(d <= 1e-9, "random state " + std::to_string(k) + ": " + num(d));
    }
    if (o.ok) {
        o.detail = "unitary " + num(worst_u) + ", reduced state " + num(worst_rho);
    }
    return o;
}

Outcome kraus_vs_master() {
    Outcome o;
    double worst = 0;
    for (int l = 1; l <= 6; l++) {
        ComplexMatrix rho = initial_system_density(l);
        for (double t : grid_times()) {
            KrausSet k = extract_kraus(u_ad_two_explicit(thetas_two(t, 1)), 4, 3);
            double d = std::abs(jz_two_exact(k.apply(rho)) - jz_two_exact(analytic_two(rho, t, 1)));
            worst = std::max(worst, d);
            o.require(d <= 5e-4, "l=" + std::to_string(l) + " t=" + num(t) + ": " + num(d));
        }
    }
    if (o.ok) {
        o.detail = "max |dJz| " + num(worst);
    }
    return o;
}

Outcome rk4_oracle() {
    Outcome o;
    double worst = 0;
    std::mt19937_64 rng(99);
    std::vector<ComplexMatrix> singles{ComplexMatrix{{1, 0}, {0, 0}}, random_density(2, rng), random_density(2, rng)};
    for (const auto &rho : singles) {
        for (double t : {0.1, 0.25, 0.5}) {
            double d = max_abs_diff(rk4_integrate(single_qubit_problem(rho, 1), t, 1e-4), analytic_single(rho, t, 1));
            worst = std::max(worst, d);
            o.require(d <= 1e-8, "single t=" + num(t) + ": " + num(d));
        }
    }
    std::vector<ComplexMatrix> pairs;
    for (int l = 1; l <= 6; l++) {
        pairs.push_back(initial_system_density(l));
    }
    pairs.push_back(random_density(4, rng));
    pairs.push_back(random_density(4, rng));
    for (const auto &rho : pairs) {
        for (double t : {0.05, 0.5}) {
            double d = max_abs_diff(rk4_integrate(collective_problem(rho, 1), t, 1e-5), analytic_two(rho, t, 1));
            worst = std::max(worst, d);
            o.require(d <= 1e-8, "collective t=" + num(t) + ": " + num(d));
        }
    }
    if (o.ok) {
        o.detail = "max diff " + num(worst);
    }
    return o;
}

Outcome fig4() {
    Outcome o;
    ExperimentConfig c;
    c.kind = ExperimentKind::Single;
    c.n_shots = std::uint64_t{1} << 14;
    c.n_ave = 25;
    ExperimentResult r = run_single(c);
    o.require(r.rows.size() == 10, "expected 10 points");
    double max_var = 0;
    for (const auto &row : r.rows) {
        double sigma = std::sqrt(row.jz_var);
        double d = std::abs(row.jz_mean - row.jz_exact);
        o.require(d <= 5 * sigma + 1e-6, "theta=" + num(row.theta21) + ": |dJz| " + num(d) + " sigma " + num(sigma));
        o.require(row.jz_var <= 1e-4, "theta=" + num(row.theta21) + ": variance " + num(row.jz_var));
        max_var = std::max(max_var, row.jz_var);
    }
    if (o.ok) {
        o.detail = "max variance " + num(max_var);
    }
    return o;
}

Outcome fig8() {
    Outcome o;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t shots_lo = std::uint64_t{1} << 10;
    const std::uint64_t shots_hi = std::uint64_t{1} << 18;
    auto config = [&](int l, std::uint64_t shots) {
        ExperimentConfig c;
        c.kind = ExperimentKind::Collective;
        c.initial = l;
        c.n_shots = shots;
        c.n_ave = 50;
        c.threads = threads;
        return c;
    };

    for (int l : {1, 2}) {
        std::size_t dark = l == 1 ? 0b0011 : 0b1111;
        for (std::uint64_t shots : {shots_lo, shots_hi}) {
            ExperimentResult r = run_collective(config(l, shots));
            for (const auto &row : r.rows) {
                o.require(row.outcome_totals[dark] == shots * 50, "l=" + std::to_string(l) + " left the dark state");
            }
        }
    }

    const std::set<std::string> support3{"0111", "1010", "1101"};
    const std::set<std::string> support4{"1011", "1110"};
    std::string ratios;
    for (int l = 3; l <= 6; l++) {
        double mean_var[2] = {0, 0};
        int which = 0;
        for (std::uint64_t shots : {shots_lo, shots_hi}) {
            ExperimentResult r = run_collective(config(l, shots));
            for (const auto &row : r.rows) {
                double sigma = std::sqrt(row.jz_var);
                double d = std::abs(row.jz_mean - row.jz_exact);
                o.require(d <= 5 * sigma + 5e-4,
                          "l=" + std::to_string(l) + " t=" + num(row.t) + ": |dJz| " + num(d) + " sigma " + num(sigma));
                mean_var[which] += row.jz_var / static_cast<double>(r.rows.size());
                if (l == 3 || l == 4) {
                    const auto &allowed = l == 3 ? support3 : support4;
                    for (std::size_t k = 0; k < row.outcome_totals.size(); k++) {
                        if (row.outcome_totals[k]) {
                            o.require(allowed.count(basis_label(k, 4)) == 1,
                                      "l=" + std::to_string(l) + " produced |" + basis_label(k, 4) + ">");
                        }
                    }
                }
            }
            which++;
        }
        double ratio = mean_var[0] / mean_var[1];
        o.require(ratio >= 64 && ratio <= 1024, "l=" + std::to_string(l) + " variance ratio " + num(ratio));
        ratios += (ratios.empty() ? "" : ", ") + std::string("l=") + std::to_string(l) + " " + num(ratio);
    }
    if (o.ok) {
        o.detail = "variance ratios " + ratios;
    }
    return o;
}

Outcome bell_degeneracy() {
    Outcome o;
    ComplexMatrix plus = initial_system_density(5);
    ComplexMatrix minus = initial_system_density(6);
    double worst = 0;
    for (double t : grid_times()) {
        double d = std::abs(jz_two_exact(analytic_two(plus, t, 1)) - jz_two_exact(analytic_two(minus, t, 1)));
        worst = std::max(worst, d);
        o.require(d <= 1e-12, "t=" + num(t) + ": " + num(d));
    }
    if (o.ok) {
        o.detail = "max diff " + num(worst);
    }
    return o;
}

}  // namespace

int main() {
    criterion("kraus_completeness", 1, kraus_completeness);
    criterion("decomposition_corpus", 5, decomposition_corpus);
    criterion("circuit_kraus_explicit", kNoLimit, circuit_kraus_explicit);
    criterion("kraus_vs_master_equation", 1, kraus_vs_master);
    criterion("rk4_oracle", 10, rk4_oracle);
    criterion("single_qubit_reproduction", 30, fig4);
    criterion("collective_reproduction", 600, fig8);
    criterion("bell_degeneracy", 1, bell_degeneracy);
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
