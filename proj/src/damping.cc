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

#include "qdamp/damping.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdamp {

namespace {

constexpr std::size_t kWires = 4;

ComplexMatrix c2ry_direct(double theta, std::size_t a, std::size_t b, std::size_t t) {
    std::array<std::size_t, 2> controls{a, b};
    std::array<std::size_t, 1> targets{t};
    return controlled_unitary(kWires, controls, targets, gate_ry(theta));
}

ComplexMatrix c3ry_direct(double theta, std::size_t a, std::size_t b, std::size_t c, std::size_t t) {
    std::array<std::size_t, 3> controls{a, b, c};
    std::array<std::size_t, 1> targets{t};
    return controlled_unitary(kWires, controls, targets, gate_ry(theta));
}

}  // namespace

double theta_single(double t, double gamma) {
    if (!(t >= 0) || !(gamma >= 0)) {
        throw std::invalid_argument("theta_single: t and gamma must be non-negative");
    }
    return 2 * std::acos(std::exp(-gamma * t / 2));
}

double time_from_theta_single(double theta, double gamma) {
    if (!(gamma > 0)) {
        throw std::invalid_argument("time_from_theta_single: gamma must be positive");
    }
    if (!(theta >= 0) || !(theta < std::numbers::pi)) {
        throw std::domain_error("time_from_theta_single: theta must lie in [0, pi)");
    }
    return -2 * std::log(std::cos(theta / 2)) / gamma;
}

double strength_from_theta(double theta) {
    double s = std::sin(theta / 2);
    return s * s;
}

DecayStrengths gammas_two(double t, double gamma) {
    double gt = gamma * t;
    if (!(t >= 0) || !(gamma >= 0) || !(gt <= kMaxGammaT)) {
        throw std::domain_error("gammas_two: gamma*t = " + std::to_string(gt) + " outside [0, " +
                                std::to_string(kMaxGammaT) + "]");
    }
    return {2 * gt - 4 * gt * gt, 2 * gt - 2 * gt * gt, 2 * gt * gt};
}

TwoQubitAngles thetas_from_strengths(const DecayStrengths &g) {
    auto angle = [](double strength, const char *name) {
        if (!(strength >= 0) || !(strength <= 1)) {
            throw std::domain_error(std::string("thetas_from_strengths: ") + name + " outside [0, 1]");
        }
        return 2 * std::asin(std::sqrt(strength));
    };
    return {angle(g.g21, "G21"), angle(g.g32, "G32"), angle(g.g31, "G31")};
}

TwoQubitAngles thetas_two(double t, double gamma) { return thetas_from_strengths(gammas_two(t, gamma)); }

std::vector<double> single_theta_grid(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; i++) {
        out[i] = std::numbers::pi / 10 * static_cast<double>(i);
    }
    return out;
}

std::vector<double> collective_time_grid(std::size_t count, double step) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; i++) {
        out[i] = step * static_cast<double>(i);
    }
    return out;
}

SingleSchedule single_schedule_from_thetas(const std::vector<double> &thetas, double gamma) {
    SingleSchedule s;
    s.gamma = gamma;
    for (double theta : thetas) {
        s.thetas.push_back(theta);
        s.times.push_back(time_from_theta_single(theta, gamma));
        s.strengths.push_back(strength_from_theta(theta));
    }
    return s;
}

TwoSchedule two_schedule(const std::vector<double> &times, double gamma) {
    TwoSchedule s;
    s.gamma = gamma;
    for (double t : times) {
        s.times.push_back(t);
        s.strengths.push_back(gammas_two(t, gamma));
        s.thetas.push_back(thetas_from_strengths(s.strengths.back()));
    }
    return s;
}

ComplexMatrix givens_rotation(std::size_t dim, std::size_t p, std::size_t q, double theta) {
    if (p >= dim || q >= dim || p == q) {
        throw std::invalid_argument("givens_rotation: bad index pair");
    }
    ComplexMatrix g = ComplexMatrix::identity(dim);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    g(p, p) = c;
    g(q, q) = c;
    g(q, p) = s;
    g(p, q) = -s;
    return g;
}

ComplexMatrix u_ad_single(double theta) { return givens_rotation(4, 1, 2, theta); }

Circuit u_ad_single_circuit(double theta) {
    Circuit c(2);
    c.cx(0, 1);
    c.controlled("RY", gate_ry(theta), {1}, 0, {theta});
    c.cx(0, 1);
    return c;
}

ComplexMatrix rotation_factor(DecayChannel channel, double theta) {
    switch (channel) {
        case DecayChannel::C32:
            return givens_rotation(16, 10, 13, theta) * givens_rotation(16, 11, 14, theta);
        case DecayChannel::C31:
            return givens_rotation(16, 7, 13, theta);
        case DecayChannel::C21:
            return givens_rotation(16, 7, 10, theta) * givens_rotation(16, 6, 9, theta);
    }
    throw std::invalid_argument("rotation_factor: unknown channel");
}

ComplexMatrix u_ad_two_ordered(const TwoQubitAngles &angles, const std::array<DecayChannel, 3> &order) {
    auto theta_of = [&](DecayChannel c) {
        switch (c) {
            case DecayChannel::C21:
                return angles.theta21;
            case DecayChannel::C31:
                return angles.theta31;
            case DecayChannel::C32:
                return angles.theta32;
        }
        throw std::invalid_argument("u_ad_two_ordered: unknown channel");
    };
    ComplexMatrix u = ComplexMatrix::identity(16);
    for (DecayChannel c : order) {
        u = u * rotation_factor(c, theta_of(c));
    }
    return u;
}

ComplexMatrix u_ad_two_explicit(const TwoQubitAngles &angles) {
    return u_ad_two_ordered(angles, {DecayChannel::C21, DecayChannel::C31, DecayChannel::C32});
}

ComplexMatrix u_ad_two_from_controlled(const TwoQubitAngles &angles) {
    ComplexMatrix t1516 = tau_matrix(15, 16);
    ComplexMatrix t1416 = tau_matrix(14, 16);
    ComplexMatrix t1015 = tau_matrix(11, 16) * tau_matrix(10, 12) * tau_matrix(12, 15);

    ComplexMatrix r32 = t1416 * t1516 * c2ry_direct(angles.theta32, 0, 2, 1) * t1516 * t1416;
    ComplexMatrix r31 = t1416 * c3ry_direct(angles.theta31, 1, 2, 3, 0) * t1416;
    ComplexMatrix r21 = t1015 * c2ry_direct(angles.theta21, 1, 2, 0) * t1015.adjoint();
    return r21 * r31 * r32;
}

Circuit u_ad_two_circuit(const TwoQubitAngles &angles, bool expand_toffoli) {
    Circuit c(kWires);

    c.append(build_tau(14, 16, expand_toffoli));
    c.append(build_tau(15, 16, expand_toffoli));
    c.append(decompose_c2ry(angles.theta32, 0, 2, 1, kWires));
    c.append(build_tau(15, 16, expand_toffoli));
    c.append(build_tau(14, 16, expand_toffoli));

    c.append(build_tau(14, 16, expand_toffoli));
    c.append(decompose_c3ry(angles.theta31, 1, 2, 3, 0, kWires, expand_toffoli));
    c.append(build_tau(14, 16, expand_toffoli));

    c.append(build_tau(11, 16, expand_toffoli));
    c.append(build_tau(10, 12, expand_toffoli));
    c.append(build_tau(12, 15, expand_toffoli));
    c.append(decompose_c2ry(angles.theta21, 1, 2, 0, kWires));
    c.append(build_tau(12, 15, expand_toffoli));
    c.append(build_tau(10, 12, expand_toffoli));
    c.append(build_tau(11, 16, expand_toffoli));
    return c;
}

ChannelEntries channel_entries(const TwoQubitAngles &angles) {
    double c21 = std::cos(angles.theta21 / 2);
    double s21 = std::sin(angles.theta21 / 2);
    double c32 = std::cos(angles.theta32 / 2);
    double s32 = std::sin(angles.theta32 / 2);
    double c31 = std::cos(angles.theta31 / 2);
    double s31 = std::sin(angles.theta31 / 2);
    return {c21 * c31, c32, s21 * c31, s32, s31};
}

std::size_t KrausSet::dim() const { return operators.empty() ? 0 : operators.front().rows(); }

double KrausSet::completeness_error() const {
    if (operators.empty()) {
        throw std::invalid_argument("KrausSet: no operators");
    }
    ComplexMatrix sum(dim(), dim());
    for (const auto &m : operators) {
        sum += m.adjoint() * m;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

ComplexMatrix KrausSet::apply(const ComplexMatrix &rho) const {
    if (operators.empty() || rho.rows() != dim() || rho.cols() != dim()) {
        throw std::invalid_argument("KrausSet::apply: dimension mismatch");
    }
    ComplexMatrix out(dim(), dim());
    for (const auto &m : operators) {
        out += m * rho * m.adjoint();
    }
    return out;
}

KrausSet extract_kraus(const ComplexMatrix &u, std::size_t env_dim, std::size_t env_initial) {
    if (env_dim == 0 || !u.is_square() || u.rows() % env_dim != 0) {
        throw std::invalid_argument("extract_kraus: unitary dimension does not factor over the environment");
    }
    if (env_initial >= env_dim) {
        throw std::invalid_argument("extract_kraus: environment initial index out of range");
    }
    if (!is_unitary(u, kDefaultTol)) {
        throw std::invalid_argument("extract_kraus: input is not unitary");
    }
    std::size_t sys_dim = u.rows() / env_dim;
    KrausSet k;
    for (std::size_t e = 0; e < env_dim; e++) {
        ComplexMatrix m(sys_dim, sys_dim);
        for (std::size_t s = 0; s < sys_dim; s++) {
            for (std::size_t sp = 0; sp < sys_dim; sp++) {
                m(s, sp) = u(s * env_dim + e, sp * env_dim + env_initial);
            }
        }
        k.operators.push_back(std::move(m));
        k.env_outcomes.push_back(e);
    }
    return k;
}

KrausSet kraus_single(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    KrausSet k;
    k.operators.push_back(ComplexMatrix{{0, 0}, {s, 0}});
    k.operators.push_back(ComplexMatrix{{c, 0}, {0, 1}});
    k.env_outcomes = {0, 1};
    return k;
}

ComplexMatrix channel_via_unitary(const ComplexMatrix &u, const ComplexMatrix &rho_s, std::size_t env_dim,
                                  std::size_t env_initial) {
    ComplexMatrix env = StateVector::basis(env_dim, env_initial).density();
    ComplexMatrix full = kron(rho_s, env);
    if (full.rows() != u.rows()) {
        throw std::invalid_argument("channel_via_unitary: dimension mismatch");
    }
    ComplexMatrix out = u * full * u.adjoint();
    std::array<std::size_t, 2> dims{rho_s.rows(), env_dim};
    std::array<std::size_t, 1> keep{0};
    return partial_trace(out, dims, keep);
}

ComplexMatrix rho_out_single(const ComplexMatrix &rho_in, double theta) {
    if (rho_in.rows() != 2 || rho_in.cols() != 2) {
        throw std::invalid_argument("rho_out_single: expected a 2x2 density matrix");
    }
    require_density_matrix(rho_in, "rho_out_single");
    return kraus_single(theta).apply(rho_in);
}

ComplexMatrix rho_out_two(const ComplexMatrix &rho_in, const TwoQubitAngles &angles) {
    if (rho_in.rows() != 4 || rho_in.cols() != 4) {
        throw std::invalid_argument("rho_out_two: expected a 4x4 density matrix");
    }
    require_density_matrix(rho_in, "rho_out_two");
    ChannelEntries e = channel_entries(angles);
    const ComplexMatrix &r = rho_in;
    ComplexMatrix out(4, 4);
    out(0, 0) = r(0, 0);
    out(0, 1) = r(0, 1) * e.u8_8;
    out(0, 2) = r(0, 2) * e.u12_12;
    out(0, 3) = r(0, 3);
    out(1, 1) = e.u8_8 * e.u8_8 * r(1, 1);
    out(1, 2) = e.u8_8 * e.u12_12 * r(1, 2);
    out(1, 3) = e.u8_8 * r(1, 3);
    out(2, 2) = e.u12_12 * e.u12_12 * r(2, 2) + e.u11_8 * e.u11_8 * r(1, 1);
    out(2, 3) = e.u12_12 * r(2, 3) + e.u11_8 * e.u15_12 * r(1, 2);
    out(3, 3) = 1.0 - out(0, 0).real() - out(1, 1).real() - out(2, 2).real();
    for (std::size_t i = 0; i < 4; i++) {
        out(i, i) = out(i, i).real();
        for (std::size_t j = i + 1; j < 4; j++) {
            out(j, i) = std::conj(out(i, j));
        }
    }
    return out;
}

}  // namespace qdamp
