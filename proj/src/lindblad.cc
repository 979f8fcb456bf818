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

#include "qdamp/lindblad.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "qdamp/spin_basis.h"

namespace qdamp {

namespace {

constexpr double kPsdDriftTol = 1e-6;

void require_time(double t, double gamma, const char *what) {
    if (!(t >= 0) || !(gamma >= 0)) {
        throw std::invalid_argument(std::string(what) + ": t and gamma must be non-negative");
    }
}

ComplexMatrix hermitize(const ComplexMatrix &m) { return (m + m.adjoint()) * 0.5; }

}  // namespace

ComplexMatrix sigma_minus() { return ComplexMatrix{{0, 0}, {1, 0}}; }

ComplexMatrix analytic_single(const ComplexMatrix &rho_in, double t, double gamma) {
    if (rho_in.rows() != 2 || rho_in.cols() != 2) {
        throw std::invalid_argument("analytic_single: expected a 2x2 matrix");
    }
    require_time(t, gamma, "analytic_single");
    double e = std::exp(-gamma * t);
    double h = std::exp(-gamma * t / 2);
    ComplexMatrix out(2, 2);
    out(0, 0) = rho_in(0, 0).real() * e;
    out(1, 1) = 1.0 - out(0, 0).real();
    out(0, 1) = rho_in(0, 1) * h;
    out(1, 0) = std::conj(out(0, 1));
    return out;
}

ComplexMatrix analytic_two(const ComplexMatrix &rho_in, double t, double gamma) {
    if (rho_in.rows() != 4 || rho_in.cols() != 4) {
        throw std::invalid_argument("analytic_two: expected a 4x4 matrix");
    }
    require_time(t, gamma, "analytic_two");
    double gt = gamma * t;
    double e1 = std::exp(-gt);
    double e2 = std::exp(-2 * gt);
    const ComplexMatrix &r = rho_in;
    ComplexMatrix out(4, 4);
    out(0, 0) = r(0, 0).real();
    out(0, 1) = r(0, 1) * e1;
    out(0, 2) = r(0, 2) * e1;
    out(0, 3) = r(0, 3);
    out(1, 1) = r(1, 1).real() * e2;
    out(1, 2) = r(1, 2) * e2;
    out(1, 3) = r(1, 3) * e1;
    out(2, 2) = r(2, 2).real() * e2 + r(1, 1).real() * 2 * gt * e2;
    out(2, 3) = r(2, 3) * e1 + r(1, 2) * (2 * e1 * (1 - e1));
    out(3, 3) = 1.0 - out(0, 0).real() - out(1, 1).real() - out(2, 2).real();
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = i + 1; j < 4; j++) {
            out(j, i) = std::conj(out(i, j));
        }
    }
    return out;
}

double jz_single_exact(const ComplexMatrix &rho) {
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw std::invalid_argument("jz_single_exact: expected a 2x2 matrix");
    }
    return (rho(0, 0).real() - rho(1, 1).real()) / 2;
}

double jz_two_exact(const ComplexMatrix &rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("jz_two_exact: expected a 4x4 matrix");
    }
    return rho(1, 1).real() - rho(3, 3).real();
}

LindbladProblem single_qubit_problem(const ComplexMatrix &rho0, double gamma) {
    return {rho0, {{sigma_minus(), gamma}}};
}

LindbladProblem collective_problem(const ComplexMatrix &rho0, double gamma) {
    return {rho0, {{total_spin_ops().jminus, gamma}}};
}

ComplexMatrix lindblad_rhs(const LindbladProblem &problem, const ComplexMatrix &rho) {
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto &jump : problem.jumps) {
        const ComplexMatrix &l = jump.op;
        if (l.rows() != rho.rows() || l.cols() != rho.cols()) {
            throw std::invalid_argument("lindblad_rhs: jump operator dimension mismatch");
        }
        ComplexMatrix ld = l.adjoint();
        ComplexMatrix ldl = ld * l;
        out += (l * rho * ld - (ldl * rho + rho * ldl) * 0.5) * jump.rate;
    }
    return out;
}

ComplexMatrix rk4_integrate(const LindbladProblem &problem, double t_end, double dt) {
    if (!(dt > 0)) {
        throw std::invalid_argument("rk4_integrate: dt must be positive");
    }
    if (!(t_end >= 0)) {
        throw std::invalid_argument("rk4_integrate: t_end must be non-negative");
    }
    double steps_real = t_end / dt;
    double steps_rounded = std::round(steps_real);
    if (std::abs(steps_real - steps_rounded) > 1e-6) {
        throw std::invalid_argument("rk4_integrate: t_end is not an integer multiple of dt");
    }
    require_density_matrix(problem.rho0, "rk4_integrate");
    auto steps = static_cast<long long>(steps_rounded);

    ComplexMatrix rho = problem.rho0;
    for (long long n = 0; n < steps; n++) {
        ComplexMatrix k1 = lindblad_rhs(problem, rho);
        ComplexMatrix k2 = lindblad_rhs(problem, rho + k1 * (dt / 2));
        ComplexMatrix k3 = lindblad_rhs(problem, rho + k2 * (dt / 2));
        ComplexMatrix k4 = lindblad_rhs(problem, rho + k3 * dt);
        rho = rho + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6);
        rho = hermitize(rho);
        double floor = min_hermitian_eigenvalue(rho);
        if (floor < -kPsdDriftTol) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "rk4_integrate: state left the PSD cone at step %lld (t = %.6g): min eigenvalue %.3e",
                          n + 1, static_cast<double>(n + 1) * dt, floor);
            throw std::runtime_error(buf);
        }
    }
    return rho;
}

}  // namespace qdamp
