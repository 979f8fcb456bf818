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

#include "qdamp/gates.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qdamp {

namespace {

constexpr Complex kI{0, 1};

void require_params(std::string_view name, std::span<const double> params, std::size_t n) {
    if (params.size() != n) {
        throw std::invalid_argument("gate " + std::string(name) + " takes " + std::to_string(n) +
                                    " parameter(s), got " + std::to_string(params.size()));
    }
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

void require_distinct(std::initializer_list<std::size_t> wires, std::size_t n_wires, const char *what) {
    std::vector<std::size_t> seen;
    for (std::size_t w : wires) {
        if (w >= n_wires) {
            throw std::invalid_argument(std::string(what) + ": wire " + std::to_string(w) + " out of range");
        }
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
            throw std::invalid_argument(std::string(what) + ": coincident wires");
        }
        seen.push_back(w);
    }
}

/// C2(W^2)[a,b;t] as CW[a;t], CX[b;a], CW^dagger[a;t], CX[b;a], CW[b;t].
Circuit barenco_c2(const std::string &name, const ComplexMatrix &w, const std::string &dag_name,
                   const ComplexMatrix &w_dag, std::vector<double> params, std::vector<double> dag_params,
                   std::size_t a, std::size_t b, std::size_t t, std::size_t n_wires) {
    Circuit c(n_wires);
    c.controlled(name, w, {a}, t, params);
    c.cx(b, a);
    c.controlled(dag_name, w_dag, {a}, t, dag_params);
    c.cx(b, a);
    c.controlled(name, w, {b}, t, params);
    return c;
}

void append_c2x(Circuit &c, std::size_t a, std::size_t b, std::size_t t, bool expand) {
    if (expand) {
        c.append(decompose_toffoli(a, b, t, c.n_wires()));
    } else {
        c.ccx(a, b, t);
    }
}

}  // namespace

ComplexMatrix gate_x() { return ComplexMatrix{{0, 1}, {1, 0}}; }
ComplexMatrix gate_y() { return ComplexMatrix{{0, -kI}, {kI, 0}}; }
ComplexMatrix gate_z() { return ComplexMatrix{{1, 0}, {0, -1}}; }

ComplexMatrix gate_h() {
    double h = 1 / std::sqrt(2.0);
    return ComplexMatrix{{h, h}, {h, -h}};
}

ComplexMatrix gate_phase(double phi) { return ComplexMatrix{{1, 0}, {0, std::polar(1.0, phi)}}; }

ComplexMatrix gate_rx(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return ComplexMatrix{{c, -kI * s}, {-kI * s, c}};
}

ComplexMatrix gate_ry(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return ComplexMatrix{{c, -s}, {s, c}};
}

ComplexMatrix gate_rz(double theta) {
    return ComplexMatrix{{std::polar(1.0, -theta / 2), 0}, {0, std::polar(1.0, theta / 2)}};
}

ComplexMatrix gate_sqrt_x() { return gate_h() * gate_phase(std::numbers::pi / 2) * gate_h(); }
ComplexMatrix gate_root4_x() { return gate_h() * gate_phase(std::numbers::pi / 4) * gate_h(); }

ComplexMatrix single_gate(std::string_view name, std::span<const double> params) {
    if (name == "I") {
        require_params(name, params, 0);
        return ComplexMatrix::identity(2);
    }
    if (name == "X") {
        require_params(name, params, 0);
        return gate_x();
    }
    if (name == "Y") {
        require_params(name, params, 0);
        return gate_y();
    }
    if (name == "Z") {
        require_params(name, params, 0);
        return gate_z();
    }
    if (name == "H") {
        require_params(name, params, 0);
        return gate_h();
    }
    if (name == "S") {
        require_params(name, params, 0);
        return gate_phase(std::numbers::pi / 2);
    }
    if (name == "T") {
        require_params(name, params, 0);
        return gate_phase(std::numbers::pi / 4);
    }
    if (name == "SQRT_X") {
        require_params(name, params, 0);
        return gate_sqrt_x();
    }
    if (name == "ROOT4_X") {
        require_params(name, params, 0);
        return gate_root4_x();
    }
    if (name == "P") {
        require_params(name, params, 1);
        return gate_phase(params[0]);
    }
    if (name == "RX") {
        require_params(name, params, 1);
        return gate_rx(params[0]);
    }
    if (name == "RY") {
        require_params(name, params, 1);
        return gate_ry(params[0]);
    }
    if (name == "RZ") {
        require_params(name, params, 1);
        return gate_rz(params[0]);
    }
    throw std::invalid_argument("unsupported gate: " + std::string(name));
}

std::string GateSpec::str() const {
    std::string out = name;
    if (!params.empty()) {
        out += '(';
        for (std::size_t k = 0; k < params.size(); k++) {
            out += (k ? "," : "") + format_double(params[k]);
        }
        out += ')';
    }
    out += '[';
    for (std::size_t k = 0; k < controls.size(); k++) {
        out += (k ? "," : "") + std::to_string(controls[k]);
    }
    if (!controls.empty()) {
        out += ';';
    }
    for (std::size_t k = 0; k < targets.size(); k++) {
        out += (k ? "," : "") + std::to_string(targets[k]);
    }
    out += ']';
    return out;
}

ComplexMatrix controlled_unitary(std::size_t n_wires, std::span<const std::size_t> controls,
                                 std::span<const std::size_t> targets, const ComplexMatrix &u) {
    if (n_wires == 0 || n_wires > 10) {
        throw std::invalid_argument("controlled_unitary: unsupported register width " + std::to_string(n_wires));
    }
    if (targets.empty()) {
        throw std::invalid_argument("controlled_unitary: no target wires");
    }
    std::vector<bool> used(n_wires, false);
    auto claim = [&](std::size_t w) {
        if (w >= n_wires) {
            throw std::invalid_argument("controlled_unitary: wire " + std::to_string(w) + " out of range");
        }
        if (used[w]) {
            throw std::invalid_argument("controlled_unitary: wire " + std::to_string(w) + " used twice");
        }
        used[w] = true;
    };
    for (std::size_t w : controls) {
        claim(w);
    }
    for (std::size_t w : targets) {
        claim(w);
    }
    std::size_t sub = std::size_t{1} << targets.size();
    if (u.rows() != sub || u.cols() != sub) {
        throw std::invalid_argument("controlled_unitary: gate matrix does not match target count");
    }
    if (!is_unitary(u, kDefaultTol)) {
        throw std::invalid_argument("controlled_unitary: gate matrix is not unitary");
    }

    std::size_t dim = std::size_t{1} << n_wires;
    auto bit = [&](std::size_t w) { return std::size_t{1} << (n_wires - 1 - w); };
    std::size_t control_mask = 0;
    for (std::size_t w : controls) {
        control_mask |= bit(w);
    }
    std::size_t target_mask = 0;
    for (std::size_t w : targets) {
        target_mask |= bit(w);
    }

    ComplexMatrix out(dim, dim);
    for (std::size_t col = 0; col < dim; col++) {
        if ((col & control_mask) != control_mask) {
            out(col, col) = 1;
            continue;
        }
        std::size_t in_sub = 0;
        for (std::size_t w : targets) {
            in_sub = (in_sub << 1) | ((col & bit(w)) ? 1 : 0);
        }
        std::size_t base = col & ~target_mask;
        for (std::size_t out_sub = 0; out_sub < sub; out_sub++) {
            std::size_t row = base;
            for (std::size_t k = 0; k < targets.size(); k++) {
                if ((out_sub >> (targets.size() - 1 - k)) & 1) {
                    row |= bit(targets[k]);
                }
            }
            out(row, col) = u(out_sub, in_sub);
        }
    }
    return out;
}

Circuit::Circuit(std::size_t n_wires) : n_wires_(n_wires) {
    if (n_wires == 0 || n_wires > 10) {
        throw std::invalid_argument("Circuit: unsupported register width " + std::to_string(n_wires));
    }
}

Circuit &Circuit::append(GateSpec gate) {
    if (gate.targets.empty()) {
        throw std::invalid_argument("Circuit: gate " + gate.name + " has no targets");
    }
    std::vector<bool> used(n_wires_, false);
    for (const auto *wires : {&gate.controls, &gate.targets}) {
        for (std::size_t w : *wires) {
            if (w >= n_wires_) {
                throw std::invalid_argument("Circuit: gate " + gate.name + " wire " + std::to_string(w) +
                                            " out of range");
            }
            if (used[w]) {
                throw std::invalid_argument("Circuit: gate " + gate.name + " reuses wire " + std::to_string(w));
            }
            used[w] = true;
        }
    }
    std::size_t sub = std::size_t{1} << gate.targets.size();
    if (gate.matrix.rows() != sub || gate.matrix.cols() != sub) {
        throw std::invalid_argument("Circuit: gate " + gate.name + " matrix does not match its targets");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_wires_ != n_wires_) {
        throw std::invalid_argument("Circuit: cannot append circuits of different widths");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit &Circuit::x(std::size_t target) { return append({"X", gate_x(), {}, {target}, {}}); }
Circuit &Circuit::h(std::size_t target) { return append({"H", gate_h(), {}, {target}, {}}); }
Circuit &Circuit::cx(std::size_t control, std::size_t target) {
    return append({"X", gate_x(), {control}, {target}, {}});
}
Circuit &Circuit::ccx(std::size_t c1, std::size_t c2, std::size_t target) {
    return append({"X", gate_x(), {c1, c2}, {target}, {}});
}
Circuit &Circuit::swap(std::size_t a, std::size_t b) {
    ComplexMatrix s{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    return append({"SWAP", s, {}, {a, b}, {}});
}
Circuit &Circuit::controlled(std::string name, const ComplexMatrix &u, std::vector<std::size_t> controls,
                             std::size_t target, std::vector<double> params) {
    return append({std::move(name), u, std::move(controls), {target}, std::move(params)});
}

ComplexMatrix Circuit::unitary() const {
    ComplexMatrix u = ComplexMatrix::identity(dim());
    for (const auto &g : gates_) {
        u = controlled_unitary(n_wires_, g.controls, g.targets, g.matrix) * u;
    }
    return u;
}

StateVector Circuit::apply(const StateVector &state) const {
    if (state.dim() != dim()) {
        throw std::invalid_argument("Circuit::apply: state dimension does not match register");
    }
    StateVector out = state;
    for (const auto &g : gates_) {
        out = controlled_unitary(n_wires_, g.controls, g.targets, g.matrix) * out;
    }
    return out;
}

std::size_t Circuit::count_wide_gates() const {
    return std::count_if(gates_.begin(), gates_.end(),
                         [](const GateSpec &g) { return g.controls.size() + g.targets.size() >= 3; });
}

std::string Circuit::str() const {
    std::string out;
    for (const auto &g : gates_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

Circuit decompose_c2ry(double angle, std::size_t a, std::size_t b, std::size_t c, std::size_t n_wires) {
    require_distinct({a, b, c}, n_wires, "decompose_c2ry");
    return barenco_c2("RY", gate_ry(angle / 2), "RY", gate_ry(-angle / 2), {angle / 2}, {-angle / 2}, a, b, c,
                      n_wires);
}

Circuit decompose_toffoli(std::size_t a, std::size_t b, std::size_t t, std::size_t n_wires) {
    require_distinct({a, b, t}, n_wires, "decompose_toffoli");
    ComplexMatrix v = gate_sqrt_x();
    return barenco_c2("SQRT_X", v, "SQRT_X_DAG", v.adjoint(), {}, {}, a, b, t, n_wires);
}

Circuit decompose_c2_sqrtx(std::size_t a, std::size_t b, std::size_t t, std::size_t n_wires) {
    require_distinct({a, b, t}, n_wires, "decompose_c2_sqrtx");
    ComplexMatrix w = gate_root4_x();
    return barenco_c2("ROOT4_X", w, "ROOT4_X_DAG", w.adjoint(), {}, {}, a, b, t, n_wires);
}

Circuit decompose_c3x(std::size_t single, std::size_t pair0, std::size_t pair1, std::size_t t, std::size_t n_wires,
                      bool expand_toffoli) {
    require_distinct({single, pair0, pair1, t}, n_wires, "decompose_c3x");
    ComplexMatrix v = gate_sqrt_x();
    Circuit c(n_wires);
    c.controlled("SQRT_X", v, {single}, t);
    append_c2x(c, pair0, pair1, single, expand_toffoli);
    c.controlled("SQRT_X_DAG", v.adjoint(), {single}, t);
    append_c2x(c, pair0, pair1, single, expand_toffoli);
    c.append(decompose_c2_sqrtx(pair0, pair1, t, n_wires));
    return c;
}

Circuit decompose_c3ry(double angle, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                       std::size_t n_wires, bool expand_toffoli) {
    require_distinct({a, b, c, d}, n_wires, "decompose_c3ry");
    Circuit out(n_wires);
    out.controlled("RY", gate_ry(angle / 2), {a}, d, {angle / 2});
    append_c2x(out, b, c, a, expand_toffoli);
    out.controlled("RY", gate_ry(-angle / 2), {a}, d, {-angle / 2});
    append_c2x(out, b, c, a, expand_toffoli);
    out.append(decompose_c2ry(angle / 2, b, c, d, n_wires));
    return out;
}

Circuit build_tau(int i, int j, bool expand_toffoli) {
    constexpr std::size_t n = 4;
    if (i == 15 && j == 16) {
        return decompose_c3x(2, 1, 0, 3, n, expand_toffoli);
    }
    if (i == 14 && j == 16) {
        return decompose_c3x(3, 1, 0, 2, n, expand_toffoli);
    }
    if (i == 12 && j == 16) {
        return decompose_c3x(0, 2, 3, 1, n, expand_toffoli);
    }
    if (i == 10 && j == 12) {
        Circuit c = build_tau(14, 16, expand_toffoli);
        append_c2x(c, 0, 3, 2, expand_toffoli);
        return c;
    }
    if (i == 12 && j == 15) {
        Circuit c = build_tau(12, 16, expand_toffoli);
        c.append(build_tau(15, 16, expand_toffoli));
        c.append(build_tau(12, 16, expand_toffoli));
        return c;
    }
    if (i == 11 && j == 16) {
        Circuit c = build_tau(15, 16, expand_toffoli);
        c.append(build_tau(12, 16, expand_toffoli));
        append_c2x(c, 0, 2, 1, expand_toffoli);
        c.append(build_tau(15, 16, expand_toffoli));
        return c;
    }
    throw std::invalid_argument("build_tau: unsupported pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

Circuit build_tau_12_15_alternate(bool expand_toffoli) {
    Circuit c = build_tau(15, 16, expand_toffoli);
    c.append(build_tau(12, 16, expand_toffoli));
    c.append(build_tau(15, 16, expand_toffoli));
    return c;
}

ComplexMatrix tau_matrix(int i, int j) {
    if (i < 1 || j < 1 || i > 16 || j > 16) {
        throw std::invalid_argument("tau_matrix: label out of range");
    }
    return transposition_matrix(16, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

VerifyReport verify_matrix(const ComplexMatrix &actual, const ComplexMatrix &target, double tol) {
    if (actual.rows() != target.rows() || actual.cols() != target.cols()) {
        throw std::invalid_argument("verify: dimension mismatch");
    }
    MatrixDiff d = diff_report(actual, target);
    VerifyReport r;
    r.max_abs_diff = d.max_abs;
    r.worst_row = d.row;
    r.worst_col = d.col;
    r.tol = tol;
    r.passed = d.max_abs <= tol;
    return r;
}

VerifyReport verify_decomposition(const Circuit &circuit, const ComplexMatrix &target, double tol) {
    if (target.rows() != circuit.dim() || target.cols() != circuit.dim()) {
        throw std::invalid_argument("verify_decomposition: circuit width does not match target dimension");
    }
    return verify_matrix(circuit.unitary(), target, tol);
}

}  // namespace qdamp
