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

#ifndef QDAMP_GATES_H
#define QDAMP_GATES_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdamp/matrix.h"

namespace qdamp {

/// Exact 2x2 gate matrix by name.
///
/// Supported names: I, X, Y, Z, H, S, T, SQRT_X, ROOT4_X (no parameters) and
/// P, RX, RY, RZ (one angle in radians). SQRT_X is H.P(pi/2).H and ROOT4_X is
/// H.P(pi/4).H. Throws std::invalid_argument for unknown names or a wrong
/// parameter count.
ComplexMatrix single_gate(std::string_view name, std::span<const double> params = {});

ComplexMatrix gate_x();
ComplexMatrix gate_y();
ComplexMatrix gate_z();
ComplexMatrix gate_h();
ComplexMatrix gate_phase(double phi);
ComplexMatrix gate_rx(double theta);
ComplexMatrix gate_ry(double theta);
ComplexMatrix gate_rz(double theta);
ComplexMatrix gate_sqrt_x();
ComplexMatrix gate_root4_x();

/// One gate application: `matrix` acts on `targets` when every control reads 1.
struct GateSpec {
    std::string name;
    ComplexMatrix matrix;
    std::vector<std::size_t> controls;
    std::vector<std::size_t> targets;
    std::vector<double> params;

    /// Human readable form such as "RY(0.5)[0,1;3]".
    std::string str() const;
};

/// Full 2^n x 2^n matrix acting as u on `targets` when every wire in
/// `controls` is 1 and as identity otherwise. The first target is the most
/// significant bit of u's index. Throws std::invalid_argument for bad wires,
/// overlapping sets, a size mismatch or non-unitary u.
ComplexMatrix controlled_unitary(std::size_t n_wires, std::span<const std::size_t> controls,
                                 std::span<const std::size_t> targets, const ComplexMatrix &u);

/// Ordered gate list on a fixed register. Gates apply left to right, so the
/// circuit's matrix is gates[k-1] * ... * gates[0].
class Circuit {
   public:
    explicit Circuit(std::size_t n_wires);

    std::size_t n_wires() const { return n_wires_; }
    std::size_t dim() const { return std::size_t{1} << n_wires_; }
    const std::vector<GateSpec> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Validates and appends. Throws std::invalid_argument on any GateSpec
    /// invariant violation.
    Circuit &append(GateSpec gate);
    /// Appends every gate of `other` (same register width required).
    Circuit &append(const Circuit &other);

    Circuit &x(std::size_t target);
    Circuit &h(std::size_t target);
    Circuit &cx(std::size_t control, std::size_t target);
    Circuit &ccx(std::size_t c1, std::size_t c2, std::size_t target);
    Circuit &swap(std::size_t a, std::size_t b);
    Circuit &controlled(std::string name, const ComplexMatrix &u, std::vector<std::size_t> controls,
                        std::size_t target, std::vector<double> params = {});

    ComplexMatrix unitary() const;
    StateVector apply(const StateVector &state) const;

    /// Number of gates touching 3 or more wires.
    std::size_t count_wide_gates() const;

    std::string str() const;

   private:
    std::size_t n_wires_;
    std::vector<GateSpec> gates_;
};

/// C2Ry(angle)[a,b;c] as CRy(angle/2)[a;c], CX[b;a], CRy(-angle/2)[a;c],
/// CX[b;a], CRy(angle/2)[b;c].
Circuit decompose_c2ry(double angle, std::size_t a, std::size_t b, std::size_t c, std::size_t n_wires);

/// Toffoli C2X[a,b;t] from controlled SQRT_X and CX gates.
Circuit decompose_toffoli(std::size_t a, std::size_t b, std::size_t t, std::size_t n_wires);

/// C2X^{1/2}[a,b;t] from controlled ROOT4_X and CX gates.
Circuit decompose_c2_sqrtx(std::size_t a, std::size_t b, std::size_t t, std::size_t n_wires);

/// C3X with controls (single, pair0, pair1): CSQRT_X[single;t], C2X[pair;single],
/// CSQRT_X^dagger[single;t], C2X[pair;single], C2X^{1/2}[pair;t]. With
/// expand_toffoli false the two C2X stay as CCX blocks.
Circuit decompose_c3x(std::size_t single, std::size_t pair0, std::size_t pair1, std::size_t t, std::size_t n_wires,
                      bool expand_toffoli = false);

/// C3Ry(angle)[a,b,c;d]: CRy(angle/2)[a;d], C2X[b,c;a], CRy(-angle/2)[a;d],
/// C2X[b,c;a], then decompose_c2ry(angle/2, b, c, d).
Circuit decompose_c3ry(double angle, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                       std::size_t n_wires, bool expand_toffoli = true);

/// Interexchange operator tau_{i,j} on 4 wires, 1-based basis labels.
///
/// Supported pairs: (15,16), (14,16), (12,16), (10,12), (12,15), (11,16).
/// Throws std::invalid_argument otherwise.
Circuit build_tau(int i, int j, bool expand_toffoli = false);

/// tau_{12,15} written as tau_{15,16} tau_{12,16} tau_{15,16}.
Circuit build_tau_12_15_alternate(bool expand_toffoli = false);

/// 16x16 permutation matrix exchanging 1-based basis labels i and j.
ComplexMatrix tau_matrix(int i, int j);

struct VerifyReport {
    double max_abs_diff = 0.0;
    bool passed = false;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    double tol = 0.0;
};

/// Compares the circuit's product against `target`. Throws
/// std::invalid_argument when the dimensions disagree.
VerifyReport verify_decomposition(const Circuit &circuit, const ComplexMatrix &target, double tol);
VerifyReport verify_matrix(const ComplexMatrix &actual, const ComplexMatrix &target, double tol);

}  // namespace qdamp

#endif
