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

#include "qdamp/spin_basis.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdamp {

SpinOps total_spin_ops() {
    double r2 = std::sqrt(2.0);
    ComplexMatrix jminus(4, 4);
    jminus(2, 1) = r2;
    jminus(3, 2) = r2;
    ComplexMatrix jz(4, 4);
    jz(1, 1) = 1;
    jz(3, 3) = -1;
    return {jminus.adjoint(), jminus, jz};
}

ComplexMatrix total_spin_squared() {
    SpinOps ops = total_spin_ops();
    return (ops.jplus * ops.jminus + ops.jminus * ops.jplus) * 0.5 + ops.jz * ops.jz;
}

SpinOps tensor_spin_ops() {
    ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix lower{{0, 0}, {1, 0}};
    ComplexMatrix z{{1, 0}, {0, -1}};
    ComplexMatrix jminus = kron(lower, id) + kron(id, lower);
    ComplexMatrix jz = (kron(z, id) + kron(id, z)) * 0.5;
    return {jminus.adjoint(), jminus, jz};
}

ComplexMatrix physical_change() {
    double h = 1 / std::sqrt(2.0);
    return ComplexMatrix{
        {0, 1, 0, 0},
        {h, 0, h, 0},
        {-h, 0, h, 0},
        {0, 0, 0, 1},
    };
}

StateVector bell_state(BellKind kind) {
    double h = 1 / std::sqrt(2.0);
    switch (kind) {
        case BellKind::PhiPlus:
            return StateVector({h, 0, 0, h});
        case BellKind::PhiMinus:
            return StateVector({h, 0, 0, -h});
        case BellKind::PsiPlus:
            return StateVector({0, h, h, 0});
        case BellKind::PsiMinus:
            return StateVector({0, h, -h, 0});
    }
    throw std::invalid_argument("bell_state: unknown kind");
}

StateVector bell_state_check(BellKind kind) { return physical_change().adjoint() * bell_state(kind); }

CheckLabel relabel(std::size_t index) {
    if (index > 3) {
        throw std::out_of_range("relabel: index " + std::to_string(index) + " out of range");
    }
    return static_cast<CheckLabel>(index);
}

std::size_t relabel_inverse(CheckLabel label) {
    auto index = static_cast<std::size_t>(label);
    if (index > 3) {
        throw std::out_of_range("relabel_inverse: label out of range");
    }
    return index;
}

SpinLabel spin_label(CheckLabel label) {
    switch (label) {
        case CheckLabel::Check0:
            return {0, 0};
        case CheckLabel::Check1:
            return {1, 1};
        case CheckLabel::Check2:
            return {1, 0};
        case CheckLabel::Check3:
            return {1, -1};
    }
    throw std::out_of_range("spin_label: label out of range");
}

double jz_eigenvalue(CheckLabel label) { return spin_label(label).m; }

}  // namespace qdamp
