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

#ifndef QDAMP_SPIN_BASIS_H
#define QDAMP_SPIN_BASIS_H

#include <cstddef>

#include "qdamp/matrix.h"

namespace qdamp {

/// Two-qubit direct-sum labels. Check0 is the singlet; Check1..Check3 are the
/// triplet with m = 1, 0, -1.
enum class CheckLabel : std::size_t { Check0 = 0, Check1 = 1, Check2 = 2, Check3 = 3 };

struct SpinLabel {
    double j;
    double m;
};

/// Total-spin operators in the (0,1,2,3) check-label basis.
struct SpinOps {
    ComplexMatrix jplus;
    ComplexMatrix jminus;
    ComplexMatrix jz;
};

/// J- sends |1> to sqrt(2)|2> and |2> to sqrt(2)|3>; Jz = diag(0, 1, 0, -1).
SpinOps total_spin_ops();

/// J^2 = (J+J- + J-J+)/2 + Jz^2 in the check-label basis.
ComplexMatrix total_spin_squared();

/// Same operators on the tensor-product basis |00>,|01>,|10>,|11>, with |0>
/// the excited single-qubit level: Jz = (Z0 + Z1)/2, J- = s0 + s1, s = |1><0|.
SpinOps tensor_spin_ops();

/// Unitary whose columns are the check-label states written in the tensor
/// basis: (|01>-|10>)/sqrt2, |00>, (|01>+|10>)/sqrt2, |11>.
ComplexMatrix physical_change();

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Bell state in the tensor-product basis.
StateVector bell_state(BellKind kind);

/// Bell state expressed in check-label coordinates, physical_change()^dagger * bell_state(kind).
StateVector bell_state_check(BellKind kind);

/// Circuit-level identification |00>,|01>,|10>,|11> -> Check0..Check3. Throws
/// std::out_of_range for index > 3.
CheckLabel relabel(std::size_t index);
std::size_t relabel_inverse(CheckLabel label);

SpinLabel spin_label(CheckLabel label);

/// Jz eigenvalue m of a check label.
double jz_eigenvalue(CheckLabel label);

}  // namespace qdamp

#endif
