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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace qdamp;

namespace {

StateVector check_ket(std::size_t k) { return StateVector::basis(4, k); }

double vec_diff(const StateVector &a, const StateVector &b) {
    double m = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

}  // namespace

TEST(spin_basis, lowering_annihilates_singlet) {
    StateVector out = total_spin_ops().jminus * check_ket(0);
    ASSERT_EQ(out.norm_squared(), 0.0);
}

TEST(spin_basis, lowering_triplet_top) {
    StateVector out = total_spin_ops().jminus * check_ket(1);
    ASSERT_NEAR(vec_diff(out, StateVector({0, 0, std::sqrt(2.0), 0})), 0.0, 1e-15);
    // sqrt(2 - m(m-1)) with m = 0.
    StateVector out2 = total_spin_ops().jminus * check_ket(2);
    ASSERT_NEAR(vec_diff(out2, StateVector({0, 0, 0, std::sqrt(2.0)})), 0.0, 1e-15);
    ASSERT_EQ((total_spin_ops().jminus * check_ket(3)).norm_squared(), 0.0);
}

TEST(spin_basis, commutator) {
    SpinOps ops = total_spin_ops();
    ComplexMatrix comm = ops.jplus * ops.jminus - ops.jminus * ops.jplus;
    ASSERT_LE(max_abs_diff(comm, ops.jz * 2.0), 1e-14);
    ASSERT_EQ(ops.jz, ComplexMatrix::diagonal(std::vector<Complex>{0, 1, 0, -1}));
}

TEST(spin_basis, casimir_eigenvalues) {
    ComplexMatrix j2 = total_spin_squared();
    SpinOps ops = total_spin_ops();
    for (std::size_t k = 0; k < 4; k++) {
        SpinLabel l = spin_label(relabel(k));
        StateVector v = check_ket(k);
        std::vector<Complex> a(4), b(4);
        a[k] = l.j * (l.j + 1);
        b[k] = l.m;
        ASSERT_LE(vec_diff(j2 * v, StateVector(a)), 1e-12) << k;
        ASSERT_LE(vec_diff(ops.jz * v, StateVector(b)), 1e-12) << k;
    }
    ASSERT_LE(max_abs_diff(j2, ComplexMatrix::diagonal(std::vector<Complex>{0, 2, 2, 2})), 1e-14);
}

TEST(spin_basis, physical_change_columns) {
    ComplexMatrix p = physical_change();
    ASSERT_TRUE(is_unitary(p, 1e-15));
    double h = 1 / std::sqrt(2.0);
    std::vector<std::vector<Complex>> cols{{0, h, -h, 0}, {1, 0, 0, 0}, {0, h, h, 0}, {0, 0, 0, 1}};
    for (std::size_t c = 0; c < 4; c++) {
        for (std::size_t r = 0; r < 4; r++) {
            ASSERT_EQ(p(r, c), cols[c][r]);
        }
    }
}

TEST(spin_basis, tensor_ops_are_block_diagonal_in_check_basis) {
    ComplexMatrix p = physical_change();
    SpinOps t = tensor_spin_ops();
    SpinOps c = total_spin_ops();
    ComplexMatrix jm = p.adjoint() * t.jminus * p;
    ComplexMatrix jp = p.adjoint() * t.jplus * p;
    ComplexMatrix jz = p.adjoint() * t.jz * p;
    ASSERT_LE(max_abs_diff(jm, c.jminus), 1e-14);
    ASSERT_LE(max_abs_diff(jp, c.jplus), 1e-14);
    ASSERT_LE(max_abs_diff(jz, c.jz), 1e-14);
    for (const ComplexMatrix *m : {&jm, &jp, &jz}) {
        for (std::size_t k = 1; k < 4; k++) {
            ASSERT_LE(std::abs((*m)(0, k)), 1e-14);
            ASSERT_LE(std::abs((*m)(k, 0)), 1e-14);
        }
    }
}

TEST(spin_basis, bell_states) {
    double h = 1 / std::sqrt(2.0);
    ASSERT_LE(vec_diff(bell_state(BellKind::PsiMinus), physical_change() * check_ket(0)), 1e-15);
    ASSERT_LE(vec_diff(bell_state_check(BellKind::PsiMinus), check_ket(0)), 1e-15);
    ASSERT_LE(vec_diff(bell_state_check(BellKind::PhiPlus), StateVector({0, h, 0, h})), 1e-15);
    ASSERT_LE(vec_diff(bell_state_check(BellKind::PhiMinus), StateVector({0, h, 0, -h})), 1e-15);
    ASSERT_LE(vec_diff(bell_state_check(BellKind::PsiPlus), check_ket(2)), 1e-15);
    ASSERT_NEAR(std::abs(bell_state(BellKind::PhiPlus).inner(bell_state(BellKind::PhiMinus))), 0.0, 1e-15);
    for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        ASSERT_TRUE(bell_state(k).is_normalized(1e-15));
    }
}

TEST(spin_basis, relabel_identification) {
    ASSERT_EQ(relabel(0b01), CheckLabel::Check1);
    ASSERT_EQ(relabel(0b11), CheckLabel::Check3);
    ASSERT_EQ(relabel(0b00), CheckLabel::Check0);
    ASSERT_EQ(relabel(0b10), CheckLabel::Check2);
    for (std::size_t k = 0; k < 4; k++) {
        ASSERT_EQ(relabel_inverse(relabel(k)), k);
    }
    ASSERT_THROW(relabel(4), std::out_of_range);
    ASSERT_EQ(jz_eigenvalue(CheckLabel::Check1), 1.0);
    ASSERT_EQ(jz_eigenvalue(CheckLabel::Check3), -1.0);
    ASSERT_EQ(jz_eigenvalue(CheckLabel::Check2), 0.0);
}
