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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qdamp/spin_basis.h"
#include "test_util.h"

using namespace qdamp;
using qdamp::testing::random_density;

namespace {

ComplexMatrix ket_density(std::size_t dim, std::size_t k) { return StateVector::basis(dim, k).density(); }

}  // namespace

TEST(lindblad, sigma_minus_lowers_excited_level) {
    StateVector out = sigma_minus() * StateVector::basis(2, 0);
    ASSERT_EQ(out, StateVector::basis(2, 1));
    ASSERT_EQ((sigma_minus() * StateVector::basis(2, 1)).norm_squared(), 0.0);
}

TEST(lindblad, analytic_single_cases) {
    std::mt19937_64 rng(1);
    ComplexMatrix rho = random_density(2, rng);
    ASSERT_LE(max_abs_diff(analytic_single(rho, 0, 1), rho), 1e-15);

    ComplexMatrix half = analytic_single(ket_density(2, 0), std::log(2.0), 1);
    ASSERT_LE(max_abs_diff(half, ComplexMatrix::identity(2) * 0.5), 1e-15);
    ASSERT_NEAR(jz_single_exact(half), 0.0, 1e-15);

    ASSERT_LE(max_abs_diff(analytic_single(rho, 60, 1), ket_density(2, 1)), 1e-13);
    ASSERT_THROW(analytic_single(rho, -1, 1), std::invalid_argument);
    ASSERT_THROW(analytic_single(ComplexMatrix::identity(4), 1, 1), std::invalid_argument);
}

TEST(lindblad, analytic_two_triplet_top) {
    ComplexMatrix r = analytic_two(ket_density(4, 1), 0.045, 1);
    double e = std::exp(-0.09);
    ASSERT_NEAR(jz_two_exact(r), 2 * e + 0.09 * e - 1, 1e-15);
    ASSERT_NEAR(jz_two_exact(r), 0.910116177216866910, 1e-15);
    ASSERT_NEAR(jz_two_exact(analytic_two(ket_density(4, 1), 0.005, 1)), 0.990000165835827788, 1e-15);
}

TEST(lindblad, analytic_two_triplet_middle) {
    for (double t : {0.0, 0.005, 0.045, 0.3}) {
        ComplexMatrix r = analytic_two(ket_density(4, 2), t, 1);
        ASSERT_NEAR(jz_two_exact(r), std::exp(-2 * t) - 1, 1e-15) << t;
    }
    ASSERT_NEAR(jz_two_exact(analytic_two(ket_density(4, 2), 0.045, 1)), -0.0860688147287718133, 1e-15);
    ASSERT_NEAR(jz_two_exact(analytic_two(ket_density(4, 2), 0.005, 1)), -0.00995016625083194643, 1e-16);
}

TEST(lindblad, analytic_two_bell_start) {
    ComplexMatrix phi = bell_state_check(BellKind::PhiPlus).density();
    ASSERT_NEAR(jz_two_exact(analytic_two(phi, 0, 1)), 0.0, 1e-15);
}

TEST(lindblad, analytic_two_dark_state) {
    ComplexMatrix dark = ket_density(4, 0);
    for (double t : {0.0, 0.01, 0.5, 5.0}) {
        ASSERT_EQ(analytic_two(dark, t, 1), dark);
    }
}

TEST(lindblad, analytic_outputs_are_states) {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 20; n++) {
        ComplexMatrix r2 = random_density(2, rng);
        ComplexMatrix r4 = random_density(4, rng);
        for (double t : {0.0, 0.01, 0.045, 0.2, 1.0}) {
            ComplexMatrix a = analytic_single(r2, t, 1);
            ComplexMatrix b = analytic_two(r4, t, 1);
            ASSERT_NEAR(a.trace().real(), 1.0, 1e-10);
            ASSERT_NEAR(b.trace().real(), 1.0, 1e-10);
            ASSERT_TRUE(is_hermitian(a, 1e-12));
            ASSERT_TRUE(is_hermitian(b, 1e-12));
            ASSERT_GE(min_hermitian_eigenvalue(b), -1e-10);
        }
    }
}

TEST(lindblad, rhs_is_traceless) {
    std::mt19937_64 rng(2);
    ComplexMatrix rho = random_density(4, rng);
    ComplexMatrix d = lindblad_rhs(collective_problem(rho, 1.3), rho);
    ASSERT_NEAR(std::abs(d.trace()), 0.0, 1e-14);
    ASSERT_TRUE(is_hermitian(d, 1e-14));
}

TEST(lindblad, rk4_without_jumps_is_identity) {
    std::mt19937_64 rng(4);
    ComplexMatrix rho = random_density(4, rng);
    LindbladProblem p{rho, {}};
    ASSERT_LE(max_abs_diff(rk4_integrate(p, 0.3, 1e-3), rho), 1e-15);
}

TEST(lindblad, rk4_single_matches_closed_form) {
    std::mt19937_64 rng(10);
    for (int n = 0; n < 3; n++) {
        ComplexMatrix rho = random_density(2, rng);
        ComplexMatrix numeric = rk4_integrate(single_qubit_problem(rho, 1.0), 0.5, 1e-4);
        ASSERT_LE(max_abs_diff(numeric, analytic_single(rho, 0.5, 1.0)), 1e-8);
        ASSERT_NEAR(numeric.trace().real(), 1.0, 1e-10);
    }
}

TEST(lindblad, rk4_collective_matches_closed_form) {
    std::mt19937_64 rng(12);
    for (int n = 0; n < 3; n++) {
        ComplexMatrix rho = random_density(4, rng);
        ComplexMatrix numeric = rk4_integrate(collective_problem(rho, 1.0), 0.045, 1e-5);
        ComplexMatrix closed = analytic_two(rho, 0.045, 1.0);
        ASSERT_LE(max_abs_diff(numeric, closed), 1e-8);
        // The 0-3 coherence is constant under the collective generator.
        ASSERT_LE(std::abs(numeric(0, 3) - rho(0, 3)), 1e-12);
        ASSERT_NEAR(numeric.trace().real(), 1.0, 1e-10);
    }
}

TEST(lindblad, rk4_argument_errors) {
    ComplexMatrix rho = ket_density(2, 0);
    LindbladProblem p = single_qubit_problem(rho, 1.0);
    ASSERT_THROW(rk4_integrate(p, 0.1, 0), std::invalid_argument);
    ASSERT_THROW(rk4_integrate(p, -0.1, 1e-3), std::invalid_argument);
    ASSERT_THROW(rk4_integrate(p, 0.1005, 1e-3), std::invalid_argument);
    LindbladProblem bad = single_qubit_problem(ComplexMatrix::identity(2), 1.0);
    ASSERT_THROW(rk4_integrate(bad, 0.1, 1e-3), std::invalid_argument);
}

TEST(lindblad, rk4_reports_psd_drift) {
    // A negative rate pumps population out of the ground level.
    LindbladProblem p = single_qubit_problem(ket_density(2, 0), -1.0);
    try {
        rk4_integrate(p, 1.0, 0.01);
        FAIL() << "expected a PSD drift error";
    } catch (const std::runtime_error &e) {
        ASSERT_NE(std::string(e.what()).find("min eigenvalue"), std::string::npos);
    }
}
