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

#ifndef QDAMP_LINDBLAD_H
#define QDAMP_LINDBLAD_H

#include <vector>

#include "qdamp/matrix.h"

namespace qdamp {

/// |1><0|, lowering from the excited level |0> to the ground level |1>.
ComplexMatrix sigma_minus();

/// Closed-form single-qubit decay: rho00 e^{-gt}, rho01 e^{-gt/2}, rho11 = 1 - rho00.
ComplexMatrix analytic_single(const ComplexMatrix &rho_in, double t, double gamma);

/// Closed-form collective decay with jump operator J- in check-label
/// coordinates. Elements 00 and 03 are constant.
ComplexMatrix analytic_two(const ComplexMatrix &rho_in, double t, double gamma);

/// <Jz> = (rho00 - rho11) / 2 for one qubit.
double jz_single_exact(const ComplexMatrix &rho);

/// <Jz> = rho11 - rho33 in check-label coordinates.
double jz_two_exact(const ComplexMatrix &rho);

struct JumpOperator {
    ComplexMatrix op;
    double rate;
};

/// d rho/dt = sum rate (L rho L^dagger - {L^dagger L, rho}/2). No Hamiltonian term.
struct LindbladProblem {
    ComplexMatrix rho0;
    std::vector<JumpOperator> jumps;
};

LindbladProblem single_qubit_problem(const ComplexMatrix &rho0, double gamma);
LindbladProblem collective_problem(const ComplexMatrix &rho0, double gamma);

ComplexMatrix lindblad_rhs(const LindbladProblem &problem, const ComplexMatrix &rho);

/// Fixed-step classical RK4 from 0 to t_end, re-Hermitized after every step.
///
/// Throws std::invalid_argument when dt <= 0, t_end < 0, t_end/dt is not an
/// integer or rho0 is not a density matrix; throws std::runtime_error when the
/// state drifts more than 1e-6 below positive semidefinite.
ComplexMatrix rk4_integrate(const LindbladProblem &problem, double t_end, double dt);

}  // namespace qdamp

#endif
