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

#ifndef QDAMP_DAMPING_H
#define QDAMP_DAMPING_H

#include <array>
#include <cstddef>
#include <vector>

#include "qdamp/gates.h"
#include "qdamp/matrix.h"

namespace qdamp {

/// Upper end of the gamma*t window on which the two-qubit schedule is defined.
inline constexpr double kMaxGammaT = 0.25;

// ---------------------------------------------------------------------------
// Schedules.

/// theta = 2 acos(exp(-gamma t / 2)). Throws std::invalid_argument for t < 0 or gamma < 0.
double theta_single(double t, double gamma);

/// Inverse of theta_single: t = -2 ln cos(theta/2) / gamma. Requires gamma > 0
/// and theta in [0, pi).
double time_from_theta_single(double theta, double gamma);

/// sin^2(theta/2).
double strength_from_theta(double theta);

/// Per-channel decay strengths of the collective model.
struct DecayStrengths {
    double g21 = 0;
    double g32 = 0;
    double g31 = 0;
};

/// Per-channel controlled-rotation angles of the collective model.
struct TwoQubitAngles {
    double theta21 = 0;
    double theta32 = 0;
    double theta31 = 0;
};

/// G21 = 2gt - 4(gt)^2, G32 = 2gt - 2(gt)^2, G31 = 2(gt)^2 with g the decay
/// rate. Throws std::domain_error unless 0 <= gamma*t <= kMaxGammaT.
DecayStrengths gammas_two(double t, double gamma);

/// theta = 2 asin(sqrt(G)) per channel.
TwoQubitAngles thetas_from_strengths(const DecayStrengths &g);
TwoQubitAngles thetas_two(double t, double gamma);

/// theta_i = (pi/10) i for i = 0..count-1.
std::vector<double> single_theta_grid(std::size_t count = 10);

/// t_i = step * i for i = 0..count-1.
std::vector<double> collective_time_grid(std::size_t count = 10, double step = 0.005);

struct SingleSchedule {
    double gamma = 1;
    std::vector<double> times;
    std::vector<double> thetas;
    std::vector<double> strengths;
};

struct TwoSchedule {
    double gamma = 1;
    std::vector<double> times;
    std::vector<DecayStrengths> strengths;
    std::vector<TwoQubitAngles> thetas;
};

SingleSchedule single_schedule_from_thetas(const std::vector<double> &thetas, double gamma);
TwoSchedule two_schedule(const std::vector<double> &times, double gamma);

// ---------------------------------------------------------------------------
// Unitaries. System qubits come first, environment qubits last.

/// Single-qubit channel on (Q0 system, Q1 environment): identity except the
/// |01>,|10> block ((c, -s), (s, c)) with c = cos(theta/2), s = sin(theta/2).
ComplexMatrix u_ad_single(double theta);

/// CX[Q0;Q1], CRy(theta)[Q1;Q0], CX[Q0;Q1].
Circuit u_ad_single_circuit(double theta);

/// Identity with a rotation block on basis states p and q:
/// U[p][p] = U[q][q] = cos(theta/2), U[q][p] = sin(theta/2), U[p][q] = -sin(theta/2).
ComplexMatrix givens_rotation(std::size_t dim, std::size_t p, std::size_t q, double theta);

enum class DecayChannel { C21, C31, C32 };

/// One collective rotation factor as an explicit 16x16 matrix.
/// C32 rotates 10->13 and 11->14, C31 rotates 7->13, C21 rotates 7->10 and
/// 6->9 (0-based basis indices).
ComplexMatrix rotation_factor(DecayChannel channel, double theta);

/// Product order[0] * order[1] * order[2] of rotation factors.
ComplexMatrix u_ad_two_ordered(const TwoQubitAngles &angles, const std::array<DecayChannel, 3> &order);

/// R21 * R31 * R32 from explicit rotation blocks.
ComplexMatrix u_ad_two_explicit(const TwoQubitAngles &angles);

/// The same product built from tau-conjugated multi-controlled rotations,
/// without gate-level decomposition.
ComplexMatrix u_ad_two_from_controlled(const TwoQubitAngles &angles);

/// Gate-level circuit on Q0..Q3. With expand_toffoli false, Toffolis stay as
/// CCX blocks; with true the circuit contains only 1- and 2-wire gates.
Circuit u_ad_two_circuit(const TwoQubitAngles &angles, bool expand_toffoli = false);

/// Closed-form values of the five non-trivial unitary entries (1-based labels).
struct ChannelEntries {
    double u8_8 = 1;
    double u12_12 = 1;
    double u11_8 = 0;
    double u15_12 = 0;
    double u14_8 = 0;
};
ChannelEntries channel_entries(const TwoQubitAngles &angles);

// ---------------------------------------------------------------------------
// Kraus operators.

struct KrausSet {
    std::vector<ComplexMatrix> operators;
    /// Environment basis index that produced each operator.
    std::vector<std::size_t> env_outcomes;

    std::size_t dim() const;
    /// max |sum M^dagger M - I|.
    double completeness_error() const;
    /// sum M rho M^dagger.
    ComplexMatrix apply(const ComplexMatrix &rho) const;
};

/// M_e[s, s'] = <s, e| U |s', env_initial>. Throws std::invalid_argument when u
/// is not unitary or the dimensions do not factor.
KrausSet extract_kraus(const ComplexMatrix &u, std::size_t env_dim, std::size_t env_initial);

/// M0 = ((0, 0), (s, 0)), M1 = diag(c, 1).
KrausSet kraus_single(double theta);

/// Tr_E[U (rho_s (x) |e><e|) U^dagger].
ComplexMatrix channel_via_unitary(const ComplexMatrix &u, const ComplexMatrix &rho_s, std::size_t env_dim,
                                  std::size_t env_initial);

/// Closed-form single-qubit output rho -> sum M rho M^dagger.
ComplexMatrix rho_out_single(const ComplexMatrix &rho_in, double theta);

/// Closed-form collective output in check-label coordinates. Throws
/// std::invalid_argument when rho_in is not a 4x4 density matrix.
ComplexMatrix rho_out_two(const ComplexMatrix &rho_in, const TwoQubitAngles &angles);

}  // namespace qdamp

#endif
