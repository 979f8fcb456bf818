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

#ifndef QDAMP_EXPERIMENT_H
#define QDAMP_EXPERIMENT_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdamp/gates.h"
#include "qdamp/matrix.h"

namespace qdamp {

enum class ExperimentKind { Single, Collective, Verify };

/// Raised for configurations that can never run (bad ranges, unknown names).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a run violates a structural guarantee, such as a dark state decaying.
class ExperimentFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Collective;
    /// Initial condition 1..6, collective runs only.
    int initial = 3;
    double gamma = 1.0;
    std::uint64_t n_shots = std::uint64_t{1} << 14;
    std::uint64_t n_ave = 25;
    std::uint64_t seed = 42;
    /// Use exact outcome probabilities instead of sampling.
    bool exact = false;
    /// Worker threads across time points. Output does not depend on it.
    unsigned threads = 1;
};

/// Throws ConfigError when the configuration is out of range.
void validate(const ExperimentConfig &config);

ExperimentKind parse_kind(const std::string &name);
std::string kind_name(ExperimentKind kind);

/// State preparation U_in on the two system wires Q0, Q1:
/// 1: I, 2: X (x) X, 3: I (x) X, 4: X (x) I, 5: U_phi (I (x) X), 6: U_phi (X (x) X),
/// with U_phi = SWAP, CH[Q0;Q1], SWAP. Throws ConfigError for l outside 1..6.
Circuit prepare_initial(int l);

/// System density matrix after prepare_initial(l), in check-label coordinates.
ComplexMatrix initial_system_density(int l);

/// Four-wire input: X on Q2 and Q3, then prepare_initial(l) on Q0, Q1.
Circuit collective_input_circuit(int l);

struct ResultRow {
    double t = 0;
    /// Single-qubit runs repeat their one angle in all three columns.
    double theta21 = 0;
    double theta32 = 0;
    double theta31 = 0;
    /// System weights; single-qubit runs fill w[0], w[1] and leave w[2], w[3] NaN.
    double w[4] = {0, 0, 0, 0};
    double jz_mean = 0;
    double jz_var = 0;
    double jz_exact = 0;
    /// Outcome counts summed over all averaging rounds (empty in exact mode).
    std::vector<std::uint64_t> outcome_totals;
};

struct ExperimentResult {
    ExperimentKind kind = ExperimentKind::Collective;
    int initial = 0;
    double gamma = 1;
    std::uint64_t n_shots = 0;
    std::uint64_t n_ave = 0;
    std::uint64_t seed = 0;
    bool exact = false;
    std::size_t n_qubits = 0;
    std::vector<ResultRow> rows;
};

/// Single-qubit decay on the grid theta_i = (pi/10) i, i = 0..9.
ExperimentResult run_single(const ExperimentConfig &config);

/// Collective decay on t_i = 0.005 i, i = 0..9. Throws ExperimentFailure when
/// l = 1 or 2 produces anything but |0011> or |1111>.
ExperimentResult run_collective(const ExperimentConfig &config);

/// Columns: t,theta21,theta32,theta31,w0,w1,w2,w3,jz_mean,jz_var,jz_exact_me,n_shots,n_ave,seed.
/// Floats use 17 significant digits, NaN fields are left empty, lines end in LF.
std::string to_csv(const ExperimentResult &result);
std::string to_json(const ExperimentResult &result);

struct VerifyEntry {
    std::string name;
    double max_abs_diff = 0;
    double tol = 0;
    bool passed = false;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    /// Reported but not counted toward pass/fail.
    bool informational = false;
};

struct VerifySummary {
    std::vector<VerifyEntry> entries;
    bool all_passed() const;
};

/// Decomposition, interexchange, channel and Kraus checks.
VerifySummary run_verify();
std::string verify_text(const VerifySummary &summary);
std::string verify_json(const VerifySummary &summary);

}  // namespace qdamp

#endif
