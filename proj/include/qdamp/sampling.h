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

#ifndef QDAMP_SAMPLING_H
#define QDAMP_SAMPLING_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qdamp/matrix.h"

namespace qdamp {

/// Advances `state` and returns the next SplitMix64 output.
std::uint64_t splitmix64(std::uint64_t &state);

/// xoshiro256** 1.0, state filled from four SplitMix64 draws of the seed.
class Xoshiro256StarStar {
   public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed);
    /// Generator with the raw 256-bit state given (must not be all zero).
    static Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4> &state);

    std::uint64_t operator()();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

   private:
    Xoshiro256StarStar() = default;
    std::uint64_t s_[4] = {};
};

/// Seed of the stream used for averaging round `round` at time point `time_index`:
/// seed ^ round ^ (time_index << 32).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t time_index);

/// Measurement counts over the computational basis of an n-qubit register.
struct ShotRecord {
    std::size_t time_index = 0;
    std::size_t n_qubits = 0;
    /// counts[k] for basis index k (big-endian wire order).
    std::vector<std::uint64_t> counts;
    std::uint64_t n_shots = 0;
    std::uint64_t seed = 0;

    /// Non-zero counts keyed by bitstring, wire 0 first.
    std::map<std::string, std::uint64_t> bitstring_counts() const;

    bool operator==(const ShotRecord &other) const = default;
};

/// Bitstring of basis index k on n qubits, wire 0 first.
std::string basis_label(std::size_t index, std::size_t n_qubits);

/// Born-rule probabilities. Throws std::invalid_argument for an unnormalized state.
std::vector<double> outcome_probs(const StateVector &state);

/// n_shots independent draws from `probs` by inverse CDF.
///
/// Entries with |p| < 1e-14 are treated as zero and the rest renormalized.
/// Throws std::invalid_argument when some p < -1e-12, the sum is off by more
/// than 1e-9, the length is not a power of two, or n_shots is 0.
ShotRecord sample_counts(std::span<const double> probs, std::uint64_t n_shots, std::uint64_t seed,
                         std::size_t time_index = 0);

/// (N00 + N01 - N10 - N11) / (2 N) on a 2-qubit record.
double jz_single(const ShotRecord &record);

/// sum over n2 n3 of (N_01n2n3 - N_11n2n3) / N on a 4-qubit record.
double jz_two(const ShotRecord &record);

/// Marginal weights of the leading `n_system` qubits.
std::vector<double> system_weights(const ShotRecord &record, std::size_t n_system);
std::vector<double> system_weights(std::span<const double> probs, std::size_t n_system);

/// Same estimators evaluated on exact probabilities.
double jz_single_from_probs(std::span<const double> probs);
double jz_two_from_probs(std::span<const double> probs);

struct MeanVariance {
    double mean = 0;
    double variance = 0;
};

/// Population statistics: mean = sum x / N and variance = sum x^2 / N - mean^2,
/// evaluated as sum (x - mean)^2 / N. Throws std::invalid_argument for an empty list.
MeanVariance average_and_variance(std::span<const double> samples);

}  // namespace qdamp

#endif
