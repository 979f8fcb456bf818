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

#include "qdamp/sampling.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qdamp {

namespace {

constexpr double kProbFloor = 1e-14;
constexpr double kNegativeTol = 1e-12;
constexpr double kSumTol = 1e-9;

std::size_t qubits_for(std::size_t n) {
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("outcome list length " + std::to_string(n) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(n));
}

void require_record(const ShotRecord &r, std::size_t n_qubits, const char *what) {
    if (r.n_shots == 0) {
        throw std::invalid_argument(std::string(what) + ": empty record");
    }
    if (r.n_qubits != n_qubits || r.counts.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(n_qubits) +
                                    "-qubit record");
    }
}

void require_probs(std::span<const double> probs, std::size_t n_qubits, const char *what) {
    if (probs.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n_qubits) +
                                    "-qubit probabilities");
    }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto &s : s_) {
        s = splitmix64(sm);
    }
}

Xoshiro256StarStar Xoshiro256StarStar::from_state(const std::array<std::uint64_t, 4> &state) {
    if (state[0] == 0 && state[1] == 0 && state[2] == 0 && state[3] == 0) {
        throw std::invalid_argument("Xoshiro256StarStar: all-zero state");
    }
    Xoshiro256StarStar g;
    for (std::size_t k = 0; k < 4; k++) {
        g.s_[k] = state[k];
    }
    return g;
}

std::uint64_t Xoshiro256StarStar::operator()() {
    std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256StarStar::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t time_index) {
    return seed ^ round ^ (time_index << 32);
}

std::map<std::string, std::uint64_t> ShotRecord::bitstring_counts() const {
    std::map<std::string, std::uint64_t> out;
    for (std::size_t k = 0; k < counts.size(); k++) {
        if (counts[k]) {
            out[basis_label(k, n_qubits)] = counts[k];
        }
    }
    return out;
}

std::string basis_label(std::size_t index, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; q++) {
        if ((index >> (n_qubits - 1 - q)) & 1) {
            s[q] = '1';
        }
    }
    return s;
}

std::vector<double> outcome_probs(const StateVector &state) {
    if (!state.is_normalized(kDefaultTol)) {
        throw std::invalid_argument("outcome_probs: state is not normalized");
    }
    std::vector<double> p(state.dim());
    for (std::size_t k = 0; k < state.dim(); k++) {
        p[k] = std::norm(state[k]);
    }
    return p;
}

ShotRecord sample_counts(std::span<const double> probs, std::uint64_t n_shots, std::uint64_t seed,
                         std::size_t time_index) {
    if (n_shots == 0) {
        throw std::invalid_argument("sample_counts: n_shots must be at least 1");
    }
    std::size_t n_qubits = qubits_for(probs.size());
    double sum = 0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < -kNegativeTol) {
            throw std::invalid_argument("sample_counts: invalid probability " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1) > kSumTol) {
        throw std::invalid_argument("sample_counts: probabilities sum to " + std::to_string(sum));
    }

    std::vector<std::size_t> support;
    std::vector<double> cdf;
    double acc = 0;
    for (std::size_t k = 0; k < probs.size(); k++) {
        if (std::abs(probs[k]) < kProbFloor || probs[k] <= 0) {
            continue;
        }
        acc += probs[k];
        support.push_back(k);
        cdf.push_back(acc);
    }
    for (double &c : cdf) {
        c /= acc;
    }
    cdf.back() = 1.0;

    ShotRecord r;
    r.time_index = time_index;
    r.n_qubits = n_qubits;
    r.counts.assign(probs.size(), 0);
    r.n_shots = n_shots;
    r.seed = seed;

    if (support.size() == 1) {
        r.counts[support[0]] = n_shots;
        return r;
    }
    Xoshiro256StarStar rng(seed);
    for (std::uint64_t shot = 0; shot < n_shots; shot++) {
        double u = rng.uniform();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        r.counts[support[static_cast<std::size_t>(it - cdf.begin())]]++;
    }
    return r;
}

double jz_single(const ShotRecord &record) {
    require_record(record, 2, "jz_single");
    const auto &n = record.counts;
    double num = static_cast<double>(n[0]) + static_cast<double>(n[1]) - static_cast<double>(n[2]) -
                 static_cast<double>(n[3]);
    return num / (2.0 * static_cast<double>(record.n_shots));
}

double jz_two(const ShotRecord &record) {
    require_record(record, 4, "jz_two");
    double num = 0;
    for (std::size_t env = 0; env < 4; env++) {
        num += static_cast<double>(record.counts[0b0100 | env]);
        num -= static_cast<double>(record.counts[0b1100 | env]);
    }
    return num / static_cast<double>(record.n_shots);
}

std::vector<double> system_weights(const ShotRecord &record, std::size_t n_system) {
    if (record.n_shots == 0 || n_system == 0 || n_system > record.n_qubits) {
        throw std::invalid_argument("system_weights: bad record or system size");
    }
    std::size_t shift = record.n_qubits - n_system;
    std::vector<double> w(std::size_t{1} << n_system, 0.0);
    std::vector<std::uint64_t> totals(w.size(), 0);
    for (std::size_t k = 0; k < record.counts.size(); k++) {
        totals[k >> shift] += record.counts[k];
    }
    for (std::size_t k = 0; k < w.size(); k++) {
        w[k] = static_cast<double>(totals[k]) / static_cast<double>(record.n_shots);
    }
    return w;
}

std::vector<double> system_weights(std::span<const double> probs, std::size_t n_system) {
    std::size_t n_qubits = qubits_for(probs.size());
    if (n_system == 0 || n_system > n_qubits) {
        throw std::invalid_argument("system_weights: bad system size");
    }
    std::size_t shift = n_qubits - n_system;
    std::vector<double> w(std::size_t{1} << n_system, 0.0);
    for (std::size_t k = 0; k < probs.size(); k++) {
        w[k >> shift] += probs[k];
    }
    return w;
}

double jz_single_from_probs(std::span<const double> probs) {
    require_probs(probs, 2, "jz_single_from_probs");
    return (probs[0] + probs[1] - probs[2] - probs[3]) / 2;
}

double jz_two_from_probs(std::span<const double> probs) {
    require_probs(probs, 4, "jz_two_from_probs");
    double s = 0;
    for (std::size_t env = 0; env < 4; env++) {
        s += probs[0b0100 | env] - probs[0b1100 | env];
    }
    return s;
}

MeanVariance average_and_variance(std::span<const double> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("average_and_variance: no samples");
    }
    double n = static_cast<double>(samples.size());
    double sum = 0;
    for (double x : samples) {
        sum += x;
    }
    double mean = sum / n;
    double dev = 0;
    for (double x : samples) {
        dev += (x - mean) * (x - mean);
    }
    return {mean, dev / n};
}

}  // namespace qdamp
