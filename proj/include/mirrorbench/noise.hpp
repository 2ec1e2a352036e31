// Copyright 2026 The Mirrorbench Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mirrorbench/circuits.hpp"

namespace mirrorbench {

/// Entanglement fidelity from average fidelity: (1 + 2^-w) F_a - 2^-w.
/// `out_of_range` (optional) is set when the result leaves [0, 1].
double fe_from_fa(double fa, size_t w, bool *out_of_range = nullptr);
double fa_from_fe(double fe, size_t w, bool *out_of_range = nullptr);

/// Stochastic Pauli channel on w qubits. Paulis are keyed by their base-4
/// letter code: digit q (least significant first) is the Letter on qubit q.
struct PauliChannel {
    size_t width = 1;
    std::map<uint64_t, double> probabilities;

    /// Identity with probability 1 - eps, every other Pauli eps / (4^w - 1).
    static PauliChannel depolarizing(size_t width, double eps);
    double probability(uint64_t pauli) const;
    double entanglement_infidelity() const;
    /// Non-negative, sums to 1 within 1e-12.
    void validate() const;
};

/// Entanglement infidelities per gate plus symmetric readout flip rates.
///
/// One-qubit lookups try (gate, qubit) and then the per-qubit wildcard
/// (kAnyGate, qubit); the idle gate falls back to `idle` and then to 0.
/// Two-qubit lookups use the ordered pair; CZ also accepts the reversed pair.
struct ErrorRateSet {
    static constexpr int kAnyGate = -1;

    std::map<std::pair<int, std::string>, double> one_qubit;
    std::map<std::tuple<TwoQubitKind, std::string, std::string>, double> two_qubit;
    std::map<std::string, double> readout;
    std::map<std::string, double> idle;

    static ErrorRateSet uniform(
        const ConnectivityGraph &graph, TwoQubitKind kind, double one_qubit_rate, double two_qubit_rate,
        double readout_rate);

    double one_qubit_rate(int gate, const std::string &qubit) const;
    double two_qubit_rate(TwoQubitKind kind, const std::string &first, const std::string &second) const;
    double readout_rate(const std::string &qubit) const;
    /// Rate of every gate of `layer`, with circuit positions mapped through `labels`.
    std::vector<double> layer_rates(const Layer &layer, const std::vector<std::string> &labels) const;

    /// Mean rate of the non-idle one-qubit gates on `qubits`.
    double mean_one_qubit_rate(const std::vector<std::string> &qubits) const;
    /// Mean two-qubit rate over the allowed gates of `graph` (nullopt without edges).
    std::optional<double> mean_two_qubit_rate(const ConnectivityGraph &graph, TwoQubitKind kind) const;

    /// All rates in [0, 1].
    void validate() const;
};

/// s(R): probability that readout reports the prepared bit string.
double readout_success(const Circuit &circuit, const ErrorRateSet &rates);

/// s(R) times the product of (1 - eps) over every gate of every layer.
double predict_simple(const Circuit &circuit, const ErrorRateSet &rates);

/// Depolarizing parameter of a w-qubit layer with gate fidelity product F:
/// (1 - 4^w F) / (1 - 4^w).
double global_depolarizing_lambda(size_t w, double fidelity_product);

/// 2^-w + (s(R) - 2^-w) prod_i lambda(L_i).
double predict_global_dep(const Circuit &circuit, const ErrorRateSet &rates);

struct SimulationOptions {
    size_t shots = 1024;
    uint64_t seed = 0;
    /// Distinguishes circuits sharing a seed; combined with the shot-block index
    /// into the rng substream.
    uint64_t stream = 0;
    size_t block_size = 256;
};

using Counts = std::map<std::string, uint64_t>;

/// Pauli-frame Monte Carlo of the local depolarizing model: each gate is
/// followed by a uniformly random non-identity Pauli on its support with
/// probability eps, readout flips each bit with probability eps(i). The
/// outcome is `target` XOR the X part of the final frame. Supports w <= 64.
/// OpenMP-parallel over shot blocks; identical to the serial version.
Counts simulate_local_dep(
    const Circuit &circuit, const std::string &target, const ErrorRateSet &rates, const SimulationOptions &options);
Counts simulate_local_dep_serial(
    const Circuit &circuit, const std::string &target, const ErrorRateSet &rates, const SimulationOptions &options);

struct QubitSetScore {
    std::vector<uint32_t> qubits;
    /// Depth at which the predicted polarization reaches 1/e; may be
    /// negative, non-integer or infinite.
    double crossing_depth = 0;
};

/// Depth solving (s(R) - 2^-w) l1^(d(w - xi)) l2^(d xi / 2) + 2^-w = (1/e)(1 - 2^-w) + 2^-w,
/// with l1 = 1 - 4 eps1 / 3 and l2 = 1 - 16 eps2 / 15.
double predicted_crossing_depth(size_t w, double xi, double readout_success, double eps1, std::optional<double> eps2);

/// Scores every connected w-subset of `graph` and returns them best first
/// (largest crossing depth; ties keep enumeration order).
std::vector<QubitSetScore> rank_qubit_sets_from_rates(
    const ConnectivityGraph &graph, TwoQubitKind kind, const ErrorRateSet &rates, size_t w, double xi);
QubitSetScore select_best_qubits_from_rates(
    const ConnectivityGraph &graph, TwoQubitKind kind, const ErrorRateSet &rates, size_t w, double xi);

}  // namespace mirrorbench
