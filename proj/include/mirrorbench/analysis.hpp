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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mirrorbench/mirroring.hpp"
#include "mirrorbench/noise.hpp"

namespace mirrorbench {

/// (width, benchmark depth).
using Shape = std::pair<size_t, size_t>;

struct CircuitRecord {
    std::string id;
    MirrorGenerator generator = MirrorGenerator::Randomized;
    size_t width = 0;
    size_t depth = 0;
    /// Physical qubit labels in circuit order.
    std::vector<std::string> qubits;
    std::string target;
    Counts counts;
    uint64_t shots = 0;
    int pass = 1;

    Shape shape() const {
        return {width, depth};
    }
    uint64_t successes() const;
    double success_probability() const;
    /// Counts sum to shots and every key is a length-w bit string.
    void validate() const;
};

double polarization(double s_hat, size_t w);

/// h_k = fraction of shots at Hamming distance k from the target, k = 0..w.
std::vector<double> hamming_histogram(const CircuitRecord &record);

/// p0 = sum_k (-1/2)^k h_k.
double estimate_p0(const std::vector<double> &h);

/// M[j][k] = C(k, j) 2^j / 3^k: probability that a uniformly twirled
/// weight-k Pauli error flips j bits.
std::vector<std::vector<double>> hamming_transfer_matrix(size_t w);

struct ShapeStats {
    double max = 0;
    double mean = 0;
    double min = 0;
    size_t count = 0;
};

/// max/mean/min of the values, each truncated at 0 after aggregation.
/// Throws MissingData for an empty list.
ShapeStats summarize_polarizations(const std::vector<double> &values);

/// Per-shape statistics of the record polarizations.
std::map<Shape, ShapeStats> aggregate_volumetric(const std::vector<CircuitRecord> &records);

/// Minimum of `min` over all tested (w*, d*) with w* <= w and d* <= d.
std::map<Shape, double> widened_minimum(const std::map<Shape, ShapeStats> &stats);

enum class ThresholdKind : uint8_t { Polarization, SuccessProbability };

/// Polarization threshold 1/e, or the success probability with that
/// polarization: (1/e)(1 - 2^-w) + 2^-w. `alternate_form` selects the
/// (1 + 2^-w)/e + 2^-w form for comparison with older analyses.
double success_threshold(size_t w, ThresholdKind kind, bool alternate_form = false);
/// Success probability threshold matching polarization `p_threshold`.
double success_threshold_for(size_t w, double p_threshold);

enum class Direction : uint8_t {
    /// H0: S >= T; evidence against it is a low observed rate.
    Above,
    /// H0: S <= T.
    Below,
};

/// One-sided log-likelihood-ratio test using the half-chi^2_1 convention.
double llr_test_threshold(uint64_t k, uint64_t n, double t, Direction direction);
/// Exact binomial tail on the alternative side: Pr(Bin(n, t) <= k) for
/// Above, Pr(Bin(n, t) >= k) for Below.
double binomial_tail_pvalue(uint64_t k, uint64_t n, double t, Direction direction);

/// Benjamini-Hochberg step-up: rejected[i] for each input p-value.
std::vector<bool> bh_adjust(const std::vector<double> &p_values, double alpha);
/// Holm-Bonferroni step-down.
std::vector<bool> holm_adjust(const std::vector<double> &p_values, double alpha);

enum class Label : uint8_t { Pass, Fail };

struct ShapeLabels {
    Label max_label = Label::Fail;
    Label min_label = Label::Fail;
    /// H_up: every circuit is above threshold.
    bool rejected_up = false;
    /// H_down: every circuit is below threshold.
    bool rejected_down = false;
};

/// Tests H_up and H_down with per-circuit LLR tests combined by BH at
/// `alpha`, then applies the tie rules when fewer than both are rejected.
ShapeLabels classify_shape(
    const std::vector<CircuitRecord> &records, double alpha = 0.05, double p_threshold = 0.36787944117144233);

struct Frontier {
    /// Shapes whose whole tested down-set passes.
    std::set<Shape> region;
    /// Width -> largest depth inside the region (widths with none are absent).
    std::map<size_t, size_t> staircase;
};

Frontier compute_frontier(const std::map<Shape, bool> &grid);

enum class Capability : uint8_t { Success, Indeterminate, Fail };
std::string_view capability_name(Capability c);

/// Pools all records per shape (both generators) and classifies each shape.
std::map<Shape, Capability> capability_regions(
    const std::vector<CircuitRecord> &records, double alpha = 0.05, double p_threshold = 0.36787944117144233);

struct QubitSetCurve {
    std::vector<std::string> qubits;
    /// Depth -> mean polarization.
    std::map<size_t, double> mean_polarization;
};

/// Smallest depth whose mean polarization is below `threshold`, or nullopt
/// when it never drops.
std::optional<size_t> mean_crossing_depth(const QubitSetCurve &curve, double threshold);

/// Index of the curve with the largest crossing depth; ties go to the larger
/// mean polarization at that depth, then to the earlier curve.
size_t select_best_curve(const std::vector<QubitSetCurve> &curves, double threshold);

/// Best qubit set per width from data grouped by (width, qubit set).
std::map<size_t, std::vector<std::string>> select_best_qubits_from_data(
    const std::vector<CircuitRecord> &records, double threshold = 0.36787944117144233);

struct StabilityFlag {
    std::string id;
    double s1 = 0;
    double s2 = 0;
    double p_value = 1;
    bool flagged = false;
};

/// Two-sample LLR statistic for k1/n1 vs k2/n2 and its chi^2_1 p-value.
double two_proportion_llr_pvalue(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2);

/// Per-circuit comparison of two passes with Holm-Bonferroni at `alpha`.
/// Throws Pairing when ids do not match or shot counts differ.
std::vector<StabilityFlag> compare_passes(
    const std::vector<CircuitRecord> &first, const std::vector<CircuitRecord> &second, double alpha = 0.05);

struct PredictedCircuit {
    Shape shape;
    double success_probability;
};

/// Parametric bootstrap: B datasets of Binomial(N, S_pred)/N, each summarized
/// by aggregate statistics per shape, averaged over the replicates.
/// OpenMP-parallel over replicates; identical to the serial version.
std::map<Shape, ShapeStats> bootstrap_predicted_minimum(
    const std::vector<PredictedCircuit> &predictions, uint64_t shots, size_t replicates, uint64_t seed);
std::map<Shape, ShapeStats> bootstrap_predicted_minimum_serial(
    const std::vector<PredictedCircuit> &predictions, uint64_t shots, size_t replicates, uint64_t seed);

}  // namespace mirrorbench
