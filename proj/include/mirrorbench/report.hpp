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
#include <vector>

#include "mirrorbench/analysis.hpp"
#include "mirrorbench/io.hpp"

namespace mirrorbench {

struct ReportOptions {
    double alpha = 0.05;
    /// Polarization threshold.
    double p_threshold = 0.36787944117144233;
    size_t bootstrap_replicates = 1000;
    uint64_t seed = 0;
    /// Circuits drew one-qubit gates from a strict subset of the 24 Cliffords;
    /// reports carry a warning.
    bool restricted_gate_set = false;
};

struct GeneratorSummary {
    MirrorGenerator generator = MirrorGenerator::Randomized;
    std::map<Shape, ShapeStats> stats;
    std::map<Shape, ShapeLabels> labels;
    /// Max and min frontiers come from the hypothesis-test labels; the mean
    /// frontier thresholds the raw mean polarization.
    Frontier max_frontier;
    Frontier mean_frontier;
    Frontier min_frontier;
};

struct AnalysisReport {
    ReportOptions options;
    std::vector<GeneratorSummary> generators;
    std::map<Shape, Capability> capability;
    std::map<size_t, std::vector<std::string>> best_qubits;
    /// Shapes in the tested widths x depths rectangle that have no data.
    std::vector<Shape> untested;
    /// Present when a second pass was supplied.
    std::optional<std::vector<StabilityFlag>> instability;
    /// Present when predictions were supplied.
    std::optional<std::map<Shape, ShapeStats>> predicted;
    std::optional<double> prediction_mae;
};

/// Throws Pairing when predictions or the second pass do not match the
/// records by id, and MissingData for an empty dataset.
AnalysisReport analyze_records(
    const std::vector<CircuitRecord> &records,
    const ReportOptions &options,
    const std::vector<CircuitRecord> *second_pass = nullptr,
    const std::vector<Prediction> *predictions = nullptr);

Json report_to_json(const AnalysisReport &report);
/// Columns generator,width,depth,statistic,value; one row per generator,
/// tested shape and statistic (max, mean, min).
std::string report_to_csv(const AnalysisReport &report);
/// Columns width,depth,capability.
std::string capability_to_csv(const AnalysisReport &report);

/// Staircase polyline points (x, y) of a frontier drawn on a grid whose
/// columns are `depths` and rows are `widths` (widest at the top).
std::vector<std::pair<double, double>> frontier_polyline(
    const Frontier &frontier, const std::vector<size_t> &widths, const std::vector<size_t> &depths);

/// Max/mean/min panels. Outer squares are randomized circuits, inner squares
/// periodic ones; frontiers are drawn as <polyline class="frontier-...">.
std::string volumetric_svg(const AnalysisReport &report);
std::string capability_svg(const AnalysisReport &report);

/// summary.json, summary.csv, capability.csv, volumetric.svg, capability.svg.
void write_report(const std::string &out_dir, const AnalysisReport &report);

}  // namespace mirrorbench
