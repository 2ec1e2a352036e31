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

#include "mirrorbench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

uint64_t CircuitRecord::successes() const {
    auto it = counts.find(target);
    return it == counts.end() ? 0 : it->second;
}

double CircuitRecord::success_probability() const {
    if (shots == 0) {
        throw Error(ErrorCode::MissingData, "record " + id + " has no shots");
    }
    return static_cast<double>(successes()) / static_cast<double>(shots);
}

void CircuitRecord::validate() const {
    if (target.size() != width) {
        throw Error(ErrorCode::MissingData, "record " + id + ": target length differs from width");
    }
    uint64_t total = 0;
    for (const auto &[key, n] : counts) {
        if (key.size() != width || key.find_first_not_of("01") != std::string::npos) {
            throw Error(ErrorCode::MissingData, "record " + id + ": bad outcome key '" + key + "'");
        }
        total += n;
    }
    if (total != shots) {
        throw Error(
            ErrorCode::MissingData,
            "record " + id + ": counts sum to " + std::to_string(total) + " but shots = " + std::to_string(shots));
    }
}

double polarization(double s_hat, size_t w) {
    double floor = std::ldexp(1.0, -static_cast<int>(w));
    return (s_hat - floor) / (1 - floor);
}

std::vector<double> hamming_histogram(const CircuitRecord &record) {
    record.validate();
    std::vector<double> h(record.width + 1, 0.0);
    for (const auto &[key, n] : record.counts) {
        size_t k = 0;
        for (size_t q = 0; q < key.size(); q++) {
            k += key[q] != record.target[q];
        }
        h[k] += static_cast<double>(n);
    }
    for (auto &v : h) {
        v /= static_cast<double>(record.shots);
    }
    return h;
}

double estimate_p0(const std::vector<double> &h) {
    double p0 = 0;
    double factor = 1;
    for (double v : h) {
        p0 += factor * v;
        factor *= -0.5;
    }
    return p0;
}

std::vector<std::vector<double>> hamming_transfer_matrix(size_t w) {
    std::vector<std::vector<double>> m(w + 1, std::vector<double>(w + 1, 0.0));
    for (size_t k = 0; k <= w; k++) {
        double binom = 1;
        for (size_t j = 0; j <= k; j++) {
            m[j][k] = binom * std::pow(2.0, static_cast<double>(j)) / std::pow(3.0, static_cast<double>(k));
            binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
    }
    return m;
}

ShapeStats summarize_polarizations(const std::vector<double> &values) {
    if (values.empty()) {
        throw Error(ErrorCode::MissingData, "no records for shape");
    }
    ShapeStats s;
    s.count = values.size();
    s.max = *std::max_element(values.begin(), values.end());
    s.min = *std::min_element(values.begin(), values.end());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    s.max = std::max(0.0, s.max);
    s.mean = std::max(0.0, s.mean);
    s.min = std::max(0.0, s.min);
    return s;
}

std::map<Shape, ShapeStats> aggregate_volumetric(const std::vector<CircuitRecord> &records) {
    std::map<Shape, std::vector<double>> groups;
    for (const auto &r : records) {
        groups[r.shape()].push_back(polarization(r.success_probability(), r.width));
    }
    std::map<Shape, ShapeStats> out;
    for (const auto &[shape, values] : groups) {
        out[shape] = summarize_polarizations(values);
    }
    return out;
}

std::map<Shape, double> widened_minimum(const std::map<Shape, ShapeStats> &stats) {
    std::map<Shape, double> out;
    for (const auto &[shape, s] : stats) {
        double m = s.min;
        for (const auto &[other, t] : stats) {
            if (other.first <= shape.first && other.second <= shape.second) {
                m = std::min(m, t.min);
            }
        }
        out[shape] = m;
    }
    return out;
}

double success_threshold(size_t w, ThresholdKind kind, bool alternate_form) {
    double e_inv = std::exp(-1.0);
    if (kind == ThresholdKind::Polarization) {
        return e_inv;
    }
    double floor = std::ldexp(1.0, -static_cast<int>(w));
    if (alternate_form) {
        return (1 + floor) * e_inv + floor;
    }
    return e_inv * (1 - floor) + floor;
}

double success_threshold_for(size_t w, double p_threshold) {
    double floor = std::ldexp(1.0, -static_cast<int>(w));
    return p_threshold * (1 - floor) + floor;
}

namespace {

double xlogy_ratio(double count, double a, double b) {
    // count * ln(a / b) with 0 * ln(0) = 0.
    if (count == 0) {
        return 0;
    }
    return count * std::log(a / b);
}

double log_binomial_pmf(uint64_t k, uint64_t n, double t) {
    double kk = static_cast<double>(k);
    double nn = static_cast<double>(n);
    double lc = std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1);
    double a = k == 0 ? 0 : kk * std::log(t);
    double b = k == n ? 0 : (nn - kk) * std::log1p(-t);
    return lc + a + b;
}

}  // namespace

double llr_test_threshold(uint64_t k, uint64_t n, double t, Direction direction) {
    if (n == 0 || k > n || !(t > 0 && t < 1)) {
        throw Error(ErrorCode::ContractViolation, "llr test needs 0 <= k <= n, n > 0 and 0 < T < 1");
    }
    double s = static_cast<double>(k) / static_cast<double>(n);
    bool alternative_side = direction == Direction::Above ? s < t : s > t;
    if (!alternative_side) {
        return 1.0;
    }
    double kk = static_cast<double>(k);
    double nn = static_cast<double>(n);
    double lambda = 2 * (xlogy_ratio(kk, s, t) + xlogy_ratio(nn - kk, 1 - s, 1 - t));
    lambda = std::max(0.0, lambda);
    return 0.5 * std::erfc(std::sqrt(lambda / 2));
}

double binomial_tail_pvalue(uint64_t k, uint64_t n, double t, Direction direction) {
    double total = 0;
    if (direction == Direction::Above) {
        for (uint64_t i = 0; i <= k; i++) {
            total += std::exp(log_binomial_pmf(i, n, t));
        }
    } else {
        for (uint64_t i = k; i <= n; i++) {
            total += std::exp(log_binomial_pmf(i, n, t));
        }
    }
    return std::min(1.0, total);
}

std::vector<bool> bh_adjust(const std::vector<double> &p_values, double alpha) {
    size_t m = p_values.size();
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return p_values[a] < p_values[b]; });
    size_t cutoff = 0;
    for (size_t i = 1; i <= m; i++) {
        if (p_values[order[i - 1]] <= static_cast<double>(i) / static_cast<double>(m) * alpha) {
            cutoff = i;
        }
    }
    std::vector<bool> rejected(m, false);
    for (size_t i = 0; i < cutoff; i++) {
        rejected[order[i]] = true;
    }
    return rejected;
}

std::vector<bool> holm_adjust(const std::vector<double> &p_values, double alpha) {
    size_t m = p_values.size();
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return p_values[a] < p_values[b]; });
    std::vector<bool> rejected(m, false);
    for (size_t i = 0; i < m; i++) {
        if (p_values[order[i]] > alpha / static_cast<double>(m - i)) {
            break;
        }
        rejected[order[i]] = true;
    }
    return rejected;
}

ShapeLabels classify_shape(const std::vector<CircuitRecord> &records, double alpha, double p_threshold) {
    if (records.empty()) {
        throw Error(ErrorCode::MissingData, "classify_shape needs at least one record");
    }
    std::vector<double> p_up;
    std::vector<double> p_down;
    double max_p = -INFINITY;
    double min_p = INFINITY;
    for (const auto &r : records) {
        double t = success_threshold_for(r.width, p_threshold);
        p_up.push_back(llr_test_threshold(r.successes(), r.shots, t, Direction::Above));
        p_down.push_back(llr_test_threshold(r.successes(), r.shots, t, Direction::Below));
        double p = polarization(r.success_probability(), r.width);
        max_p = std::max(max_p, p);
        min_p = std::min(min_p, p);
    }
    auto any = [](const std::vector<bool> &v) { return std::find(v.begin(), v.end(), true) != v.end(); };
    ShapeLabels out;
    out.rejected_up = any(bh_adjust(p_up, alpha));
    out.rejected_down = any(bh_adjust(p_down, alpha));
    if (out.rejected_up && out.rejected_down) {
        out.max_label = Label::Pass;
        out.min_label = Label::Fail;
    } else if (out.rejected_down) {
        out.max_label = out.min_label = Label::Pass;
    } else if (out.rejected_up) {
        out.max_label = out.min_label = Label::Fail;
    } else {
        bool pass = std::abs(max_p - p_threshold) > std::abs(min_p - p_threshold);
        out.max_label = out.min_label = pass ? Label::Pass : Label::Fail;
    }
    return out;
}

Frontier compute_frontier(const std::map<Shape, bool> &grid) {
    Frontier f;
    for (const auto &[shape, passed] : grid) {
        bool inside = true;
        for (const auto &[other, other_passed] : grid) {
            if (other.first <= shape.first && other.second <= shape.second && !other_passed) {
                inside = false;
                break;
            }
        }
        if (inside) {
            f.region.insert(shape);
            auto it = f.staircase.find(shape.first);
            if (it == f.staircase.end() || it->second < shape.second) {
                f.staircase[shape.first] = shape.second;
            }
        }
    }
    return f;
}

std::string_view capability_name(Capability c) {
    switch (c) {
        case Capability::Success:
            return "success";
        case Capability::Indeterminate:
            return "indeterminate";
        case Capability::Fail:
            return "fail";
    }
    return "fail";
}

std::map<Shape, Capability> capability_regions(
    const std::vector<CircuitRecord> &records, double alpha, double p_threshold) {
    std::map<Shape, std::vector<CircuitRecord>> groups;
    for (const auto &r : records) {
        groups[r.shape()].push_back(r);
    }
    std::map<Shape, Capability> out;
    for (const auto &[shape, group] : groups) {
        ShapeLabels labels = classify_shape(group, alpha, p_threshold);
        if (labels.max_label != labels.min_label) {
            out[shape] = Capability::Indeterminate;
        } else {
            out[shape] = labels.max_label == Label::Pass ? Capability::Success : Capability::Fail;
        }
    }
    return out;
}

std::optional<size_t> mean_crossing_depth(const QubitSetCurve &curve, double threshold) {
    for (const auto &[d, p] : curve.mean_polarization) {
        if (p < threshold) {
            return d;
        }
    }
    return std::nullopt;
}

size_t select_best_curve(const std::vector<QubitSetCurve> &curves, double threshold) {
    if (curves.empty()) {
        throw Error(ErrorCode::MissingData, "no qubit sets to choose from");
    }
    auto key = [&](const QubitSetCurve &c) {
        auto d = mean_crossing_depth(c, threshold);
        double depth = d ? static_cast<double>(*d) : INFINITY;
        double p = d ? c.mean_polarization.at(*d)
                     : (c.mean_polarization.empty() ? 0.0 : c.mean_polarization.rbegin()->second);
        return std::make_pair(depth, p);
    };
    size_t best = 0;
    auto best_key = key(curves[0]);
    for (size_t i = 1; i < curves.size(); i++) {
        auto k = key(curves[i]);
        if (k > best_key) {
            best = i;
            best_key = k;
        }
    }
    return best;
}

std::map<size_t, std::vector<std::string>> select_best_qubits_from_data(
    const std::vector<CircuitRecord> &records, double threshold) {
    std::map<std::pair<size_t, std::vector<std::string>>, std::map<size_t, std::vector<double>>> groups;
    for (const auto &r : records) {
        groups[{r.width, r.qubits}][r.depth].push_back(polarization(r.success_probability(), r.width));
    }
    std::map<size_t, std::vector<QubitSetCurve>> by_width;
    for (const auto &[key, depths] : groups) {
        QubitSetCurve c;
        c.qubits = key.second;
        for (const auto &[d, values] : depths) {
            c.mean_polarization[d] = summarize_polarizations(values).mean;
        }
        by_width[key.first].push_back(std::move(c));
    }
    std::map<size_t, std::vector<std::string>> out;
    for (const auto &[w, curves] : by_width) {
        out[w] = curves[select_best_curve(curves, threshold)].qubits;
    }
    return out;
}

double two_proportion_llr_pvalue(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2) {
    if (n1 == 0 || n2 == 0 || k1 > n1 || k2 > n2) {
        throw Error(ErrorCode::ContractViolation, "two-proportion test needs valid counts");
    }
    auto ll = [](double k, double n, double p) {
        double a = k == 0 ? 0 : k * std::log(p);
        double b = k == n ? 0 : (n - k) * std::log1p(-p);
        return a + b;
    };
    double K1 = static_cast<double>(k1), N1 = static_cast<double>(n1);
    double K2 = static_cast<double>(k2), N2 = static_cast<double>(n2);
    double pooled = (K1 + K2) / (N1 + N2);
    double lambda = 2 * (ll(K1, N1, K1 / N1) + ll(K2, N2, K2 / N2) - ll(K1, N1, pooled) - ll(K2, N2, pooled));
    lambda = std::max(0.0, lambda);
    return std::erfc(std::sqrt(lambda / 2));
}

std::vector<StabilityFlag> compare_passes(
    const std::vector<CircuitRecord> &first, const std::vector<CircuitRecord> &second, double alpha) {
    std::map<std::string, const CircuitRecord *> by_id;
    for (const auto &r : second) {
        if (!by_id.emplace(r.id, &r).second) {
            throw Error(ErrorCode::Pairing, "duplicate circuit id " + r.id + " in second pass");
        }
    }
    if (first.size() != second.size()) {
        throw Error(ErrorCode::Pairing, "passes contain different numbers of circuits");
    }
    std::vector<StabilityFlag> flags;
    std::vector<double> p_values;
    for (const auto &a : first) {
        auto it = by_id.find(a.id);
        if (it == by_id.end()) {
            throw Error(ErrorCode::Pairing, "circuit " + a.id + " missing from second pass");
        }
        const CircuitRecord &b = *it->second;
        if (a.shots != b.shots) {
            throw Error(ErrorCode::Pairing, "circuit " + a.id + " has different shot counts in the two passes");
        }
        StabilityFlag f;
        f.id = a.id;
        f.s1 = a.success_probability();
        f.s2 = b.success_probability();
        f.p_value = two_proportion_llr_pvalue(a.successes(), a.shots, b.successes(), b.shots);
        p_values.push_back(f.p_value);
        flags.push_back(f);
    }
    auto rejected = holm_adjust(p_values, alpha);
    for (size_t i = 0; i < flags.size(); i++) {
        flags[i].flagged = rejected[i];
    }
    return flags;
}

namespace {

struct BootstrapPlan {
    std::vector<Shape> shapes;
    std::vector<size_t> shape_of;  // per prediction
};

BootstrapPlan plan_bootstrap(const std::vector<PredictedCircuit> &predictions) {
    BootstrapPlan plan;
    std::map<Shape, size_t> index;
    for (const auto &p : predictions) {
        if (!(p.success_probability >= 0 && p.success_probability <= 1)) {
            throw Error(ErrorCode::ContractViolation, "predicted success probability outside [0, 1]");
        }
        index.emplace(p.shape, 0);
    }
    for (auto &[shape, i] : index) {
        i = plan.shapes.size();
        plan.shapes.push_back(shape);
    }
    for (const auto &p : predictions) {
        plan.shape_of.push_back(index[p.shape]);
    }
    return plan;
}

std::vector<ShapeStats> bootstrap_replicate(
    const std::vector<PredictedCircuit> &predictions, const BootstrapPlan &plan, uint64_t shots, uint64_t seed,
    size_t replicate) {
    Rng rng = Rng::substream(seed, {replicate});
    std::vector<std::vector<double>> values(plan.shapes.size());
    for (size_t i = 0; i < predictions.size(); i++) {
        std::binomial_distribution<uint64_t> dist(shots, predictions[i].success_probability);
        uint64_t k = dist(rng.engine());
        double s = static_cast<double>(k) / static_cast<double>(shots);
        values[plan.shape_of[i]].push_back(polarization(s, predictions[i].shape.first));
    }
    std::vector<ShapeStats> out;
    for (const auto &v : values) {
        out.push_back(summarize_polarizations(v));
    }
    return out;
}

std::map<Shape, ShapeStats> average_replicates(
    const BootstrapPlan &plan, const std::vector<std::vector<ShapeStats>> &reps) {
    std::map<Shape, ShapeStats> out;
    for (size_t s = 0; s < plan.shapes.size(); s++) {
        ShapeStats acc;
        for (const auto &rep : reps) {
            acc.max += rep[s].max;
            acc.mean += rep[s].mean;
            acc.min += rep[s].min;
            acc.count = rep[s].count;
        }
        double b = static_cast<double>(reps.size());
        acc.max /= b;
        acc.mean /= b;
        acc.min /= b;
        out[plan.shapes[s]] = acc;
    }
    return out;
}

}  // namespace

std::map<Shape, ShapeStats> bootstrap_predicted_minimum_serial(
    const std::vector<PredictedCircuit> &predictions, uint64_t shots, size_t replicates, uint64_t seed) {
    if (shots == 0 || replicates == 0) {
        throw Error(ErrorCode::ContractViolation, "bootstrap needs shots > 0 and replicates > 0");
    }
    BootstrapPlan plan = plan_bootstrap(predictions);
    std::vector<std::vector<ShapeStats>> reps;
    for (size_t r = 0; r < replicates; r++) {
        reps.push_back(bootstrap_replicate(predictions, plan, shots, seed, r));
    }
    return average_replicates(plan, reps);
}

std::map<Shape, ShapeStats> bootstrap_predicted_minimum(
    const std::vector<PredictedCircuit> &predictions, uint64_t shots, size_t replicates, uint64_t seed) {
    if (shots == 0 || replicates == 0) {
        throw Error(ErrorCode::ContractViolation, "bootstrap needs shots > 0 and replicates > 0");
    }
    BootstrapPlan plan = plan_bootstrap(predictions);
    std::vector<std::vector<ShapeStats>> reps(replicates);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(replicates); r++) {
        reps[r] = bootstrap_replicate(predictions, plan, shots, seed, static_cast<size_t>(r));
    }
    return average_replicates(plan, reps);
}

}  // namespace mirrorbench
