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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"
#include "oracle.hpp"

using namespace mirrorbench;

namespace {

constexpr double kInvE = 0.36787944117144233;

CircuitRecord counts_record(size_t w, const std::string &target, Counts counts) {
    CircuitRecord r;
    r.id = "c";
    r.width = w;
    r.target = target;
    r.counts = std::move(counts);
    for (const auto &[k, v] : r.counts) {
        r.shots += v;
    }
    return r;
}

std::vector<CircuitRecord> shape_records(size_t w, size_t d, std::vector<double> s, uint64_t shots, std::mt19937_64 &e) {
    std::vector<CircuitRecord> out;
    for (size_t i = 0; i < s.size(); i++) {
        out.push_back(oracle::binomial_record(
            "w" + std::to_string(w) + "d" + std::to_string(d) + "k" + std::to_string(i), w, d, s[i], shots, e));
    }
    return out;
}

}  // namespace

TEST(Polarization, examples) {
    EXPECT_EQ(polarization(1.0, 3), 1.0);
    EXPECT_EQ(polarization(0.125, 3), 0.0);
    EXPECT_NEAR(polarization(0.5, 10), (0.5 - 1.0 / 1024) / (1 - 1.0 / 1024), 1e-15);
    EXPECT_NEAR(polarization(0.5, 10), 0.4995, 1e-4);
}

TEST(HammingHistogram, examples) {
    auto h = hamming_histogram(counts_record(2, "00", {{"00", 600}, {"01", 300}, {"11", 100}}));
    ASSERT_EQ(h.size(), 3u);
    EXPECT_DOUBLE_EQ(h[0], 0.6);
    EXPECT_DOUBLE_EQ(h[1], 0.3);
    EXPECT_DOUBLE_EQ(h[2], 0.1);
    EXPECT_EQ(hamming_histogram(counts_record(3, "101", {{"101", 7}})), (std::vector<double>{1, 0, 0, 0}));

    Counts uniform;
    for (size_t i = 0; i < 8; i++) {
        uniform[oracle::bit_string(i, 3)] = 10;
    }
    auto u = hamming_histogram(counts_record(3, "010", uniform));
    EXPECT_EQ(u, (std::vector<double>{1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8}));
}

TEST(CircuitRecord, validation) {
    CircuitRecord r = counts_record(2, "00", {{"00", 5}});
    r.shots = 6;
    EXPECT_THROW(r.validate(), Error);
    EXPECT_THROW(counts_record(2, "00", {{"0x", 5}}).validate(), Error);
    EXPECT_THROW(counts_record(2, "00", {{"000", 5}}).validate(), Error);
}

TEST(EstimateP0, examples) {
    EXPECT_EQ(estimate_p0({1, 0, 0, 0}), 1.0);
    EXPECT_NEAR(estimate_p0({0.6, 0.3, 0.1}), 0.475, 1e-15);
}

TEST(EstimateP0, inverts_transfer_matrix) {
    std::mt19937_64 e(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (size_t w = 1; w <= 8; w++) {
        auto m = hamming_transfer_matrix(w);
        for (size_t k = 0; k <= w; k++) {
            double col = 0;
            for (size_t j = 0; j <= w; j++) {
                col += m[j][k];
            }
            EXPECT_NEAR(col, 1.0, 1e-12);
        }
        for (int trial = 0; trial < 20; trial++) {
            std::vector<double> p(w + 1);
            double rest = 0;
            for (size_t k = 1; k <= w; k++) {
                p[k] = u(e);
                rest += p[k];
            }
            p[0] = 0.9;
            for (size_t k = 1; k <= w; k++) {
                p[k] *= 0.1 / rest;
            }
            std::vector<double> h(w + 1, 0.0);
            for (size_t j = 0; j <= w; j++) {
                for (size_t k = 0; k <= w; k++) {
                    h[j] += m[j][k] * p[k];
                }
            }
            ASSERT_NEAR(estimate_p0(h), 0.9, 1e-12);
        }
    }
}

TEST(Aggregate, truncation_after_averaging) {
    auto s = summarize_polarizations({-0.1, 0.3});
    EXPECT_NEAR(s.mean, 0.1, 1e-15);
    EXPECT_EQ(s.min, 0.0);
    EXPECT_NEAR(s.max, 0.3, 1e-15);
    auto same = summarize_polarizations({0.4, 0.4, 0.4});
    EXPECT_DOUBLE_EQ(same.max, same.mean);
    EXPECT_DOUBLE_EQ(same.min, same.mean);
    try {
        summarize_polarizations({});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingData);
    }
}

TEST(Aggregate, ordering_and_widened_minimum_monotone) {
    std::mt19937_64 e(5);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<CircuitRecord> records;
    for (size_t w = 1; w <= 4; w++) {
        for (size_t d : {0, 4, 8, 16}) {
            std::vector<double> s;
            for (int i = 0; i < 5; i++) {
                s.push_back(u(e));
            }
            auto r = shape_records(w, d, s, 200, e);
            records.insert(records.end(), r.begin(), r.end());
        }
    }
    auto stats = aggregate_volumetric(records);
    EXPECT_EQ(stats.size(), 16u);
    for (const auto &[shape, st] : stats) {
        EXPECT_LE(st.min, st.mean);
        EXPECT_LE(st.mean, st.max);
        EXPECT_EQ(st.count, 5u);
    }
    auto widened = widened_minimum(stats);
    for (const auto &[a, va] : widened) {
        for (const auto &[b, vb] : widened) {
            if (a.first <= b.first && a.second <= b.second) {
                EXPECT_GE(va, vb);
            }
        }
    }
}

TEST(Threshold, examples) {
    EXPECT_NEAR(success_threshold(3, ThresholdKind::Polarization), kInvE, 1e-15);
    EXPECT_NEAR(success_threshold(1, ThresholdKind::SuccessProbability), 0.683940, 1e-6);
    EXPECT_NEAR(success_threshold(60, ThresholdKind::SuccessProbability), kInvE, 1e-12);
    EXPECT_NEAR(success_threshold(1, ThresholdKind::SuccessProbability, true), 1.5 * kInvE + 0.5, 1e-12);
    EXPECT_NEAR(polarization(success_threshold_for(4, 0.2), 4), 0.2, 1e-15);
}

TEST(LlrTest, examples) {
    EXPECT_EQ(llr_test_threshold(1024, 1024, 0.684, Direction::Above), 1.0);
    EXPECT_LT(llr_test_threshold(300, 1024, 0.684, Direction::Above), 1e-6);
    EXPECT_LT(binomial_tail_pvalue(300, 1024, 0.684, Direction::Above), 1e-6);
    EXPECT_EQ(llr_test_threshold(512, 1024, 0.5, Direction::Above), 1.0);
    EXPECT_EQ(llr_test_threshold(512, 1024, 0.5, Direction::Below), 1.0);
    EXPECT_EQ(llr_test_threshold(0, 1024, 0.3, Direction::Below), 1.0);
    EXPECT_LT(llr_test_threshold(1024, 1024, 0.684, Direction::Below), 1e-6);
}

TEST(LlrTest, agrees_with_exact_binomial_tail) {
    const uint64_t n = 1024;
    for (double t : {0.2, 0.5, 0.683940}) {
        double mean = t * n;
        double sd = std::sqrt(n * t * (1 - t));
        for (int z = 1; z <= 4; z++) {
            auto below = static_cast<uint64_t>(std::floor(mean - z * sd));
            auto above = static_cast<uint64_t>(std::ceil(mean + z * sd));
            double a = llr_test_threshold(below, n, t, Direction::Above);
            double b = binomial_tail_pvalue(below, n, t, Direction::Above);
            EXPECT_LT(std::abs(std::log(a / b)), std::log(2.0)) << t << " " << below;
            a = llr_test_threshold(above, n, t, Direction::Below);
            b = binomial_tail_pvalue(above, n, t, Direction::Below);
            EXPECT_LT(std::abs(std::log(a / b)), std::log(2.0)) << t << " " << above;
        }
    }
}

TEST(MultipleTesting, benjamini_hochberg) {
    EXPECT_EQ(bh_adjust({1, 1, 1}, 0.05), (std::vector<bool>{false, false, false}));
    EXPECT_EQ(bh_adjust({0.01, 0.02, 0.2}, 0.05), (std::vector<bool>{true, true, false}));
    EXPECT_EQ(bh_adjust({0.2, 0.01, 0.02}, 0.05), (std::vector<bool>{false, true, true}));
    EXPECT_EQ(bh_adjust({0, 0, 0}, 0.05), (std::vector<bool>{true, true, true}));
    // Step-up: 0.04 > 0.05/4 * 1 alone but the largest passing index carries it.
    EXPECT_EQ(bh_adjust({0.04, 0.04, 0.04, 0.04}, 0.05), (std::vector<bool>{true, true, true, true}));
    EXPECT_TRUE(bh_adjust({}, 0.05).empty());
}

TEST(MultipleTesting, holm) {
    EXPECT_EQ(holm_adjust({0.01, 0.02, 0.2}, 0.05), (std::vector<bool>{true, true, false}));
    EXPECT_EQ(holm_adjust({0.01, 0.03, 0.2}, 0.05), (std::vector<bool>{true, false, false}));
    EXPECT_EQ(holm_adjust({0.01, 0.024, 0.04}, 0.05), (std::vector<bool>{true, true, true}));
    EXPECT_EQ(holm_adjust({0.04, 0.04, 0.04, 0.04}, 0.05), (std::vector<bool>{false, false, false, false}));
}

TEST(ClassifyShape, examples) {
    std::mt19937_64 e(11);
    auto high = classify_shape(shape_records(1, 4, std::vector<double>(10, 0.99), 1024, e));
    EXPECT_EQ(high.max_label, Label::Pass);
    EXPECT_EQ(high.min_label, Label::Pass);

    std::vector<double> mixed(20, 0.95);
    std::fill(mixed.begin() + 10, mixed.end(), 0.05);
    auto split = classify_shape(shape_records(2, 4, mixed, 1024, e));
    EXPECT_TRUE(split.rejected_up);
    EXPECT_TRUE(split.rejected_down);
    EXPECT_EQ(split.max_label, Label::Pass);
    EXPECT_EQ(split.min_label, Label::Fail);

    auto low = classify_shape(shape_records(2, 4, std::vector<double>(10, 0.25), 1024, e));
    EXPECT_EQ(low.max_label, Label::Fail);
    EXPECT_EQ(low.min_label, Label::Fail);
    EXPECT_THROW(classify_shape({}), Error);
}

TEST(ClassifyShape, null_straddling_threshold_rarely_splits) {
    std::mt19937_64 e(12);
    double t = success_threshold(2, ThresholdKind::SuccessProbability);
    int split = 0;
    const int trials = 500;
    for (int i = 0; i < trials; i++) {
        auto labels = classify_shape(shape_records(2, 8, std::vector<double>(40, t), 1024, e));
        split += labels.max_label != labels.min_label;
    }
    EXPECT_LE(split, trials / 20);
}

TEST(ClassifyShape, all_pass_null_rarely_splits) {
    std::mt19937_64 e(13);
    int split = 0;
    const int trials = 500;
    for (int i = 0; i < trials; i++) {
        auto labels = classify_shape(shape_records(1, 8, std::vector<double>(40, 0.8), 1024, e));
        split += labels.max_label == Label::Pass && labels.min_label == Label::Fail;
    }
    EXPECT_LE(split, trials / 20);
}

TEST(Frontier, examples) {
    std::map<Shape, bool> all;
    for (size_t w = 1; w <= 3; w++) {
        for (size_t d : {0, 4, 8}) {
            all[{w, d}] = true;
        }
    }
    Frontier f = compute_frontier(all);
    EXPECT_EQ(f.region.size(), 9u);
    EXPECT_EQ(f.staircase, (std::map<size_t, size_t>{{1, 8}, {2, 8}, {3, 8}}));

    std::map<Shape, bool> g = {{{1, 4}, true}, {{2, 4}, true}, {{1, 8}, true}, {{2, 8}, false}};
    EXPECT_EQ(compute_frontier(g).region, (std::set<Shape>{{1, 4}, {1, 8}, {2, 4}}));

    all[{1, 0}] = false;
    EXPECT_TRUE(compute_frontier(all).region.empty());
    EXPECT_TRUE(compute_frontier(all).staircase.empty());
}

TEST(Frontier, down_closed_on_random_grids) {
    std::mt19937_64 e(17);
    std::bernoulli_distribution coin(0.8);
    for (int trial = 0; trial < 100; trial++) {
        std::map<Shape, bool> grid;
        for (size_t w = 1; w <= 6; w++) {
            for (size_t d : {0, 4, 8, 16, 32, 64}) {
                if (!(w == 3 && d == 16 && trial % 3 == 0)) {
                    grid[{w, d}] = coin(e);
                }
            }
        }
        Frontier f = compute_frontier(grid);
        for (const auto &s : f.region) {
            ASSERT_TRUE(grid.at(s));
            for (const auto &[o, pass] : grid) {
                if (o.first <= s.first && o.second <= s.second) {
                    ASSERT_TRUE(f.region.count(o));
                }
            }
        }
        for (const auto &[s, pass] : grid) {
            bool closed = true;
            for (const auto &[o, p] : grid) {
                closed = closed && (!(o.first <= s.first && o.second <= s.second) || p);
            }
            ASSERT_EQ(closed, f.region.count(s) > 0);
        }
    }
}

TEST(Capability, examples) {
    std::mt19937_64 e(19);
    auto good = shape_records(2, 4, std::vector<double>(80, 1.0), 1024, e);
    std::vector<double> mixed(80, 0.9);
    std::fill(mixed.begin() + 40, mixed.end(), 0.05);
    auto split = shape_records(2, 8, mixed, 1024, e);
    auto floor = shape_records(3, 4, std::vector<double>(80, 0.125), 1024, e);
    std::vector<CircuitRecord> all = good;
    all.insert(all.end(), split.begin(), split.end());
    all.insert(all.end(), floor.begin(), floor.end());
    auto caps = capability_regions(all);
    EXPECT_EQ(caps.at({2, 4}), Capability::Success);
    EXPECT_EQ(caps.at({2, 8}), Capability::Indeterminate);
    EXPECT_EQ(caps.at({3, 4}), Capability::Fail);
    EXPECT_EQ(capability_name(Capability::Indeterminate), "indeterminate");
}

TEST(BestQubits, curve_selection) {
    QubitSetCurve a{{"a"}, {{4, 0.9}, {8, 0.3}, {16, 0.1}}};
    QubitSetCurve b{{"b"}, {{4, 0.9}, {8, 0.5}, {16, 0.2}}};
    EXPECT_EQ(mean_crossing_depth(a, kInvE), 8u);
    EXPECT_EQ(mean_crossing_depth(b, kInvE), 16u);
    EXPECT_EQ(select_best_curve({a}, kInvE), 0u);
    EXPECT_EQ(select_best_curve({a, b}, kInvE), 1u);
    QubitSetCurve c{{"c"}, {{4, 0.9}, {8, 0.2}}};
    QubitSetCurve d{{"d"}, {{4, 0.9}, {8, 0.3}}};
    EXPECT_EQ(select_best_curve({c, d}, kInvE), 1u);
    EXPECT_EQ(select_best_curve({d, d}, kInvE), 0u);
    QubitSetCurve never{{"n"}, {{4, 0.9}}};
    EXPECT_FALSE(mean_crossing_depth(never, kInvE));
    EXPECT_EQ(select_best_curve({b, never}, kInvE), 1u);
}

TEST(BestQubits, from_data) {
    std::mt19937_64 e(23);
    std::vector<CircuitRecord> records;
    for (size_t d : {0, 4, 8, 16}) {
        double good = 0.5 + 0.5 * std::pow(0.97, static_cast<double>(d));
        double bad = 0.5 + 0.5 * std::pow(0.85, static_cast<double>(d));
        for (auto [label, s] : {std::pair<const char *, double>{"q0", bad}, {"q1", good}}) {
            auto r = oracle::binomial_record(std::string(label) + std::to_string(d), 1, d, s, 4096, e);
            r.qubits = {label};
            records.push_back(r);
        }
    }
    auto best = select_best_qubits_from_data(records);
    EXPECT_EQ(best.at(1), (std::vector<std::string>{"q1"}));
}

TEST(ComparePasses, examples) {
    std::mt19937_64 e(29);
    auto first = shape_records(1, 4, {0.9, 0.5, 0.7}, 1024, e);
    auto flags = compare_passes(first, first);
    for (const auto &f : flags) {
        EXPECT_FALSE(f.flagged);
        EXPECT_EQ(f.p_value, 1.0);
    }
    EXPECT_LT(two_proportion_llr_pvalue(900, 1024, 100, 1024), 1e-6);
    auto second = first;
    second[1].counts = {{"0", 100}, {"1", 924}};
    first[1].counts = {{"0", 900}, {"1", 124}};
    flags = compare_passes(first, second);
    EXPECT_TRUE(flags[1].flagged);
    EXPECT_FALSE(flags[0].flagged);

    auto missing = second;
    missing[2].id = "other";
    try {
        compare_passes(first, missing);
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.code(), ErrorCode::Pairing);
    }
    missing = second;
    missing.pop_back();
    EXPECT_THROW(compare_passes(first, missing), Error);
}

TEST(ComparePasses, null_family_wise_error_rate) {
    std::mt19937_64 e(31);
    std::binomial_distribution<uint64_t> bin(1024, 0.7);
    // Holm at 0.05 over 1000 exact-level tests has FWER 1 - (1 - 0.05/1000)^1000
    // = 4.88%; the observed rate must be consistent with that within 3 Monte
    // Carlo standard errors (0.35% at 4000 trials).
    int any_flag = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; t++) {
        std::vector<double> p(1000);
        for (auto &v : p) {
            v = two_proportion_llr_pvalue(bin(e), 1024, bin(e), 1024);
        }
        auto rejected = holm_adjust(p, 0.05);
        any_flag += std::find(rejected.begin(), rejected.end(), true) != rejected.end();
    }
    double rate = static_cast<double>(any_flag) / trials;
    EXPECT_LE(rate, 0.05 + 3 * std::sqrt(0.05 * 0.95 / trials));
}

TEST(Bootstrap, examples) {
    std::vector<PredictedCircuit> perfect(10, {{2, 4}, 1.0});
    auto s = bootstrap_predicted_minimum(perfect, 1024, 50, 1);
    EXPECT_EQ(s.at({2, 4}).min, 1.0);
    EXPECT_EQ(s.at({2, 4}).max, 1.0);

    std::vector<PredictedCircuit> floor(10, {{3, 4}, 0.125});
    EXPECT_GE(bootstrap_predicted_minimum(floor, 1024, 50, 1).at({3, 4}).min, 0.0);

    std::vector<PredictedCircuit> p(40, {{1, 8}, 0.9});
    auto b = bootstrap_predicted_minimum(p, 1024, 1000, 2);
    EXPECT_LT(b.at({1, 8}).min, polarization(0.9, 1));
    EXPECT_GT(b.at({1, 8}).max, polarization(0.9, 1));
    EXPECT_NEAR(b.at({1, 8}).mean, polarization(0.9, 1), 0.005);
}

TEST(Bootstrap, serial_and_parallel_agree) {
    std::vector<PredictedCircuit> p;
    for (size_t i = 0; i < 30; i++) {
        p.push_back({{1 + i % 3, 4 * (i % 5)}, 0.3 + 0.02 * static_cast<double>(i)});
    }
    auto a = bootstrap_predicted_minimum(p, 512, 200, 9);
    auto b = bootstrap_predicted_minimum_serial(p, 512, 200, 9);
    ASSERT_EQ(a.size(), b.size());
    for (const auto &[shape, st] : a) {
        EXPECT_EQ(st.min, b.at(shape).min);
        EXPECT_EQ(st.mean, b.at(shape).mean);
        EXPECT_EQ(st.max, b.at(shape).max);
    }
}
