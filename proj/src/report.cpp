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

#include "mirrorbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

namespace {

const char *label_name(Label l) {
    return l == Label::Pass ? "pass" : "fail";
}

std::vector<size_t> tested_widths(const AnalysisReport &report) {
    std::set<size_t> s;
    for (const auto &g : report.generators) {
        for (const auto &[shape, _] : g.stats) {
            s.insert(shape.first);
        }
    }
    return {s.begin(), s.end()};
}

std::vector<size_t> tested_depths(const AnalysisReport &report) {
    std::set<size_t> s;
    for (const auto &g : report.generators) {
        for (const auto &[shape, _] : g.stats) {
            s.insert(shape.second);
        }
    }
    return {s.begin(), s.end()};
}

Json frontier_to_json(const Frontier &f) {
    Json staircase = Json::array();
    for (auto [w, d] : f.staircase) {
        staircase.push_back({{"width", w}, {"depth", d}});
    }
    return staircase;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

std::string color_for(double v) {
    v = std::clamp(v, 0.0, 1.0);
    std::ostringstream ss;
    ss << "hsl(" << static_cast<int>(std::lround(120 * v)) << ",65%,48%)";
    return ss.str();
}

const char *capability_color(Capability c) {
    switch (c) {
        case Capability::Success:
            return "#2e9e4f";
        case Capability::Indeterminate:
            return "#b0b0b0";
        case Capability::Fail:
            return "#c8453a";
    }
    return "#000";
}

constexpr double kCell = 26;
constexpr double kLeft = 48;
constexpr double kTop = 34;
constexpr double kBottom = 40;

void grid_axes(std::ostringstream &svg, double x0, const std::vector<size_t> &widths, const std::vector<size_t> &depths) {
    size_t nw = widths.size();
    for (size_t r = 0; r < nw; r++) {
        double y = kTop + (nw - 1 - r) * kCell + kCell * 0.65;
        svg << "<text x=\"" << fmt(x0 - 6) << "\" y=\"" << fmt(y) << "\" text-anchor=\"end\" font-size=\"10\">"
            << widths[r] << "</text>\n";
    }
    for (size_t c = 0; c < depths.size(); c++) {
        double x = x0 + c * kCell + kCell / 2;
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + nw * kCell + 12)
            << "\" text-anchor=\"middle\" font-size=\"9\">" << depths[c] << "</text>\n";
    }
    svg << "<text x=\"" << fmt(x0 + depths.size() * kCell / 2) << "\" y=\"" << fmt(kTop + nw * kCell + 28)
        << "\" text-anchor=\"middle\" font-size=\"11\">benchmark depth</text>\n";
    svg << "<text x=\"" << fmt(x0 - 34) << "\" y=\"" << fmt(kTop + nw * kCell / 2)
        << "\" font-size=\"11\" transform=\"rotate(-90 " << fmt(x0 - 34) << " " << fmt(kTop + nw * kCell / 2)
        << ")\" text-anchor=\"middle\">width</text>\n";
}

size_t index_in(const std::vector<size_t> &v, size_t x) {
    return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

AnalysisReport analyze_records(
    const std::vector<CircuitRecord> &records,
    const ReportOptions &options,
    const std::vector<CircuitRecord> *second_pass,
    const std::vector<Prediction> *predictions) {
    if (records.empty()) {
        throw Error(ErrorCode::MissingData, "no circuit records to analyze");
    }
    for (const auto &r : records) {
        r.validate();
    }
    AnalysisReport report;
    report.options = options;

    std::map<MirrorGenerator, std::vector<CircuitRecord>> by_generator;
    for (const auto &r : records) {
        by_generator[r.generator].push_back(r);
    }
    for (const auto &[gen, recs] : by_generator) {
        GeneratorSummary g;
        g.generator = gen;
        g.stats = aggregate_volumetric(recs);
        std::map<Shape, std::vector<CircuitRecord>> by_shape;
        for (const auto &r : recs) {
            by_shape[r.shape()].push_back(r);
        }
        std::map<Shape, bool> max_grid, mean_grid, min_grid;
        for (const auto &[shape, group] : by_shape) {
            ShapeLabels labels = classify_shape(group, options.alpha, options.p_threshold);
            g.labels[shape] = labels;
            max_grid[shape] = labels.max_label == Label::Pass;
            min_grid[shape] = labels.min_label == Label::Pass;
            mean_grid[shape] = g.stats.at(shape).mean >= options.p_threshold;
        }
        g.max_frontier = compute_frontier(max_grid);
        g.mean_frontier = compute_frontier(mean_grid);
        g.min_frontier = compute_frontier(min_grid);
        report.generators.push_back(std::move(g));
    }
    report.capability = capability_regions(records, options.alpha, options.p_threshold);
    report.best_qubits = select_best_qubits_from_data(records, options.p_threshold);

    auto widths = tested_widths(report);
    auto depths = tested_depths(report);
    for (size_t w : widths) {
        for (size_t d : depths) {
            if (!report.capability.count({w, d})) {
                report.untested.push_back({w, d});
            }
        }
    }

    if (second_pass) {
        report.instability = compare_passes(records, *second_pass, options.alpha);
    }
    if (predictions) {
        std::unordered_map<std::string, const Prediction *> by_id;
        for (const auto &p : *predictions) {
            by_id[p.id] = &p;
        }
        std::vector<PredictedCircuit> predicted;
        double total = 0;
        for (const auto &r : records) {
            auto it = by_id.find(r.id);
            if (it == by_id.end()) {
                throw Error(ErrorCode::Pairing, "no prediction for circuit " + r.id);
            }
            if (it->second->width != r.width || it->second->depth != r.depth) {
                throw Error(ErrorCode::Pairing, "prediction shape differs for circuit " + r.id);
            }
            total += std::abs(it->second->success_probability - r.success_probability());
            predicted.push_back({r.shape(), it->second->success_probability});
        }
        report.prediction_mae = total / static_cast<double>(records.size());
        report.predicted =
            bootstrap_predicted_minimum(predicted, records.front().shots, options.bootstrap_replicates, options.seed);
    }
    return report;
}

namespace {

constexpr const char *kRestrictedWarning =
    "one-qubit gates were sampled from a strict subset of the single-qubit Cliffords";

void write_warning(std::ostringstream &svg, const AnalysisReport &report) {
    if (report.options.restricted_gate_set) {
        svg << "<text class=\"warning\" x=\"4\" y=\"" << 8 << "\" font-size=\"8\" fill=\"#b00\">warning: "
            << kRestrictedWarning << "</text>\n";
    }
}

}  // namespace

Json report_to_json(const AnalysisReport &report) {
    Json j = tool_header(report.options.seed);
    j["alpha"] = report.options.alpha;
    j["polarization_threshold"] = report.options.p_threshold;
    Json warnings = Json::array();
    if (report.options.restricted_gate_set) {
        warnings.push_back(kRestrictedWarning);
    }
    j["warnings"] = warnings;
    Json gens = Json::array();
    for (const auto &g : report.generators) {
        Json shapes = Json::array();
        for (const auto &[shape, s] : g.stats) {
            const ShapeLabels &l = g.labels.at(shape);
            shapes.push_back(
                {{"width", shape.first},
                 {"depth", shape.second},
                 {"count", s.count},
                 {"max", s.max},
                 {"mean", s.mean},
                 {"min", s.min},
                 {"max_label", label_name(l.max_label)},
                 {"min_label", label_name(l.min_label)},
                 {"rejected_all_above", l.rejected_up},
                 {"rejected_all_below", l.rejected_down}});
        }
        gens.push_back(
            {{"generator", std::string(mirror_generator_name(g.generator))},
             {"shapes", shapes},
             {"frontiers",
              {{"max", frontier_to_json(g.max_frontier)},
               {"mean", frontier_to_json(g.mean_frontier)},
               {"min", frontier_to_json(g.min_frontier)}}}});
    }
    j["generators"] = gens;
    Json cap = Json::array();
    for (const auto &[shape, c] : report.capability) {
        cap.push_back({{"width", shape.first}, {"depth", shape.second}, {"capability", std::string(capability_name(c))}});
    }
    j["capability"] = cap;
    Json best = Json::object();
    for (const auto &[w, qs] : report.best_qubits) {
        best[std::to_string(w)] = qs;
    }
    j["best_qubits"] = best;
    Json untested = Json::array();
    for (auto [w, d] : report.untested) {
        untested.push_back({{"width", w}, {"depth", d}});
    }
    j["untested_shapes"] = untested;
    if (report.instability) {
        Json flags = Json::array();
        size_t flagged = 0;
        for (const auto &f : *report.instability) {
            flagged += f.flagged;
            flags.push_back(
                {{"id", f.id}, {"s1", f.s1}, {"s2", f.s2}, {"p_value", f.p_value}, {"flagged", f.flagged}});
        }
        j["instability"] = {{"flagged", flagged}, {"circuits", flags}};
    }
    if (report.predicted) {
        Json pred = Json::array();
        for (const auto &[shape, s] : *report.predicted) {
            pred.push_back(
                {{"width", shape.first}, {"depth", shape.second}, {"max", s.max}, {"mean", s.mean}, {"min", s.min}});
        }
        j["predicted"] = {
            {"bootstrap_replicates", report.options.bootstrap_replicates},
            {"shapes", pred},
            {"mean_absolute_error", *report.prediction_mae}};
    }
    return j;
}

std::string report_to_csv(const AnalysisReport &report) {
    std::ostringstream out;
    out << "generator,width,depth,statistic,value\n";
    for (const auto &g : report.generators) {
        std::string name(mirror_generator_name(g.generator));
        for (const auto &[shape, s] : g.stats) {
            for (auto [stat, v] : {std::pair{"max", s.max}, std::pair{"mean", s.mean}, std::pair{"min", s.min}}) {
                out << name << "," << shape.first << "," << shape.second << "," << stat << "," << fmt(v) << "\n";
            }
        }
    }
    return out.str();
}

std::string capability_to_csv(const AnalysisReport &report) {
    std::ostringstream out;
    out << "width,depth,capability\n";
    for (const auto &[shape, c] : report.capability) {
        out << shape.first << "," << shape.second << "," << capability_name(c) << "\n";
    }
    return out.str();
}

std::vector<std::pair<double, double>> frontier_polyline(
    const Frontier &frontier, const std::vector<size_t> &widths, const std::vector<size_t> &depths) {
    std::vector<std::pair<double, double>> pts;
    size_t nw = widths.size();
    double y_top = 0;
    for (size_t r = 0; r < nw; r++) {
        auto it = frontier.staircase.find(widths[r]);
        if (it == frontier.staircase.end()) {
            break;
        }
        double x = (index_in(depths, it->second) + 1) * kCell;
        double y_bottom = static_cast<double>(nw - r) * kCell;
        y_top = static_cast<double>(nw - 1 - r) * kCell;
        pts.push_back({x, y_bottom});
        pts.push_back({x, y_top});
    }
    if (!pts.empty()) {
        pts.push_back({0, y_top});
    }
    return pts;
}

std::string volumetric_svg(const AnalysisReport &report) {
    auto widths = tested_widths(report);
    auto depths = tested_depths(report);
    size_t nw = widths.size();
    size_t nd = depths.size();
    double panel = kLeft + nd * kCell + 24;
    double width = 3 * panel + 10;
    double height = kTop + nw * kCell + kBottom + 20;
    const GeneratorSummary *outer = nullptr;
    const GeneratorSummary *inner = nullptr;
    for (const auto &g : report.generators) {
        if (g.generator == MirrorGenerator::Periodic) {
            inner = &g;
        } else if (!outer) {
            outer = &g;
        }
    }
    if (!outer) {
        outer = inner;
        inner = nullptr;
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" font-family=\"sans-serif\">\n";
    svg << "<!-- " << kToolName << " " << kToolVersion << " seed " << report.options.seed << " -->\n";
    write_warning(svg, report);
    const char *stats[] = {"max", "mean", "min"};
    for (int s = 0; s < 3; s++) {
        double x0 = s * panel + kLeft;
        svg << "<g class=\"panel-" << stats[s] << "\">\n";
        svg << "<text x=\"" << fmt(x0) << "\" y=\"18\" font-size=\"13\">" << stats[s] << " polarization</text>\n";
        auto value = [&](const ShapeStats &st) { return s == 0 ? st.max : (s == 1 ? st.mean : st.min); };
        for (const GeneratorSummary *g : {outer, inner}) {
            if (!g) {
                continue;
            }
            double inset = g == inner ? kCell * 0.28 : 1;
            for (const auto &[shape, st] : g->stats) {
                size_t c = index_in(depths, shape.second);
                size_t r = index_in(widths, shape.first);
                double x = x0 + c * kCell + inset;
                double y = kTop + (nw - 1 - r) * kCell + inset;
                double side = kCell - 2 * inset;
                svg << "<rect class=\"" << mirror_generator_name(g->generator) << "\" x=\"" << fmt(x) << "\" y=\""
                    << fmt(y) << "\" width=\"" << fmt(side) << "\" height=\"" << fmt(side) << "\" fill=\""
                    << color_for(value(st)) << "\" stroke=\"#ffffff\" stroke-width=\"0.5\"><title>"
                    << mirror_generator_name(g->generator) << " w=" << shape.first << " d=" << shape.second << " "
                    << stats[s] << "=" << fmt(value(st)) << "</title></rect>\n";
            }
        }
        for (const GeneratorSummary *g : {outer, inner}) {
            if (!g) {
                continue;
            }
            const Frontier &f = s == 0 ? g->max_frontier : (s == 1 ? g->mean_frontier : g->min_frontier);
            auto pts = frontier_polyline(f, widths, depths);
            if (pts.empty()) {
                continue;
            }
            svg << "<polyline class=\"frontier-" << mirror_generator_name(g->generator) << "-" << stats[s]
                << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\""
                << (g == inner ? " stroke-dasharray=\"4 3\"" : "") << " points=\"";
            for (size_t i = 0; i < pts.size(); i++) {
                svg << (i ? " " : "") << fmt(x0 + pts[i].first) << "," << fmt(kTop + pts[i].second);
            }
            svg << "\"/>\n";
        }
        grid_axes(svg, x0, widths, depths);
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string capability_svg(const AnalysisReport &report) {
    std::set<size_t> ws, ds;
    for (const auto &[shape, _] : report.capability) {
        ws.insert(shape.first);
        ds.insert(shape.second);
    }
    std::vector<size_t> widths(ws.begin(), ws.end());
    std::vector<size_t> depths(ds.begin(), ds.end());
    size_t nw = widths.size();
    double width = kLeft + depths.size() * kCell + 130;
    double height = kTop + nw * kCell + kBottom + 20;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" font-family=\"sans-serif\">\n";
    svg << "<!-- " << kToolName << " " << kToolVersion << " seed " << report.options.seed << " -->\n";
    write_warning(svg, report);
    svg << "<text x=\"" << fmt(kLeft) << "\" y=\"18\" font-size=\"13\">capability region</text>\n";
    for (const auto &[shape, c] : report.capability) {
        size_t col = index_in(depths, shape.second);
        size_t r = index_in(widths, shape.first);
        svg << "<rect class=\"" << capability_name(c) << "\" x=\"" << fmt(kLeft + col * kCell + 1) << "\" y=\""
            << fmt(kTop + (nw - 1 - r) * kCell + 1) << "\" width=\"" << fmt(kCell - 2) << "\" height=\""
            << fmt(kCell - 2) << "\" fill=\"" << capability_color(c) << "\"><title>w=" << shape.first
            << " d=" << shape.second << " " << capability_name(c) << "</title></rect>\n";
    }
    double lx = kLeft + depths.size() * kCell + 16;
    int i = 0;
    for (Capability c : {Capability::Success, Capability::Indeterminate, Capability::Fail}) {
        double y = kTop + i * 18;
        svg << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(y) << "\" width=\"12\" height=\"12\" fill=\""
            << capability_color(c) << "\"/><text x=\"" << fmt(lx + 16) << "\" y=\"" << fmt(y + 10)
            << "\" font-size=\"10\">" << capability_name(c) << "</text>\n";
        i++;
    }
    grid_axes(svg, kLeft, widths, depths);
    svg << "</svg>\n";
    return svg.str();
}

void write_report(const std::string &out_dir, const AnalysisReport &report) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    write_file_atomic((dir / "summary.json").string(), dump_json(report_to_json(report)));
    write_file_atomic((dir / "summary.csv").string(), report_to_csv(report));
    write_file_atomic((dir / "capability.csv").string(), capability_to_csv(report));
    write_file_atomic((dir / "volumetric.svg").string(), volumetric_svg(report));
    write_file_atomic((dir / "capability.svg").string(), capability_svg(report));
}

}  // namespace mirrorbench
