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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirrorbench/error.hpp"
#include "mirrorbench/io.hpp"
#include "mirrorbench/report.hpp"
#include "mirrorbench/suite.hpp"

namespace fs = std::filesystem;
using namespace mirrorbench;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitAnalysis = 3;

std::string default_out_dir() {
    const char *env = std::getenv("MIRRORBENCH_OUT");
    return env && *env ? env : "mirrorbench-out";
}

ErrorRateSet resolve_rates(const std::string &rates_path, const std::string &suite) {
    if (!rates_path.empty()) {
        return load_error_rates(rates_path);
    }
    SuiteManifest m = manifest_from_json(read_json_file(manifest_path_for(suite)));
    if (!m.device.error_rates_path) {
        throw Error(ErrorCode::MissingRate, "no --rates given and the suite's device has no error_rates entry");
    }
    return load_error_rates(*m.device.error_rates_path);
}

struct Options {
    std::string config;
    std::string kind = "exp2";
    uint64_t seed = 0;
    size_t circuits_per_shape = 40;
    std::string manifest;
    std::string suite;
    std::string rates;
    uint64_t shots = 1024;
    int pass = 1;
    std::string model = "global-dep";
    std::string counts;
    std::string second;
    std::string predictions;
    double alpha = 0.05;
    double threshold = 0.36787944117144233;
    size_t replicates = 1000;
    std::string out;
};

int run_generate(const Options &o) {
    SuiteManifest manifest;
    std::vector<SuiteCircuit> circuits;
    if (!o.manifest.empty()) {
        manifest = manifest_from_json(read_json_file(manifest_path_for(o.manifest)));
        circuits = regenerate_suite(manifest);
    } else {
        if (o.config.empty()) {
            throw Error(ErrorCode::Config, "generate needs --config or --manifest");
        }
        auto kind = parse_suite_kind(o.kind);
        if (!kind) {
            throw Error(ErrorCode::Config, "--kind: unknown suite kind '" + o.kind + "'");
        }
        manifest.device = load_device_config(o.config);
        std::optional<ErrorRateSet> rates;
        if (manifest.device.error_rates_path && suite_experiment(*kind) == Experiment::Exp2) {
            rates = load_error_rates(*manifest.device.error_rates_path);
        }
        manifest.config = plan_suite(
            manifest.device.graph, manifest.device.gate_set.two_qubit_gate, *kind, o.seed, o.circuits_per_shape,
            rates ? &*rates : nullptr);
        circuits = generate_suite(manifest.config, manifest.device.graph, manifest.device.gate_set);
    }
    if (manifest.device.gate_set.is_restricted()) {
        std::cerr << "warning: one-qubit gates are a strict subset of the 24 Cliffords; reports will flag this\n";
    }
    std::string out = o.out.empty() ? default_out_dir() : o.out;
    write_suite(out, manifest, circuits);
    std::cout << "wrote " << circuits.size() << " circuits and manifest.json to " << out << "\n";
    return 0;
}

int run_simulate(const Options &o) {
    std::vector<CircuitFile> circuits = load_suite_circuits(o.suite);
    ErrorRateSet rates = resolve_rates(o.rates, o.suite);
    std::vector<CircuitRecord> records;
    records.reserve(circuits.size());
    for (size_t i = 0; i < circuits.size(); i++) {
        const CircuitFile &c = circuits[i];
        SimulationOptions sim;
        sim.shots = o.shots;
        sim.seed = o.seed;
        sim.stream = i;
        CircuitRecord r;
        r.id = c.id;
        r.generator = c.generator;
        r.width = c.width;
        r.depth = c.depth;
        r.qubits = c.circuit.qubits;
        r.target = c.target;
        r.counts = simulate_local_dep(c.circuit, c.target, rates, sim);
        r.shots = o.shots;
        r.pass = o.pass;
        records.push_back(std::move(r));
    }
    std::string out = o.out.empty()
                          ? (fs::path(default_out_dir()) / ("counts-pass" + std::to_string(o.pass) + ".json")).string()
                          : o.out;
    Json counts = counts_file_to_json(records, o.seed, o.shots, o.pass);
    counts["restricted_gate_set"] = read_json_file(manifest_path_for(o.suite)).value("restricted_gate_set", false);
    write_file_atomic(out, dump_json(counts));
    std::cout << "simulated " << records.size() << " circuits at " << o.shots << " shots into " << out << "\n";
    return 0;
}

int run_predict(const Options &o) {
    if (o.model != "global-dep" && o.model != "simple") {
        throw Error(ErrorCode::Config, "--model: expected 'global-dep' or 'simple'");
    }
    std::vector<CircuitFile> circuits = load_suite_circuits(o.suite);
    ErrorRateSet rates = resolve_rates(o.rates, o.suite);
    std::vector<Prediction> preds;
    for (const auto &c : circuits) {
        double s = o.model == "simple" ? predict_simple(c.circuit, rates) : predict_global_dep(c.circuit, rates);
        preds.push_back({c.id, c.width, c.depth, s});
    }
    std::string out = o.out.empty() ? (fs::path(default_out_dir()) / "predictions.json").string() : o.out;
    write_file_atomic(out, dump_json(predictions_to_json(preds, o.model, o.seed)));
    std::cout << "wrote " << preds.size() << " " << o.model << " predictions to " << out << "\n";
    return 0;
}

AnalysisReport build_report(const Options &o) {
    std::vector<CircuitRecord> records = load_counts_file(o.counts);
    std::optional<std::vector<CircuitRecord>> second;
    if (!o.second.empty()) {
        second = load_counts_file(o.second);
    }
    std::optional<std::vector<Prediction>> preds;
    if (!o.predictions.empty()) {
        preds = load_predictions(o.predictions);
    }
    ReportOptions ro;
    ro.alpha = o.alpha;
    ro.p_threshold = o.threshold;
    ro.bootstrap_replicates = o.replicates;
    ro.seed = o.seed;
    ro.restricted_gate_set = read_json_file(o.counts).value("restricted_gate_set", false);
    return analyze_records(records, ro, second ? &*second : nullptr, preds ? &*preds : nullptr);
}

void print_summary(const AnalysisReport &report) {
    size_t counts[3] = {0, 0, 0};
    for (const auto &[shape, c] : report.capability) {
        counts[static_cast<int>(c)]++;
    }
    std::cout << "shapes: " << report.capability.size() << " (success " << counts[0] << ", indeterminate "
              << counts[1] << ", fail " << counts[2] << ")\n";
    for (const auto &g : report.generators) {
        std::cout << mirror_generator_name(g.generator) << " frontier (max/mean/min):";
        for (const Frontier *f : {&g.max_frontier, &g.mean_frontier, &g.min_frontier}) {
            std::cout << " " << f->region.size();
        }
        std::cout << " shapes\n";
    }
    if (report.prediction_mae) {
        std::cout << "prediction mean absolute error: " << *report.prediction_mae << "\n";
    }
    if (report.instability) {
        size_t flagged = 0;
        for (const auto &f : *report.instability) {
            flagged += f.flagged;
        }
        std::cout << "unstable circuits: " << flagged << "\n";
    }
}

int run_analyze(const Options &o, bool with_plots) {
    AnalysisReport report = build_report(o);
    fs::path out = o.out.empty() ? fs::path(default_out_dir()) : fs::path(o.out);
    if (with_plots) {
        write_report(out.string(), report);
    } else {
        write_file_atomic((out / "summary.json").string(), dump_json(report_to_json(report)));
        write_file_atomic((out / "summary.csv").string(), report_to_csv(report));
        write_file_atomic((out / "capability.csv").string(), capability_to_csv(report));
    }
    print_summary(report);
    return 0;
}

int run_compare(const Options &o) {
    if (o.second.empty()) {
        throw Error(ErrorCode::Config, "compare-passes needs --second");
    }
    auto flags = compare_passes(load_counts_file(o.counts), load_counts_file(o.second), o.alpha);
    Json j = tool_header(o.seed);
    j["alpha"] = o.alpha;
    Json list = Json::array();
    size_t flagged = 0;
    for (const auto &f : flags) {
        flagged += f.flagged;
        list.push_back({{"id", f.id}, {"s1", f.s1}, {"s2", f.s2}, {"p_value", f.p_value}, {"flagged", f.flagged}});
    }
    j["circuits"] = list;
    j["flagged"] = flagged;
    std::string out = o.out.empty() ? (fs::path(default_out_dir()) / "instability.json").string() : o.out;
    write_file_atomic(out, dump_json(j));
    std::cout << flagged << " of " << flags.size() << " circuits flagged as unstable\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mirror-circuit benchmark generation, simulation and analysis"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    Options o;

    auto add_seed = [&](CLI::App *c) { c->add_option("--seed", o.seed, "Master seed")->capture_default_str(); };
    auto add_out = [&](CLI::App *c, const std::string &what) {
        c->add_option("--out", o.out, what + " (default under $MIRRORBENCH_OUT or ./mirrorbench-out)");
    };

    CLI::App *gen = app.add_subcommand("generate", "Generate a mirror-circuit suite");
    gen->add_option("--config", o.config, "Device config JSON");
    gen->add_option("--kind", o.kind, "exp1-randomized | exp2-randomized | exp2-periodic | exp2")
        ->capture_default_str();
    gen->add_option("--K", o.circuits_per_shape, "Circuits per shape and qubit set")->capture_default_str();
    gen->add_option("--manifest", o.manifest, "Regenerate the suite described by this manifest");
    add_seed(gen);
    add_out(gen, "Suite directory");

    CLI::App *sim = app.add_subcommand("simulate", "Simulate a suite under local depolarizing noise");
    sim->add_option("--suite", o.suite, "Suite directory or manifest")->required();
    sim->add_option("--rates", o.rates, "Error-rate JSON (default: the device's error_rates)");
    sim->add_option("--shots", o.shots, "Shots per circuit")->capture_default_str();
    sim->add_option("--pass", o.pass, "Pass number recorded in the counts file")->capture_default_str();
    add_seed(sim);
    add_out(sim, "Counts file");

    CLI::App *pred = app.add_subcommand("predict", "Predict success probabilities from error rates");
    pred->add_option("--suite", o.suite, "Suite directory or manifest")->required();
    pred->add_option("--rates", o.rates, "Error-rate JSON (default: the device's error_rates)");
    pred->add_option("--model", o.model, "global-dep | simple")->capture_default_str();
    add_seed(pred);
    add_out(pred, "Predictions file");

    std::vector<CLI::App *> analysis_cmds;
    CLI::App *ana = app.add_subcommand("analyze", "Summary statistics, frontiers and capability regions");
    CLI::App *rep = app.add_subcommand("report", "Like analyze, plus volumetric and capability SVG plots");
    for (CLI::App *c : {ana, rep}) {
        c->add_option("--counts", o.counts, "Counts file")->required();
        c->add_option("--second", o.second, "Counts file of a second pass for the instability test");
        c->add_option("--predictions", o.predictions, "Predictions file for bootstrap and error comparison");
        c->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();
        c->add_option("--threshold", o.threshold, "Polarization threshold")->capture_default_str();
        c->add_option("--replicates", o.replicates, "Bootstrap replicates")->capture_default_str();
        add_seed(c);
        add_out(c, "Output directory");
    }

    CLI::App *cmp = app.add_subcommand("compare-passes", "Flag circuits whose success rate changed between passes");
    cmp->add_option("--counts", o.counts, "Counts file of the first pass")->required();
    cmp->add_option("--second", o.second, "Counts file of the second pass")->required();
    cmp->add_option("--alpha", o.alpha, "Family-wise error rate")->capture_default_str();
    add_seed(cmp);
    add_out(cmp, "Instability file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (gen->parsed()) {
            return run_generate(o);
        }
        if (sim->parsed()) {
            return run_simulate(o);
        }
        if (pred->parsed()) {
            return run_predict(o);
        }
        if (ana->parsed()) {
            return run_analyze(o, false);
        }
        if (rep->parsed()) {
            return run_analyze(o, true);
        }
        if (cmp->parsed()) {
            return run_compare(o);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_analysis_error() ? kExitAnalysis : kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
