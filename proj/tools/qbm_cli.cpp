// Copyright 2026 The qblockmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: seeded, CSV-emitting experiment runner around the
// qbm headers. Exit codes: 0 success, 1 usage error, 2 data/format error,
// 3 capacity error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qbm/qbm.hpp"

namespace {

template <typename Fn>
void with_output(const std::string& out_path, Fn&& fn) {
    if (out_path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qbm::FormatError(out_path + ": cannot open for writing");
    fn(out);
    out.flush();
    if (!out) throw qbm::FormatError(out_path + ": write failed");
}

struct CliOptions {
    qbm::ExperimentConfig exp;
    bool noiseless = false;

    std::vector<double> fidelities{1.0, 0.999, 0.995, 0.99, 0.98};

    qbm::BlockMatchConfig bm;
    std::string method = "full";
    std::string distance = "classical";

    std::string gate_circuit;
    int gate_block_m = 4;
    int gate_bits = 4;

    std::string input_path;
    double sigma = 20.0;
    int factor = 8;
    bool smooth = false;
};

void add_common_flags(CLI::App* cmd, qbm::ExperimentConfig& cfg) {
    cmd->add_option("--shots", cfg.shots, "Measurement shots per run")->check(CLI::PositiveNumber);
    cmd->add_option("--runs", cfg.runs, "Independent runs to average")->check(CLI::PositiveNumber);
    cmd->add_option("--fidelity-1q", cfg.fidelity_1q, "Single-qubit gate fidelity in (0,1]");
    cmd->add_option("--fidelity-2q", cfg.fidelity_2q, "CNOT gate fidelity in (0,1]");
    cmd->add_option("--seed", cfg.seed, "Master seed; reruns are byte-identical");
    cmd->add_option("--out", cfg.out, "Output CSV path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qblockmatch: quantum block-matching experiments on a local simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file mirroring the flags; flags win");

    CliOptions opt;

    CLI::App* swap_exp =
        app.add_subcommand("swap-exp", "Swap-test distance estimates for the 17 benchmark pairs");
    add_common_flags(swap_exp, opt.exp);
    swap_exp->add_flag("--noiseless", opt.noiseless, "Force the ideal simulator (fidelities 1.0)");

    CLI::App* qft_sweep =
        app.add_subcommand("qft-sweep", "Subtractor success probability vs CNOT fidelity");
    add_common_flags(qft_sweep, opt.exp);
    qft_sweep->add_option("--fidelities", opt.fidelities, "CNOT fidelities to sweep")
        ->delimiter(',');

    CLI::App* block_match =
        app.add_subcommand("block-match", "End-to-end block search between two PGM images");
    block_match->add_option("reference", opt.bm.reference_path, "Reference PGM")->required();
    block_match->add_option("target", opt.bm.target_path, "Target PGM")->required();
    block_match->add_option("--method", opt.method, "full | hier")
        ->check(CLI::IsMember({"full", "hier"}));
    block_match->add_option("--distance", opt.distance, "classical | swap | qft")
        ->check(CLI::IsMember({"classical", "swap", "qft"}));
    block_match->add_option("--sigma", opt.bm.sigma, "Gaussian contamination std dev");
    block_match->add_option("--factor", opt.bm.downsample_factor, "Downsampling factor")
        ->check(CLI::PositiveNumber);
    block_match->add_flag("--smooth", opt.bm.smooth, "Apply 3x3 smoothing after bit reduction");
    block_match->add_option("--search-k", opt.bm.search_k, "Search radius K");
    block_match->add_option("--block-n", opt.bm.block_n, "Block size n");
    block_match->add_option("--block-x", opt.bm.block_x, "Block x in processed image (default: centered)");
    block_match->add_option("--block-y", opt.bm.block_y, "Block y in processed image (default: centered)");
    block_match->add_option("--shots", opt.bm.shots, "Shots per quantum distance evaluation");
    block_match->add_option("--runs", opt.bm.runs, "Runs per swap-distance evaluation");
    block_match->add_option("--bits", opt.bm.bits, "Register width for the qft backend");
    block_match->add_option("--fidelity-1q", opt.bm.fidelity_1q, "Single-qubit gate fidelity");
    block_match->add_option("--fidelity-2q", opt.bm.fidelity_2q, "CNOT gate fidelity");
    block_match->add_option("--seed", opt.bm.seed, "Master seed");
    block_match->add_option("--out", opt.exp.out, "Output CSV path (stdout when omitted)");
    block_match->add_flag("--timing", opt.bm.timing,
                          "Measure wall time (off by default so reruns stay byte-identical)");

    CLI::App* gate_report = app.add_subcommand("gate-report", "Decomposed gate resources");
    gate_report->add_option("circuit", opt.gate_circuit, "swap | qft_subtract")
        ->required()
        ->check(CLI::IsMember({"swap", "qft_subtract"}));
    gate_report->add_option("--block-m", opt.gate_block_m, "Data vector length for swap")
        ->check(CLI::PositiveNumber);
    gate_report->add_option("--bits", opt.gate_bits, "Register width for qft_subtract")
        ->check(CLI::PositiveNumber);
    gate_report->add_option("--out", opt.exp.out, "Output CSV path");

    CLI::App* preprocess =
        app.add_subcommand("preprocess", "Contaminate, downsample and bit-reduce one PGM");
    preprocess->add_option("input", opt.input_path, "Input 8-bit PGM")->required();
    preprocess->add_option("--out", opt.exp.out, "Output PGM path")->required();
    preprocess->add_option("--sigma", opt.sigma, "Gaussian contamination std dev");
    preprocess->add_option("--factor", opt.factor, "Downsampling factor")
        ->check(CLI::PositiveNumber);
    preprocess->add_flag("--smooth", opt.smooth, "Apply 3x3 smoothing after bit reduction");
    preprocess->add_option("--seed", opt.exp.seed, "Master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (swap_exp->parsed()) {
            opt.exp.mode = opt.noiseless ? qbm::ExperimentMode::kSwapNoiseless
                                         : qbm::ExperimentMode::kSwapNoisy;
            const auto rows = qbm::run_swap_experiment(opt.exp);
            with_output(opt.exp.out,
                        [&rows](std::ostream& out) { qbm::write_swap_experiment_csv(out, rows); });
        } else if (qft_sweep->parsed()) {
            opt.exp.mode = qbm::ExperimentMode::kQftSweep;
            const auto rows = qbm::run_qft_sweep(opt.exp, opt.fidelities);
            with_output(opt.exp.out,
                        [&rows](std::ostream& out) { qbm::write_qft_sweep_csv(out, rows); });
        } else if (block_match->parsed()) {
            opt.bm.method = opt.method == "hier" ? qbm::SearchMethod::kHierarchical
                                                 : qbm::SearchMethod::kFull;
            opt.bm.distance = opt.distance == "swap"  ? qbm::DistanceBackend::kSwap
                              : opt.distance == "qft" ? qbm::DistanceBackend::kQft
                                                      : qbm::DistanceBackend::kClassical;
            const qbm::BlockMatchRow row = qbm::run_block_match(opt.bm);
            with_output(opt.exp.out,
                        [&row](std::ostream& out) { qbm::write_block_match_csv(out, row); });
        } else if (gate_report->parsed()) {
            const qbm::GateReport report = opt.gate_circuit == "swap"
                                               ? qbm::swap_gate_report(opt.gate_block_m)
                                               : qbm::qft_subtract_gate_report(opt.gate_bits);
            std::cout << opt.gate_circuit << ": qubits " << report.total_qubits << ", CNOTs "
                      << report.cnot_count << ", single-qubit gates "
                      << report.single_qubit_count << ", depth " << report.depth << "\n";
            if (!opt.exp.out.empty()) {
                with_output(opt.exp.out, [&](std::ostream& out) {
                    qbm::write_gate_report_csv(out, opt.gate_circuit, report);
                });
            }
        } else if (preprocess->parsed()) {
            const qbm::GrayImage image = qbm::load_pgm(opt.input_path);
            const qbm::GrayImage processed =
                qbm::preprocess_image(image, opt.sigma, opt.factor, opt.smooth, opt.exp.seed);
            qbm::save_pgm(processed, opt.exp.out);
        }
    } catch (const qbm::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const qbm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
