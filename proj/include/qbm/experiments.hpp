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

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbm/decompose.hpp"
#include "qbm/image.hpp"
#include "qbm/qft_arithmetic.hpp"
#include "qbm/search.hpp"
#include "qbm/swap_distance.hpp"

namespace qbm {

enum class ExperimentMode { kSwapNoiseless, kSwapNoisy, kQftSweep, kBlockMatch };

/// Batch-job parameters shared by the experiment commands. The defaults are
/// the toolkit's reference settings: 20 runs of 4000 shots, CNOT fidelity
/// 0.99, single-qubit fidelity 0.9999.
struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::kSwapNoisy;
    int shots = 4000;
    int runs = 20;
    double fidelity_1q = 0.9999;
    double fidelity_2q = 0.99;
    std::uint64_t seed = 42;
    std::string out;
};

struct PairCase {
    std::vector<int> a;
    std::vector<int> b;
    double ced = 0.0;  // classical Euclidean distance, the ground truth
};

using PairSet = std::vector<PairCase>;

/// The 17 benchmark pairs of 4-dimensional vectors (entries 0..15).
///
/// The set is a fixed table: it starts at CED 0, includes the canonical
/// ([9,9,9,9], [9,9,8,9]) pair at CED 1, and spans non-decreasing distances
/// up to 28. Small-distance pairs keep large vector norms (where angle
/// encoding is most error-prone); larger distances use leaner vectors so the
/// estimator tolerances stay within reach at 4000 shots.
inline PairSet default_pair_set() {
    static const std::vector<std::pair<std::vector<int>, std::vector<int>>> table = {
        {{9, 9, 9, 9}, {9, 9, 9, 9}},      // 0
        {{9, 9, 9, 9}, {9, 9, 8, 9}},      // 1
        {{9, 9, 9, 9}, {9, 8, 8, 9}},      // sqrt(2)
        {{9, 9, 9, 9}, {8, 8, 8, 9}},      // sqrt(3)
        {{9, 9, 9, 9}, {9, 9, 7, 9}},      // 2
        {{9, 9, 9, 9}, {9, 7, 7, 9}},      // 2*sqrt(2)
        {{9, 9, 9, 9}, {9, 9, 6, 9}},      // 3
        {{9, 9, 9, 9}, {7, 7, 7, 7}},      // 4
        {{8, 6, 5, 4}, {5, 2, 5, 4}},      // 5
        {{7, 7, 7, 7}, {4, 4, 4, 4}},      // 6
        {{9, 4, 4, 4}, {2, 4, 4, 4}},      // 7
        {{12, 6, 4, 3}, {4, 6, 4, 3}},     // 8
        {{9, 9, 9, 9}, {4, 4, 4, 4}},      // 10
        {{9, 9, 9, 9}, {3, 3, 3, 3}},      // 12
        {{9, 9, 9, 9}, {2, 2, 2, 2}},      // 14
        {{12, 12, 12, 12}, {2, 2, 2, 2}},  // 20
        {{15, 15, 15, 15}, {1, 1, 1, 1}},  // 28
    };
    PairSet pairs;
    pairs.reserve(table.size());
    for (const auto& [a, b] : table) {
        pairs.push_back({a, b, classical_euclidean_distance(a, b)});
    }
    return pairs;
}

struct SwapExperimentRow {
    int pair_index = 0;
    double ced = 0.0;
    double qed_mean = 0.0;
    double qed_std = 0.0;
    double p0_mean = 0.0;
    int shots = 0;
    int runs = 0;
    double fidelity_1q = 1.0;
    double fidelity_2q = 1.0;
    std::uint64_t seed = 0;
};

/// Swap-test distance estimation over the default pair set; pair i draws
/// from stream mix_seed(config.seed, i).
inline std::vector<SwapExperimentRow> run_swap_experiment(const ExperimentConfig& config) {
    const bool noiseless = config.mode == ExperimentMode::kSwapNoiseless;
    std::optional<NoiseModel> noise;
    if (!noiseless) {
        noise = NoiseModel::from_fidelities(config.fidelity_1q, config.fidelity_2q);
    }
    const PairSet pairs = default_pair_set();
    std::vector<SwapExperimentRow> rows;
    rows.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const DistanceEstimate est =
            estimate_distance(pairs[i].a, pairs[i].b, config.shots, config.runs, noise,
                              mix_seed(config.seed, i));
        SwapExperimentRow row;
        row.pair_index = static_cast<int>(i);
        row.ced = pairs[i].ced;
        row.qed_mean = est.mean_distance;
        row.qed_std = est.std_distance;
        row.p0_mean = est.p0_mean;
        row.shots = config.shots;
        row.runs = config.runs;
        row.fidelity_1q = noiseless ? 1.0 : config.fidelity_1q;
        row.fidelity_2q = noiseless ? 1.0 : config.fidelity_2q;
        row.seed = config.seed;
        rows.push_back(row);
    }
    return rows;
}

struct SweepRow {
    double fidelity = 1.0;
    double success_probability = 0.0;
    long cnot_count = 0;
};

/// Fixed subtraction instance (a=9, b=8, bits=4) rerun per CNOT fidelity;
/// success = frequency of the correct outcome.
inline std::vector<SweepRow> run_qft_sweep(const ExperimentConfig& config,
                                           const std::vector<double>& fidelities) {
    constexpr int kA = 9, kB = 8, kBits = 4;
    const long cnots = gate_counts(build_subtractor(kBits).circuit).cnot_count;
    const std::string expected = bitstring_of(static_cast<std::size_t>((kA - kB) & 0xF), kBits);
    std::vector<SweepRow> rows;
    rows.reserve(fidelities.size());
    for (std::size_t i = 0; i < fidelities.size(); ++i) {
        std::optional<NoiseModel> noise;
        if (fidelities[i] < 1.0) {
            noise = NoiseModel::from_fidelities(config.fidelity_1q, fidelities[i]);
        }
        const auto histogram =
            run_subtraction(kA, kB, kBits, noise, static_cast<std::uint64_t>(config.shots),
                            mix_seed(config.seed, i));
        const auto it = histogram.find(expected);
        const std::uint64_t hits = it == histogram.end() ? 0 : it->second;
        rows.push_back({fidelities[i],
                        static_cast<double>(hits) / static_cast<double>(config.shots), cnots});
    }
    return rows;
}

/// Gate report instances exposed by the CLI. The swap instance encodes the
/// canonical CED-1 pair; the subtractor instance is the bare arithmetic core
/// (operand loading costs no CNOTs anyway).
inline GateReport swap_gate_report(int data_length = 4) {
    if (data_length < 2) throw ArgumentError("swap gate report needs at least 2 data values");
    std::vector<int> a(static_cast<std::size_t>(data_length), 9);
    std::vector<int> b(a);
    b[data_length / 2] = 8;
    return gate_counts(build_swap_test_circuit(build_pair_encoding(a, b)));
}

inline GateReport qft_subtract_gate_report(int bits = 4) {
    return gate_counts(build_subtractor(bits).circuit);
}

// ---------------------------------------------------------------------------
// Block-match pipeline
// ---------------------------------------------------------------------------

enum class SearchMethod { kFull, kHierarchical };
enum class DistanceBackend { kClassical, kSwap, kQft };

struct BlockMatchConfig {
    std::string reference_path;
    std::string target_path;
    SearchMethod method = SearchMethod::kFull;
    DistanceBackend distance = DistanceBackend::kClassical;
    double sigma = 20.0;     // Gaussian contamination before downsampling
    int downsample_factor = 8;
    bool smooth = false;
    int search_k = 10;
    int block_n = 8;
    int block_x = -1;  // -1 = centered in the processed image
    int block_y = -1;
    int shots = 4000;
    int runs = 20;
    int bits = 4;
    double fidelity_1q = 1.0;  // quantum backends default to noiseless
    double fidelity_2q = 1.0;
    std::uint64_t seed = 42;
    bool timing = false;  // when false the wall_time column prints 0
};

struct BlockMatchRow {
    int offset_x = 0;
    int offset_y = 0;
    double distance = 0.0;
    long evaluations = 0;
    double wall_time_s = 0.0;
};

namespace detail {

inline std::uint64_t hash_values(std::uint64_t h, const std::vector<int>& values) {
    for (int v : values) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
    return h;
}

/// Order-independent per-candidate stream: depends only on the master seed
/// and the two blocks being compared.
inline std::uint64_t candidate_seed(std::uint64_t seed, const std::vector<int>& v1,
                                    const std::vector<int>& v2) {
    return hash_values(hash_values(splitmix64(seed), v1), v2);
}

inline bool all_zero(const std::vector<int>& values) {
    for (int v : values) {
        if (v != 0) return false;
    }
    return true;
}

inline DistanceFn make_distance_fn(const BlockMatchConfig& config) {
    switch (config.distance) {
        case DistanceBackend::kClassical:
            return classical_euclidean_distance;
        case DistanceBackend::kSwap: {
            std::optional<NoiseModel> noise;
            if (config.fidelity_1q < 1.0 || config.fidelity_2q < 1.0) {
                noise = NoiseModel::from_fidelities(config.fidelity_1q, config.fidelity_2q);
            }
            const int shots = config.shots, runs = config.runs;
            const std::uint64_t seed = config.seed;
            return [=](const std::vector<int>& v1, const std::vector<int>& v2) {
                // Amplitude encoding is undefined for all-zero blocks; score
                // those classically.
                if (all_zero(v1) || all_zero(v2)) return classical_euclidean_distance(v1, v2);
                return estimate_distance(v1, v2, shots, runs, noise,
                                         candidate_seed(seed, v1, v2))
                    .mean_distance;
            };
        }
        case DistanceBackend::kQft: {
            std::optional<NoiseModel> noise;
            if (config.fidelity_1q < 1.0 || config.fidelity_2q < 1.0) {
                noise = NoiseModel::from_fidelities(config.fidelity_1q, config.fidelity_2q);
            }
            const int shots = config.shots, bits = config.bits;
            const std::uint64_t seed = config.seed;
            return [=](const std::vector<int>& v1, const std::vector<int>& v2) {
                return std::sqrt(ssd_distance(v1, v2, bits, noise,
                                              static_cast<std::uint64_t>(shots),
                                              candidate_seed(seed, v1, v2)));
            };
        }
    }
    throw ArgumentError("unknown distance backend");
}

}  // namespace detail

/// Full preprocessing chain: Gaussian contamination, block-mean reduction,
/// 8-bit -> 4-bit, optional smoothing.
inline GrayImage preprocess_image(const GrayImage& input, double sigma, int factor, bool smooth,
                                  std::uint64_t seed) {
    GrayImage img = sigma > 0.0 ? add_gaussian_noise(input, 0.0, sigma, seed) : input;
    if (factor > 1) img = downsample(img, factor);
    img = reduce_bit_depth(img);
    if (smooth) img = gaussian_smooth(img);
    return img;
}

/// End-to-end block match: preprocess both inputs, then run the configured
/// search with the configured distance backend.
inline BlockMatchRow run_block_match(const BlockMatchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const GrayImage reference =
        preprocess_image(load_pgm(config.reference_path), config.sigma, config.downsample_factor,
                         config.smooth, mix_seed(config.seed, 0x5ef));
    const GrayImage target =
        preprocess_image(load_pgm(config.target_path), config.sigma, config.downsample_factor,
                         config.smooth, mix_seed(config.seed, 0x7a6));

    const int n = config.block_n;
    const int bx = config.block_x >= 0 ? config.block_x : (reference.width - n) / 2;
    const int by = config.block_y >= 0 ? config.block_y : (reference.height - n) / 2;

    const DistanceFn distance_fn = detail::make_distance_fn(config);
    const MatchResult match =
        config.method == SearchMethod::kFull
            ? full_search(reference, bx, by, n, target, config.search_k, distance_fn)
            : hierarchical_search(reference, bx, by, n, target, config.search_k, distance_fn);

    BlockMatchRow row;
    row.offset_x = match.offset_x;
    row.offset_y = match.offset_y;
    row.distance = match.distance;
    row.evaluations = match.evaluations;
    if (config.timing) {
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
    }
    return row;
}

// ---------------------------------------------------------------------------
// CSV output. Every writer emits a schema comment line, a header row, and
// fixed 6-decimal reals so reruns are byte-identical.
// ---------------------------------------------------------------------------

inline std::string csv_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline void write_swap_experiment_csv(std::ostream& out,
                                      const std::vector<SwapExperimentRow>& rows) {
    out << "# qblockmatch csv v1 swap-exp\n";
    out << "pair_index,ced,qed_mean,qed_std,p0_mean,shots,runs,fidelity_1q,fidelity_2q,seed\n";
    for (const SwapExperimentRow& r : rows) {
        out << r.pair_index << ',' << csv_real(r.ced) << ',' << csv_real(r.qed_mean) << ','
            << csv_real(r.qed_std) << ',' << csv_real(r.p0_mean) << ',' << r.shots << ','
            << r.runs << ',' << csv_real(r.fidelity_1q) << ',' << csv_real(r.fidelity_2q) << ','
            << r.seed << '\n';
    }
}

inline void write_qft_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "# qblockmatch csv v1 qft-sweep\n";
    out << "fidelity,success_probability,cnot_count\n";
    for (const SweepRow& r : rows) {
        out << csv_real(r.fidelity) << ',' << csv_real(r.success_probability) << ','
            << r.cnot_count << '\n';
    }
}

inline void write_block_match_csv(std::ostream& out, const BlockMatchRow& row) {
    out << "# qblockmatch csv v1 block-match\n";
    out << "offset_x,offset_y,distance,evaluations,wall_time\n";
    out << row.offset_x << ',' << row.offset_y << ',' << csv_real(row.distance) << ','
        << row.evaluations << ',' << csv_real(row.wall_time_s) << '\n';
}

inline void write_gate_report_csv(std::ostream& out, const std::string& name,
                                  const GateReport& report) {
    out << "# qblockmatch csv v1 gate-report\n";
    out << "circuit,total_qubits,cnot_count,single_qubit_count,depth\n";
    out << name << ',' << report.total_qubits << ',' << report.cnot_count << ','
        << report.single_qubit_count << ',' << report.depth << '\n';
}

}  // namespace qbm
