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

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "qbm/encoding.hpp"
#include "qbm/errors.hpp"
#include "qbm/noise.hpp"
#include "qbm/rng.hpp"
#include "qbm/statevector.hpp"

namespace qbm {

/// Estimated quantum Euclidean distance with its run statistics.
struct DistanceEstimate {
    double mean_distance = 0.0;
    double std_distance = 0.0;
    int runs = 0;
    int shots_per_run = 0;
    double p0_mean = 0.0;
    double z = 0.0;
    std::uint64_t seed = 0;
};

/// Swap-test circuit for an encoded pair.
///
/// Layout on k+3 qubits (k = data qubits of one vector): data register
/// 0..k-1, psi label qubit k, phi qubit k+1, ancilla k+2. The controlled
/// swap exchanges the phi qubit with the psi label qubit only; the ancilla
/// is the measured qubit.
inline Circuit build_swap_test_circuit(const PairEncoding& enc) {
    const int psi_qubits = enc.psi_circuit.num_qubits();  // 1 + k
    const int label = psi_qubits - 1;
    const int phi = psi_qubits;
    const int ancilla = psi_qubits + 1;
    Circuit circuit(psi_qubits + 2);
    circuit.h(ancilla);
    circuit.append(enc.phi_circuit, phi);
    circuit.append(enc.psi_circuit, 0);
    circuit.cswap(ancilla, phi, label);
    circuit.h(ancilla);
    return circuit;
}

inline int swap_test_ancilla(const Circuit& swap_circuit) {
    return swap_circuit.num_qubits() - 1;
}

/// Ancilla statistics -> squared overlap |<phi|psi>|^2. Sampled values below
/// 1/2 are statistical artifacts and clamp to zero.
inline double overlap_from_p0(double p0) {
    if (p0 < 0.0 || p0 > 1.0) throw ArgumentError("p0 must be in [0, 1]");
    const double overlap = 2.0 * p0 - 1.0;
    if (overlap < 0.0) return 0.0;
    if (overlap > 1.0) return 1.0;
    return overlap;
}

/// D = sqrt(2 Z |<phi|psi>|^2).
inline double distance_from_overlap(double overlap, double z) {
    if (overlap < 0.0 || overlap > 1.0) throw ArgumentError("overlap must be in [0, 1]");
    if (!(z > 0.0)) throw ArgumentError("Z must be positive");
    return std::sqrt(2.0 * z * overlap);
}

/// Runs the swap test `runs` times with `shots` ancilla samples each and
/// reports the per-run distance mean and standard deviation. Run r draws
/// from stream mix_seed(seed, r); with no noise (or a noiseless model) the
/// exact state is sampled directly, otherwise each run uses Pauli
/// trajectories.
inline DistanceEstimate estimate_distance(const std::vector<int>& a, const std::vector<int>& b,
                                          int shots, int runs,
                                          const std::optional<NoiseModel>& noise,
                                          std::uint64_t seed) {
    if (shots < 1 || runs < 1) throw ArgumentError("shots and runs must be >= 1");
    const PairEncoding enc = build_pair_encoding(a, b);
    const Circuit circuit = build_swap_test_circuit(enc);
    const int ancilla = swap_test_ancilla(circuit);
    const bool noisy = noise.has_value() && !noise->is_noiseless();

    StateVector exact;
    if (!noisy) exact = simulate(circuit);

    DistanceEstimate est;
    est.runs = runs;
    est.shots_per_run = shots;
    est.z = enc.z;
    est.seed = seed;

    std::vector<double> distances(runs);
    double p0_sum = 0.0;
    for (int r = 0; r < runs; ++r) {
        const std::uint64_t run_seed = mix_seed(seed, static_cast<std::uint64_t>(r));
        std::uint64_t zeros = 0;
        if (noisy) {
            const TrajectoryResult res = run_noisy_trajectories(
                circuit, *noise, {ancilla}, static_cast<std::uint64_t>(shots), run_seed);
            const auto it = res.histogram.find("0");
            zeros = it == res.histogram.end() ? 0 : it->second;
        } else {
            const auto hist = sample_counts(exact, {ancilla}, static_cast<std::uint64_t>(shots),
                                            run_seed);
            const auto it = hist.find("0");
            zeros = it == hist.end() ? 0 : it->second;
        }
        const double p0 = static_cast<double>(zeros) / static_cast<double>(shots);
        p0_sum += p0;
        distances[r] = distance_from_overlap(overlap_from_p0(p0), enc.z);
    }

    double mean = 0.0;
    for (double d : distances) mean += d;
    mean /= runs;
    double var = 0.0;
    for (double d : distances) var += (d - mean) * (d - mean);
    est.mean_distance = mean;
    est.std_distance = runs > 1 ? std::sqrt(var / (runs - 1)) : 0.0;
    est.p0_mean = p0_sum / runs;
    return est;
}

}  // namespace qbm
