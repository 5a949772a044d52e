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

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qbm/circuit.hpp"
#include "qbm/errors.hpp"
#include "qbm/noise.hpp"
#include "qbm/rng.hpp"
#include "qbm/statevector.hpp"

namespace qbm {

/// Qubit partition of the two-operand phase-space subtractor:
/// 3*bits qubits total, sum register measured.
struct AdderLayout {
    int bits = 0;
    std::vector<int> a_register;
    std::vector<int> b_register;
    std::vector<int> sum_register;  // index i has significance 2^i
};

struct SubtractorCircuit {
    Circuit circuit;
    AdderLayout layout;
};

namespace detail {

/// QFT ladder over an explicit qubit list, qs[0] most significant. No final
/// swap network; callers account for the ordering when they decode. After
/// the forward transform, the Fourier factor of significance 2^i sits on
/// qs[n-1-i].
inline void append_qft(Circuit& circuit, const std::vector<int>& qs, bool inverse) {
    const int n = static_cast<int>(qs.size());
    std::vector<GateOp> ops;
    for (int i = 0; i < n; ++i) {
        ops.push_back(h_op(qs[i]));
        for (int m = i + 1; m < n; ++m) {
            ops.push_back(cphase_op(qs[m], qs[i], std::numbers::pi / double(1 << (m - i))));
        }
    }
    if (inverse) {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            GateOp op = *it;
            if (op.kind == GateKind::kCPhase) op.params[0] = -op.params[0];
            circuit.add(std::move(op));
        }
    } else {
        for (GateOp& op : ops) circuit.add(std::move(op));
    }
}

}  // namespace detail

/// Standard QFT (H + controlled-phase ladder, no final swaps) on `bits`
/// qubits; qubit bits-1 is treated as the most significant.
inline Circuit qft_circuit(int bits, bool inverse) {
    if (bits < 1) throw ArgumentError("QFT needs at least one qubit");
    Circuit circuit(bits);
    std::vector<int> qs(bits);
    for (int i = 0; i < bits; ++i) qs[i] = bits - 1 - i;
    detail::append_qft(circuit, qs, inverse);
    return circuit;
}

/// Phase-space subtractor computing sum = (a - b) mod 2^bits for basis-state
/// operands.
///
/// Structure: QFT on the sum register, then one controlled phase fan per
/// operand qubit repeated per binary weight (the qubit of weight 2^j
/// controls 2^j copies of the unit-increment fan; b fans carry negated
/// angles), then the inverse QFT. Realizing the weights by repetition keeps
/// every block a plain conditional +1/-1 in phase space at the cost of a
/// CNOT count that grows with the operand range, which is what makes this
/// route so much more expensive than the swap test.
inline SubtractorCircuit build_subtractor(int bits) {
    if (bits < 1) throw ArgumentError("subtractor needs at least one bit");
    AdderLayout layout;
    layout.bits = bits;
    for (int i = 0; i < bits; ++i) {
        layout.a_register.push_back(i);
        layout.b_register.push_back(bits + i);
        layout.sum_register.push_back(2 * bits + i);
    }
    Circuit circuit(3 * bits);

    std::vector<int> sum_msb_first(bits);
    for (int i = 0; i < bits; ++i) sum_msb_first[i] = layout.sum_register[bits - 1 - i];

    detail::append_qft(circuit, sum_msb_first, false);
    // Unit fan: adds 1 to the Fourier-space register when `control` is set.
    // Factor of significance 2^i lives on sum_msb_first[i].
    auto fan = [&](int control, double sign) {
        for (int i = 0; i < bits; ++i) {
            const double angle = sign * 2.0 * std::numbers::pi * double(1 << i) / double(1 << bits);
            circuit.cphase(control, sum_msb_first[i], angle);
        }
    };
    for (int w = 0; w < bits; ++w) {
        for (int rep = 0; rep < (1 << w); ++rep) fan(layout.a_register[w], +1.0);
    }
    for (int w = 0; w < bits; ++w) {
        for (int rep = 0; rep < (1 << w); ++rep) fan(layout.b_register[w], -1.0);
    }
    detail::append_qft(circuit, sum_msb_first, true);
    return {std::move(circuit), std::move(layout)};
}

/// Interprets a mod-2^bits measurement as a signed difference in
/// [-2^(bits-1), 2^(bits-1)).
inline int signed_difference(int value, int bits) {
    const int modulus = 1 << bits;
    if (value < 0 || value >= modulus) throw ArgumentError("value out of register range");
    return value >= modulus / 2 ? value - modulus : value;
}

/// Loads a and b as basis states, runs the subtractor (noiseless or
/// trajectory-noisy) and measures the sum register.
inline std::map<std::string, std::uint64_t> run_subtraction(
    int a, int b, int bits, const std::optional<NoiseModel>& noise, std::uint64_t shots,
    std::uint64_t seed) {
    if (bits < 1) throw ArgumentError("subtractor needs at least one bit");
    const int modulus = 1 << bits;
    if (a < 0 || a >= modulus || b < 0 || b >= modulus) {
        throw ArgumentError("operands must be in [0, 2^bits)");
    }
    SubtractorCircuit sub = build_subtractor(bits);
    Circuit circuit(sub.circuit.num_qubits());
    for (int w = 0; w < bits; ++w) {
        if (a & (1 << w)) circuit.x(sub.layout.a_register[w]);
        if (b & (1 << w)) circuit.x(sub.layout.b_register[w]);
    }
    circuit.append(sub.circuit);

    if (noise.has_value() && !noise->is_noiseless()) {
        return run_noisy_trajectories(circuit, *noise, sub.layout.sum_register, shots, seed)
            .histogram;
    }
    const StateVector state = simulate(circuit);
    return sample_counts(state, sub.layout.sum_register, shots, seed);
}

namespace detail {

inline int modal_outcome(const std::map<std::string, std::uint64_t>& histogram) {
    std::uint64_t best = 0;
    int value = 0;
    for (const auto& [bits_str, count] : histogram) {
        if (count > best) {
            best = count;
            value = static_cast<int>(std::stoul(bits_str, nullptr, 2));
        }
    }
    return value;
}

}  // namespace detail

/// Dissimilarity D^2 of two pixel vectors: one quantum subtraction per
/// index, decoded as a signed difference, then squared and summed
/// classically.
inline double ssd_distance(const std::vector<int>& img1, const std::vector<int>& img2, int bits,
                           const std::optional<NoiseModel>& noise, std::uint64_t shots,
                           std::uint64_t seed) {
    if (img1.size() != img2.size()) throw ShapeError("vectors must have equal lengths");
    double total = 0.0;
    for (std::size_t i = 0; i < img1.size(); ++i) {
        const auto histogram = run_subtraction(img1[i], img2[i], bits, noise, shots,
                                               mix_seed(seed, i));
        const int diff = signed_difference(detail::modal_outcome(histogram), bits);
        total += static_cast<double>(diff) * static_cast<double>(diff);
    }
    return total;
}

}  // namespace qbm
