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
#include <vector>

#include "qbm/circuit.hpp"
#include "qbm/errors.hpp"

namespace qbm {

/// Flattened non-negative pixel block plus its Euclidean norm.
struct BlockVector {
    std::vector<int> values;
    double norm = 0.0;
};

inline BlockVector make_block_vector(std::vector<int> values) {
    double sq = 0.0;
    for (int v : values) {
        if (v < 0) throw ArgumentError("block values must be non-negative");
        sq += static_cast<double>(v) * static_cast<double>(v);
    }
    return BlockVector{std::move(values), std::sqrt(sq)};
}

inline std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct NormalizedVector {
    std::vector<double> amplitudes;  // length padded to a power of two
    double norm = 0.0;               // Euclidean norm of the raw values
};

/// Zero-pads to the next power of two and divides by the Euclidean norm.
/// Padding never changes norms or distances. All-zero input has no direction
/// to encode and is rejected.
inline NormalizedVector normalize(const std::vector<int>& values) {
    if (values.empty()) throw ArgumentError("cannot normalize an empty vector");
    double sq = 0.0;
    for (int v : values) {
        if (v < 0) throw ArgumentError("pixel values must be non-negative");
        sq += static_cast<double>(v) * static_cast<double>(v);
    }
    if (sq == 0.0) throw EncodingError("all-zero vector has no amplitude encoding");
    NormalizedVector out;
    out.norm = std::sqrt(sq);
    out.amplitudes.assign(next_power_of_two(values.size()), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.amplitudes[i] = static_cast<double>(values[i]) / out.norm;
    }
    return out;
}

namespace detail {

/// Multiplexed RY: applies RY(angles[m]) to `target` when the control qubits
/// read m (controls[i] carries bit i of m). Emitted directly in the RY+CNOT
/// basis via the standard recursive halving; sub-blocks whose angles are all
/// exactly zero are elided together with their cancelling CNOT pair.
inline void append_ucry(Circuit& circuit, int target, const std::vector<int>& controls,
                        const std::vector<double>& angles) {
    if (angles.size() != (std::size_t{1} << controls.size())) {
        throw ArgumentError("multiplexed RY needs 2^controls angles");
    }
    if (controls.empty()) {
        if (angles[0] != 0.0) circuit.ry(target, angles[0]);
        return;
    }
    const std::size_t half = angles.size() / 2;
    std::vector<double> sum(half), diff(half);
    bool diff_zero = true;
    for (std::size_t m = 0; m < half; ++m) {
        sum[m] = (angles[m] + angles[m + half]) / 2.0;
        diff[m] = (angles[m] - angles[m + half]) / 2.0;
        if (diff[m] != 0.0) diff_zero = false;
    }
    std::vector<int> inner(controls.begin(), controls.end() - 1);
    append_ucry(circuit, target, inner, sum);
    if (!diff_zero) {
        circuit.cnot(controls.back(), target);
        append_ucry(circuit, target, inner, diff);
        circuit.cnot(controls.back(), target);
    }
}

}  // namespace detail

/// Builds a circuit on log2(len) qubits mapping |0...0> to the given real
/// amplitudes, using a tree of multiplexed RY rotations (qubits prepared most
/// significant first). Works for any real unit vector: interior tree levels
/// use subtree norms, the leaf level keeps the amplitudes' signs.
inline Circuit prepare_state_circuit(const std::vector<double>& amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw ArgumentError("amplitude count must be a power of two >= 2");
    }
    double sq = 0.0;
    for (double a : amplitudes) sq += a * a;
    if (std::abs(sq - 1.0) > 1e-6) throw ArgumentError("amplitudes must have unit norm");

    int n = 0;
    while ((std::size_t{1} << n) < len) ++n;

    // weights[l][v]: norm of the subtree under the length-l prefix v; at the
    // leaf level the signed amplitudes themselves.
    std::vector<std::vector<double>> weights(n + 1);
    weights[n] = amplitudes;
    for (int l = n - 1; l >= 0; --l) {
        weights[l].resize(std::size_t{1} << l);
        for (std::size_t v = 0; v < weights[l].size(); ++v) {
            const double w0 = weights[l + 1][2 * v];
            const double w1 = weights[l + 1][2 * v + 1];
            weights[l][v] = std::sqrt(w0 * w0 + w1 * w1);
        }
    }

    Circuit circuit(n);
    for (int level = 0; level < n; ++level) {
        const int target = n - 1 - level;
        std::vector<int> controls;
        for (int i = 0; i < level; ++i) controls.push_back(n - level + i);
        std::vector<double> angles(std::size_t{1} << level);
        for (std::size_t v = 0; v < angles.size(); ++v) {
            angles[v] = 2.0 * std::atan2(weights[level + 1][2 * v + 1], weights[level + 1][2 * v]);
        }
        detail::append_ucry(circuit, target, controls, angles);
    }
    return circuit;
}

/// State-preparation circuits for one vector pair, per the swap-test layout:
/// psi = (|0>|A> + |1>|B>)/sqrt(2) on 1+k qubits (label qubit is the most
/// significant), phi = (|A||0> - |B||1>)/sqrt(Z) on a single qubit, with
/// Z = |A|^2 + |B|^2.
struct PairEncoding {
    BlockVector a;
    BlockVector b;
    double z = 0.0;
    Circuit psi_circuit;
    Circuit phi_circuit;
};

inline PairEncoding build_pair_encoding(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw ShapeError("vector pair must have equal lengths");
    const NormalizedVector na = normalize(a);
    const NormalizedVector nb = normalize(b);

    PairEncoding enc;
    std::vector<int> padded_a(a), padded_b(b);
    padded_a.resize(na.amplitudes.size(), 0);
    padded_b.resize(nb.amplitudes.size(), 0);
    enc.a = make_block_vector(std::move(padded_a));
    enc.b = make_block_vector(std::move(padded_b));
    enc.z = na.norm * na.norm + nb.norm * nb.norm;

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> psi(2 * na.amplitudes.size());
    for (std::size_t i = 0; i < na.amplitudes.size(); ++i) {
        psi[i] = na.amplitudes[i] * inv_sqrt2;
        psi[na.amplitudes.size() + i] = nb.amplitudes[i] * inv_sqrt2;
    }
    enc.psi_circuit = prepare_state_circuit(psi);

    const double inv_sqrt_z = 1.0 / std::sqrt(enc.z);
    enc.phi_circuit = prepare_state_circuit({na.norm * inv_sqrt_z, -nb.norm * inv_sqrt_z});
    return enc;
}

}  // namespace qbm
