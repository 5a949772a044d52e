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
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbm/circuit.hpp"
#include "qbm/errors.hpp"
#include "qbm/gates.hpp"
#include "qbm/rng.hpp"

namespace qbm {

using cplx = std::complex<double>;

/// Dense amplitudes are capped at 24 qubits; everything in this project needs
/// at most 13.
inline constexpr int kMaxQubits = 24;

/// Exact complex state vector over `num_qubits` qubits.
///
/// Convention used throughout: qubit 0 is the least significant bit of the
/// basis-state index, and bitstrings are printed most-significant-qubit
/// first.
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

/// Returns |0...0> on `num_qubits` qubits.
inline StateVector new_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    StateVector state;
    state.num_qubits = num_qubits;
    state.amplitudes.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    state.amplitudes[0] = cplx{1.0, 0.0};
    return state;
}

inline double state_norm(const StateVector& state) {
    double s = 0.0;
    for (const cplx& a : state.amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

inline cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits != b.num_qubits) {
        throw ShapeError("inner product of states with different qubit counts");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return acc;
}

namespace detail {

inline void check_qubit(const StateVector& state, int q) {
    if (q < 0 || q >= state.num_qubits) {
        throw IndexError("qubit index " + std::to_string(q) + " out of range");
    }
}

/// Applies an arbitrary 2x2 matrix to one qubit. O(2^n).
inline void apply_1q_matrix(StateVector& state, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
    const std::size_t step = std::size_t{1} << q;
    const std::size_t block = step << 1;
    const std::size_t dim = state.dim();
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cplx a = state.amplitudes[i0];
            const cplx b = state.amplitudes[i1];
            state.amplitudes[i0] = m00 * a + m01 * b;
            state.amplitudes[i1] = m10 * a + m11 * b;
        }
    }
}

/// Multiplies amplitudes with the qubit set to |1> by `f`.
inline void apply_1q_diag(StateVector& state, int q, cplx f0, cplx f1) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        state.amplitudes[i] *= (i & bit) ? f1 : f0;
    }
}

}  // namespace detail

/// Applies one Pauli (1 = X, 2 = Y, 3 = Z) to a qubit. Exact matrices, no
/// global-phase shortcuts; the noise machinery relies on this.
inline void apply_pauli(StateVector& state, int q, int pauli) {
    detail::check_qubit(state, q);
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = state.dim();
    switch (pauli) {
        case 1:
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & bit)) std::swap(state.amplitudes[i], state.amplitudes[i | bit]);
            }
            return;
        case 2:
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & bit)) {
                    const cplx a = state.amplitudes[i];
                    const cplx b = state.amplitudes[i | bit];
                    state.amplitudes[i] = cplx{0.0, -1.0} * b;
                    state.amplitudes[i | bit] = cplx{0.0, 1.0} * a;
                }
            }
            return;
        case 3:
            detail::apply_1q_diag(state, q, cplx{1.0, 0.0}, cplx{-1.0, 0.0});
            return;
        default:
            throw ArgumentError("pauli must be 1 (X), 2 (Y) or 3 (Z)");
    }
}

/// Applies one gate in place. Norm is preserved (all gates are unitary).
inline void apply_gate(StateVector& state, const GateOp& op) {
    for (int q : op.targets) detail::check_qubit(state, q);
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t dim = state.dim();
    switch (op.kind) {
        case GateKind::kH:
            detail::apply_1q_matrix(state, op.targets[0], {inv_sqrt2, 0}, {inv_sqrt2, 0},
                                    {inv_sqrt2, 0}, {-inv_sqrt2, 0});
            return;
        case GateKind::kX:
            apply_pauli(state, op.targets[0], 1);
            return;
        case GateKind::kSX: {
            const cplx p{0.5, 0.5}, m{0.5, -0.5};
            detail::apply_1q_matrix(state, op.targets[0], p, m, m, p);
            return;
        }
        case GateKind::kRY: {
            const double c = std::cos(op.params[0] / 2.0);
            const double s = std::sin(op.params[0] / 2.0);
            detail::apply_1q_matrix(state, op.targets[0], {c, 0}, {-s, 0}, {s, 0}, {c, 0});
            return;
        }
        case GateKind::kRZ: {
            const cplx f1 = std::polar(1.0, op.params[0] / 2.0);
            detail::apply_1q_diag(state, op.targets[0], std::conj(f1), f1);
            return;
        }
        case GateKind::kPhase:
            detail::apply_1q_diag(state, op.targets[0], {1.0, 0.0}, std::polar(1.0, op.params[0]));
            return;
        case GateKind::kCNOT: {
            const std::size_t cbit = std::size_t{1} << op.targets[0];
            const std::size_t tbit = std::size_t{1} << op.targets[1];
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cbit) && !(i & tbit)) {
                    std::swap(state.amplitudes[i], state.amplitudes[i | tbit]);
                }
            }
            return;
        }
        case GateKind::kCPhase: {
            const std::size_t mask =
                (std::size_t{1} << op.targets[0]) | (std::size_t{1} << op.targets[1]);
            const cplx f = std::polar(1.0, op.params[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & mask) == mask) state.amplitudes[i] *= f;
            }
            return;
        }
        case GateKind::kCSwap: {
            const std::size_t cbit = std::size_t{1} << op.targets[0];
            const std::size_t abit = std::size_t{1} << op.targets[1];
            const std::size_t bbit = std::size_t{1} << op.targets[2];
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cbit) && (i & abit) && !(i & bbit)) {
                    std::swap(state.amplitudes[i], state.amplitudes[(i ^ abit) | bbit]);
                }
            }
            return;
        }
        case GateKind::kCCPhase: {
            const std::size_t mask = (std::size_t{1} << op.targets[0]) |
                                     (std::size_t{1} << op.targets[1]) |
                                     (std::size_t{1} << op.targets[2]);
            const cplx f = std::polar(1.0, op.params[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & mask) == mask) state.amplitudes[i] *= f;
            }
            return;
        }
    }
    throw ArgumentError("unknown gate kind");
}

inline void apply_circuit(StateVector& state, const Circuit& circuit) {
    if (circuit.num_qubits() != state.num_qubits) {
        throw ShapeError("circuit and state have different qubit counts");
    }
    for (const GateOp& op : circuit.ops()) apply_gate(state, op);
}

/// Convenience: runs `circuit` on |0...0>.
inline StateVector simulate(const Circuit& circuit) {
    StateVector state = new_state(circuit.num_qubits());
    apply_circuit(state, circuit);
    return state;
}

/// Measurement marginals (p0, p1) of one qubit.
inline std::pair<double, double> qubit_probabilities(const StateVector& state, int qubit) {
    detail::check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p0 = 0.0, p1 = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & bit) {
            p1 += std::norm(state.amplitudes[i]);
        } else {
            p0 += std::norm(state.amplitudes[i]);
        }
    }
    return {p0, p1};
}

namespace detail {

/// Joint measurement distribution of the listed qubits. qubits[j] contributes
/// bit j of the outcome value, so the list is given least significant first.
inline std::vector<double> marginal_distribution(const StateVector& state,
                                                 const std::vector<int>& qubits) {
    if (qubits.empty()) throw ArgumentError("no qubits to measure");
    for (int q : qubits) check_qubit(state, q);
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (i & (std::size_t{1} << qubits[j])) out |= std::size_t{1} << j;
        }
        probs[out] += std::norm(state.amplitudes[i]);
    }
    return probs;
}

inline std::size_t sample_from_distribution(const std::vector<double>& probs, Rng& rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t v = 0; v + 1 < probs.size(); ++v) {
        acc += probs[v];
        if (u < acc) return v;
    }
    return probs.size() - 1;
}

}  // namespace detail

/// Outcome value -> bitstring, most significant qubit first.
inline std::string bitstring_of(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if (value & (std::size_t{1} << j)) s[width - 1 - j] = '1';
    }
    return s;
}

/// Samples `shots` measurements of the listed qubits from the exact joint
/// distribution. Identical (state, qubits, shots, seed) gives an identical
/// histogram. Keys are bitstrings, most significant listed qubit first;
/// qubits are listed in ascending significance (qubits[0] = last character).
inline std::map<std::string, std::uint64_t> sample_counts(const StateVector& state,
                                                          const std::vector<int>& qubits,
                                                          std::uint64_t shots,
                                                          std::uint64_t seed) {
    if (shots < 1) throw ArgumentError("shots must be >= 1");
    const std::vector<double> probs = detail::marginal_distribution(state, qubits);
    Rng rng(seed);
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        counts[detail::sample_from_distribution(probs, rng)]++;
    }
    std::map<std::string, std::uint64_t> histogram;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        if (counts[v] > 0) histogram[bitstring_of(v, qubits.size())] = counts[v];
    }
    return histogram;
}

}  // namespace qbm
