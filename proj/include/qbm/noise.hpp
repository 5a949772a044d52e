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
#include <string>
#include <vector>

#include "qbm/circuit.hpp"
#include "qbm/decompose.hpp"
#include "qbm/errors.hpp"
#include "qbm/rng.hpp"
#include "qbm/statevector.hpp"

namespace qbm {

/// Maps a gate fidelity to a depolarizing probability.
///
/// Convention: p = 1 - fidelity. The fidelity is treated as an error-free
/// probability, the simplest monotone reading; no average-gate-fidelity
/// correction is applied.
inline double fidelity_to_depolarizing(double fidelity) {
    if (!(fidelity > 0.0) || fidelity > 1.0) {
        throw ArgumentError("fidelity must be in (0, 1]");
    }
    return 1.0 - fidelity;
}

/// Per-gate-arity depolarizing noise derived from fidelities.
struct NoiseModel {
    double fidelity_1q = 1.0;
    double fidelity_2q = 1.0;

    static NoiseModel from_fidelities(double f1q, double f2q) {
        NoiseModel m;
        m.fidelity_1q = f1q;
        m.fidelity_2q = f2q;
        // Validates both inputs.
        (void)fidelity_to_depolarizing(f1q);
        (void)fidelity_to_depolarizing(f2q);
        return m;
    }

    double p_1q() const { return fidelity_to_depolarizing(fidelity_1q); }
    double p_2q() const { return fidelity_to_depolarizing(fidelity_2q); }
    bool is_noiseless() const { return fidelity_1q == 1.0 && fidelity_2q == 1.0; }
};

/// With probability p, applies a uniformly random non-identity Pauli string
/// over the listed qubits (3 choices for one qubit, 15 for two).
inline void apply_depolarizing(StateVector& state, const std::vector<int>& qubits, double p,
                               Rng& rng) {
    if (qubits.empty() || qubits.size() > 2) {
        throw ArgumentError("depolarizing channel acts on 1 or 2 qubits");
    }
    if (p < 0.0 || p >= 1.0) {
        throw ArgumentError("depolarizing probability must be in [0, 1)");
    }
    if (p == 0.0) return;
    if (rng.uniform() >= p) return;
    if (qubits.size() == 1) {
        const int pauli = 1 + static_cast<int>(rng.uniform_index(3));
        apply_pauli(state, qubits[0], pauli);
    } else {
        const int combo = 1 + static_cast<int>(rng.uniform_index(15));
        const int pa = combo >> 2, pb = combo & 3;
        if (pa != 0) apply_pauli(state, qubits[0], pa);
        if (pb != 0) apply_pauli(state, qubits[1], pb);
    }
}

/// Histogram produced by Monte Carlo Pauli-trajectory execution.
struct TrajectoryResult {
    std::map<std::string, std::uint64_t> histogram;
    std::uint64_t trajectories = 0;
    std::uint64_t seed = 0;
};

namespace detail {

struct NoiseSite {
    std::vector<int> qubits;
    double p;
};

/// One scheduled Pauli error: decomposed-op index plus Pauli codes aligned
/// with the site's qubit list (0 = none).
struct ErrorEvent {
    std::size_t op_index;
    int pauli_a;
    int pauli_b;
};

}  // namespace detail

/// Runs `shots` independent noisy trajectories of the circuit and samples the
/// listed qubits once per trajectory.
///
/// The circuit is first decomposed to the {CNOT + single-qubit} basis; a
/// depolarizing channel (p_1q after single-qubit gates, p_2q after CNOTs, the
/// CNOT channel covering both its qubits) is sampled after every decomposed
/// gate. Trajectory t draws from its own stream mix_seed(seed, t), so the
/// histogram is reproducible regardless of scheduling or replay shortcuts.
inline TrajectoryResult run_noisy_trajectories(const Circuit& circuit, const NoiseModel& noise,
                                               const std::vector<int>& measured_qubits,
                                               std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw ArgumentError("shots must be >= 1");
    const Circuit basis = decompose_to_basis(circuit);
    const double p1 = noise.p_1q();
    const double p2 = noise.p_2q();

    std::vector<detail::NoiseSite> sites(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const GateOp& op = basis.ops()[i];
        if (op.kind == GateKind::kCNOT) {
            sites[i] = {{op.targets[0], op.targets[1]}, p2};
        } else {
            sites[i] = {{op.targets[0]}, p1};
        }
    }

    // Noiseless prefix states let error-free trajectories (and the error-free
    // prefix of every other trajectory) skip re-simulation.
    std::vector<StateVector> prefix;
    prefix.reserve(basis.size() + 1);
    prefix.push_back(new_state(basis.num_qubits()));
    for (const GateOp& op : basis.ops()) {
        StateVector next = prefix.back();
        apply_gate(next, op);
        prefix.push_back(std::move(next));
    }
    const std::vector<double> clean_marginal =
        detail::marginal_distribution(prefix.back(), measured_qubits);

    std::vector<std::uint64_t> counts(clean_marginal.size(), 0);
    std::vector<detail::ErrorEvent> events;
    for (std::uint64_t t = 0; t < shots; ++t) {
        Rng rng(mix_seed(seed, t));
        events.clear();
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const detail::NoiseSite& site = sites[i];
            if (site.p == 0.0) continue;
            if (rng.uniform() >= site.p) continue;
            if (site.qubits.size() == 1) {
                events.push_back({i, 1 + static_cast<int>(rng.uniform_index(3)), 0});
            } else {
                const int combo = 1 + static_cast<int>(rng.uniform_index(15));
                events.push_back({i, combo >> 2, combo & 3});
            }
        }

        std::size_t outcome;
        if (events.empty()) {
            outcome = detail::sample_from_distribution(clean_marginal, rng);
        } else {
            StateVector state = prefix[events.front().op_index + 1];
            std::size_t next_event = 0;
            for (std::size_t i = events.front().op_index; i < basis.size(); ++i) {
                if (i > events.front().op_index) apply_gate(state, basis.ops()[i]);
                if (next_event < events.size() && events[next_event].op_index == i) {
                    const detail::ErrorEvent& ev = events[next_event];
                    if (ev.pauli_a != 0) apply_pauli(state, sites[i].qubits[0], ev.pauli_a);
                    if (ev.pauli_b != 0) apply_pauli(state, sites[i].qubits[1], ev.pauli_b);
                    ++next_event;
                }
            }
            outcome = detail::sample_from_distribution(
                detail::marginal_distribution(state, measured_qubits), rng);
        }
        counts[outcome]++;
    }

    TrajectoryResult result;
    result.trajectories = shots;
    result.seed = seed;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        if (counts[v] > 0) result.histogram[bitstring_of(v, measured_qubits.size())] = counts[v];
    }
    return result;
}

}  // namespace qbm
