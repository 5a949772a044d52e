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

#include <algorithm>
#include <numbers>
#include <vector>

#include "qbm/circuit.hpp"
#include "qbm/errors.hpp"
#include "qbm/gates.hpp"

namespace qbm {

/// Gate resources of a circuit after decomposition to {CNOT + single-qubit}.
struct GateReport {
    long cnot_count = 0;
    long single_qubit_count = 0;
    int total_qubits = 0;
    long depth = 0;
};

namespace detail {

inline constexpr double kQuarterTurn = std::numbers::pi / 4.0;

/// Standard 6-CNOT Toffoli in terms of H, T = phase(pi/4) and CNOT.
inline void emit_toffoli(Circuit& out, int c1, int c2, int t) {
    out.h(t);
    out.cnot(c2, t);
    out.phase(t, -kQuarterTurn);
    out.cnot(c1, t);
    out.phase(t, kQuarterTurn);
    out.cnot(c2, t);
    out.phase(t, -kQuarterTurn);
    out.cnot(c1, t);
    out.phase(c2, kQuarterTurn);
    out.phase(t, kQuarterTurn);
    out.h(t);
    out.cnot(c1, c2);
    out.phase(c1, kQuarterTurn);
    out.phase(c2, -kQuarterTurn);
    out.cnot(c1, c2);
}

/// Controlled phase via 2 CNOTs: exact, no global-phase residue.
inline void emit_cphase(Circuit& out, int c, int t, double theta) {
    out.phase(c, theta / 2.0);
    out.phase(t, theta / 2.0);
    out.cnot(c, t);
    out.phase(t, -theta / 2.0);
    out.cnot(c, t);
}

inline void emit_decomposed(Circuit& out, const GateOp& op) {
    switch (op.kind) {
        case GateKind::kH:
        case GateKind::kX:
        case GateKind::kRY:
        case GateKind::kRZ:
        case GateKind::kPhase:
        case GateKind::kSX:
        case GateKind::kCNOT:
            out.add(op);
            return;
        case GateKind::kCPhase:
            emit_cphase(out, op.targets[0], op.targets[1], op.params[0]);
            return;
        case GateKind::kCSwap: {
            // Fredkin = CNOT(b,a) . Toffoli(c,a,b) . CNOT(b,a)
            const int c = op.targets[0], a = op.targets[1], b = op.targets[2];
            out.cnot(b, a);
            emit_toffoli(out, c, a, b);
            out.cnot(b, a);
            return;
        }
        case GateKind::kCCPhase: {
            const int c1 = op.targets[0], c2 = op.targets[1], t = op.targets[2];
            const double half = op.params[0] / 2.0;
            emit_cphase(out, c2, t, half);
            out.cnot(c1, c2);
            emit_cphase(out, c2, t, -half);
            out.cnot(c1, c2);
            emit_cphase(out, c1, t, half);
            return;
        }
    }
    throw DecompositionError("unsupported gate kind");
}

}  // namespace detail

/// Rewrites a circuit into the {CNOT + single-qubit} basis. The result is
/// unitarily identical to the input (no global-phase slack in any expansion
/// used here).
inline Circuit decompose_to_basis(const Circuit& circuit) {
    Circuit out(circuit.num_qubits());
    for (const GateOp& op : circuit.ops()) detail::emit_decomposed(out, op);
    return out;
}

/// Counts gates and depth of the decomposed form of `circuit`.
inline GateReport gate_counts(const Circuit& circuit) {
    const Circuit basis = decompose_to_basis(circuit);
    GateReport report;
    report.total_qubits = basis.num_qubits();
    std::vector<long> qubit_depth(basis.num_qubits(), 0);
    for (const GateOp& op : basis.ops()) {
        if (op.kind == GateKind::kCNOT) {
            report.cnot_count++;
        } else {
            report.single_qubit_count++;
        }
        long d = 0;
        for (int q : op.targets) d = std::max(d, qubit_depth[q]);
        ++d;
        for (int q : op.targets) qubit_depth[q] = d;
        report.depth = std::max(report.depth, d);
    }
    return report;
}

}  // namespace qbm
