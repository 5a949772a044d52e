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

#include <string>
#include <vector>

#include "qbm/errors.hpp"

namespace qbm {

/// Gate vocabulary of the toolkit. Controlled gates list controls first in
/// GateOp::targets.
enum class GateKind {
    kH,
    kX,
    kRY,
    kRZ,
    kPhase,   // diag(1, e^{i theta})
    kSX,      // sqrt(X)
    kCNOT,    // [control, target]
    kCPhase,  // [control, target], symmetric
    kCSwap,   // [control, a, b]
    kCCPhase  // [c1, c2, target], fully symmetric
};

inline int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
        case GateKind::kX:
        case GateKind::kRY:
        case GateKind::kRZ:
        case GateKind::kPhase:
        case GateKind::kSX:
            return 1;
        case GateKind::kCNOT:
        case GateKind::kCPhase:
            return 2;
        case GateKind::kCSwap:
        case GateKind::kCCPhase:
            return 3;
    }
    throw ArgumentError("unknown gate kind");
}

inline int gate_param_count(GateKind kind) {
    switch (kind) {
        case GateKind::kRY:
        case GateKind::kRZ:
        case GateKind::kPhase:
        case GateKind::kCPhase:
        case GateKind::kCCPhase:
            return 1;
        default:
            return 0;
    }
}

inline const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH: return "h";
        case GateKind::kX: return "x";
        case GateKind::kRY: return "ry";
        case GateKind::kRZ: return "rz";
        case GateKind::kPhase: return "phase";
        case GateKind::kSX: return "sx";
        case GateKind::kCNOT: return "cnot";
        case GateKind::kCPhase: return "cphase";
        case GateKind::kCSwap: return "cswap";
        case GateKind::kCCPhase: return "ccphase";
    }
    return "?";
}

/// One gate application: kind + qubit indices + real parameters (radians).
struct GateOp {
    GateKind kind;
    std::vector<int> targets;
    std::vector<double> params;
};

inline bool is_single_qubit(const GateOp& op) {
    return gate_arity(op.kind) == 1;
}

namespace detail {

inline GateOp make_op(GateKind kind, std::vector<int> targets, std::vector<double> params) {
    if (static_cast<int>(targets.size()) != gate_arity(kind)) {
        throw ArgumentError(std::string(gate_name(kind)) + ": wrong number of qubits");
    }
    if (static_cast<int>(params.size()) != gate_param_count(kind)) {
        throw ArgumentError(std::string(gate_name(kind)) + ": wrong number of parameters");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0) {
            throw IndexError(std::string(gate_name(kind)) + ": negative qubit index");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw ArgumentError(std::string(gate_name(kind)) + ": duplicate qubit index");
            }
        }
    }
    return GateOp{kind, std::move(targets), std::move(params)};
}

}  // namespace detail

inline GateOp h_op(int q) { return detail::make_op(GateKind::kH, {q}, {}); }
inline GateOp x_op(int q) { return detail::make_op(GateKind::kX, {q}, {}); }
inline GateOp sx_op(int q) { return detail::make_op(GateKind::kSX, {q}, {}); }
inline GateOp ry_op(int q, double theta) { return detail::make_op(GateKind::kRY, {q}, {theta}); }
inline GateOp rz_op(int q, double theta) { return detail::make_op(GateKind::kRZ, {q}, {theta}); }
inline GateOp phase_op(int q, double theta) { return detail::make_op(GateKind::kPhase, {q}, {theta}); }
inline GateOp cnot_op(int control, int target) {
    return detail::make_op(GateKind::kCNOT, {control, target}, {});
}
inline GateOp cphase_op(int control, int target, double theta) {
    return detail::make_op(GateKind::kCPhase, {control, target}, {theta});
}
inline GateOp cswap_op(int control, int a, int b) {
    return detail::make_op(GateKind::kCSwap, {control, a, b}, {});
}
inline GateOp ccphase_op(int c1, int c2, int target, double theta) {
    return detail::make_op(GateKind::kCCPhase, {c1, c2, target}, {theta});
}

}  // namespace qbm
