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

#include <utility>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/gates.hpp"

namespace qbm {

/// Ordered list of gate applications on a fixed-width register.
///
/// Circuits are plain data: once built they are immutable by convention and
/// can be shared freely across concurrent executions.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1) {
            throw ArgumentError("circuit needs at least one qubit");
        }
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }
    std::size_t size() const { return ops_.size(); }

    Circuit& add(GateOp op) {
        for (int q : op.targets) {
            if (q < 0 || q >= num_qubits_) {
                throw IndexError("gate qubit index out of range");
            }
        }
        ops_.push_back(std::move(op));
        return *this;
    }

    Circuit& h(int q) { return add(h_op(q)); }
    Circuit& x(int q) { return add(x_op(q)); }
    Circuit& sx(int q) { return add(sx_op(q)); }
    Circuit& ry(int q, double theta) { return add(ry_op(q, theta)); }
    Circuit& rz(int q, double theta) { return add(rz_op(q, theta)); }
    Circuit& phase(int q, double theta) { return add(phase_op(q, theta)); }
    Circuit& cnot(int control, int target) { return add(cnot_op(control, target)); }
    Circuit& cphase(int control, int target, double theta) {
        return add(cphase_op(control, target, theta));
    }
    Circuit& cswap(int control, int a, int b) { return add(cswap_op(control, a, b)); }
    Circuit& ccphase(int c1, int c2, int target, double theta) {
        return add(ccphase_op(c1, c2, target, theta));
    }

    /// Appends another circuit's ops, shifting its qubit indices by `offset`.
    Circuit& append(const Circuit& other, int offset = 0) {
        for (const GateOp& op : other.ops()) {
            GateOp shifted = op;
            for (int& q : shifted.targets) q += offset;
            add(std::move(shifted));
        }
        return *this;
    }

  private:
    int num_qubits_ = 0;
    std::vector<GateOp> ops_;
};

}  // namespace qbm
