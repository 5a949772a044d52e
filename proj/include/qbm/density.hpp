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

#include "qbm/circuit.hpp"
#include "qbm/decompose.hpp"
#include "qbm/errors.hpp"
#include "qbm/noise.hpp"
#include "qbm/statevector.hpp"

namespace qbm {

/// Density matrices blow up as 4^n, so the oracle stops at 6 qubits.
inline constexpr int kMaxDensityQubits = 6;

/// Exact density-matrix evolution used as the testing oracle for the
/// trajectory engine. Unitaries are applied by conjugation and depolarizing
/// channels as the full Kraus sum, so no sampling is involved anywhere.
class DensityMatrix {
  public:
    explicit DensityMatrix(int num_qubits)
        : n_(num_qubits), dim_(std::size_t{1} << num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
            throw CapacityError("density matrix supports 1 to " +
                                std::to_string(kMaxDensityQubits) + " qubits");
        }
        rho_.assign(dim_ * dim_, cplx{0.0, 0.0});
        rho_[0] = cplx{1.0, 0.0};  // |0..0><0..0|
    }

    int num_qubits() const { return n_; }
    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t r, std::size_t c) const { return rho_[r * dim_ + c]; }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i].real();
        return t;
    }

    /// rho -> U rho U^dagger for one gate.
    void apply_unitary(const GateOp& op) {
        left_apply([&op](StateVector& col) { apply_gate(col, op); });
        adjoint();
        left_apply([&op](StateVector& col) { apply_gate(col, op); });
        adjoint();
    }

    /// Exact depolarizing channel on 1 or 2 qubits:
    /// rho -> (1-p) rho + p/k * sum over non-identity Pauli strings P rho P.
    void apply_depolarizing(const std::vector<int>& qubits, double p) {
        if (qubits.empty() || qubits.size() > 2) {
            throw ArgumentError("depolarizing channel acts on 1 or 2 qubits");
        }
        if (p < 0.0 || p >= 1.0) {
            throw ArgumentError("depolarizing probability must be in [0, 1)");
        }
        if (p == 0.0) return;
        const std::vector<cplx> base = rho_;
        std::vector<cplx> acc(dim_ * dim_, cplx{0.0, 0.0});
        const int combos = qubits.size() == 1 ? 3 : 15;
        for (int combo = 1; combo <= combos; ++combo) {
            const int pa = qubits.size() == 1 ? combo : combo >> 2;
            const int pb = qubits.size() == 1 ? 0 : combo & 3;
            rho_ = base;
            auto apply_string = [&](StateVector& col) {
                if (pa != 0) apply_pauli(col, qubits[0], pa);
                if (pb != 0) apply_pauli(col, qubits[1], pb);
            };
            left_apply(apply_string);
            adjoint();
            left_apply(apply_string);
            adjoint();
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += rho_[i];
        }
        const double mix = p / static_cast<double>(combos);
        for (std::size_t i = 0; i < rho_.size(); ++i) {
            rho_[i] = (1.0 - p) * base[i] + mix * acc[i];
        }
    }

    std::pair<double, double> qubit_probabilities(int qubit) const {
        if (qubit < 0 || qubit >= n_) throw IndexError("qubit index out of range");
        const std::size_t bit = std::size_t{1} << qubit;
        double p0 = 0.0, p1 = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            const double d = rho_[i * dim_ + i].real();
            if (i & bit) {
                p1 += d;
            } else {
                p0 += d;
            }
        }
        return {p0, p1};
    }

  private:
    template <typename Fn>
    void left_apply(Fn&& fn) {
        StateVector col;
        col.num_qubits = n_;
        col.amplitudes.resize(dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            for (std::size_t r = 0; r < dim_; ++r) col.amplitudes[r] = rho_[r * dim_ + c];
            fn(col);
            for (std::size_t r = 0; r < dim_; ++r) rho_[r * dim_ + c] = col.amplitudes[r];
        }
    }

    void adjoint() {
        for (std::size_t r = 0; r < dim_; ++r) {
            rho_[r * dim_ + r] = std::conj(rho_[r * dim_ + r]);
            for (std::size_t c = r + 1; c < dim_; ++c) {
                const cplx a = std::conj(rho_[r * dim_ + c]);
                rho_[r * dim_ + c] = std::conj(rho_[c * dim_ + r]);
                rho_[c * dim_ + r] = a;
            }
        }
    }

    int n_;
    std::size_t dim_;
    std::vector<cplx> rho_;
};

/// Evolves the decomposed circuit with the exact depolarizing channel after
/// every gate (same insertion rule as the trajectory engine) and returns the
/// exact measurement marginals of `qubit`.
inline std::pair<double, double> exact_density_probabilities(const Circuit& circuit,
                                                             const NoiseModel& noise, int qubit) {
    if (circuit.num_qubits() > kMaxDensityQubits) {
        throw CapacityError("density oracle is limited to " +
                            std::to_string(kMaxDensityQubits) + " qubits");
    }
    const Circuit basis = decompose_to_basis(circuit);
    const double p1 = noise.p_1q();
    const double p2 = noise.p_2q();
    DensityMatrix rho(basis.num_qubits());
    for (const GateOp& op : basis.ops()) {
        rho.apply_unitary(op);
        if (op.kind == GateKind::kCNOT) {
            if (p2 > 0.0) rho.apply_depolarizing({op.targets[0], op.targets[1]}, p2);
        } else if (p1 > 0.0) {
            rho.apply_depolarizing({op.targets[0]}, p1);
        }
    }
    return rho.qubit_probabilities(qubit);
}

}  // namespace qbm
