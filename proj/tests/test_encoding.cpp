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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qbm/encoding.hpp"
#include "qbm/statevector.hpp"
#include "test_helpers.hpp"

using namespace qbm;

TEST_CASE("normalize") {
    SECTION("uniform vector") {
        const NormalizedVector n = normalize({9, 9, 9, 9});
        CHECK(n.norm == Catch::Approx(18.0));
        for (double a : n.amplitudes) CHECK(a == Catch::Approx(0.5));
    }
    SECTION("reference vector [9,9,8,9]") {
        const NormalizedVector n = normalize({9, 9, 8, 9});
        CHECK(n.norm == Catch::Approx(std::sqrt(307.0)));
        CHECK(n.norm == Catch::Approx(17.5214).margin(1e-4));
        CHECK(n.amplitudes[2] == Catch::Approx(8.0 / std::sqrt(307.0)));
    }
    SECTION("zero vector is rejected") {
        CHECK_THROWS_AS(normalize({0, 0, 0, 0}), EncodingError);
    }
    SECTION("negative entries are rejected") {
        CHECK_THROWS_AS(normalize({3, -1}), ArgumentError);
    }
    SECTION("padding to the next power of two") {
        const NormalizedVector n = normalize({3, 4, 0});
        REQUIRE(n.amplitudes.size() == 4);
        CHECK(n.norm == Catch::Approx(5.0));
        CHECK(n.amplitudes[3] == 0.0);
        double sq = 0.0;
        for (double a : n.amplitudes) sq += a * a;
        CHECK(sq == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("unit normalization residual") {
        const NormalizedVector n = normalize({13, 7, 2, 11, 1, 5, 9, 6});
        double sq = 0.0;
        for (double a : n.amplitudes) sq += a * a;
        CHECK(std::abs(sq - 1.0) < 1e-12);
    }
}

TEST_CASE("property: normalization is scale covariant") {
    Rng rng(64);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> v(4);
        for (auto& x : v) x = 1 + static_cast<int>(rng.uniform_index(15));
        const int c = 2 + static_cast<int>(rng.uniform_index(9));
        std::vector<int> scaled(v);
        for (auto& x : scaled) x *= c;
        const NormalizedVector nv = normalize(v);
        const NormalizedVector ns = normalize(scaled);
        CHECK(ns.norm == Catch::Approx(c * nv.norm).epsilon(1e-12));
        for (std::size_t i = 0; i < nv.amplitudes.size(); ++i) {
            CHECK(ns.amplitudes[i] == Catch::Approx(nv.amplitudes[i]).margin(1e-12));
        }
    }
}

TEST_CASE("prepare_state_circuit") {
    SECTION("[1, 0] needs no gates") {
        const Circuit c = prepare_state_circuit({1.0, 0.0});
        CHECK(c.empty());
        const StateVector s = simulate(c);
        CHECK(std::abs(s.amplitudes[0] - cplx{1.0, 0.0}) < 1e-15);
    }
    SECTION("uniform pair is a single RY(pi/2)") {
        const double r = 1.0 / std::sqrt(2.0);
        const Circuit c = prepare_state_circuit({r, r});
        REQUIRE(c.size() == 1);
        CHECK(c.ops()[0].kind == GateKind::kRY);
        CHECK(c.ops()[0].params[0] == Catch::Approx(std::numbers::pi / 2.0));
        const StateVector s = simulate(c);
        CHECK(std::abs(s.amplitudes[0] - cplx{r, 0}) < 1e-12);
        CHECK(std::abs(s.amplitudes[1] - cplx{r, 0}) < 1e-12);
    }
    SECTION("uniform 4-vector") {
        const Circuit c = prepare_state_circuit({0.5, 0.5, 0.5, 0.5});
        const StateVector s = simulate(c);
        for (const cplx& a : s.amplitudes) CHECK(std::abs(a - cplx{0.5, 0.0}) < 1e-9);
    }
    SECTION("signed amplitudes are reachable") {
        const double r = 0.5;
        const Circuit c = prepare_state_circuit({r, -r, -r, r});
        const StateVector s = simulate(c);
        CHECK(s.amplitudes[0].real() == Catch::Approx(0.5).margin(1e-9));
        CHECK(s.amplitudes[1].real() == Catch::Approx(-0.5).margin(1e-9));
        CHECK(s.amplitudes[2].real() == Catch::Approx(-0.5).margin(1e-9));
        CHECK(s.amplitudes[3].real() == Catch::Approx(0.5).margin(1e-9));
    }
    SECTION("validation") {
        CHECK_THROWS_AS(prepare_state_circuit({0.9, 0.1}), ArgumentError);   // not unit norm
        CHECK_THROWS_AS(prepare_state_circuit({1.0, 0.0, 0.0}), ArgumentError);  // not 2^k
    }
    SECTION("only RY and CNOT appear") {
        const NormalizedVector n = normalize({3, 1, 4, 1, 5, 9, 2, 6});
        const Circuit c = prepare_state_circuit(n.amplitudes);
        for (const GateOp& op : c.ops()) {
            CHECK((op.kind == GateKind::kRY || op.kind == GateKind::kCNOT));
        }
    }
}

TEST_CASE("property: preparation round-trips random vectors") {
    Rng rng(7777);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = std::size_t{1} << (1 + rng.uniform_index(3));  // 2, 4, 8
        std::vector<int> v(len, 0);
        bool nonzero = false;
        for (auto& x : v) {
            x = static_cast<int>(rng.uniform_index(256));
            nonzero |= x != 0;
        }
        if (!nonzero) v[0] = 1;
        const NormalizedVector n = normalize(v);
        const StateVector s = simulate(prepare_state_circuit(n.amplitudes));
        for (std::size_t i = 0; i < s.dim(); ++i) {
            REQUIRE(std::abs(s.amplitudes[i] - cplx{n.amplitudes[i], 0.0}) < 1e-9);
        }
    }
}

TEST_CASE("build_pair_encoding") {
    SECTION("symmetric pair") {
        const PairEncoding enc = build_pair_encoding({9, 9, 9, 9}, {9, 9, 9, 9});
        CHECK(enc.z == Catch::Approx(648.0));
        const StateVector phi = simulate(enc.phi_circuit);
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(phi.amplitudes[0].real() == Catch::Approx(r).margin(1e-12));
        CHECK(phi.amplitudes[1].real() == Catch::Approx(-r).margin(1e-12));
        const StateVector psi = simulate(enc.psi_circuit);
        for (const cplx& a : psi.amplitudes) {
            CHECK(std::abs(a - cplx{1.0 / std::sqrt(8.0), 0.0}) < 1e-9);
        }
    }
    SECTION("reference pair has Z = 631") {
        const PairEncoding enc = build_pair_encoding({9, 9, 9, 9}, {9, 9, 8, 9});
        CHECK(enc.z == Catch::Approx(631.0));
        CHECK(enc.a.norm == Catch::Approx(18.0));
        CHECK(enc.b.norm == Catch::Approx(std::sqrt(307.0)));
    }
    SECTION("orthogonal unit vectors") {
        const PairEncoding enc = build_pair_encoding({1, 0}, {0, 1});
        CHECK(enc.z == Catch::Approx(2.0));
        const StateVector phi = simulate(enc.phi_circuit);
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(phi.amplitudes[0].real() == Catch::Approx(r).margin(1e-12));
        CHECK(phi.amplitudes[1].real() == Catch::Approx(-r).margin(1e-12));
    }
    SECTION("psi is the balanced label superposition of |A> and |B>") {
        const std::vector<int> a{3, 1, 4, 1}, b{1, 5, 9, 2};
        const PairEncoding enc = build_pair_encoding(a, b);
        const NormalizedVector na = normalize(a), nb = normalize(b);
        const StateVector psi = simulate(enc.psi_circuit);
        REQUIRE(psi.dim() == 8);
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(psi.amplitudes[i] - cplx{r * na.amplitudes[i], 0.0}) < 1e-9);
            CHECK(std::abs(psi.amplitudes[4 + i] - cplx{r * nb.amplitudes[i], 0.0}) < 1e-9);
        }
        // Label-qubit marginal is exactly balanced.
        const auto [p0, p1] = qubit_probabilities(psi, 2);
        CHECK(p0 == Catch::Approx(0.5).margin(1e-10));
        CHECK(p1 == Catch::Approx(0.5).margin(1e-10));
    }
    SECTION("validation") {
        CHECK_THROWS_AS(build_pair_encoding({1, 2}, {1, 2, 3}), ShapeError);
        CHECK_THROWS_AS(build_pair_encoding({0, 0}, {1, 2}), EncodingError);
        CHECK_THROWS_AS(build_pair_encoding({1, 2}, {0, 0}), EncodingError);
    }
}

TEST_CASE("block vectors") {
    const BlockVector bv = make_block_vector({3, 4});
    CHECK(bv.norm == Catch::Approx(5.0));
    CHECK_THROWS_AS(make_block_vector({-1, 2}), ArgumentError);
}
