// Copyright 2026 The qclreg Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "qclreg/ansatz.hpp"
#include "qclreg/circuit.hpp"
#include "qclreg/error.hpp"
#include "qclreg/rng.hpp"
#include "support/dense_oracle.hpp"

using namespace qclreg;

namespace {

std::vector<double> random_theta(Rng &rng, std::size_t count) {
    std::vector<double> theta(count);
    for (auto &t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);
    return theta;
}

} // namespace

TEST_CASE("unit tokens") {
    CHECK(parse_ansatz_unit("ising") == AnsatzUnit::Ising);
    CHECK(parse_ansatz_unit("cnot") == AnsatzUnit::CNOT);
    CHECK(parse_ansatz_unit("cz") == AnsatzUnit::CZ);
    CHECK(to_string(AnsatzUnit::CZ) == "cz");
    CHECK_THROWS_AS(parse_ansatz_unit("swap"), ValidationError);
}

TEST_CASE("parameter and two-qubit gate counts") {
    CHECK(param_count({AnsatzUnit::CNOT, 10, 5, {}}) == 150);
    CHECK(twoqubit_count({AnsatzUnit::CNOT, 10, 5, {}}) == 50);
    CHECK(param_count({AnsatzUnit::CZ, 10, 10, {}}) == 300);
    CHECK(twoqubit_count({AnsatzUnit::CZ, 10, 10, {}}) == 100);
    CHECK(param_count({AnsatzUnit::CNOT, 3, 5, {}}) == 45);
    CHECK(param_count({AnsatzUnit::CNOT, 12, 15, {}}) == 540);
    CHECK(twoqubit_count({AnsatzUnit::CNOT, 12, 15, {}}) == 180);
    CHECK(param_count({AnsatzUnit::Ising, 9, 10, {}}) == 270);
    CHECK(twoqubit_count({AnsatzUnit::Ising, 9, 10, {}}) == 0);
}

TEST_CASE("built circuits contain the counted gates") {
    Rng rng(1);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t layers = 1; layers <= 4; ++layers) {
            for (auto unit : {AnsatzUnit::CNOT, AnsatzUnit::CZ}) {
                const AnsatzSpec spec{unit, layers, n, {}};
                const auto gates = build_ansatz(spec, random_theta(rng, param_count(spec)));
                std::size_t rot = 0, two = 0;
                for (const auto &g : gates) {
                    if (g.kind == GateKind::CNOT || g.kind == GateKind::CZ) ++two;
                    else ++rot;
                }
                CHECK(rot == param_count(spec));
                CHECK(two == twoqubit_count(spec));
            }
        }
    }
}

TEST_CASE("layer layout: entangler first, then RX RZ RX per qubit") {
    const AnsatzSpec spec{AnsatzUnit::CZ, 2, 3, {}};
    std::vector<double> theta(18);
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = 0.01 * static_cast<double>(i + 1);
    const auto gates = build_ansatz(spec, theta);
    REQUIRE(gates.size() == 24);
    for (std::size_t l = 0; l < 2; ++l) {
        const std::size_t base = l * 12;
        for (std::size_t i = 0; i < 3; ++i) CHECK(gates[base + i].kind == GateKind::CZ);
        for (std::size_t q = 0; q < 3; ++q) {
            for (std::size_t k = 0; k < 3; ++k) {
                const auto &g = gates[base + 3 + q * 3 + k];
                CHECK(g.kind == (k == 1 ? GateKind::RZ : GateKind::RX));
                CHECK(g.target == q);
                CHECK(g.angle == theta[(l * 3 + q) * 3 + k]);
            }
        }
    }
}

TEST_CASE("zero angles leave |0...0> unchanged under CNOT rings") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const AnsatzSpec spec{AnsatzUnit::CNOT, 4, n, {}};
        const std::vector<double> theta(param_count(spec), 0.0);
        auto s = StateVector::zero(n);
        apply_gates(s, build_ansatz(spec, theta));
        for (std::size_t q = 0; q < n; ++q) CHECK(expectation_z(s, q) == 1.0);
    }
}

TEST_CASE("wrong parameter length reports the expected size") {
    const AnsatzSpec spec{AnsatzUnit::CNOT, 2, 4, {}};
    const std::vector<double> theta(23, 0.0);
    try {
        build_ansatz(spec, theta);
        FAIL("expected ValidationError");
    } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("24") != std::string::npos);
    }
    std::vector<double> bad(24, 0.0);
    bad[5] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(build_ansatz(spec, bad), ValidationError);
    CHECK_THROWS_AS(Ansatz(AnsatzSpec{AnsatzUnit::CNOT, 0, 4, {}}), ValidationError);
}

TEST_CASE("Ising coefficients are deterministic and in range") {
    const auto a = draw_ising_coefficients(6, 42);
    const auto b = draw_ising_coefficients(6, 42);
    const auto c = draw_ising_coefficients(6, 43);
    REQUIRE(a.fields.size() == 6);
    REQUIRE(a.couplings.size() == 6);
    CHECK(std::memcmp(a.fields.data(), b.fields.data(), 6 * sizeof(double)) == 0);
    CHECK(std::memcmp(a.couplings.data(), b.couplings.data(), 6 * sizeof(double)) == 0);
    CHECK(a.fields != c.fields);
    for (double v : a.fields) CHECK(std::abs(v) <= 1.0);
    for (double v : a.couplings) CHECK(std::abs(v) <= 1.0);
}

TEST_CASE("Ising unit shares one evolution across layers") {
    AnsatzSpec spec{AnsatzUnit::Ising, 3, 3, {}};
    spec.ising.seed = 5;
    spec.ising.time = 2.0;
    Ansatz ansatz(spec);
    Rng rng(2);
    const auto gates = ansatz.build(random_theta(rng, 27));
    std::size_t evolutions = 0;
    for (const auto &g : gates) {
        if (g.kind == GateKind::IsingEvolution) {
            ++evolutions;
            CHECK(g.ising == ansatz.evolution());
        }
    }
    CHECK(evolutions == 3);

    // Layer 0 entangler equals the dense exponential.
    std::vector<double> zero(27, 0.0);
    auto s = StateVector::zero(3);
    apply_gate(s, Gate::ry(1, 0.8));
    const auto before = oracle::to_vec(s);
    spec.layers = 1;
    apply_gates(s, build_ansatz(spec, std::span(zero).first(9)));
    const oracle::Vec expected =
        oracle::ising_unitary(draw_ising_coefficients(3, 5), 2.0, 3) * before;
    CHECK(oracle::max_deviation(s, expected) < 1e-10);
}

TEST_CASE("Trotter step resolution") {
    IsingSettings settings;
    CHECK(settings.resolved_steps(12) == 0);
    CHECK(settings.resolved_steps(13) == kAutoTrotterSteps);
    settings.trotter_steps = 7;
    CHECK(settings.resolved_steps(3) == 7);
}

TEST_CASE("appending a zero-angle layer adds exactly one entangler block") {
    Rng rng(21);
    for (auto unit : {AnsatzUnit::CNOT, AnsatzUnit::CZ, AnsatzUnit::Ising}) {
        const std::size_t n = 3;
        AnsatzSpec spec{unit, 2, n, {}};
        spec.ising.seed = 8;
        auto theta = random_theta(rng, param_count(spec));
        auto base = StateVector::zero(n);
        apply_gate(base, Gate::ry(0, 1.0));
        apply_gate(base, Gate::rx(2, 0.4));
        auto a = base;
        Ansatz short_ansatz(spec);
        apply_gates(a, short_ansatz.build(theta));
        // Reference: shorter circuit followed by one bare entangler block.
        GateSequence block;
        if (unit == AnsatzUnit::Ising) {
            block.push_back(Gate::evolution(short_ansatz.evolution()));
        } else {
            append_entangler_ring(block, unit == AnsatzUnit::CNOT ? RingGate::CNOT : RingGate::CZ,
                                  n);
        }
        apply_gates(a, block);

        spec.layers = 3;
        theta.resize(param_count(spec), 0.0);
        auto b = base;
        apply_gates(b, build_ansatz(spec, theta));
        CHECK(oracle::max_deviation(a, oracle::to_vec(b)) < 1e-12);
    }
}

TEST_CASE("property: ansatz circuits preserve the norm and match the oracle") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const auto unit = static_cast<AnsatzUnit>(rng.below(3));
        AnsatzSpec spec{unit, 1 + rng.below(3), n, {}};
        spec.ising.seed = static_cast<std::uint64_t>(trial);
        const auto gates = build_ansatz(spec, random_theta(rng, param_count(spec)));
        auto s = StateVector::zero(n);
        apply_gates(s, gates);
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-10);
        const oracle::Vec expected = oracle::circuit_matrix(gates, n) * oracle::zero_state(n);
        CHECK(oracle::max_deviation(s, expected) < 1e-10);
    }
}
