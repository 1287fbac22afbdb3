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
#include <numbers>
#include <set>
#include <string>

#include "qclreg/encoders.hpp"
#include "qclreg/error.hpp"
#include "qclreg/rng.hpp"
#include "support/dense_oracle.hpp"

using namespace qclreg;

namespace {

StateVector encode(const EncoderSpec &spec, std::span<const double> x) {
    auto s = StateVector::zero(spec.qubits());
    apply_gates(s, build_encoder(spec, x));
    return s;
}

std::size_t count_kind(const GateSequence &gates, GateKind kind) {
    std::size_t c = 0;
    for (const auto &g : gates) c += g.kind == kind;
    return c;
}

std::vector<double> random_inputs(Rng &rng, std::size_t d) {
    std::vector<double> x(d);
    for (auto &v : x) v = rng.uniform(-0.95, 0.95);
    return x;
}

} // namespace

TEST_CASE("all 13 encoder ids parse and round-trip") {
    const auto ids = encoder_ids();
    REQUIRE(ids.size() == 13);
    std::set<std::string> seen;
    for (auto id : ids) {
        const auto spec = EncoderSpec::parse(id, 2, 3);
        CHECK(spec.id() == id);
        CHECK(spec.qubits() == 6);
        seen.insert(spec.id());
    }
    CHECK(seen.size() == 13);
    CHECK(ids.front() == "M");
    CHECK(EncoderSpec::parse("M-A2-CZ", 1, 1).uses_m());
    CHECK_FALSE(EncoderSpec::parse("A2-A2-CZ", 1, 1).uses_m());
}

TEST_CASE("non-canonical encoder specs are rejected") {
    CHECK_THROWS_AS(EncoderSpec::parse("A1-M-CNOT", 1, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("A2-A1-CZ", 1, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("A3", 1, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("M-M-SWAP", 1, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("M", 0, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("M", 4, 2), ValidationError);
    CHECK_THROWS_AS(EncoderSpec::parse("M", 1, 0), ValidationError);
}

TEST_CASE("M encoder on zero inputs leaves every Z expectation at 1") {
    const auto spec = EncoderSpec::parse("M", 1, 5);
    const std::vector<double> x(5, 0.0);
    const auto s = encode(spec, x);
    for (std::size_t q = 0; q < 5; ++q) CHECK(expectation_z(s, q) == doctest::Approx(1.0));
}

TEST_CASE("A1 accepts angles outside [-1, 1]") {
    const auto spec = EncoderSpec::parse("A1", 1, 1);
    const std::vector<double> x{std::numbers::pi};
    CHECK_NOTHROW(check_encoder_domain(spec, x));
    const auto s = encode(spec, x);
    CHECK(expectation_z(s, 0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("gate counts for A2-A2-CNOT with two copies of five descriptors") {
    const auto spec = EncoderSpec::parse("A2-A2-CNOT", 2, 5);
    const std::vector<double> x{0.1, 0.2, 0.3, 0.4, 0.5};
    const auto gates = build_encoder(spec, x);
    REQUIRE(gates.size() == 60);
    const std::size_t rotations =
        count_kind(gates, GateKind::RY) + count_kind(gates, GateKind::RZ);
    CHECK(rotations == 40);
    CHECK(count_kind(gates, GateKind::CNOT) == 20);
    // Layout: 20 rotations, 10 CNOTs, 20 rotations, 10 CNOTs.
    for (std::size_t i = 0; i < 60; ++i) {
        const bool ring = (i >= 20 && i < 30) || i >= 50;
        CHECK((gates[i].kind == GateKind::CNOT) == ring);
    }
    // Copy layout: descriptor j sits on qubits j and 5 + j.
    CHECK(gates[0].target == 0);
    CHECK(gates[0].angle == 0.1);
    CHECK(gates[10].target == 5);
    CHECK(gates[10].angle == 0.1);
}

TEST_CASE("M encoder gate angles") {
    const auto spec = EncoderSpec::parse("M", 1, 1);
    const std::vector<double> x{0.5};
    const auto gates = build_encoder(spec, x);
    REQUIRE(gates.size() == 2);
    CHECK(gates[0].kind == GateKind::RY);
    CHECK(gates[0].angle == std::asin(0.5));
    CHECK(gates[1].kind == GateKind::RZ);
    CHECK(gates[1].angle == std::acos(0.25));
}

TEST_CASE("M-type domain error names the descriptor") {
    const auto spec = EncoderSpec::parse("M-A1-CZ", 1, 2);
    const std::vector<double> x{0.3, -1.2};
    const std::vector<std::string> names{"logKow", "pKa"};
    try {
        check_encoder_domain(spec, x, names);
        FAIL("expected DomainError");
    } catch (const DomainError &e) {
        CHECK(std::string(e.what()).find("pKa") != std::string::npos);
    }
    CHECK_THROWS_AS(build_encoder(spec, x), DomainError);
    CHECK_NOTHROW(build_encoder(EncoderSpec::parse("A2-A2-CZ", 1, 2), x));
    const std::vector<double> bad{0.1, std::nan("")};
    CHECK_THROWS_AS(build_encoder(EncoderSpec::parse("A1", 1, 2), bad), ValidationError);
    const std::vector<double> short_x{0.1};
    CHECK_THROWS_AS(build_encoder(EncoderSpec::parse("A1", 1, 2), short_x), ValidationError);
}

TEST_CASE("product encoders match per-qubit single-qubit simulation") {
    Rng rng(4);
    for (std::string_view id : {"M", "A1", "A2"}) {
        const auto spec = EncoderSpec::parse(id, 1, 4);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_inputs(rng, 4);
            const auto s = encode(spec, x);
            for (std::size_t q = 0; q < 4; ++q) {
                const auto single = encode(EncoderSpec::parse(id, 1, 1), std::span(&x[q], 1));
                CHECK(std::abs(expectation_z(s, q) - expectation_z(single, 0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("copies without an entangler carry identical expectations") {
    Rng rng(9);
    for (std::string_view id : {"M", "A1", "A2"}) {
        for (std::size_t p : {2u, 3u}) {
            const auto spec = EncoderSpec::parse(id, p, 2);
            const auto x = random_inputs(rng, 2);
            const auto s = encode(spec, x);
            for (std::size_t c = 1; c < p; ++c) {
                for (std::size_t j = 0; j < 2; ++j) {
                    CHECK(expectation_z(s, j) == doctest::Approx(expectation_z(s, c * 2 + j)));
                }
            }
        }
    }
}

TEST_CASE("encoders are deterministic") {
    for (auto id : encoder_ids()) {
        const auto spec = EncoderSpec::parse(id, 2, 2);
        const std::vector<double> x{0.25, -0.7};
        const auto a = build_encoder(spec, x);
        const auto b = build_encoder(spec, x);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].kind == b[i].kind);
            CHECK(a[i].target == b[i].target);
            CHECK(a[i].control == b[i].control);
            CHECK(a[i].angle == b[i].angle);
        }
    }
}

TEST_CASE("entangled encoders produce correlated qubits") {
    Rng rng(12);
    for (auto id : encoder_ids()) {
        const auto spec = EncoderSpec::parse(id, 1, 3);
        if (!spec.entangler) continue;
        double strongest = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_inputs(rng, 3);
            const auto psi = oracle::to_vec(encode(spec, x));
            const auto z0 = oracle::on_qubit(oracle::pauli_z(), 0, 3);
            const auto z1 = oracle::on_qubit(oracle::pauli_z(), 1, 3);
            const oracle::Mat z01 = z0 * z1;
            const double cov =
                oracle::expect(psi, z01) - oracle::expect(psi, z0) * oracle::expect(psi, z1);
            strongest = std::max(strongest, std::abs(cov));
        }
        INFO(std::string(id));
        CHECK(strongest > 1e-3);
    }
    // Without an entangler the same statistic vanishes.
    const auto spec = EncoderSpec::parse("A2", 1, 3);
    const auto x = random_inputs(rng, 3);
    const auto psi = oracle::to_vec(encode(spec, x));
    const auto z0 = oracle::on_qubit(oracle::pauli_z(), 0, 3);
    const auto z1 = oracle::on_qubit(oracle::pauli_z(), 1, 3);
    const oracle::Mat z01 = z0 * z1;
    CHECK(std::abs(oracle::expect(psi, z01) - oracle::expect(psi, z0) * oracle::expect(psi, z1)) <
          1e-12);
}
