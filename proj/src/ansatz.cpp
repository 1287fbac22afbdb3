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

#include "qclreg/ansatz.hpp"

#include <cmath>
#include <string>

#include "qclreg/circuit.hpp"
#include "qclreg/error.hpp"
#include "qclreg/rng.hpp"

namespace qclreg {

std::string_view to_string(AnsatzUnit unit) {
    switch (unit) {
    case AnsatzUnit::Ising:
        return "ising";
    case AnsatzUnit::CNOT:
        return "cnot";
    case AnsatzUnit::CZ:
        return "cz";
    }
    return "?";
}

AnsatzUnit parse_ansatz_unit(std::string_view token) {
    if (token == "ising") return AnsatzUnit::Ising;
    if (token == "cnot") return AnsatzUnit::CNOT;
    if (token == "cz") return AnsatzUnit::CZ;
    throw ValidationError("unknown ansatz unit '" + std::string(token) +
                          "' (expected ising, cnot or cz)");
}

void AnsatzSpec::validate() const {
    if (layers < 1) {
        throw ValidationError("ansatz needs at least one layer");
    }
    if (qubits < 1 || qubits > kDefaultMaxQubits) {
        throw CapacityError("ansatz qubit count " + std::to_string(qubits) + " outside [1, " +
                            std::to_string(kDefaultMaxQubits) + "]");
    }
    if (unit == AnsatzUnit::Ising && !std::isfinite(ising.time)) {
        throw ValidationError("non-finite Ising evolution time");
    }
}

std::size_t param_count(const AnsatzSpec &spec) { return 3 * spec.qubits * spec.layers; }

std::size_t twoqubit_count(const AnsatzSpec &spec) {
    return spec.unit == AnsatzUnit::Ising ? 0 : spec.qubits * spec.layers;
}

IsingCoefficients draw_ising_coefficients(std::size_t qubits, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "ising");
    IsingCoefficients c;
    for (std::size_t j = 0; j < qubits; ++j) {
        c.fields.push_back(rng.uniform(-1.0, 1.0));
    }
    for (std::size_t p = 0; p < ring_pairs(qubits).size(); ++p) {
        c.couplings.push_back(rng.uniform(-1.0, 1.0));
    }
    return c;
}

Ansatz::Ansatz(AnsatzSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    if (spec_.unit == AnsatzUnit::Ising) {
        evolution_ = std::make_shared<const IsingEvolution>(
            spec_.qubits, draw_ising_coefficients(spec_.qubits, spec_.ising.seed),
            spec_.ising.time, spec_.ising.resolved_steps(spec_.qubits),
            spec_.ising.dense_budget_mb);
    }
}

GateSequence Ansatz::build(std::span<const double> theta) const {
    const std::size_t n = spec_.qubits;
    const std::size_t expected = parameter_count();
    if (theta.size() != expected) {
        throw ValidationError("ansatz expects 3nL = " + std::to_string(expected) +
                              " parameters, got " + std::to_string(theta.size()));
    }
    GateSequence gates;
    gates.reserve(spec_.layers * (4 * n + 1));
    for (std::size_t l = 0; l < spec_.layers; ++l) {
        switch (spec_.unit) {
        case AnsatzUnit::Ising:
            gates.push_back(Gate::evolution(evolution_));
            break;
        case AnsatzUnit::CNOT:
            append_entangler_ring(gates, RingGate::CNOT, n);
            break;
        case AnsatzUnit::CZ:
            append_entangler_ring(gates, RingGate::CZ, n);
            break;
        }
        for (std::size_t q = 0; q < n; ++q) {
            const double *t = theta.data() + (l * n + q) * 3;
            if (!std::isfinite(t[0]) || !std::isfinite(t[1]) || !std::isfinite(t[2])) {
                throw ValidationError("non-finite ansatz parameter in layer " +
                                      std::to_string(l) + ", qubit " + std::to_string(q));
            }
            gates.push_back(Gate::rx(q, t[0]));
            gates.push_back(Gate::rz(q, t[1]));
            gates.push_back(Gate::rx(q, t[2]));
        }
    }
    return gates;
}

GateSequence build_ansatz(const AnsatzSpec &spec, std::span<const double> theta) {
    return Ansatz(spec).build(theta);
}

} // namespace qclreg
