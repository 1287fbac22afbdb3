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

#include "qclreg/circuit.hpp"

#include <optional>
#include <string>

#include "qclreg/error.hpp"

namespace qclreg {

void append_entangler_ring(GateSequence &gates, RingGate kind, std::size_t n) {
    if (n < 2) {
        return;
    }
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t next = (q + 1) % n;
        gates.push_back(kind == RingGate::CNOT ? Gate::cnot(q, next) : Gate::cz(q, next));
    }
}

CompiledCircuit::CompiledCircuit(std::span<const Gate> gates, std::size_t qubits)
    : qubits_(qubits) {
    append(gates);
}

void CompiledCircuit::append(std::span<const Gate> gates) {
    std::vector<std::optional<Matrix2>> pending(qubits_);
    auto flush = [&](std::size_t q) {
        if (pending[q]) {
            ops_.emplace_back(Single{q, *pending[q]});
            pending[q].reset();
        }
    };

    for (const auto &g : gates) {
        validate_gate(g, qubits_);
        switch (g.kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ: {
            const Matrix2 m = g.kind == GateKind::RX   ? rx_matrix(g.angle)
                              : g.kind == GateKind::RY ? ry_matrix(g.angle)
                                                       : rz_matrix(g.angle);
            auto &slot = pending[g.target];
            slot = slot ? multiply(m, *slot) : m;
            break;
        }
        case GateKind::CNOT:
            flush(g.control);
            flush(g.target);
            ops_.emplace_back(Cnot{g.control, g.target});
            break;
        case GateKind::CZ:
            flush(g.control);
            flush(g.target);
            ops_.emplace_back(Cz{g.control, g.target});
            break;
        case GateKind::IsingEvolution:
            for (std::size_t q = 0; q < qubits_; ++q) {
                flush(q);
            }
            ops_.emplace_back(Evolution{g.ising});
            break;
        }
    }
    for (std::size_t q = 0; q < qubits_; ++q) {
        flush(q);
    }
}

void CompiledCircuit::run(StateVector &state) const {
    if (state.qubits() != qubits_) {
        throw ValidationError("circuit compiled for " + std::to_string(qubits_) +
                              " qubits run on " + std::to_string(state.qubits()));
    }
    for (const auto &op : ops_) {
        if (const auto *s = std::get_if<Single>(&op)) {
            apply_matrix2(state, s->target, s->matrix);
        } else if (const auto *c = std::get_if<Cnot>(&op)) {
            apply_cnot(state, c->control, c->target);
        } else if (const auto *z = std::get_if<Cz>(&op)) {
            apply_cz(state, z->a, z->b);
        } else {
            std::get<Evolution>(op).ising->apply(state);
        }
    }
}

} // namespace qclreg
