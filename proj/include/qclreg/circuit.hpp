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
/**
 * @file
 * Gate-sequence compilation for repeated execution.
 *
 * Adjacent single-qubit rotations acting on the same qubit are fused into one
 * 2x2 matrix; rotations on different qubits commute, so a rotation only has
 * to be flushed when a multi-qubit gate touches its qubit.
 */

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qclreg/statevector.hpp"

namespace qclreg {

enum class RingGate { CNOT, CZ };

/// Appends the entangler block prod_q G_{q,(q+1) mod n}, q = 0 first.
/// Empty for n = 1.
void append_entangler_ring(GateSequence &gates, RingGate kind, std::size_t n);

class CompiledCircuit {
  public:
    CompiledCircuit() = default;

    /// Validates every gate against an n-qubit register and fuses rotations.
    CompiledCircuit(std::span<const Gate> gates, std::size_t qubits);

    /// Appends more gates. Fusion does not cross append boundaries.
    void append(std::span<const Gate> gates);

    std::size_t qubits() const noexcept { return qubits_; }
    std::size_t op_count() const noexcept { return ops_.size(); }

    void run(StateVector &state) const;

  private:
    struct Single {
        std::size_t target;
        Matrix2 matrix;
    };
    struct Cnot {
        std::size_t control, target;
    };
    struct Cz {
        std::size_t a, b;
    };
    struct Evolution {
        std::shared_ptr<const IsingEvolution> ising;
    };
    using Op = std::variant<Single, Cnot, Cz, Evolution>;

    std::size_t qubits_ = 0;
    std::vector<Op> ops_;
};

} // namespace qclreg
