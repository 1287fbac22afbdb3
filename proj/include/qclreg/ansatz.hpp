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
 * Layered variational circuits U(theta) = prod_l U_l(theta_l) E_l.
 *
 * Each layer applies its entangler block first (CNOT ring, CZ ring or the
 * Ising time evolution) and then RX, RZ, RX on every qubit. Parameters are
 * laid out as theta[(l * n + q) * 3 + k].
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "qclreg/statevector.hpp"

namespace qclreg {

enum class AnsatzUnit { Ising, CNOT, CZ };

/// Tokens "ising", "cnot", "cz".
std::string_view to_string(AnsatzUnit unit);
AnsatzUnit parse_ansatz_unit(std::string_view token);

inline constexpr std::size_t kExactIsingMaxQubits = 12;
inline constexpr std::size_t kAutoTrotterSteps = 64;

struct IsingSettings {
    std::uint64_t seed = 0;
    double time = 10.0;
    /// Unset: exact evolution up to kExactIsingMaxQubits qubits, otherwise
    /// kAutoTrotterSteps first-order steps.
    std::optional<std::size_t> trotter_steps;
    double dense_budget_mb = kDefaultDenseBudgetMb;

    std::size_t resolved_steps(std::size_t qubits) const noexcept {
        if (trotter_steps) return *trotter_steps;
        return qubits <= kExactIsingMaxQubits ? 0 : kAutoTrotterSteps;
    }
};

struct AnsatzSpec {
    AnsatzUnit unit = AnsatzUnit::CNOT;
    std::size_t layers = 1;
    std::size_t qubits = 1;
    IsingSettings ising;

    void validate() const;
};

/// 3 n L.
std::size_t param_count(const AnsatzSpec &spec);
/// n L entangler slots for the CNOT and CZ units, 0 for the Ising unit. For
/// n = 1 the ring has no pair and each slot is the identity.
std::size_t twoqubit_count(const AnsatzSpec &spec);

/// Fields a_j then ring couplings J, each uniform in [-1, 1], from the
/// "ising" stream of the seed.
IsingCoefficients draw_ising_coefficients(std::size_t qubits, std::uint64_t seed);

/// Prepared ansatz. The Ising unit computes its evolution operator once and
/// shares it across all layers and all builds.
class Ansatz {
  public:
    explicit Ansatz(AnsatzSpec spec);

    const AnsatzSpec &spec() const noexcept { return spec_; }
    std::size_t parameter_count() const noexcept { return param_count(spec_); }
    const std::shared_ptr<const IsingEvolution> &evolution() const noexcept {
        return evolution_;
    }

    /// Throws ValidationError when theta does not hold 3 n L finite values.
    GateSequence build(std::span<const double> theta) const;

  private:
    AnsatzSpec spec_;
    std::shared_ptr<const IsingEvolution> evolution_;
};

GateSequence build_ansatz(const AnsatzSpec &spec, std::span<const double> theta);

} // namespace qclreg
