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
 * Data-encoding circuits U_Phi(x).
 *
 * An encoder is either a single product layer (M, A1, A2) or the two-layer
 * entangler-enhanced form E U2 E U1, where U1 and U2 are product layers and
 * E is a CNOT or CZ ring over all qubits. With p copies, descriptor j is
 * loaded on qubits j, d + j, ..., (p - 1) d + j.
 *
 * Product layers, for the descriptor value x on a qubit:
 *   M  : RY(asin x), then RZ(acos x^2)   (requires |x| <= 1)
 *   A1 : RY(x)
 *   A2 : RY(x), then RZ(x)
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclreg/circuit.hpp"
#include "qclreg/statevector.hpp"

namespace qclreg {

enum class ProductLayer { M, A1, A2 };

struct EncoderSpec {
    ProductLayer first = ProductLayer::A1;
    std::optional<ProductLayer> second; // set iff entangler is set
    std::optional<RingGate> entangler;
    std::size_t copies = 1;           // p in {1, 2, 3}
    std::size_t descriptor_count = 1; // d

    /// Parses one of the 13 canonical ids ("M", "A2-A2-CNOT", "M-A1-CZ", ...).
    static EncoderSpec parse(std::string_view id, std::size_t copies,
                             std::size_t descriptor_count);

    std::string id() const;
    std::size_t qubits() const noexcept { return copies * descriptor_count; }
    bool uses_m() const noexcept;

    /// Throws ValidationError on a combination outside the canonical set or
    /// on p outside {1, 2, 3} or d == 0.
    void validate() const;
};

/// The 13 canonical encoder ids in table order.
std::span<const std::string_view> encoder_ids();

/// Throws DomainError naming the first descriptor that an M layer cannot
/// encode (|x| > 1), and ValidationError on non-finite input.
void check_encoder_domain(const EncoderSpec &spec, std::span<const double> x,
                          std::span<const std::string> names = {});

GateSequence build_encoder(const EncoderSpec &spec, std::span<const double> x);

} // namespace qclreg
