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

#include "qclreg/encoders.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qclreg/error.hpp"

namespace qclreg {

namespace {

constexpr std::array<std::string_view, 13> kIds = {
    "M",          "A1",         "A2",         "M-M-CNOT",   "A1-A1-CNOT",
    "A2-A2-CNOT", "M-A1-CNOT",  "M-A2-CNOT",  "M-M-CZ",     "A1-A1-CZ",
    "A2-A2-CZ",   "M-A1-CZ",    "M-A2-CZ",
};

std::string_view layer_name(ProductLayer l) {
    switch (l) {
    case ProductLayer::M:
        return "M";
    case ProductLayer::A1:
        return "A1";
    case ProductLayer::A2:
        return "A2";
    }
    return "?";
}

std::optional<ProductLayer> parse_layer(std::string_view s) {
    if (s == "M") return ProductLayer::M;
    if (s == "A1") return ProductLayer::A1;
    if (s == "A2") return ProductLayer::A2;
    return std::nullopt;
}

void append_layer(GateSequence &gates, ProductLayer layer, const EncoderSpec &spec,
                  std::span<const double> x) {
    const std::size_t d = spec.descriptor_count;
    for (std::size_t q = 0; q < spec.qubits(); ++q) {
        const double v = x[q % d];
        switch (layer) {
        case ProductLayer::M:
            gates.push_back(Gate::ry(q, std::asin(v)));
            gates.push_back(Gate::rz(q, std::acos(v * v)));
            break;
        case ProductLayer::A1:
            gates.push_back(Gate::ry(q, v));
            break;
        case ProductLayer::A2:
            gates.push_back(Gate::ry(q, v));
            gates.push_back(Gate::rz(q, v));
            break;
        }
    }
}

} // namespace

std::span<const std::string_view> encoder_ids() { return kIds; }

EncoderSpec EncoderSpec::parse(std::string_view id, std::size_t copies,
                               std::size_t descriptor_count) {
    EncoderSpec spec;
    spec.copies = copies;
    spec.descriptor_count = descriptor_count;

    bool canonical = false;
    for (auto k : kIds) {
        canonical = canonical || k == id;
    }
    if (!canonical) {
        throw ValidationError("unknown encoder id '" + std::string(id) + "'");
    }

    const auto dash1 = id.find('-');
    if (dash1 == std::string_view::npos) {
        spec.first = *parse_layer(id);
    } else {
        const auto dash2 = id.find('-', dash1 + 1);
        spec.first = *parse_layer(id.substr(0, dash1));
        spec.second = *parse_layer(id.substr(dash1 + 1, dash2 - dash1 - 1));
        spec.entangler = id.substr(dash2 + 1) == "CNOT" ? RingGate::CNOT : RingGate::CZ;
    }
    spec.validate();
    return spec;
}

std::string EncoderSpec::id() const {
    std::string s(layer_name(first));
    if (entangler) {
        s += '-';
        s += layer_name(second.value_or(first));
        s += *entangler == RingGate::CNOT ? "-CNOT" : "-CZ";
    }
    return s;
}

bool EncoderSpec::uses_m() const noexcept {
    return first == ProductLayer::M || (second && *second == ProductLayer::M);
}

void EncoderSpec::validate() const {
    if (copies < 1 || copies > 3) {
        throw ValidationError("encoder copies must be 1, 2 or 3 (got " +
                              std::to_string(copies) + ")");
    }
    if (descriptor_count < 1) {
        throw ValidationError("encoder needs at least one descriptor");
    }
    if (second.has_value() != entangler.has_value()) {
        throw ValidationError("encoder second layer and entangler must be set together");
    }
    const std::string me = id();
    bool canonical = false;
    for (auto k : kIds) {
        canonical = canonical || k == me;
    }
    if (!canonical) {
        throw ValidationError("encoder combination '" + me + "' is not a supported circuit");
    }
}

void check_encoder_domain(const EncoderSpec &spec, std::span<const double> x,
                          std::span<const std::string> names) {
    if (x.size() != spec.descriptor_count) {
        throw ValidationError("encoder expects " + std::to_string(spec.descriptor_count) +
                              " descriptors, got " + std::to_string(x.size()));
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const std::string label =
            j < names.size() ? "'" + names[j] + "'" : "#" + std::to_string(j);
        if (!std::isfinite(x[j])) {
            throw ValidationError("descriptor " + label + " is not finite");
        }
        if (spec.uses_m() && std::abs(x[j]) > 1.0) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "descriptor " << label << " = " << x[j] << " outside [-1, 1] required by "
                << spec.id() << " encoder";
            throw DomainError(msg.str());
        }
    }
}

GateSequence build_encoder(const EncoderSpec &spec, std::span<const double> x) {
    spec.validate();
    check_encoder_domain(spec, x);
    const std::size_t n = spec.qubits();
    GateSequence gates;
    append_layer(gates, spec.first, spec, x);
    if (spec.entangler) {
        append_entangler_ring(gates, *spec.entangler, n);
        append_layer(gates, *spec.second, spec, x);
        append_entangler_ring(gates, *spec.entangler, n);
    }
    return gates;
}

} // namespace qclreg
