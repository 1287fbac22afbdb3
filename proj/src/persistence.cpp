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

#include "qclreg/persistence.hpp"

#include <sstream>

#include "qclreg/error.hpp"
#include "qclreg/text.hpp"

namespace qclreg {

namespace {

std::string join_names(const std::vector<std::string> &names) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ',';
        s += names[i];
    }
    return s;
}

std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    for (auto part : split(text, ',')) out.emplace_back(trim(part));
    return out;
}

std::vector<double> ranges_min(const std::vector<Range> &r) {
    std::vector<double> v;
    for (const auto &x : r) v.push_back(x.min);
    return v;
}

std::vector<double> ranges_max(const std::vector<Range> &r) {
    std::vector<double> v;
    for (const auto &x : r) v.push_back(x.max);
    return v;
}

std::vector<Range> to_ranges(const std::vector<double> &lo, const std::vector<double> &hi) {
    if (lo.size() != hi.size()) {
        throw ValidationError("model file: feature_min and feature_max lengths differ");
    }
    std::vector<Range> out;
    for (std::size_t i = 0; i < lo.size(); ++i) out.push_back({lo[i], hi[i]});
    return out;
}

void put(std::ostringstream &out, std::string_view key, const std::string &value) {
    out << key << " = " << value << '\n';
}

void put(std::ostringstream &out, std::string_view key, std::span<const double> values) {
    put(out, key, join_doubles(values));
}

std::vector<double> doubles_or_empty(const KeyValueTable &kv, const std::string &key) {
    const auto raw = kv.get(key);
    if (!raw || trim(*raw).empty()) return {};
    return kv.get_doubles(key, {});
}

} // namespace

std::string_view StoredModel::kind() const noexcept {
    switch (model.index()) {
    case 0:
        return "qml";
    case 1:
        return "mlr";
    default:
        return "rbf";
    }
}

double StoredModel::predict(std::span<const double> x_raw) const {
    if (x_raw.size() != descriptor_names.size()) {
        throw ValidationError("model expects " + std::to_string(descriptor_names.size()) +
                              " descriptors, got " + std::to_string(x_raw.size()));
    }
    return std::visit(
        [&](const auto &m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, QmlModel>) {
                return qclreg::predict(m, x_raw);
            } else {
                return m.predict(x_raw);
            }
        },
        model);
}

std::string serialize_model(const StoredModel &stored) {
    std::ostringstream out;
    out << kModelMagic << ' ' << kModelFormatVersion << '\n';
    put(out, "kind", std::string(stored.kind()));
    put(out, "descriptors", join_names(stored.descriptor_names));

    if (const auto *q = std::get_if<QmlModel>(&stored.model)) {
        put(out, "seed", std::to_string(q->seed));
        put(out, "encoder.id", q->encoder.id());
        put(out, "encoder.copies", std::to_string(q->encoder.copies));
        put(out, "ansatz.unit", std::string(to_string(q->ansatz.unit)));
        put(out, "ansatz.layers", std::to_string(q->ansatz.layers));
        put(out, "ansatz.ising_seed", std::to_string(q->ansatz.ising.seed));
        put(out, "ansatz.ising_time", format_double17(q->ansatz.ising.time));
        put(out, "ansatz.trotter_steps",
            q->ansatz.ising.trotter_steps ? std::to_string(*q->ansatz.ising.trotter_steps)
                                          : std::string("auto"));
        put(out, "readout.mode", std::string(to_string(q->readout.mode)));
        put(out, "readout.qubit", std::to_string(q->readout.measured_qubit));
        put(out, "readout.m", std::to_string(q->readout.measured_count));
        put(out, "readout.scale", format_double17(q->readout.scale));
        put(out, "normalization.feature_min", ranges_min(q->normalization.features));
        put(out, "normalization.feature_max", ranges_max(q->normalization.features));
        put(out, "normalization.target_min", format_double17(q->normalization.target.min));
        put(out, "normalization.target_max", format_double17(q->normalization.target.max));
        put(out, "theta", q->theta);
        put(out, "beta", q->beta);
    } else if (const auto *m = std::get_if<MlrModel>(&stored.model)) {
        put(out, "mlr.weights", m->weights);
        put(out, "mlr.intercept", format_double17(m->intercept));
    } else {
        const auto &r = std::get<RbfModel>(stored.model);
        put(out, "rbf.feature_min", ranges_min(r.feature_ranges));
        put(out, "rbf.feature_max", ranges_max(r.feature_ranges));
        put(out, "rbf.centers", r.centers);
        put(out, "rbf.width", format_double17(r.width));
        put(out, "rbf.ridge", format_double17(r.ridge));
        put(out, "rbf.weights", r.weights);
        put(out, "rbf.intercept", format_double17(r.intercept));
    }
    return out.str();
}

StoredModel parse_model(std::string_view text) {
    const auto nl = text.find('\n');
    const auto first = trim(text.substr(0, nl));
    const std::string expected = std::string(kModelMagic) + ' ' + std::to_string(kModelFormatVersion);
    if (first != expected) {
        throw ParseError("not a model file or unsupported version (expected '" + expected + "')",
                         1);
    }
    const auto kv = KeyValueTable::parse(nl == std::string_view::npos ? std::string_view{}
                                                                      : text.substr(nl + 1),
                                         2);
    StoredModel stored;
    stored.descriptor_names = split_names(kv.require("descriptors"));
    const std::string kind = kv.require("kind");
    const std::size_t d = stored.descriptor_names.size();

    if (kind == "qml") {
        QmlModel q;
        q.seed = kv.require_uint("seed");
        q.encoder = EncoderSpec::parse(kv.require("encoder.id"), kv.require_uint("encoder.copies"), d);
        q.ansatz.unit = parse_ansatz_unit(kv.require("ansatz.unit"));
        q.ansatz.layers = kv.require_uint("ansatz.layers");
        q.ansatz.qubits = q.encoder.qubits();
        q.ansatz.ising.seed = kv.require_uint("ansatz.ising_seed");
        q.ansatz.ising.time = kv.require_double("ansatz.ising_time");
        if (kv.require("ansatz.trotter_steps") != "auto") {
            q.ansatz.ising.trotter_steps = kv.require_uint("ansatz.trotter_steps");
        }
        q.readout.mode = parse_readout_mode(kv.require("readout.mode"));
        q.readout.measured_qubit = kv.require_uint("readout.qubit");
        q.readout.measured_count = kv.require_uint("readout.m");
        q.readout.scale = kv.require_double("readout.scale");
        q.normalization.features = to_ranges(kv.get_doubles("normalization.feature_min", {}),
                                              kv.get_doubles("normalization.feature_max", {}));
        q.normalization.target = {kv.require_double("normalization.target_min"),
                                  kv.require_double("normalization.target_max")};
        q.theta = kv.get_doubles("theta", {});
        q.beta = doubles_or_empty(kv, "beta");
        q.descriptor_names = stored.descriptor_names;
        q.validate();
        stored.model = std::move(q);
    } else if (kind == "mlr") {
        MlrModel m;
        m.weights = kv.get_doubles("mlr.weights", {});
        m.intercept = kv.require_double("mlr.intercept");
        if (m.weights.size() != d) {
            throw ValidationError("model file: MLR weight count does not match descriptors");
        }
        stored.model = std::move(m);
    } else if (kind == "rbf") {
        RbfModel r;
        r.feature_ranges = to_ranges(kv.get_doubles("rbf.feature_min", {}),
                                     kv.get_doubles("rbf.feature_max", {}));
        r.centers = kv.get_doubles("rbf.centers", {});
        r.width = kv.require_double("rbf.width");
        r.ridge = kv.require_double("rbf.ridge");
        r.weights = kv.get_doubles("rbf.weights", {});
        r.intercept = kv.require_double("rbf.intercept");
        if (r.feature_ranges.size() != d || r.centers.size() != r.weights.size() * d) {
            throw ValidationError("model file: RBF shapes do not match descriptors");
        }
        stored.model = std::move(r);
    } else {
        throw ValidationError("model file: unknown kind '" + kind + "'");
    }
    kv.reject_unused();
    return stored;
}

void save_model(const std::string &path, const StoredModel &stored) {
    write_file_atomic(path, serialize_model(stored));
}

StoredModel load_model(const std::string &path) { return parse_model(read_file(path)); }

} // namespace qclreg
