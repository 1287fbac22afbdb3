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

#include "qclreg/config.hpp"

#include <cmath>

#include "qclreg/error.hpp"
#include "qclreg/text.hpp"

namespace qclreg {

std::string_view to_string(SplitMethod method) {
    switch (method) {
    case SplitMethod::KennardStone:
        return "kennard-stone";
    case SplitMethod::KFold:
        return "kfold";
    case SplitMethod::Explicit:
        return "explicit";
    }
    return "?";
}

std::size_t SplitSettings::resolved_n_train(std::size_t n) const {
    if (n_train) return *n_train;
    return static_cast<std::size_t>(std::llround(0.8 * static_cast<double>(n)));
}

namespace {

std::vector<std::size_t> to_sizes(const std::vector<double> &v) {
    std::vector<std::size_t> out;
    for (double x : v) out.push_back(static_cast<std::size_t>(x));
    return out;
}

} // namespace

RunConfig parse_run_config(std::string_view text) {
    const auto kv = KeyValueTable::parse(text);
    RunConfig rc;
    FitConfig &f = rc.fit;

    f.seed = kv.get_uint("seed", 0);
    f.encoder_id = kv.get("encoder.id").value_or(f.encoder_id);
    f.copies = kv.get_uint("encoder.copies", f.copies);

    f.unit = parse_ansatz_unit(kv.get("ansatz.unit").value_or("cnot"));
    f.grid.layers = to_sizes(kv.get_doubles("ansatz.layers", {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, true));
    f.ising.time = kv.get_double("ansatz.ising_time", f.ising.time);
    if (const auto steps = kv.get("ansatz.trotter_steps"); steps && *steps != "auto") {
        f.ising.trotter_steps = kv.get_uint("ansatz.trotter_steps", 0);
    }
    f.ising.dense_budget_mb = kv.get_double("ansatz.dense_budget_mb", f.ising.dense_budget_mb);

    f.readout.mode = parse_readout_mode(kv.get("readout.mode").value_or("pure"));
    f.readout.measured_qubit = kv.get_uint("readout.qubit", 0);
    f.readout.measured_count = kv.get_uint("readout.m", f.readout.mode == ReadoutMode::Hybrid ? 4 : 1);
    const std::vector<double> default_scales =
        f.readout.mode == ReadoutMode::Hybrid ? std::vector<double>{4.0} : GridSpec{}.scales;
    f.grid.scales = kv.get_doubles("readout.scale", default_scales);

    OptimizerOptions &o = f.optimizer;
    o.max_iterations = kv.get_uint("optimizer.max_iterations", o.max_iterations);
    o.f_tolerance = kv.get_double("optimizer.f_tolerance", o.f_tolerance);
    o.x_tolerance = kv.get_double("optimizer.x_tolerance", o.x_tolerance);
    o.reflection = kv.get_double("optimizer.reflection", o.reflection);
    o.expansion = kv.get_double("optimizer.expansion", o.expansion);
    o.contraction = kv.get_double("optimizer.contraction", o.contraction);
    o.shrink = kv.get_double("optimizer.shrink", o.shrink);
    o.initial_step = kv.get_double("optimizer.initial_step", o.initial_step);
    f.restarts = kv.get_uint("optimizer.restarts", f.restarts);

    const std::string method = kv.get("split.method").value_or("kennard-stone");
    if (method == "kennard-stone") {
        rc.split.method = SplitMethod::KennardStone;
    } else if (method == "kfold") {
        rc.split.method = SplitMethod::KFold;
    } else if (method == "explicit") {
        rc.split.method = SplitMethod::Explicit;
    } else {
        throw ValidationError("unknown split.method '" + method + "'");
    }
    if (kv.contains("split.n_train")) rc.split.n_train = kv.get_uint("split.n_train", 0);
    rc.split.k = kv.get_uint("split.k", rc.split.k);
    rc.split.plan_path = kv.get("split.plan").value_or("");
    if (rc.split.method == SplitMethod::Explicit && rc.split.plan_path.empty()) {
        throw ValidationError("split.method = explicit needs split.plan");
    }

    rc.baseline.rbf_centers =
        to_sizes(kv.get_doubles("baseline.rbf_centers", {5, 10, 20, 40}, true));
    rc.baseline.rbf_ridge = kv.get_double("baseline.rbf_ridge", rc.baseline.rbf_ridge);

    kv.reject_unused();
    f.grid.validate();
    f.optimizer.validate();
    if (f.restarts < 1) throw ValidationError("optimizer.restarts must be >= 1");
    if (rc.baseline.rbf_ridge < 0) throw ValidationError("baseline.rbf_ridge must be >= 0");
    // Token check independent of the data width.
    EncoderSpec::parse(f.encoder_id, f.copies, 1);
    return rc;
}

RunConfig load_run_config(const std::string &path) { return parse_run_config(read_file(path)); }

void RunConfig::validate(std::size_t descriptor_count) const {
    const EncoderSpec enc = EncoderSpec::parse(fit.encoder_id, fit.copies, descriptor_count);
    if (enc.qubits() > kDefaultMaxQubits) {
        throw CapacityError("encoder needs p * d = " + std::to_string(enc.qubits()) +
                            " qubits, more than the simulator limit of " +
                            std::to_string(kDefaultMaxQubits));
    }
    fit.readout.validate(enc.qubits());
}

} // namespace qclreg
