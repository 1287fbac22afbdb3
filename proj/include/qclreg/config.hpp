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
 * Run configuration: a flat `section.key = value` text file.
 *
 *   seed = 7
 *   encoder.id = A2-A2-CNOT       # one of the 13 encoder ids
 *   encoder.copies = 2            # p in {1, 2, 3}
 *   ansatz.unit = cnot            # ising | cnot | cz
 *   ansatz.layers = 3-12          # list and/or inclusive ranges
 *   ansatz.ising_time = 10
 *   ansatz.trotter_steps = auto   # or an integer, 0 = exact
 *   ansatz.dense_budget_mb = 4096
 *   readout.mode = pure           # pure | hybrid
 *   readout.qubit = 0
 *   readout.m = 4
 *   readout.scale = 1,2,4,6,8,10  # hybrid default: 4
 *   optimizer.max_iterations = 20000
 *   optimizer.f_tolerance = 1e-6
 *   optimizer.x_tolerance = 1e-6
 *   optimizer.reflection = 1      # expansion, contraction, shrink likewise
 *   optimizer.initial_step = 0.1
 *   optimizer.restarts = 1
 *   split.method = kennard-stone  # kennard-stone | kfold | explicit
 *   split.n_train = 180           # default: round(0.8 N)
 *   split.k = 5
 *   split.plan = plan.csv         # explicit plans
 *   baseline.rbf_centers = 5,10,20,40
 *   baseline.rbf_ridge = 1e-6
 *
 * Unknown keys are rejected.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qclreg/training.hpp"

namespace qclreg {

enum class SplitMethod { KennardStone, KFold, Explicit };

std::string_view to_string(SplitMethod method);

struct SplitSettings {
    SplitMethod method = SplitMethod::KennardStone;
    std::optional<std::size_t> n_train;
    std::size_t k = 5;
    std::string plan_path;

    std::size_t resolved_n_train(std::size_t n) const;
};

struct BaselineSettings {
    std::vector<std::size_t> rbf_centers{5, 10, 20, 40};
    double rbf_ridge = 1e-6;
};

struct RunConfig {
    FitConfig fit;
    SplitSettings split;
    BaselineSettings baseline;

    /// Cross-field checks against the data: n = p d fits the simulator and
    /// the readout fits n.
    void validate(std::size_t descriptor_count) const;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string &path);

} // namespace qclreg
