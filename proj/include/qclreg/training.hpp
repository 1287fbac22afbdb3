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
 * End-to-end QML training with a grid search over layers and readout scale.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclreg/ansatz.hpp"
#include "qclreg/data.hpp"
#include "qclreg/metrics.hpp"
#include "qclreg/model.hpp"
#include "qclreg/optimizer.hpp"

namespace qclreg {

struct GridSpec {
    std::vector<std::size_t> layers{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<double> scales{1.0, 2.0, 4.0, 6.0, 8.0, 10.0};

    void validate() const;
};

struct FitConfig {
    std::string encoder_id = "A2-A2-CNOT";
    std::size_t copies = 1;
    AnsatzUnit unit = AnsatzUnit::CNOT;
    /// The seed field is ignored; the Ising coefficients follow FitConfig::seed.
    IsingSettings ising;
    /// The scale field is ignored; scales come from the grid.
    ReadoutSpec readout;
    GridSpec grid;
    OptimizerOptions optimizer;
    std::size_t restarts = 1;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

/// One evaluated (L, f) point; R^2 values are scale free.
struct GridRow {
    std::size_t layers = 0;
    double scale = 0.0;
    double r2_train = 0.0;
    double r2_val = 0.0;
    double loss = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    double seconds = 0.0;
};

/// Metrics on the original target scale plus MSE/RMS on the [0, 1] scale.
struct SplitMetrics {
    Metrics original;
    double mse_unit = 0.0;
    double rms_unit = 0.0;
};

struct FitReport {
    std::string encoder_id;
    std::size_t qubits = 0;
    std::string unit;
    std::string readout;
    std::size_t layers = 0;
    double scale = 0.0;
    SplitMetrics train;
    SplitMetrics val;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
    double final_loss = 0.0;
    /// Iterations at which the best value improved, plus the last iteration.
    std::vector<TracePoint> trace;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
    std::vector<GridRow> grid;
};

struct FitResult {
    QmlModel model;
    FitReport report;
    std::vector<double> train_predictions; // original units
    std::vector<double> val_predictions;
};

/// Normalizes with training statistics, trains every grid point with
/// Nelder-Mead from theta_0 ~ U[0, 2 pi) and keeps the point with the best
/// validation R^2 (ties: smaller L, then smaller f).
FitResult fit(const FitConfig &config, const Dataset &train, const Dataset &val);

/// Keeps points where the running best improves, and the final point.
std::vector<TracePoint> thin_trace(const std::vector<TracePoint> &trace);

} // namespace qclreg
