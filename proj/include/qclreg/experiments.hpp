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
 * Experiment drivers shared by the command-line tool and the acceptance
 * suite: the one-dimensional benchmark functions and k-fold
 * cross-validation for every model kind.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qclreg/ansatz.hpp"
#include "qclreg/config.hpp"
#include "qclreg/data.hpp"
#include "qclreg/metrics.hpp"

namespace qclreg {

enum class ModelKind { Qml, Mlr, Rbf };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view token);

enum class BenchTask { Square, Exp, Sin, Abs };

std::string_view to_string(BenchTask task);
double evaluate(BenchTask task, double x);

/// Equally spaced points on [-1, 1] with y = task(x).
Dataset bench_dataset(BenchTask task, std::size_t points);

struct BenchOptions {
    std::vector<BenchTask> tasks{BenchTask::Square, BenchTask::Exp, BenchTask::Sin,
                                 BenchTask::Abs};
    std::vector<AnsatzUnit> units{AnsatzUnit::Ising, AnsatzUnit::CNOT, AnsatzUnit::CZ};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t points = 50;
    std::size_t copies = 3;
    std::size_t layers = 6;
    double scale = 2.0;
    std::size_t max_iterations = 20000;
    std::size_t jobs = 1;
};

struct BenchRow {
    BenchTask task;
    AnsatzUnit unit;
    std::uint64_t seed;
    double r2_train;
    std::size_t iterations;
};

/// One pure-readout A1 fit per (task, unit, seed), in that nesting order.
std::vector<BenchRow> run_bench(const BenchOptions &options);

double median(std::vector<double> values);

struct FoldResult {
    std::size_t fold = 0;
    std::size_t train_size = 0;
    std::size_t val_size = 0;
    Metrics train;
    Metrics val;
    std::size_t layers = 0;      // qml
    double scale = 0.0;          // qml
    std::size_t rbf_centers = 0; // rbf
};

struct CvResult {
    std::vector<FoldResult> folds;
    double mean_r2_train = 0.0;
    double mean_r2_val = 0.0;
};

/// k-fold cross-validation with the plan from kfold(N, k, seed). QML and RBF
/// hyperparameters are selected on each fold's held-out part.
/// Cost table rows for n = 5, 10, ..., max_n as CSV with a header line.
/// memory_mb is shown with two decimals, trailing zeros dropped.
std::string cost_table_csv(std::size_t max_n);

/// k-fold cross-validation with kfold(N, k, fit.seed). When a model has more
/// than one candidate (QML grid points, RBF center counts), the candidate is
/// picked on an inner 80/20 Kennard-Stone split of the training fold and then
/// refit on the whole training fold.
CvResult cross_validate(const RunConfig &config, const Dataset &data, ModelKind kind);

} // namespace qclreg
