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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qclreg/error.hpp"
#include "qclreg/experiments.hpp"

using namespace qclreg;

TEST_CASE("model kind tokens") {
    CHECK(parse_model_kind("qml") == ModelKind::Qml);
    CHECK(parse_model_kind("rbf") == ModelKind::Rbf);
    CHECK(to_string(ModelKind::Mlr) == "mlr");
    CHECK_THROWS_AS(parse_model_kind("svm"), ValidationError);
}

TEST_CASE("median") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({5.0, 1.0, 3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS(median({}), ValidationError);
}

TEST_CASE("benchmark datasets are uniform grids on [-1, 1]") {
    const auto ds = bench_dataset(BenchTask::Abs, 5);
    CHECK(ds.x == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(ds.y == std::vector<double>{1.0, 0.5, 0.0, 0.5, 1.0});
    CHECK(evaluate(BenchTask::Exp, 0.0) == 1.0);
    CHECK(to_string(BenchTask::Sin) == "sin(x)");
    CHECK_THROWS_AS(bench_dataset(BenchTask::Square, 1), ValidationError);
}

TEST_CASE("run_bench covers every task, unit and seed") {
    BenchOptions o;
    o.tasks = {BenchTask::Square, BenchTask::Sin};
    o.units = {AnsatzUnit::CNOT, AnsatzUnit::CZ};
    o.seeds = {1, 2};
    o.points = 12;
    o.layers = 2;
    o.max_iterations = 40;
    const auto rows = run_bench(o);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].task == BenchTask::Square);
    CHECK(rows[0].unit == AnsatzUnit::CNOT);
    CHECK(rows[1].seed == 2);
    for (const auto &r : rows) CHECK(r.iterations <= 40);
    const auto again = run_bench(o);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].r2_train == again[i].r2_train);
}

TEST_CASE("cost table text") {
    CHECK(cost_table_csv(10) == "n,matrix_dim,relative_cost,memory_mb\n"
                                "5,32,1,0.05\n"
                                "10,1024,32768,48\n");
    CHECK_THROWS_AS(cost_table_csv(4), ValidationError);
}

TEST_CASE("cross-validation folds partition the data") {
    const auto data = synthesize_surrogate(53, 3, 4);
    RunConfig rc;
    rc.split.k = 5;
    rc.fit.seed = 9;
    const auto cv = cross_validate(rc, data, ModelKind::Mlr);
    REQUIRE(cv.folds.size() == 5);
    std::size_t val_total = 0;
    double mean_val = 0.0;
    for (const auto &f : cv.folds) {
        CHECK(f.train_size + f.val_size == 53);
        val_total += f.val_size;
        mean_val += f.val.r2 / 5.0;
    }
    CHECK(val_total == 53);
    CHECK(std::abs(mean_val - cv.mean_r2_val) < 1e-12);
    CHECK(cv.mean_r2_train > cv.mean_r2_val);
}

TEST_CASE("cross-validated model selection ignores the held-out fold") {
    const auto data = synthesize_surrogate(80, 3, 2);
    RunConfig rc;
    rc.fit.seed = 5;
    rc.baseline.rbf_centers = {3, 6, 12, 24};
    const auto base = cross_validate(rc, data, ModelKind::Rbf);

    const auto plans = kfold(data.size(), rc.split.k, rc.fit.seed);
    auto shifted = data;
    for (auto i : plans[0].val) shifted.y[i] = 100.0 - shifted.y[i];
    const auto moved = cross_validate(rc, shifted, ModelKind::Rbf);
    CHECK(moved.folds[0].rbf_centers == base.folds[0].rbf_centers);
    CHECK(moved.folds[0].train.r2 == base.folds[0].train.r2);
    CHECK(moved.folds[0].val.r2 != base.folds[0].val.r2);
    for (const auto &f : base.folds) {
        CHECK(std::find(rc.baseline.rbf_centers.begin(), rc.baseline.rbf_centers.end(),
                        f.rbf_centers) != rc.baseline.rbf_centers.end());
    }
}

TEST_CASE("QML cross-validation with a grid refits the chosen point") {
    const auto data = synthesize_surrogate(40, 2, 3);
    RunConfig rc;
    rc.split.k = 4;
    rc.fit.encoder_id = "A1";
    rc.fit.grid.layers = {1, 2};
    rc.fit.grid.scales = {1.0, 2.0};
    rc.fit.optimizer.max_iterations = 60;
    const auto cv = cross_validate(rc, data, ModelKind::Qml);
    REQUIRE(cv.folds.size() == 4);
    for (const auto &f : cv.folds) {
        CHECK((f.layers == 1 || f.layers == 2));
        CHECK((f.scale == 1.0 || f.scale == 2.0));
        CHECK(std::isfinite(f.val.r2));
    }
}
