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

#include "qclreg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qclreg/baselines.hpp"
#include "qclreg/error.hpp"
#include "qclreg/training.hpp"

namespace qclreg {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::Qml: return "qml";
    case ModelKind::Mlr: return "mlr";
    case ModelKind::Rbf: return "rbf";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view token) {
    if (token == "qml") return ModelKind::Qml;
    if (token == "mlr") return ModelKind::Mlr;
    if (token == "rbf") return ModelKind::Rbf;
    throw ValidationError("unknown model kind '" + std::string(token) + "' (qml|mlr|rbf)");
}

std::string_view to_string(BenchTask task) {
    switch (task) {
    case BenchTask::Square: return "x^2";
    case BenchTask::Exp: return "exp(x)";
    case BenchTask::Sin: return "sin(x)";
    case BenchTask::Abs: return "|x|";
    }
    return "?";
}

double evaluate(BenchTask task, double x) {
    switch (task) {
    case BenchTask::Square: return x * x;
    case BenchTask::Exp: return std::exp(x);
    case BenchTask::Sin: return std::sin(x);
    case BenchTask::Abs: return std::abs(x);
    }
    return 0.0;
}

Dataset bench_dataset(BenchTask task, std::size_t points) {
    if (points < 2) throw ValidationError("benchmark needs at least 2 points");
    Dataset ds;
    ds.descriptor_names = {"x"};
    ds.source = std::string(to_string(task));
    for (std::size_t i = 0; i < points; ++i) {
        const double x =
            -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
        ds.x.push_back(x);
        ds.y.push_back(evaluate(task, x));
    }
    return ds;
}

std::vector<BenchRow> run_bench(const BenchOptions &options) {
    std::vector<BenchRow> rows;
    for (auto task : options.tasks) {
        const auto ds = bench_dataset(task, options.points);
        for (auto unit : options.units) {
            for (auto seed : options.seeds) {
                FitConfig config;
                config.encoder_id = "A1";
                config.copies = options.copies;
                config.unit = unit;
                config.grid.layers = {options.layers};
                config.grid.scales = {options.scale};
                config.optimizer.max_iterations = options.max_iterations;
                config.seed = seed;
                config.jobs = options.jobs;
                const auto result = fit(config, ds, ds);
                rows.push_back({task, unit, seed, result.report.train.original.r2,
                                result.report.iterations});
            }
        }
    }
    return rows;
}

double median(std::vector<double> values) {
    if (values.empty()) throw ValidationError("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

// Kennard-Stone hold-out inside a training fold, used for model selection so
// that the fold's own held-out rows never influence it.
std::pair<Dataset, Dataset> inner_split(const Dataset &train) {
    const auto n_train =
        static_cast<std::size_t>(std::llround(0.8 * static_cast<double>(train.size())));
    const auto plan = kennard_stone_split(normalize(train).first, n_train);
    return {train.subset(plan.train), train.subset(plan.val)};
}

} // namespace

CvResult cross_validate(const RunConfig &config, const Dataset &data, ModelKind kind) {
    data.validate();
    const auto plans = kfold(data.size(), config.split.k, config.fit.seed);
    CvResult out;
    for (std::size_t f = 0; f < plans.size(); ++f) {
        const auto train = data.subset(plans[f].train);
        const auto val = data.subset(plans[f].val);
        FoldResult fold;
        fold.fold = f;
        fold.train_size = train.size();
        fold.val_size = val.size();
        std::vector<double> pt, pv;
        switch (kind) {
        case ModelKind::Qml: {
            FitConfig chosen = config.fit;
            if (chosen.grid.layers.size() * chosen.grid.scales.size() > 1) {
                const auto [inner_train, inner_val] = inner_split(train);
                const auto probe = fit(config.fit, inner_train, inner_val);
                chosen.grid.layers = {probe.report.layers};
                chosen.grid.scales = {probe.report.scale};
            }
            auto result = fit(chosen, train, val);
            pt = std::move(result.train_predictions);
            pv = std::move(result.val_predictions);
            fold.layers = result.report.layers;
            fold.scale = result.report.scale;
            break;
        }
        case ModelKind::Mlr: {
            const auto m = fit_mlr(train);
            pt = predict_all(m, train);
            pv = predict_all(m, val);
            break;
        }
        case ModelKind::Rbf: {
            std::size_t centers = config.baseline.rbf_centers.front();
            if (config.baseline.rbf_centers.size() > 1) {
                const auto [inner_train, inner_val] = inner_split(train);
                centers = select_rbf(inner_train, inner_val, config.baseline.rbf_centers,
                                     config.baseline.rbf_ridge, config.fit.seed)
                              .centers;
            }
            const auto model =
                fit_rbf(train, centers, config.baseline.rbf_ridge, config.fit.seed);
            pt = predict_all(model, train);
            pv = predict_all(model, val);
            fold.rbf_centers = centers;
            break;
        }
        }
        fold.train = compute_metrics(train.y, pt);
        fold.val = compute_metrics(val.y, pv);
        out.mean_r2_train += fold.train.r2 / static_cast<double>(plans.size());
        out.mean_r2_val += fold.val.r2 / static_cast<double>(plans.size());
        out.folds.push_back(fold);
    }
    return out;
}

namespace {

std::string two_decimals(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string cost_table_csv(std::size_t max_n) {
    if (max_n < 5) throw ValidationError("--max-n must be at least 5");
    std::ostringstream out;
    out << "n,matrix_dim,relative_cost,memory_mb\n";
    for (std::size_t n = 5; n <= max_n; n += 5) {
        const auto c = trotter_cost(n);
        char cost[64];
        std::snprintf(cost, sizeof cost, "%.0f", c.relative_cost);
        out << n << ',' << c.matrix_dim << ',' << cost << ',' << two_decimals(c.memory_mb)
            << '\n';
    }
    return out.str();
}

} // namespace qclreg
