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

#include "qclreg/training.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "qclreg/error.hpp"
#include "qclreg/rng.hpp"

namespace qclreg {

void GridSpec::validate() const {
    if (layers.empty() || scales.empty()) {
        throw ValidationError("hyperparameter grid must not be empty");
    }
    for (auto l : layers) {
        if (l < 1) throw ValidationError("layer counts must be >= 1");
    }
    for (double f : scales) {
        if (!(f > 0.0) || !std::isfinite(f)) {
            throw ValidationError("readout scales must be positive");
        }
    }
}

std::vector<TracePoint> thin_trace(const std::vector<TracePoint> &trace) {
    std::vector<TracePoint> out;
    for (const auto &p : trace) {
        if (out.empty() || p.value < out.back().value) {
            out.push_back(p);
        }
    }
    if (!trace.empty() && out.back().iteration != trace.back().iteration) {
        out.push_back(trace.back());
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct GridOutcome {
    GridRow row;
    std::vector<double> theta;
    std::vector<double> beta;
    std::vector<TracePoint> trace;
    bool converged = false;
};

std::uint64_t init_stream_index(std::size_t layers, double scale, std::size_t restart) {
    return mix64(mix64(layers) + std::bit_cast<std::uint64_t>(scale)) + restart;
}

void check_variance(const Dataset &ds, const char *which) {
    double lo = ds.y.front(), hi = ds.y.front();
    for (double v : ds.y) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) {
        throw ValidationError(std::string(which) +
                              " targets have zero variance; R^2 is undefined");
    }
}

template <typename Task>
void run_parallel(std::size_t count, std::size_t jobs, Task &&task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, count);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace

FitResult fit(const FitConfig &config, const Dataset &train, const Dataset &val) {
    const auto t0 = Clock::now();
    train.validate();
    val.validate();
    if (train.descriptor_names != val.descriptor_names) {
        throw ValidationError("training and validation descriptor columns differ");
    }
    if (train.size() < 2 || val.size() < 2) {
        throw ValidationError("training and validation sets need at least two rows each");
    }
    check_variance(train, "training");
    check_variance(val, "validation");
    config.grid.validate();
    config.optimizer.validate();
    if (config.restarts < 1) {
        throw ValidationError("at least one optimizer restart is required");
    }

    const EncoderSpec encoder =
        EncoderSpec::parse(config.encoder_id, config.copies, train.descriptor_count());
    const std::size_t n = encoder.qubits();
    config.readout.validate(n);
    if (config.readout.mode == ReadoutMode::Hybrid && train.size() < config.readout.measured_count) {
        throw ValidationError("hybrid readout needs at least M training rows");
    }

    const Normalization norm = Normalization::fit(train);
    const Dataset train_n = norm.apply(train);
    const Dataset val_n = norm.apply(val);

    std::vector<std::pair<std::size_t, double>> points;
    for (auto l : config.grid.layers) {
        for (double f : config.grid.scales) {
            points.emplace_back(l, f);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<GridOutcome> outcomes(points.size());
    run_parallel(points.size(), config.jobs, [&](std::size_t g) {
        const auto tg = Clock::now();
        const auto [layers, scale] = points[g];
        AnsatzSpec aspec{config.unit, layers, n, config.ising};
        aspec.ising.seed = config.seed;
        auto ansatz = std::make_shared<const Ansatz>(aspec);
        ReadoutSpec readout = config.readout;
        readout.scale = scale;
        CircuitEvaluator train_eval(encoder, ansatz, readout, train_n);
        CircuitEvaluator val_eval(encoder, ansatz, readout, val_n);

        GridOutcome out;
        std::size_t evaluations = 0, iterations = 0;
        for (std::size_t r = 0; r < config.restarts; ++r) {
            Rng rng = Rng::stream(config.seed, "init", init_stream_index(layers, scale, r));
            std::vector<double> theta0(ansatz->parameter_count());
            for (auto &t : theta0) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
            OptimizationResult res = nelder_mead(
                [&](std::span<const double> th) { return train_eval.loss(th); }, theta0,
                config.optimizer);
            evaluations += res.evaluations;
            iterations += res.iterations;
            if (r == 0 || res.value < out.row.loss) {
                out.row.loss = res.value;
                out.theta = std::move(res.point);
                out.trace = std::move(res.trace);
                out.converged = res.converged;
            }
        }
        train_eval.loss(out.theta);
        out.beta = train_eval.last_beta();
        const auto pred_train = train_eval.predict(out.theta, out.beta);
        const auto pred_val = val_eval.predict(out.theta, out.beta);
        out.row.layers = layers;
        out.row.scale = scale;
        out.row.r2_train = r_squared(train_n.y, pred_train);
        out.row.r2_val = r_squared(val_n.y, pred_val);
        out.row.iterations = iterations;
        out.row.evaluations = evaluations;
        out.row.seconds = seconds_since(tg);
        outcomes[g] = std::move(out);
    });

    // points are sorted by (L, f), so a strict comparison keeps the smaller
    // L, then the smaller f, on ties.
    std::size_t best = 0;
    for (std::size_t g = 1; g < outcomes.size(); ++g) {
        if (outcomes[g].row.r2_val > outcomes[best].row.r2_val) best = g;
    }
    const GridOutcome &win = outcomes[best];

    FitResult result;
    QmlModel &model = result.model;
    model.encoder = encoder;
    model.ansatz = AnsatzSpec{config.unit, win.row.layers, n, config.ising};
    model.ansatz.ising.seed = config.seed;
    model.readout = config.readout;
    model.readout.scale = win.row.scale;
    model.theta = win.theta;
    if (model.readout.mode == ReadoutMode::Hybrid) model.beta = win.beta;
    model.descriptor_names = train.descriptor_names;
    model.normalization = norm;
    model.seed = config.seed;

    auto ansatz = std::make_shared<const Ansatz>(model.ansatz);
    CircuitEvaluator train_eval(encoder, ansatz, model.readout, train_n);
    CircuitEvaluator val_eval(encoder, ansatz, model.readout, val_n);
    auto unit_train = train_eval.predict(model.theta, model.beta);
    auto unit_val = val_eval.predict(model.theta, model.beta);

    auto split_metrics = [&](const Dataset &raw, const Dataset &unit,
                             const std::vector<double> &pred_unit,
                             std::vector<double> &pred_raw) {
        pred_raw.resize(pred_unit.size());
        for (std::size_t i = 0; i < pred_unit.size(); ++i) {
            pred_raw[i] = norm.target_from_unit(pred_unit[i]);
        }
        SplitMetrics m;
        m.original = compute_metrics(raw.y, pred_raw);
        m.mse_unit = mean_squared_error(unit.y, pred_unit);
        m.rms_unit = std::sqrt(m.mse_unit);
        return m;
    };

    FitReport &rep = result.report;
    rep.encoder_id = encoder.id();
    rep.qubits = n;
    rep.unit = std::string(to_string(config.unit));
    rep.readout = std::string(to_string(config.readout.mode));
    rep.layers = win.row.layers;
    rep.scale = win.row.scale;
    rep.train = split_metrics(train, train_n, unit_train, result.train_predictions);
    rep.val = split_metrics(val, val_n, unit_val, result.val_predictions);
    rep.iterations = win.row.iterations;
    rep.evaluations = win.row.evaluations;
    rep.converged = win.converged;
    rep.final_loss = win.row.loss;
    rep.trace = thin_trace(win.trace);
    rep.seed = config.seed;
    for (const auto &o : outcomes) rep.grid.push_back(o.row);
    rep.wall_seconds = seconds_since(t0);
    return result;
}

} // namespace qclreg
