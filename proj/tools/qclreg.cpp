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

// qclreg command-line tool: fit, predict, bench-fn, cost-table, split, cv
// and surrogate. Exit status 1 marks invalid input, 2 a numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "qclreg/baselines.hpp"
#include "qclreg/config.hpp"
#include "qclreg/data.hpp"
#include "qclreg/error.hpp"
#include "qclreg/experiments.hpp"
#include "qclreg/persistence.hpp"
#include "qclreg/text.hpp"
#include "qclreg/training.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace qclreg;

namespace {

using Clock = std::chrono::steady_clock;

struct CommonFlags {
    std::string config;
    std::string data;
    std::string val;
    std::string split;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> jobs;
    std::string kind = "qml";
};

RunConfig load_config(const CommonFlags &flags) {
    RunConfig rc = flags.config.empty() ? RunConfig{} : load_run_config(flags.config);
    if (flags.seed) rc.fit.seed = *flags.seed;
    if (flags.jobs) rc.fit.jobs = std::max<std::size_t>(1, *flags.jobs);
    return rc;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

json metrics_json(const Metrics &m) {
    return json{{"r2", m.r2}, {"mse", m.mse}, {"rms", m.rms}};
}

json split_json(const SplitMetrics &m) {
    auto j = metrics_json(m.original);
    j["mse_normalized"] = m.mse_unit;
    j["rms_normalized"] = m.rms_unit;
    return j;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

/// Writes every file into `dir` once all of them are ready.
void write_outputs(const std::string &dir, const std::map<std::string, std::string> &files) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + dir + "': " + ec.message());
    for (const auto &[name, content] : files) {
        write_file_atomic((fs::path(dir) / name).string(), content);
    }
}

std::string predictions_csv(const std::vector<std::size_t> &train_idx,
                            const std::vector<std::size_t> &val_idx, const Dataset &train,
                            const Dataset &val, const std::vector<double> &pt,
                            const std::vector<double> &pv) {
    std::ostringstream out;
    out << "index,set,observed,predicted\n";
    for (std::size_t i = 0; i < train.size(); ++i) {
        out << train_idx[i] << ",train," << format_double17(train.y[i]) << ','
            << format_double17(pt[i]) << '\n';
    }
    for (std::size_t i = 0; i < val.size(); ++i) {
        out << val_idx[i] << ",val," << format_double17(val.y[i]) << ','
            << format_double17(pv[i]) << '\n';
    }
    return out.str();
}

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// ---------------------------------------------------------------------------
// fit

int cmd_fit(const CommonFlags &flags) {
    const auto t0 = Clock::now();
    const auto kind = parse_model_kind(flags.kind);
    RunConfig rc = load_config(flags);
    const Dataset data = load_csv(flags.data);
    rc.validate(data.descriptor_count());

    Dataset train, val;
    std::vector<std::size_t> train_idx, val_idx;
    std::string split_name;
    if (!flags.val.empty()) {
        train = data;
        val = load_csv(flags.val);
        if (val.descriptor_names != train.descriptor_names) {
            throw ValidationError("validation file columns differ from the training file");
        }
        train_idx = iota_indices(train.size());
        val_idx = iota_indices(val.size());
        split_name = "file";
    } else {
        SplitPlan plan;
        if (!flags.split.empty() || rc.split.method == SplitMethod::Explicit) {
            plan = load_split_plan(flags.split.empty() ? rc.split.plan_path : flags.split);
            split_name = "explicit";
        } else if (rc.split.method == SplitMethod::KennardStone) {
            plan = kennard_stone_split(normalize(data).first,
                                       rc.split.resolved_n_train(data.size()));
            split_name = "kennard-stone";
        } else {
            throw ValidationError("split.method = kfold is handled by the cv command");
        }
        plan.validate(data.size());
        if (plan.val.empty()) throw ValidationError("split leaves no validation rows");
        train_idx = plan.train;
        val_idx = plan.val;
        train = data.subset(train_idx);
        val = data.subset(val_idx);
    }

    json report;
    report["command"] = "fit";
    report["kind"] = to_string(kind);
    report["seed"] = rc.fit.seed;
    report["split"] = split_name;
    report["n_train"] = train.size();
    report["n_val"] = val.size();
    report["descriptors"] = data.descriptor_names;

    std::map<std::string, std::string> files;
    json timing;
    std::vector<double> pt, pv;
    StoredModel stored;
    stored.descriptor_names = data.descriptor_names;

    switch (kind) {
    case ModelKind::Qml: {
        auto result = fit(rc.fit, train, val);
        const auto &r = result.report;
        report["model"] = {{"encoder", r.encoder_id},
                           {"copies", rc.fit.copies},
                           {"qubits", r.qubits},
                           {"unit", r.unit},
                           {"readout", r.readout},
                           {"layers", r.layers},
                           {"scale", r.scale},
                           {"parameters", param_count(result.model.ansatz)},
                           {"two_qubit_gates", twoqubit_count(result.model.ansatz)},
                           {"beta", result.model.beta}};
        report["metrics"] = {{"train", split_json(r.train)}, {"val", split_json(r.val)}};
        report["optimizer"] = {{"iterations", r.iterations},
                               {"evaluations", r.evaluations},
                               {"converged", r.converged},
                               {"final_loss", r.final_loss}};
        json trace = json::array();
        for (const auto &p : r.trace) trace.push_back({p.iteration, p.value});
        report["trace"] = trace;
        json grid = json::array();
        std::ostringstream csv;
        csv << "encoder_id,n_qubits,L,f,r2_train,r2_val,loss,iterations,seconds\n";
        json grid_seconds = json::array();
        for (const auto &row : r.grid) {
            grid.push_back({{"L", row.layers},
                            {"f", row.scale},
                            {"r2_train", row.r2_train},
                            {"r2_val", row.r2_val},
                            {"loss", row.loss},
                            {"iterations", row.iterations}});
            csv << r.encoder_id << ',' << r.qubits << ',' << row.layers << ','
                << format_double(row.scale) << ',' << format_double17(row.r2_train) << ','
                << format_double17(row.r2_val) << ',' << format_double17(row.loss) << ','
                << row.iterations << ',' << format_double(row.seconds) << '\n';
            grid_seconds.push_back(row.seconds);
        }
        report["grid"] = grid;
        files["grid.csv"] = csv.str();
        timing["grid_seconds"] = grid_seconds;
        pt = std::move(result.train_predictions);
        pv = std::move(result.val_predictions);
        stored.model = std::move(result.model);
        break;
    }
    case ModelKind::Mlr: {
        auto m = fit_mlr(train);
        report["model"] = {{"weights", m.weights}, {"intercept", m.intercept}};
        pt = predict_all(m, train);
        pv = predict_all(m, val);
        stored.model = std::move(m);
        break;
    }
    case ModelKind::Rbf: {
        auto sel = select_rbf(train, val, rc.baseline.rbf_centers, rc.baseline.rbf_ridge,
                              rc.fit.seed);
        json scores = json::array();
        for (auto [k, r2] : sel.scores) scores.push_back({{"centers", k}, {"r2_val", r2}});
        report["model"] = {{"centers", sel.centers},
                           {"width", sel.model.width},
                           {"ridge", sel.model.ridge},
                           {"candidates", scores}};
        pt = predict_all(sel.model, train);
        pv = predict_all(sel.model, val);
        stored.model = std::move(sel.model);
        break;
    }
    }
    if (kind != ModelKind::Qml) {
        report["metrics"] = {{"train", metrics_json(compute_metrics(train.y, pt))},
                             {"val", metrics_json(compute_metrics(val.y, pv))}};
    }

    files["report.json"] = dump(report);
    files["predictions.csv"] = predictions_csv(train_idx, val_idx, train, val, pt, pv);
    files["model.txt"] = serialize_model(stored);
    timing["wall_seconds"] = seconds_since(t0);
    files["timing.json"] = dump(timing);
    write_outputs(flags.out, files);

    const auto &m = report["metrics"];
    std::printf("%s: R2 train %.4f  R2 val %.4f  -> %s\n", flags.kind.c_str(),
                m["train"]["r2"].get<double>(), m["val"]["r2"].get<double>(),
                flags.out.c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// predict

int cmd_predict(const std::string &model_path, const std::string &data_path,
                const std::string &out_path) {
    const StoredModel stored = load_model(model_path);
    const std::string text = read_file(data_path);
    const std::size_t d = stored.descriptor_names.size();
    const auto header = split(text.substr(0, text.find('\n')), ',');
    const bool has_target = header.size() == d + 1;
    const Dataset ds = parse_csv(text, data_path, has_target);
    if (ds.descriptor_names != stored.descriptor_names) {
        throw ValidationError("descriptor columns of '" + data_path +
                              "' do not match the model's descriptors");
    }
    std::ostringstream out;
    out << (has_target ? "index,observed,predicted\n" : "index,predicted\n");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out << i << ',';
        if (has_target) out << format_double17(ds.y[i]) << ',';
        out << format_double17(stored.predict(ds.row(i))) << '\n';
    }
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        write_file_atomic(out_path, out.str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench-fn

int cmd_bench(const std::string &out_dir, std::size_t seeds, std::size_t max_iterations,
              std::size_t jobs) {
    const auto t0 = Clock::now();
    BenchOptions options;
    options.seeds.clear();
    for (std::size_t s = 1; s <= seeds; ++s) options.seeds.push_back(s);
    options.max_iterations = max_iterations;
    options.jobs = jobs;
    const auto rows = run_bench(options);

    std::ostringstream runs;
    runs << "task,unit,seed,r2_train,iterations\n";
    std::map<std::pair<int, int>, std::vector<double>> groups;
    for (const auto &r : rows) {
        runs << to_string(r.task) << ',' << to_string(r.unit) << ',' << r.seed << ','
             << format_double17(r.r2_train) << ',' << r.iterations << '\n';
        groups[{static_cast<int>(r.unit), static_cast<int>(r.task)}].push_back(r.r2_train);
    }
    // Table layout: one row per unit, one column per task (median R^2).
    std::ostringstream table;
    table << "unit";
    for (auto t : options.tasks) table << ',' << to_string(t);
    table << '\n';
    for (auto u : options.units) {
        table << to_string(u);
        for (auto t : options.tasks) {
            table << ',' << format_double17(median(groups[{static_cast<int>(u),
                                                            static_cast<int>(t)}]));
        }
        table << '\n';
    }
    write_outputs(out_dir, {{"bench_runs.csv", runs.str()},
                            {"bench_table.csv", table.str()},
                            {"timing.json", dump(json{{"wall_seconds", seconds_since(t0)}})}});
    std::cout << table.str();
    return 0;
}

// ---------------------------------------------------------------------------
// cost-table

int cmd_cost_table(std::size_t max_n, const std::string &out_path) {
    const std::string table = cost_table_csv(max_n);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        write_file_atomic(out_path, table);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// split

int cmd_split(const std::string &data_path, const std::string &out_path,
              const std::string &method, std::optional<std::size_t> n_train, std::size_t k,
              std::uint64_t seed) {
    const Dataset data = load_csv(data_path);
    std::ostringstream out;
    if (method == "kennard-stone") {
        SplitSettings settings;
        settings.n_train = n_train;
        const auto plan =
            kennard_stone_split(normalize(data).first, settings.resolved_n_train(data.size()));
        write_split_plan(out, plan);
        std::printf("train %zu  val %zu\n", plan.train.size(), plan.val.size());
    } else if (method == "kfold") {
        write_fold_plan(out, kfold(data.size(), k, seed));
        std::printf("%zu folds over %zu rows\n", k, data.size());
    } else {
        throw ValidationError("unknown split method '" + method + "' (kennard-stone|kfold)");
    }
    write_file_atomic(out_path, out.str());
    return 0;
}

// ---------------------------------------------------------------------------
// cv

int cmd_cv(const CommonFlags &flags) {
    const auto t0 = Clock::now();
    const auto kind = parse_model_kind(flags.kind);
    RunConfig rc = load_config(flags);
    const Dataset data = load_csv(flags.data);
    rc.validate(data.descriptor_count());
    const auto cv = cross_validate(rc, data, kind);

    json report;
    report["command"] = "cv";
    report["kind"] = to_string(kind);
    report["seed"] = rc.fit.seed;
    report["k"] = rc.split.k;
    json folds = json::array();
    for (const auto &f : cv.folds) {
        json j{{"fold", f.fold},
               {"n_train", f.train_size},
               {"n_val", f.val_size},
               {"train", metrics_json(f.train)},
               {"val", metrics_json(f.val)}};
        if (kind == ModelKind::Qml) {
            j["L"] = f.layers;
            j["f"] = f.scale;
        } else if (kind == ModelKind::Rbf) {
            j["centers"] = f.rbf_centers;
        }
        folds.push_back(j);
    }
    report["folds"] = folds;
    report["mean_r2_train"] = cv.mean_r2_train;
    report["mean_r2_val"] = cv.mean_r2_val;

    std::ostringstream plan;
    write_fold_plan(plan, kfold(data.size(), rc.split.k, rc.fit.seed));
    write_outputs(flags.out, {{"cv.json", dump(report)},
                              {"folds.csv", plan.str()},
                              {"timing.json", dump(json{{"wall_seconds", seconds_since(t0)}})}});
    std::printf("%s %zu-fold: mean R2 train %.4f  mean R2 val %.4f\n", flags.kind.c_str(),
                rc.split.k, cv.mean_r2_train, cv.mean_r2_val);
    return 0;
}

// ---------------------------------------------------------------------------
// surrogate

int cmd_surrogate(std::size_t n, std::size_t d, std::uint64_t seed, const std::string &out_path) {
    const auto ds = synthesize_surrogate(n, d, seed);
    std::ostringstream out;
    write_csv(out, ds);
    write_file_atomic(out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum circuit learning regression toolkit"};
    app.require_subcommand(1);
    CommonFlags flags;

    auto add_common = [&](CLI::App *cmd, bool needs_val) {
        cmd->add_option("--config", flags.config, "Run configuration file");
        cmd->add_option("--data", flags.data, "Training data CSV")->required();
        if (needs_val) {
            cmd->add_option("--val", flags.val, "Validation data CSV");
            cmd->add_option("--split", flags.split, "Split plan CSV (index,role)");
        }
        cmd->add_option("--out", flags.out, "Output directory")->required();
        cmd->add_option("--seed", flags.seed, "Seed for every random stream");
        cmd->add_option("--jobs", flags.jobs, "Worker threads for the grid search");
        cmd->add_option("--kind", flags.kind, "Model kind: qml, mlr or rbf")
            ->check(CLI::IsMember({"qml", "mlr", "rbf"}));
    };

    auto *fit_cmd = app.add_subcommand("fit", "Train a model and write its report");
    add_common(fit_cmd, true);
    fit_cmd->get_option("--val")->excludes(fit_cmd->get_option("--split"));

    auto *cv_cmd = app.add_subcommand("cv", "k-fold cross-validation");
    add_common(cv_cmd, false);

    std::string model_path, predict_out;
    auto *predict_cmd = app.add_subcommand("predict", "Predict with a saved model");
    predict_cmd->add_option("--model", model_path, "Model file")->required();
    predict_cmd->add_option("--data", flags.data, "Descriptor CSV")->required();
    predict_cmd->add_option("--out", predict_out, "Output CSV (default: stdout)");

    std::size_t bench_seeds = 5, bench_iterations = 20000, bench_jobs = 1;
    std::string bench_out;
    auto *bench_cmd = app.add_subcommand("bench-fn", "One-dimensional benchmark functions");
    bench_cmd->add_option("--out", bench_out, "Output directory")->required();
    bench_cmd->add_option("--seeds", bench_seeds, "Seeds 1..N per task and unit")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--max-iterations", bench_iterations, "Nelder-Mead iteration cap");
    bench_cmd->add_option("--jobs", bench_jobs, "Worker threads");

    std::size_t max_n = 20;
    std::string cost_out;
    auto *cost_cmd = app.add_subcommand("cost-table", "Dense Ising operator cost estimates");
    cost_cmd->add_option("--max-n", max_n, "Largest qubit count (step 5)");
    cost_cmd->add_option("--out", cost_out, "Output CSV (default: stdout)");

    std::string split_out, split_method = "kennard-stone";
    std::optional<std::size_t> n_train;
    std::size_t folds = 5;
    std::uint64_t split_seed = 0;
    auto *split_cmd = app.add_subcommand("split", "Write a train/validation or fold plan");
    split_cmd->add_option("--data", flags.data, "Data CSV")->required();
    split_cmd->add_option("--out", split_out, "Plan CSV")->required();
    split_cmd->add_option("--method", split_method, "kennard-stone or kfold");
    split_cmd->add_option("--n-train", n_train, "Training rows (default: 80%)");
    split_cmd->add_option("--k", folds, "Number of folds");
    split_cmd->add_option("--seed", split_seed, "Shuffle seed");

    std::size_t sur_n = 221, sur_d = 5;
    std::uint64_t sur_seed = 7;
    std::string sur_out;
    auto *sur_cmd = app.add_subcommand("surrogate", "Write a synthetic descriptor dataset");
    sur_cmd->add_option("--n", sur_n, "Rows");
    sur_cmd->add_option("--d", sur_d, "Descriptors");
    sur_cmd->add_option("--seed", sur_seed, "Seed");
    sur_cmd->add_option("--out", sur_out, "Output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*fit_cmd) return cmd_fit(flags);
        if (*cv_cmd) return cmd_cv(flags);
        if (*predict_cmd) return cmd_predict(model_path, flags.data, predict_out);
        if (*bench_cmd) return cmd_bench(bench_out, bench_seeds, bench_iterations, bench_jobs);
        if (*cost_cmd) return cmd_cost_table(max_n, cost_out);
        if (*split_cmd) {
            return cmd_split(flags.data, split_out, split_method, n_train, folds, split_seed);
        }
        if (*sur_cmd) return cmd_surrogate(sur_n, sur_d, sur_seed, sur_out);
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
