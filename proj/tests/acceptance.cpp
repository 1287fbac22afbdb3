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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails. Criterion numbers given on the command
// line restrict the run to those criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>
#include <unistd.h>

#include "qclreg/ansatz.hpp"
#include "qclreg/baselines.hpp"
#include "qclreg/experiments.hpp"
#include "qclreg/metrics.hpp"
#include "qclreg/model.hpp"
#include "qclreg/rng.hpp"
#include "qclreg/statevector.hpp"
#include "qclreg/training.hpp"
#include "support/dense_oracle.hpp"
#include "support/fit_oracles.hpp"

using namespace qclreg;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string r3(double v) { return fmt("%.3f", v); }

// --- 1: benchmark functions ------------------------------------------------

Outcome bench_functions() {
    const auto t0 = Clock::now();
    BenchOptions main;
    main.units = {AnsatzUnit::Ising, AnsatzUnit::CNOT};
    BenchOptions cz;
    cz.tasks = {BenchTask::Square};
    cz.units = {AnsatzUnit::CZ};
    auto rows = run_bench(main);
    for (const auto &r : run_bench(cz)) rows.push_back(r);
    const double secs = seconds_since(t0);

    auto med = [&](BenchTask task, AnsatzUnit unit) {
        std::vector<double> v;
        for (const auto &r : rows)
            if (r.task == task && r.unit == unit) v.push_back(r.r2_train);
        return median(v);
    };
    Outcome out{true, ""};
    std::ostringstream d;
    for (auto unit : {AnsatzUnit::Ising, AnsatzUnit::CNOT}) {
        for (auto task : {BenchTask::Square, BenchTask::Exp, BenchTask::Sin}) {
            const double m = med(task, unit);
            d << to_string(task) << '/' << to_string(unit) << '=' << r3(m) << ' ';
            out.pass = out.pass && m >= 0.97;
        }
    }
    const double abs_cnot = med(BenchTask::Abs, AnsatzUnit::CNOT);
    d << "|x|/cnot=" << r3(abs_cnot) << ' ';
    out.pass = out.pass && abs_cnot >= 0.90;
    const double sq_cz = med(BenchTask::Square, AnsatzUnit::CZ);
    const double sq_cnot = med(BenchTask::Square, AnsatzUnit::CNOT);
    d << "x^2/cz=" << r3(sq_cz) << ' ';
    out.pass = out.pass && sq_cz <= sq_cnot - 0.05;
    d << "time=" << fmt("%.0f", secs) << "s";
    out.pass = out.pass && secs < 600.0;
    out.detail = d.str();
    return out;
}

// --- 2: cost table ---------------------------------------------------------

Outcome cost_table() {
    const std::string expected = "n,matrix_dim,relative_cost,memory_mb\n"
                                 "5,32,1,0.05\n"
                                 "10,1024,32768,48\n"
                                 "15,32768,1073741824,49152\n"
                                 "20,1048576,35184372088832,50331648\n";
    bool exact = cost_table_csv(20) == expected;
    for (std::size_t n : {5u, 10u, 15u, 20u}) {
        const auto c = trotter_cost(n);
        exact = exact && c.matrix_dim == (std::uint64_t{1} << n) &&
                c.relative_cost == std::ldexp(1.0, static_cast<int>(3 * n) - 15) &&
                c.memory_mb == 16.0 * std::ldexp(1.0, static_cast<int>(2 * n)) * 3.0 /
                                   (1024.0 * 1024.0);
    }
    return {exact, "rows n=5,10,15,20"};
}

// --- 3: simulator oracle ---------------------------------------------------

Outcome simulator_oracle() {
    const auto t0 = Clock::now();
    Rng rng(2024);
    double worst_state = 0.0, worst_norm = 0.0;
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = 1 + rng.below(4);
        const auto gates = oracle::random_circuit(rng, n, 1 + rng.below(40));
        auto s = oracle::random_state(rng, n);
        const oracle::Vec expected = oracle::circuit_matrix(gates, n) * oracle::to_vec(s);
        apply_gates(s, gates);
        worst_state = std::max(worst_state, oracle::max_deviation(s, expected));
        worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
    }
    constexpr double pi = std::numbers::pi;
    double worst_shift = 0.0;
    for (int probe = 0; probe < 50; ++probe) {
        const std::size_t n = 1 + rng.below(4);
        const auto prefix = oracle::random_circuit(rng, n, 10);
        const auto suffix = oracle::random_circuit(rng, n, 10);
        const std::size_t q = rng.below(n);
        const auto kind = rng.below(3);
        const std::size_t measured = rng.below(n);
        const double theta = rng.uniform(-pi, pi);
        auto z = [&](double t) {
            auto s = StateVector::zero(n);
            apply_gates(s, prefix);
            apply_gate(s, kind == 0 ? Gate::rx(q, t) : kind == 1 ? Gate::ry(q, t) : Gate::rz(q, t));
            apply_gates(s, suffix);
            worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
            return expectation_z(s, measured);
        };
        const double shift = (z(theta + pi / 2) - z(theta - pi / 2)) / 2;
        const double h = 1e-5;
        const double fd = (z(theta + h) - z(theta - h)) / (2 * h);
        worst_shift = std::max(worst_shift, std::abs(shift - fd));
    }
    const double secs = seconds_since(t0);
    return {worst_state < 1e-10 && worst_norm < 1e-10 && worst_shift < 1e-6 && secs < 60.0,
            "state=" + fmt("%.1e", worst_state) + " norm=" + fmt("%.1e", worst_norm) +
                " shift=" + fmt("%.1e", worst_shift) + " time=" + fmt("%.1f", secs) + "s"};
}

// --- 4: counting -----------------------------------------------------------

Outcome counting() {
    std::size_t cases = 0;
    bool ok = true;
    for (auto unit : {AnsatzUnit::CNOT, AnsatzUnit::CZ}) {
        for (std::size_t n = 1; n <= 15; ++n) {
            for (std::size_t l = 1; l <= 12; ++l) {
                AnsatzSpec spec;
                spec.unit = unit;
                spec.qubits = n;
                spec.layers = l;
                ok = ok && param_count(spec) == 3 * n * l && twoqubit_count(spec) == n * l;
                ++cases;
            }
        }
    }
    return {ok, std::to_string(cases) + " (unit, n, L) cases"};
}

// --- 5: closed-form beta ---------------------------------------------------

Outcome beta_closed_form() {
    Rng rng(55);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng.below(8);
        const std::size_t n = m + rng.below(201 - m);
        std::vector<double> e(m * n), y(n);
        for (auto &v : e) v = rng.uniform(-1.0, 1.0);
        for (auto &v : y) v = rng.uniform(0.0, 1.0);
        const auto beta = solve_beta(e, m, y);
        const Eigen::VectorXd ref = oracle::pinv_beta(e, m, y);
        for (std::size_t q = 0; q < m; ++q) worst = std::max(worst, std::abs(beta[q] - ref(q)));
    }
    return {worst < 1e-8, "max |beta - pinv| = " + fmt("%.1e", worst)};
}

// --- 6: Kennard-Stone ------------------------------------------------------

Outcome kennard_stone() {
    Rng rng(66);
    int agree = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng.below(23);
        const std::size_t d = 1 + rng.below(5);
        Dataset ds;
        for (std::size_t j = 0; j < d; ++j) ds.descriptor_names.push_back("c" + std::to_string(j));
        for (std::size_t i = 0; i < n * d; ++i) ds.x.push_back(rng.uniform(-1.0, 1.0));
        ds.y.assign(n, 0.0);
        const std::size_t n_train = 2 + rng.below(n - 1);
        if (kennard_stone_split(ds, n_train).train == oracle::ks_greedy(ds, n_train)) ++agree;
    }
    const auto unit = normalize(synthesize_surrogate(221, 5, 1)).first;
    const auto plan = kennard_stone_split(unit, 180);
    return {agree == 50 && plan.train.size() == 180 && plan.val.size() == 41,
            std::to_string(agree) + "/50 trials agree, surrogate split " +
                std::to_string(plan.train.size()) + "/" + std::to_string(plan.val.size())};
}

// --- 7: surrogate comparison -----------------------------------------------

constexpr std::uint64_t kSeeds[] = {1, 2, 3};

Outcome surrogate_models() {
    const auto t0 = Clock::now();
    std::vector<double> qml_val, mlr_val, qml_gap, rbf_gap;
    for (auto seed : kSeeds) {
        const auto raw = synthesize_surrogate(221, 5, seed);
        const auto plan = kennard_stone_split(normalize(raw).first, 180);
        const auto train = raw.subset(plan.train);
        const auto val = raw.subset(plan.val);

        const auto mlr = fit_mlr(train);
        mlr_val.push_back(r_squared(val.y, predict_all(mlr, val)));

        FitConfig hybrid;
        hybrid.encoder_id = "A2-A2-CNOT";
        hybrid.readout = ReadoutSpec{ReadoutMode::Hybrid, 0, 4, 4.0};
        hybrid.grid.layers = {3};
        hybrid.grid.scales = {4.0};
        hybrid.optimizer.max_iterations = 20000;
        hybrid.seed = seed;
        qml_val.push_back(fit(hybrid, train, val).report.val.original.r2);

        RunConfig cv;
        cv.fit.encoder_id = "A2-A2-CNOT";
        cv.fit.grid.layers = {3};
        cv.fit.grid.scales = {1.0};
        cv.fit.optimizer.max_iterations = 5000;
        cv.fit.seed = seed;
        const auto pure = cross_validate(cv, raw, ModelKind::Qml);
        const auto rbf = cross_validate(cv, raw, ModelKind::Rbf);
        qml_gap.push_back(pure.mean_r2_train - pure.mean_r2_val);
        rbf_gap.push_back(rbf.mean_r2_train - rbf.mean_r2_val);
    }
    const double qv = median(qml_val), mv = median(mlr_val);
    const double qg = median(qml_gap), rg = median(rbf_gap);
    return {qv > mv && qg < rg,
            "R2_val hybrid=" + r3(qv) + " mlr=" + r3(mv) + "; cv gap pure=" + r3(qg) +
                " rbf=" + r3(rg) + " time=" + fmt("%.0f", seconds_since(t0)) + "s"};
}

// --- 8: encoder comparison -------------------------------------------------

Outcome encoder_comparison() {
    const auto t0 = Clock::now();
    auto r2_train = [](const std::string &encoder) {
        std::vector<double> r2;
        for (auto seed : kSeeds) {
            const auto raw = synthesize_surrogate(221, 5, seed);
            const auto plan = kennard_stone_split(normalize(raw).first, 180);
            const auto train = raw.subset(plan.train);
            FitConfig c;
            c.encoder_id = encoder;
            c.copies = 2;
            c.grid.layers = {3};
            c.grid.scales = {1.0};
            c.optimizer.max_iterations = 3000;
            c.seed = seed;
            r2.push_back(fit(c, train, train).report.train.original.r2);
        }
        return median(r2);
    };
    const double entangled = r2_train("A2-A2-CNOT");
    const double plain = r2_train("M");
    return {entangled >= plain, "median R2_train A2-A2-CNOT=" + r3(entangled) +
                                    " M=" + r3(plain) + " time=" +
                                    fmt("%.0f", seconds_since(t0)) + "s"};
}

// --- 9: determinism --------------------------------------------------------

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string &args) {
    const std::string cmd = std::string(QCLREG_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("qclreg_accept_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto data = dir / "data.csv";
    const auto cfg = dir / "run.cfg";
    std::ofstream(cfg) << "seed = 11\nencoder.id = A2-A2-CNOT\nansatz.layers = 2-3\n"
                          "readout.mode = hybrid\nreadout.m = 3\nreadout.scale = 2 4\n"
                          "optimizer.max_iterations = 400\n";
    bool ok = run_cli("surrogate --n 80 --seed 4 --out " + data.string()) == 0;
    const std::string common = "fit --config " + cfg.string() + " --data " + data.string();
    ok = ok && run_cli(common + " --out " + (dir / "a").string()) == 0;
    ok = ok && run_cli(common + " --jobs 4 --out " + (dir / "b").string()) == 0;
    int identical = 0;
    for (const char *name : {"report.json", "predictions.csv", "model.txt"}) {
        const std::string a = slurp(dir / "a" / name);
        if (!a.empty() && a == slurp(dir / "b" / name)) ++identical;
    }
    fs::remove_all(dir);
    return {ok && identical == 3, std::to_string(identical) + "/3 output files identical"};
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, bench_functions},   {2, cost_table},       {3, simulator_oracle},
        {4, counting},          {5, beta_closed_form}, {6, kennard_stone},
        {7, surrogate_models},  {8, encoder_comparison}, {9, determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failures = 0;
    for (const auto &[id, check] : criteria) {
        if (!only.empty() && !only.count(id)) continue;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
