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

#include "qclreg/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qclreg/error.hpp"

namespace qclreg {

void OptimizerOptions::validate() const {
    if (!(reflection > 0.0)) throw ValidationError("reflection coefficient must be > 0");
    if (!(expansion > 1.0)) throw ValidationError("expansion coefficient must be > 1");
    if (!(contraction > 0.0 && contraction < 1.0)) {
        throw ValidationError("contraction coefficient must be in (0, 1)");
    }
    if (!(shrink > 0.0 && shrink < 1.0)) {
        throw ValidationError("shrink coefficient must be in (0, 1)");
    }
    if (!(initial_step > 0.0) || !std::isfinite(initial_step)) {
        throw ValidationError("initial simplex step must be positive");
    }
    if (!(f_tolerance >= 0.0) || !(x_tolerance >= 0.0)) {
        throw ValidationError("tolerances must be non-negative");
    }
}

OptimizationResult nelder_mead(const Objective &objective, std::span<const double> start,
                               const OptimizerOptions &options) {
    options.validate();
    const std::size_t n = start.size();
    if (n == 0) {
        throw ValidationError("Nelder-Mead needs at least one parameter");
    }

    OptimizationResult result;
    auto eval = [&](const std::vector<double> &x) {
        const double v = objective(x);
        ++result.evaluations;
        if (!std::isfinite(v)) {
            throw OptimizationError("objective returned a non-finite value", x);
        }
        return v;
    };

    std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(start.begin(), start.end()));
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += options.initial_step;
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            s2[i] = std::move(simplex[order[i]]);
            v2[i] = values[order[i]];
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };
    sort_simplex();
    result.trace.push_back({0, values[0]});

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto affine = [&](std::vector<double> &out, double t, const std::vector<double> &toward) {
        // out = centroid + t * (toward - centroid)
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = centroid[j] + t * (toward[j] - centroid[j]);
        }
    };

    while (result.iterations < options.max_iterations) {
        double fspread = 0.0, xspread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            fspread = std::max(fspread, std::abs(values[i] - values[0]));
            for (std::size_t j = 0; j < n; ++j) {
                xspread = std::max(xspread, std::abs(simplex[i][j] - simplex[0][j]));
            }
        }
        if (fspread <= options.f_tolerance && xspread <= options.x_tolerance) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
        }
        for (auto &c : centroid) c /= static_cast<double>(n);

        const std::vector<double> &worst = simplex[n];
        affine(xr, -options.reflection, worst);
        const double fr = eval(xr);

        bool do_shrink = false;
        if (fr < values[0]) {
            affine(xe, -options.reflection * options.expansion, worst);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            simplex[n] = xr;
            values[n] = fr;
        } else if (fr < values[n]) {
            affine(xc, options.contraction, xr);
            const double fc = eval(xc);
            if (fc <= fr) {
                simplex[n] = xc;
                values[n] = fc;
            } else {
                do_shrink = true;
            }
        } else {
            affine(xc, options.contraction, worst);
            const double fc = eval(xc);
            if (fc < values[n]) {
                simplex[n] = xc;
                values[n] = fc;
            } else {
                do_shrink = true;
            }
        }

        if (do_shrink) {
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    simplex[i][j] = simplex[0][j] + options.shrink * (simplex[i][j] - simplex[0][j]);
                }
                values[i] = eval(simplex[i]);
            }
        }
        sort_simplex();
        result.trace.push_back({result.iterations, values[0]});
    }

    result.point = simplex[0];
    result.value = values[0];
    return result;
}

} // namespace qclreg
