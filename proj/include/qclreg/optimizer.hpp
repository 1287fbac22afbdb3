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
 * Nelder-Mead simplex minimization.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qclreg {

struct OptimizerOptions {
    std::size_t max_iterations = 20000;
    double f_tolerance = 1e-6; // max |f_i - f_best| over the simplex
    double x_tolerance = 1e-6; // max |x_i - x_best| componentwise
    double reflection = 1.0;   // alpha > 0
    double expansion = 2.0;    // gamma > 1
    double contraction = 0.5;  // 0 < rho < 1
    double shrink = 0.5;       // 0 < sigma < 1
    double initial_step = 0.1; // simplex edge along each axis

    void validate() const;
};

struct TracePoint {
    std::size_t iteration;
    double value;
};

struct OptimizationResult {
    std::vector<double> point;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
    /// Best simplex value after each iteration (entry 0 is the initial simplex).
    std::vector<TracePoint> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Stops when both the value spread and the vertex spread of the simplex
/// fall within tolerance, or after max_iterations. Throws
/// OptimizationError when the objective returns a non-finite value.
OptimizationResult nelder_mead(const Objective &objective, std::span<const double> start,
                               const OptimizerOptions &options = {});

} // namespace qclreg
