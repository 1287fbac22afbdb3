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
 * Regression metrics. QML models and the classical baselines report through
 * these functions only.
 */

#pragma once

#include <span>

namespace qclreg {

/// 1 - SS_res / SS_tot. Throws ValidationError for N < 2, a length mismatch
/// or a constant y.
double r_squared(std::span<const double> y, std::span<const double> predicted);

double mean_squared_error(std::span<const double> y, std::span<const double> predicted);

struct Metrics {
    double r2 = 0.0;
    double mse = 0.0;
    double rms = 0.0;
};

Metrics compute_metrics(std::span<const double> y, std::span<const double> predicted);

} // namespace qclreg
