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

#include "qclreg/metrics.hpp"

#include <cmath>
#include <string>

#include "qclreg/error.hpp"

namespace qclreg {

namespace {

void check_lengths(std::span<const double> y, std::span<const double> predicted) {
    if (y.size() != predicted.size()) {
        throw ValidationError("metric inputs differ in length (" + std::to_string(y.size()) +
                              " vs " + std::to_string(predicted.size()) + ")");
    }
    if (y.empty()) {
        throw ValidationError("metrics of an empty set are undefined");
    }
}

} // namespace

double mean_squared_error(std::span<const double> y, std::span<const double> predicted) {
    check_lengths(y, predicted);
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = y[i] - predicted[i];
        s += r * r;
    }
    return s / static_cast<double>(y.size());
}

double r_squared(std::span<const double> y, std::span<const double> predicted) {
    check_lengths(y, predicted);
    if (y.size() < 2) {
        throw ValidationError("R^2 needs at least two samples");
    }
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_tot += (y[i] - mean) * (y[i] - mean);
        ss_res += (y[i] - predicted[i]) * (y[i] - predicted[i]);
    }
    if (!(ss_tot > 0.0)) {
        throw ValidationError("R^2 is undefined for a target with zero variance");
    }
    return 1.0 - ss_res / ss_tot;
}

Metrics compute_metrics(std::span<const double> y, std::span<const double> predicted) {
    Metrics m;
    m.r2 = r_squared(y, predicted);
    m.mse = mean_squared_error(y, predicted);
    m.rms = std::sqrt(m.mse);
    return m;
}

} // namespace qclreg
