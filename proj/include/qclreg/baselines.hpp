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
 * Classical baselines: multiple linear regression and a Gaussian RBF network.
 */

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qclreg/data.hpp"

namespace qclreg {

struct MlrModel {
    std::vector<double> weights;
    double intercept = 0.0;

    double predict(std::span<const double> x) const;
};

/// Ordinary least squares with intercept. Requires N > d. Throws
/// NumericalError when the descriptor matrix is rank deficient.
MlrModel fit_mlr(const Dataset &train);

inline constexpr double kDefaultRbfRidge = 1e-6;
inline constexpr std::size_t kKMeansIterations = 20;

/// Gaussian RBF network exp(-|u - c|^2 / (2 sigma^2)) on min-max scaled
/// descriptors u in [-1, 1], with a linear output layer and intercept.
struct RbfModel {
    std::vector<Range> feature_ranges; // raw -> [-1, 1]
    std::vector<double> centers;       // k x d, row-major, scaled space
    double width = 1.0;
    std::vector<double> weights;
    double intercept = 0.0;
    double ridge = 0.0;

    std::size_t dims() const noexcept { return feature_ranges.size(); }
    std::size_t center_count() const noexcept { return weights.size(); }

    double predict(std::span<const double> x_raw) const;
};

/// Lloyd iterations from a farthest-point start whose first center is drawn
/// from the "kmeans" stream of the seed. Rows of `scaled` are points.
std::vector<double> kmeans_centers(const Dataset &scaled, std::size_t k, std::uint64_t seed,
                                   std::size_t iterations = kKMeansIterations);

/// Largest pairwise center distance / sqrt(2k), floored at 1e-6 (k = 1 gives
/// the floor).
double rbf_width(std::span<const double> centers, std::size_t k, std::size_t d);

/// k-means centers, shared width, ridge output layer. Throws
/// ValidationError when k > N.
RbfModel fit_rbf(const Dataset &train, std::size_t k, double ridge, std::uint64_t seed);

/// Output layer only, for explicitly given centers (scaled space) and width.
RbfModel fit_rbf_with_centers(const Dataset &train, std::vector<Range> feature_ranges,
                              std::vector<double> centers, double width, double ridge);

struct RbfSelection {
    RbfModel model;
    std::size_t centers = 0;
    /// (k, validation R^2) for every candidate tried.
    std::vector<std::pair<std::size_t, double>> scores;
};

/// Fits each k in candidates (k <= N) and keeps the best validation R^2,
/// smaller k on ties.
RbfSelection select_rbf(const Dataset &train, const Dataset &val,
                        std::span<const std::size_t> candidates,
                        double ridge = kDefaultRbfRidge, std::uint64_t seed = 0);

std::vector<double> predict_all(const MlrModel &m, const Dataset &ds);
std::vector<double> predict_all(const RbfModel &m, const Dataset &ds);

} // namespace qclreg
