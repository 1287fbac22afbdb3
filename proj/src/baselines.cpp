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

#include "qclreg/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qclreg/error.hpp"
#include "qclreg/metrics.hpp"
#include "qclreg/rng.hpp"

namespace qclreg {

namespace {

constexpr double kMlrJitter = 1e-12;
constexpr double kMinWidth = 1e-6;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += (a[j] - b[j]) * (a[j] - b[j]);
    }
    return s;
}

std::vector<Range> fit_feature_ranges(const Dataset &ds) {
    std::vector<Range> ranges;
    const std::size_t d = ds.descriptor_count();
    for (std::size_t j = 0; j < d; ++j) {
        Range r{ds.at(0, j), ds.at(0, j)};
        for (std::size_t i = 1; i < ds.size(); ++i) {
            r.min = std::min(r.min, ds.at(i, j));
            r.max = std::max(r.max, ds.at(i, j));
        }
        if (!(r.max > r.min)) {
            throw ValidationError("descriptor '" + ds.descriptor_names[j] +
                                  "' has zero range; cannot scale for the RBF network");
        }
        ranges.push_back(r);
    }
    return ranges;
}

std::vector<double> scale_row(const std::vector<Range> &ranges, std::span<const double> x) {
    if (x.size() != ranges.size()) {
        throw ValidationError("expected " + std::to_string(ranges.size()) +
                              " descriptors, got " + std::to_string(x.size()));
    }
    std::vector<double> u(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        u[j] = 2.0 * (x[j] - ranges[j].min) / (ranges[j].max - ranges[j].min) - 1.0;
    }
    return u;
}

Dataset scale_dataset(const std::vector<Range> &ranges, const Dataset &ds) {
    Dataset out = ds;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto u = scale_row(ranges, ds.row(i));
        std::copy(u.begin(), u.end(), out.x.begin() + static_cast<std::ptrdiff_t>(i * u.size()));
    }
    return out;
}

double gaussian(std::span<const double> u, std::span<const double> c, double width) {
    return std::exp(-squared_distance(u, c) / (2.0 * width * width));
}

} // namespace

double MlrModel::predict(std::span<const double> x) const {
    if (x.size() != weights.size()) {
        throw ValidationError("MLR expects " + std::to_string(weights.size()) +
                              " descriptors, got " + std::to_string(x.size()));
    }
    double y = intercept;
    for (std::size_t j = 0; j < x.size(); ++j) y += weights[j] * x[j];
    return y;
}

MlrModel fit_mlr(const Dataset &train) {
    train.validate();
    const std::size_t n = train.size(), d = train.descriptor_count();
    if (n <= d) {
        throw ValidationError("MLR needs more rows than descriptors (N = " + std::to_string(n) +
                              ", d = " + std::to_string(d) + ")");
    }
    const auto N = static_cast<Eigen::Index>(n), D = static_cast<Eigen::Index>(d);
    Eigen::MatrixXd x(N, D);
    Eigen::VectorXd y(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        for (Eigen::Index j = 0; j < D; ++j) {
            x(i, j) = train.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
        y(i) = train.y[static_cast<std::size_t>(i)];
    }
    const Eigen::RowVectorXd xmean = x.colwise().mean();
    const double ymean = y.mean();
    const Eigen::MatrixXd xc = x.rowwise() - xmean;
    const Eigen::VectorXd yc = y.array() - ymean;

    Eigen::MatrixXd gram = xc.transpose() * xc;
    gram.diagonal().array() += kMlrJitter;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success || ldlt.rcond() < 1e-14) {
        throw NumericalError("MLR normal equations are singular (collinear descriptors)");
    }
    const Eigen::VectorXd w = ldlt.solve(xc.transpose() * yc);
    if (!w.allFinite()) {
        throw NumericalError("MLR solution is not finite");
    }
    MlrModel m;
    m.weights.assign(w.data(), w.data() + w.size());
    m.intercept = ymean - xmean.dot(w);
    return m;
}

double RbfModel::predict(std::span<const double> x_raw) const {
    const auto u = scale_row(feature_ranges, x_raw);
    const std::size_t d = dims();
    double y = intercept;
    for (std::size_t c = 0; c < center_count(); ++c) {
        y += weights[c] * gaussian(u, {centers.data() + c * d, d}, width);
    }
    return y;
}

std::vector<double> kmeans_centers(const Dataset &scaled, std::size_t k, std::uint64_t seed,
                                   std::size_t iterations) {
    const std::size_t n = scaled.size(), d = scaled.descriptor_count();
    if (k < 1 || k > n) {
        throw ValidationError("k-means needs 1 <= k <= N (k = " + std::to_string(k) +
                              ", N = " + std::to_string(n) + ")");
    }
    std::vector<double> centers;
    centers.reserve(k * d);
    auto add = [&](std::size_t i) {
        auto r = scaled.row(i);
        centers.insert(centers.end(), r.begin(), r.end());
    };
    Rng rng = Rng::stream(seed, "kmeans");
    const std::size_t first = rng.below(n);
    add(first);
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = squared_distance(scaled.row(i), scaled.row(first));
    }
    for (std::size_t c = 1; c < k; ++c) {
        const std::size_t pick = static_cast<std::size_t>(
            std::max_element(nearest.begin(), nearest.end()) - nearest.begin());
        add(pick);
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(scaled.row(i), scaled.row(pick)));
        }
    }

    std::vector<std::size_t> assign(n);
    std::vector<double> sums(k * d);
    std::vector<std::size_t> counts(k);
    for (std::size_t it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double best = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
                const double dist = squared_distance(scaled.row(i), {centers.data() + c * d, d});
                if (c == 0 || dist < best) {
                    best = dist;
                    assign[i] = c;
                }
            }
        }
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[assign[i]];
            for (std::size_t j = 0; j < d; ++j) sums[assign[i] * d + j] += scaled.at(i, j);
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                centers[c * d + j] = sums[c * d + j] / static_cast<double>(counts[c]);
            }
        }
    }
    return centers;
}

double rbf_width(std::span<const double> centers, std::size_t k, std::size_t d) {
    if (k < 2) return kMinWidth;
    double widest = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            widest = std::max(widest, squared_distance(centers.subspan(a * d, d),
                                                       centers.subspan(b * d, d)));
        }
    }
    const double w = std::sqrt(widest) / std::sqrt(2.0 * static_cast<double>(k));
    return std::max(w, kMinWidth);
}

RbfModel fit_rbf_with_centers(const Dataset &train, std::vector<Range> feature_ranges,
                              std::vector<double> centers, double width, double ridge) {
    train.validate();
    const std::size_t n = train.size(), d = train.descriptor_count();
    if (feature_ranges.size() != d || centers.empty() || centers.size() % d != 0) {
        throw ValidationError("RBF centers do not match the descriptor count");
    }
    if (!(width > 0.0)) throw ValidationError("RBF width must be positive");
    if (!(ridge >= 0.0)) throw ValidationError("RBF ridge must be non-negative");
    const std::size_t k = centers.size() / d;

    RbfModel m;
    m.feature_ranges = std::move(feature_ranges);
    m.centers = std::move(centers);
    m.width = width;
    m.ridge = ridge;

    const Dataset scaled = scale_dataset(m.feature_ranges, train);
    const auto N = static_cast<Eigen::Index>(n), K = static_cast<Eigen::Index>(k);
    // Ridge least squares as an augmented system; the intercept column is
    // not penalized.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(N + K, K + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(N + K);
    for (std::size_t i = 0; i < n; ++i) {
        const auto I = static_cast<Eigen::Index>(i);
        for (std::size_t c = 0; c < k; ++c) {
            a(I, static_cast<Eigen::Index>(c)) =
                gaussian(scaled.row(i), {m.centers.data() + c * d, d}, width);
        }
        a(I, K) = 1.0;
        b(I) = train.y[i];
    }
    const double root = std::sqrt(ridge);
    for (Eigen::Index c = 0; c < K; ++c) a(N + c, c) = root;
    const Eigen::VectorXd w = a.colPivHouseholderQr().solve(b);
    if (!w.allFinite()) {
        throw NumericalError("RBF output layer solution is not finite");
    }
    m.weights.assign(w.data(), w.data() + K);
    m.intercept = w(K);
    return m;
}

RbfModel fit_rbf(const Dataset &train, std::size_t k, double ridge, std::uint64_t seed) {
    train.validate();
    if (k < 1 || k > train.size()) {
        throw ValidationError("RBF needs 1 <= k <= N (k = " + std::to_string(k) +
                              ", N = " + std::to_string(train.size()) + ")");
    }
    auto ranges = fit_feature_ranges(train);
    const Dataset scaled = scale_dataset(ranges, train);
    auto centers = kmeans_centers(scaled, k, seed);
    const double width = rbf_width(centers, k, train.descriptor_count());
    return fit_rbf_with_centers(train, std::move(ranges), std::move(centers), width, ridge);
}

RbfSelection select_rbf(const Dataset &train, const Dataset &val,
                        std::span<const std::size_t> candidates, double ridge,
                        std::uint64_t seed) {
    RbfSelection sel;
    double best = 0.0;
    bool any = false;
    for (std::size_t k : candidates) {
        if (k < 1 || k > train.size()) continue;
        RbfModel m = fit_rbf(train, k, ridge, seed);
        const double r2 = r_squared(val.y, predict_all(m, val));
        sel.scores.emplace_back(k, r2);
        if (!any || r2 > best || (r2 == best && k < sel.centers)) {
            best = r2;
            sel.model = std::move(m);
            sel.centers = k;
            any = true;
        }
    }
    if (!any) {
        throw ValidationError("no RBF center count in the candidate list fits the training set");
    }
    return sel;
}

std::vector<double> predict_all(const MlrModel &m, const Dataset &ds) {
    std::vector<double> out;
    out.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) out.push_back(m.predict(ds.row(i)));
    return out;
}

std::vector<double> predict_all(const RbfModel &m, const Dataset &ds) {
    std::vector<double> out;
    out.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) out.push_back(m.predict(ds.row(i)));
    return out;
}

} // namespace qclreg
