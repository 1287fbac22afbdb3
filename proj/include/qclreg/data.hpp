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
 * Datasets, normalization and train/validation splitting.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qclreg {

/// N rows of d descriptors (row-major) plus one target per row.
struct Dataset {
    std::vector<std::string> descriptor_names;
    std::vector<double> x;
    std::vector<double> y;
    std::string source;

    std::size_t size() const noexcept { return y.size(); }
    std::size_t descriptor_count() const noexcept { return descriptor_names.size(); }

    std::span<const double> row(std::size_t i) const {
        return {x.data() + i * descriptor_count(), descriptor_count()};
    }
    double at(std::size_t i, std::size_t j) const { return x[i * descriptor_count() + j]; }

    /// Throws ValidationError unless N >= 1, shapes agree, names are unique
    /// and every entry is finite.
    void validate() const;

    Dataset subset(std::span<const std::size_t> indices) const;
};

/// UTF-8 CSV with a header row; the last column is the target.
/// Without a target column every y is 0.
Dataset parse_csv(std::string_view text, std::string source = "<memory>",
                  bool has_target = true);
Dataset load_csv(const std::filesystem::path &path, bool has_target = true);
void write_csv(std::ostream &out, const Dataset &ds);

struct Range {
    double min = 0.0;
    double max = 1.0;
};

/// Min-max constants: descriptors map to [-1, 1], the target to [0, 1].
struct Normalization {
    std::vector<Range> features;
    Range target;

    /// Throws ValidationError on a zero-range column.
    static Normalization fit(const Dataset &ds);

    double feature_to_unit(std::size_t j, double v) const;
    double feature_from_unit(std::size_t j, double u) const;
    double target_to_unit(double v) const;
    double target_from_unit(double u) const;

    std::vector<double> features_to_unit(std::span<const double> raw) const;
    Dataset apply(const Dataset &ds) const;
};

/// Fits constants on ds and returns the mapped dataset with them.
std::pair<Dataset, Normalization> normalize(const Dataset &ds);

struct SplitPlan {
    std::vector<std::size_t> train;
    std::vector<std::size_t> val;

    /// Throws ValidationError unless train and val are disjoint and cover 0..n-1.
    void validate(std::size_t n) const;
};

/// Maximin selection of n_train rows by Euclidean distance between rows of
/// ds.x (callers pass normalized descriptors). Ties go to the lowest index.
SplitPlan kennard_stone_split(const Dataset &ds, std::size_t n_train);

/// Seeded Fisher-Yates shuffle, then contiguous folds; the first N mod k
/// folds get one extra row.
std::vector<SplitPlan> kfold(std::size_t n, std::size_t k, std::uint64_t seed);

/// Columns index,role with role in {train, val}, sorted by index.
void write_split_plan(std::ostream &out, const SplitPlan &plan);
SplitPlan parse_split_plan(std::string_view text);
SplitPlan load_split_plan(const std::filesystem::path &path);

/// Columns index,fold.
void write_fold_plan(std::ostream &out, const std::vector<SplitPlan> &folds);

/// Synthetic stand-in for a phenol toxicity table. Row i draws latent
/// z_j ~ U[-1, 1] from the "surrogate" stream and sets
///   logKow = 2.5 + 3 z0, pKa = 7.5 + 3 z1, E_HOMO = -9.2 + 0.6 z2,
///   E_LUMO = -0.3 + 0.9 z3, N_hdon = round(1.5 + 1.5 z4) in {0..3},
///   noise_k = z_(4+k) for d > 5,
///   y = 0.5 + 1.2 (0.5 z0 + 0.6 z0^2 - 0.6 z1 z2 + 0.3 z3 - 0.35 z4^2)
///       + 0.1 N(0, 1),
/// with z4 snapped to the donor count. Missing z_j (d < 5) are 0.
Dataset synthesize_surrogate(std::size_t n, std::size_t d, std::uint64_t seed);

} // namespace qclreg
