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

#include "qclreg/data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "qclreg/error.hpp"
#include "qclreg/rng.hpp"
#include "qclreg/text.hpp"

namespace qclreg {

void Dataset::validate() const {
    if (y.empty()) {
        throw ValidationError("dataset '" + source + "' has no rows");
    }
    if (descriptor_names.empty()) {
        throw ValidationError("dataset '" + source + "' has no descriptor columns");
    }
    if (x.size() != y.size() * descriptor_count()) {
        throw ValidationError("dataset '" + source + "' descriptor matrix shape mismatch");
    }
    std::set<std::string> seen;
    for (const auto &n : descriptor_names) {
        if (!seen.insert(n).second) {
            throw ValidationError("duplicate descriptor name '" + n + "'");
        }
    }
    for (double v : x) {
        if (!std::isfinite(v)) throw ValidationError("non-finite descriptor value");
    }
    for (double v : y) {
        if (!std::isfinite(v)) throw ValidationError("non-finite target value");
    }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    Dataset out;
    out.descriptor_names = descriptor_names;
    out.source = source;
    const std::size_t d = descriptor_count();
    out.x.reserve(indices.size() * d);
    out.y.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= size()) {
            throw ValidationError("row index " + std::to_string(i) + " out of range");
        }
        auto r = row(i);
        out.x.insert(out.x.end(), r.begin(), r.end());
        out.y.push_back(y[i]);
    }
    return out;
}

Dataset parse_csv(std::string_view text, std::string source, bool has_target) {
    const std::size_t tail = has_target ? 1 : 0;
    Dataset ds;
    ds.source = std::move(source);
    std::size_t line_no = 0;
    std::size_t columns = 0;
    std::size_t pos = 0;
    bool have_header = false;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        const auto cells = split(line, ',');
        if (!have_header) {
            if (cells.size() < 1 + tail) {
                throw ParseError(has_target
                                     ? "header needs at least one descriptor and a target column"
                                     : "header needs at least one descriptor column",
                                 line_no);
            }
            for (std::size_t c = 0; c + tail < cells.size(); ++c) {
                const auto name = trim(cells[c]);
                double probe;
                if (name.empty() || parse_double(name, probe)) {
                    throw ParseError("missing header row (column " + std::to_string(c + 1) +
                                         " is '" + std::string(name) + "')",
                                     line_no);
                }
                ds.descriptor_names.emplace_back(name);
            }
            columns = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " columns, found " +
                                 std::to_string(cells.size()),
                             line_no);
        }
        for (std::size_t c = 0; c < columns; ++c) {
            double v;
            if (!parse_double(cells[c], v) || !std::isfinite(v)) {
                const std::string col =
                    c + tail < columns ? ds.descriptor_names[c] : std::string("target");
                throw ParseError("column " + std::to_string(c + 1) + " (" + col +
                                     "): not a finite number: '" +
                                     std::string(trim(cells[c])) + "'",
                                 line_no);
            }
            if (c + tail < columns) {
                ds.x.push_back(v);
            } else {
                ds.y.push_back(v);
            }
        }
        if (!has_target) ds.y.push_back(0.0);
    }
    if (!have_header) {
        throw ParseError("empty file, missing header", line_no == 0 ? 1 : line_no);
    }
    ds.validate();
    return ds;
}

Dataset load_csv(const std::filesystem::path &path, bool has_target) {
    return parse_csv(read_file(path.string()), path.string(), has_target);
}

void write_csv(std::ostream &out, const Dataset &ds) {
    for (const auto &n : ds.descriptor_names) {
        out << n << ',';
    }
    out << "target\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (double v : ds.row(i)) {
            out << format_double(v) << ',';
        }
        out << format_double(ds.y[i]) << '\n';
    }
}

namespace {

Range column_range(const std::vector<double> &values, std::size_t start, std::size_t stride,
                   const std::string &name) {
    double lo = values[start], hi = values[start];
    for (std::size_t i = start; i < values.size(); i += stride) {
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
    }
    if (!(hi > lo)) {
        throw ValidationError("column '" + name + "' has zero range; cannot normalize");
    }
    return {lo, hi};
}

} // namespace

Normalization Normalization::fit(const Dataset &ds) {
    ds.validate();
    Normalization n;
    const std::size_t d = ds.descriptor_count();
    for (std::size_t j = 0; j < d; ++j) {
        n.features.push_back(column_range(ds.x, j, d, ds.descriptor_names[j]));
    }
    n.target = column_range(ds.y, 0, 1, "target");
    return n;
}

double Normalization::feature_to_unit(std::size_t j, double v) const {
    const Range &r = features.at(j);
    return 2.0 * (v - r.min) / (r.max - r.min) - 1.0;
}

double Normalization::feature_from_unit(std::size_t j, double u) const {
    const Range &r = features.at(j);
    return r.min + (u + 1.0) * 0.5 * (r.max - r.min);
}

double Normalization::target_to_unit(double v) const {
    return (v - target.min) / (target.max - target.min);
}

double Normalization::target_from_unit(double u) const {
    return target.min + u * (target.max - target.min);
}

std::vector<double> Normalization::features_to_unit(std::span<const double> raw) const {
    if (raw.size() != features.size()) {
        throw ValidationError("expected " + std::to_string(features.size()) +
                              " descriptors, got " + std::to_string(raw.size()));
    }
    std::vector<double> out(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        out[j] = feature_to_unit(j, raw[j]);
    }
    return out;
}

Dataset Normalization::apply(const Dataset &ds) const {
    if (ds.descriptor_count() != features.size()) {
        throw ValidationError("normalization built for " + std::to_string(features.size()) +
                              " descriptors applied to " +
                              std::to_string(ds.descriptor_count()));
    }
    Dataset out = ds;
    const std::size_t d = ds.descriptor_count();
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.x[i] = feature_to_unit(i % d, out.x[i]);
    }
    for (auto &v : out.y) {
        v = target_to_unit(v);
    }
    return out;
}

std::pair<Dataset, Normalization> normalize(const Dataset &ds) {
    Normalization n = Normalization::fit(ds);
    Dataset mapped = n.apply(ds);
    return {std::move(mapped), std::move(n)};
}

void SplitPlan::validate(std::size_t n) const {
    std::vector<int> seen(n, 0);
    auto mark = [&](std::size_t i) {
        if (i >= n) {
            throw ValidationError("split index " + std::to_string(i) + " out of range for " +
                                  std::to_string(n) + " rows");
        }
        if (seen[i]++) {
            throw ValidationError("split index " + std::to_string(i) + " assigned twice");
        }
    };
    for (auto i : train) mark(i);
    for (auto i : val) mark(i);
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) {
            throw ValidationError("split does not assign row " + std::to_string(i));
        }
    }
}

namespace {

double squared_distance(const Dataset &ds, std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t j = 0; j < ds.descriptor_count(); ++j) {
        const double d = ds.at(a, j) - ds.at(b, j);
        s += d * d;
    }
    return s;
}

} // namespace

SplitPlan kennard_stone_split(const Dataset &ds, std::size_t n_train) {
    const std::size_t n = ds.size();
    if (n_train < 2 || n_train > n) {
        throw ValidationError("Kennard-Stone needs 2 <= n_train <= N (n_train = " +
                              std::to_string(n_train) + ", N = " + std::to_string(n) + ")");
    }
    std::size_t first = 0, second = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = squared_distance(ds, i, j);
            if (d > best) {
                best = d;
                first = i;
                second = j;
            }
        }
    }

    std::vector<bool> chosen(n, false);
    std::vector<double> nearest(n, 0.0);
    SplitPlan plan;
    auto take = [&](std::size_t k) {
        chosen[k] = true;
        plan.train.push_back(k);
    };
    take(first);
    take(second);
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = std::min(squared_distance(ds, i, first), squared_distance(ds, i, second));
    }
    while (plan.train.size() < n_train) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!chosen[i] && (pick == n || nearest[i] > nearest[pick])) {
                pick = i;
            }
        }
        take(pick);
        for (std::size_t i = 0; i < n; ++i) {
            if (!chosen[i]) {
                nearest[i] = std::min(nearest[i], squared_distance(ds, i, pick));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i]) plan.val.push_back(i);
    }
    return plan;
}

std::vector<SplitPlan> kfold(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2 || k > n) {
        throw ValidationError("k-fold needs 2 <= k <= N (k = " + std::to_string(k) +
                              ", N = " + std::to_string(n) + ")");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng = Rng::stream(seed, "shuffle");
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
    }

    std::vector<SplitPlan> folds(k);
    std::size_t start = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t len = n / k + (f < n % k ? 1 : 0);
        std::vector<bool> in_fold(n, false);
        for (std::size_t i = start; i < start + len; ++i) {
            in_fold[order[i]] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            (in_fold[i] ? folds[f].val : folds[f].train).push_back(i);
        }
        start += len;
    }
    return folds;
}

void write_split_plan(std::ostream &out, const SplitPlan &plan) {
    const std::size_t n = plan.train.size() + plan.val.size();
    std::vector<const char *> role(n, "train");
    for (auto i : plan.val) role.at(i) = "val";
    out << "index,role\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << i << ',' << role[i] << '\n';
    }
}

SplitPlan parse_split_plan(std::string_view text) {
    SplitPlan plan;
    std::set<std::uint64_t> seen;
    std::size_t line_no = 0;
    bool header = true;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line, ',');
        if (header) {
            if (cells.size() != 2 || trim(cells[0]) != "index" || trim(cells[1]) != "role") {
                throw ParseError("split plan header must be 'index,role'", line_no);
            }
            header = false;
            continue;
        }
        std::uint64_t idx;
        if (cells.size() != 2 || !parse_uint(cells[0], idx)) {
            throw ParseError("expected '<index>,<train|val>'", line_no);
        }
        if (!seen.insert(idx).second) {
            throw ParseError("index " + std::to_string(idx) + " listed twice", line_no);
        }
        const auto role = trim(cells[1]);
        if (role == "train") {
            plan.train.push_back(idx);
        } else if (role == "val") {
            plan.val.push_back(idx);
        } else {
            throw ParseError("unknown role '" + std::string(role) + "'", line_no);
        }
    }
    if (header) {
        throw ParseError("empty split plan", 1);
    }
    return plan;
}

SplitPlan load_split_plan(const std::filesystem::path &path) {
    return parse_split_plan(read_file(path.string()));
}

void write_fold_plan(std::ostream &out, const std::vector<SplitPlan> &folds) {
    std::size_t n = 0;
    if (!folds.empty()) n = folds[0].train.size() + folds[0].val.size();
    std::vector<std::size_t> fold_of(n, 0);
    for (std::size_t f = 0; f < folds.size(); ++f) {
        for (auto i : folds[f].val) fold_of.at(i) = f;
    }
    out << "index,fold\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << i << ',' << fold_of[i] << '\n';
    }
}

Dataset synthesize_surrogate(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 10) {
        throw ValidationError("surrogate needs at least 10 rows");
    }
    if (d < 1) {
        throw ValidationError("surrogate needs at least one descriptor");
    }
    static const char *kNames[] = {"logKow", "pKa", "E_HOMO", "E_LUMO", "N_hdon"};
    static constexpr double kCenter[] = {2.5, 7.5, -9.2, -0.3, 1.5};
    static constexpr double kHalfSpan[] = {3.0, 3.0, 0.6, 0.9, 1.5};

    Dataset ds;
    ds.source = "surrogate(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                ",seed=" + std::to_string(seed) + ")";
    for (std::size_t j = 0; j < d; ++j) {
        ds.descriptor_names.push_back(j < 5 ? kNames[j] : "noise_" + std::to_string(j - 4));
    }

    Rng rng = Rng::stream(seed, "surrogate");
    std::vector<double> z(std::max<std::size_t>(d, 5));
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t j = 0; j < d; ++j) {
            z[j] = rng.uniform(-1.0, 1.0);
        }
        if (d >= 5) {
            // Donor count is an integer 0..3.
            z[4] = (std::round(kCenter[4] + kHalfSpan[4] * z[4]) - kCenter[4]) / kHalfSpan[4];
        }
        for (std::size_t j = 0; j < d; ++j) {
            ds.x.push_back(j < 5 ? kCenter[j] + kHalfSpan[j] * z[j] : z[j]);
        }
        const double latent = 0.50 * z[0] + 0.60 * z[0] * z[0] - 0.60 * z[1] * z[2] +
                              0.30 * z[3] - 0.35 * z[4] * z[4];
        ds.y.push_back(0.5 + 1.2 * latent + 0.10 * rng.normal());
    }
    return ds;
}

} // namespace qclreg
