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
 * Versioned text format for trained models.
 *
 * The first line is "qclreg-model 1"; the rest are `section.key = value`
 * lines. Real arrays are space separated with 17 significant digits, so a
 * saved model predicts bit-identically after loading.
 */

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qclreg/baselines.hpp"
#include "qclreg/model.hpp"

namespace qclreg {

inline constexpr std::string_view kModelMagic = "qclreg-model";
inline constexpr int kModelFormatVersion = 1;

struct StoredModel {
    std::vector<std::string> descriptor_names;
    std::variant<QmlModel, MlrModel, RbfModel> model;

    std::string_view kind() const noexcept;
    /// Prediction in original units.
    double predict(std::span<const double> x_raw) const;
};

std::string serialize_model(const StoredModel &stored);
StoredModel parse_model(std::string_view text);

void save_model(const std::string &path, const StoredModel &stored);
StoredModel load_model(const std::string &path);

} // namespace qclreg
