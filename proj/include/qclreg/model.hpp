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
 * QML regression model: encoder, ansatz and Z-expectation readout.
 *
 * Pure readout predicts f <Z_q0>. Hybrid readout measures the first M qubits,
 * forms m_q = f <Z_q> and predicts sum_q beta_q m_q, with beta solved in
 * closed form by least squares on the training set. All targets seen by the
 * circuit are min-max normalized to [0, 1]; predictions are never clamped.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclreg/ansatz.hpp"
#include "qclreg/circuit.hpp"
#include "qclreg/data.hpp"
#include "qclreg/encoders.hpp"

namespace qclreg {

enum class ReadoutMode { Pure, Hybrid };

std::string_view to_string(ReadoutMode mode);
ReadoutMode parse_readout_mode(std::string_view token);

inline constexpr double kBetaRidge = 1e-10;

struct ReadoutSpec {
    ReadoutMode mode = ReadoutMode::Pure;
    std::size_t measured_qubit = 0; // pure
    std::size_t measured_count = 1; // hybrid M, measures qubits 0..M-1
    double scale = 1.0;             // f

    /// Number of expectations the readout consumes.
    std::size_t measured() const noexcept {
        return mode == ReadoutMode::Pure ? 1 : measured_count;
    }
    void validate(std::size_t qubits) const;
};

struct QmlModel {
    EncoderSpec encoder;
    AnsatzSpec ansatz;
    ReadoutSpec readout;
    std::vector<double> theta;
    std::vector<double> beta; // hybrid only, length M
    std::vector<std::string> descriptor_names;
    Normalization normalization;
    std::uint64_t seed = 0;

    void validate() const;
};

/// beta* = (E E^T + eps I)^{-1} E y for the M x N row-major expectation
/// matrix E, followed by one refinement step against the unjittered normal
/// equations. Throws ValidationError when M > N.
std::vector<double> solve_beta(std::span<const double> expectations, std::size_t m,
                               std::span<const double> y, double ridge = kBetaRidge);

/// Mean squared residual of y against E^T beta.
double hybrid_residual(std::span<const double> expectations, std::size_t m,
                       std::span<const double> y, std::span<const double> beta);

/// Runs encoded states through an ansatz for a fixed dataset. The encoded
/// states U_Phi(x)|0> do not depend on theta and are computed once.
class CircuitEvaluator {
  public:
    /// normalized: descriptors already mapped to the encoder range.
    CircuitEvaluator(const EncoderSpec &encoder, std::shared_ptr<const Ansatz> ansatz,
                     const ReadoutSpec &readout, const Dataset &normalized);

    std::size_t size() const noexcept { return encoded_.size(); }
    const ReadoutSpec &readout() const noexcept { return readout_; }

    /// Row-major (measured x N) table of f <Z_q>.
    std::vector<double> scaled_expectations(std::span<const double> theta);

    /// Normalized predictions. beta is ignored in pure mode.
    std::vector<double> predict(std::span<const double> theta, std::span<const double> beta);

    /// Training loss against the normalized targets. In hybrid mode beta is
    /// re-solved on every call and kept in last_beta().
    double loss(std::span<const double> theta);

    const std::vector<double> &last_beta() const noexcept { return beta_; }

  private:
    std::shared_ptr<const Ansatz> ansatz_;
    ReadoutSpec readout_;
    std::vector<StateVector> encoded_;
    std::vector<double> targets_;
    std::vector<double> beta_;
    std::vector<double> expect_;
    StateVector scratch_;
};

/// Prepared model for repeated predictions in original units.
class QmlPredictor {
  public:
    explicit QmlPredictor(QmlModel model);

    const QmlModel &model() const noexcept { return model_; }

    /// x_raw in original descriptor units; result in original target units.
    double predict(std::span<const double> x_raw) const;
    /// Same on the normalized scales (descriptors in [-1, 1], target in [0, 1]).
    double predict_normalized(std::span<const double> x_unit) const;

  private:
    QmlModel model_;
    std::shared_ptr<const Ansatz> ansatz_;
    CompiledCircuit variational_;
};

double predict(const QmlModel &model, std::span<const double> x_raw);

/// Loss of the model on a normalized dataset. In hybrid mode beta is solved
/// on this dataset and stored on the model. Throws ValidationError if empty.
double loss(QmlModel &model, const Dataset &normalized);

} // namespace qclreg
