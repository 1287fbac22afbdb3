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

#include "qclreg/model.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qclreg/error.hpp"

namespace qclreg {

std::string_view to_string(ReadoutMode mode) {
    return mode == ReadoutMode::Pure ? "pure" : "hybrid";
}

ReadoutMode parse_readout_mode(std::string_view token) {
    if (token == "pure") return ReadoutMode::Pure;
    if (token == "hybrid") return ReadoutMode::Hybrid;
    throw ValidationError("unknown readout mode '" + std::string(token) +
                          "' (expected pure or hybrid)");
}

void ReadoutSpec::validate(std::size_t qubits) const {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ValidationError("readout scale must be positive and finite");
    }
    if (mode == ReadoutMode::Pure && measured_qubit >= qubits) {
        throw ValidationError("measured qubit " + std::to_string(measured_qubit) +
                              " out of range for " + std::to_string(qubits) + " qubits");
    }
    if (mode == ReadoutMode::Hybrid && (measured_count < 1 || measured_count > qubits)) {
        throw ValidationError("hybrid readout needs 1 <= M <= " + std::to_string(qubits) +
                              " (M = " + std::to_string(measured_count) + ")");
    }
}

void QmlModel::validate() const {
    encoder.validate();
    ansatz.validate();
    if (encoder.qubits() != ansatz.qubits) {
        throw ValidationError("encoder uses " + std::to_string(encoder.qubits()) +
                              " qubits but ansatz has " + std::to_string(ansatz.qubits));
    }
    readout.validate(encoder.qubits());
    if (theta.size() != param_count(ansatz)) {
        throw ValidationError("model holds " + std::to_string(theta.size()) +
                              " parameters, expected 3nL = " +
                              std::to_string(param_count(ansatz)));
    }
    const bool hybrid = readout.mode == ReadoutMode::Hybrid;
    if (hybrid && beta.size() != readout.measured_count) {
        throw ValidationError("hybrid model needs " + std::to_string(readout.measured_count) +
                              " beta weights, has " + std::to_string(beta.size()));
    }
    if (!hybrid && !beta.empty()) {
        throw ValidationError("pure-readout model must not carry beta weights");
    }
    if (normalization.features.size() != encoder.descriptor_count ||
        descriptor_names.size() != encoder.descriptor_count) {
        throw ValidationError("model normalization does not match the descriptor count");
    }
}

std::vector<double> solve_beta(std::span<const double> expectations, std::size_t m,
                               std::span<const double> y, double ridge) {
    const std::size_t n = y.size();
    if (m == 0 || expectations.size() != m * n) {
        throw ValidationError("expectation matrix shape does not match M x N");
    }
    if (m > n) {
        throw ValidationError("hybrid readout is underdetermined: M = " + std::to_string(m) +
                              " > N = " + std::to_string(n));
    }
    using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMat> e(expectations.data(), static_cast<Eigen::Index>(m),
                                     static_cast<Eigen::Index>(n));
    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));
    const Eigen::MatrixXd gram = e * e.transpose();
    Eigen::MatrixXd jittered = gram;
    jittered.diagonal().array() += ridge;
    const auto ldlt = jittered.ldlt();
    const Eigen::VectorXd rhs = e * yv;
    Eigen::VectorXd beta = ldlt.solve(rhs);
    if (ridge > 0.0) beta += ldlt.solve(rhs - gram * beta);
    return {beta.data(), beta.data() + beta.size()};
}

double hybrid_residual(std::span<const double> expectations, std::size_t m,
                       std::span<const double> y, std::span<const double> beta) {
    const std::size_t n = y.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double pred = 0.0;
        for (std::size_t q = 0; q < m; ++q) {
            pred += beta[q] * expectations[q * n + i];
        }
        const double r = y[i] - pred;
        s += r * r;
    }
    return s / static_cast<double>(n);
}

CircuitEvaluator::CircuitEvaluator(const EncoderSpec &encoder,
                                   std::shared_ptr<const Ansatz> ansatz,
                                   const ReadoutSpec &readout, const Dataset &normalized)
    : ansatz_(std::move(ansatz)), readout_(readout), targets_(normalized.y),
      scratch_(StateVector::zero(encoder.qubits())) {
    if (normalized.size() == 0) {
        throw ValidationError("cannot evaluate a model on an empty dataset");
    }
    if (ansatz_->spec().qubits != encoder.qubits()) {
        throw ValidationError("encoder and ansatz qubit counts differ");
    }
    readout_.validate(encoder.qubits());
    encoded_.reserve(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        check_encoder_domain(encoder, normalized.row(i), normalized.descriptor_names);
        StateVector s = StateVector::zero(encoder.qubits());
        const GateSequence gates = build_encoder(encoder, normalized.row(i));
        CompiledCircuit(gates, encoder.qubits()).run(s);
        encoded_.push_back(std::move(s));
    }
}

std::vector<double> CircuitEvaluator::scaled_expectations(std::span<const double> theta) {
    const CompiledCircuit circuit(ansatz_->build(theta), ansatz_->spec().qubits);
    const std::size_t n = encoded_.size();
    const std::size_t m = readout_.measured();
    expect_.assign(m * n, 0.0);
    double single[1];
    std::vector<double> multi(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(encoded_[i].amplitudes().begin(), encoded_[i].amplitudes().end(),
                  scratch_.amplitudes().begin());
        circuit.run(scratch_);
        if (readout_.mode == ReadoutMode::Pure) {
            single[0] = expectation_z(scratch_, readout_.measured_qubit);
            expect_[i] = readout_.scale * single[0];
        } else {
            expectations_z(scratch_, multi);
            for (std::size_t q = 0; q < m; ++q) {
                expect_[q * n + i] = readout_.scale * multi[q];
            }
        }
    }
    return expect_;
}

std::vector<double> CircuitEvaluator::predict(std::span<const double> theta,
                                              std::span<const double> beta) {
    const auto table = scaled_expectations(theta);
    const std::size_t n = encoded_.size();
    if (readout_.mode == ReadoutMode::Pure) {
        return table;
    }
    if (beta.size() != readout_.measured_count) {
        throw ValidationError("hybrid prediction needs " +
                              std::to_string(readout_.measured_count) + " beta weights");
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t q = 0; q < beta.size(); ++q) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += beta[q] * table[q * n + i];
        }
    }
    return out;
}

double CircuitEvaluator::loss(std::span<const double> theta) {
    const auto table = scaled_expectations(theta);
    const std::size_t n = encoded_.size();
    if (readout_.mode == ReadoutMode::Hybrid) {
        beta_ = solve_beta(table, readout_.measured_count, targets_);
        return hybrid_residual(table, readout_.measured_count, targets_, beta_);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = targets_[i] - table[i];
        s += r * r;
    }
    return s / static_cast<double>(n);
}

QmlPredictor::QmlPredictor(QmlModel model) : model_(std::move(model)) {
    model_.validate();
    ansatz_ = std::make_shared<const Ansatz>(model_.ansatz);
    variational_ = CompiledCircuit(ansatz_->build(model_.theta), model_.ansatz.qubits);
}

double QmlPredictor::predict_normalized(std::span<const double> x_unit) const {
    check_encoder_domain(model_.encoder, x_unit, model_.descriptor_names);
    const std::size_t n = model_.encoder.qubits();
    StateVector s = StateVector::zero(n);
    CompiledCircuit(build_encoder(model_.encoder, x_unit), n).run(s);
    variational_.run(s);
    const ReadoutSpec &r = model_.readout;
    if (r.mode == ReadoutMode::Pure) {
        return r.scale * expectation_z(s, r.measured_qubit);
    }
    std::vector<double> z(r.measured_count);
    expectations_z(s, z);
    double y = 0.0;
    for (std::size_t q = 0; q < z.size(); ++q) {
        y += model_.beta[q] * (r.scale * z[q]);
    }
    return y;
}

double QmlPredictor::predict(std::span<const double> x_raw) const {
    for (double v : x_raw) {
        if (!std::isfinite(v)) throw ValidationError("non-finite descriptor value");
    }
    const auto unit = model_.normalization.features_to_unit(x_raw);
    return model_.normalization.target_from_unit(predict_normalized(unit));
}

double predict(const QmlModel &model, std::span<const double> x_raw) {
    return QmlPredictor(model).predict(x_raw);
}

double loss(QmlModel &model, const Dataset &normalized) {
    if (normalized.size() == 0) {
        throw ValidationError("loss of an empty dataset is undefined");
    }
    if (model.readout.mode == ReadoutMode::Hybrid && model.beta.empty()) {
        model.beta.assign(model.readout.measured_count, 0.0);
    }
    model.validate();
    CircuitEvaluator eval(model.encoder, std::make_shared<const Ansatz>(model.ansatz),
                          model.readout, normalized);
    const double value = eval.loss(model.theta);
    if (model.readout.mode == ReadoutMode::Hybrid) {
        model.beta = eval.last_beta();
    }
    return value;
}

} // namespace qclreg
