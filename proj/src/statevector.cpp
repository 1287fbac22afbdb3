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

#include "qclreg/statevector.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qclreg/error.hpp"

namespace qclreg {

namespace {

constexpr Amplitude kI{0.0, 1.0};

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_qubit(std::size_t q, std::size_t n, const char *what) {
    if (q >= n) {
        throw ValidationError(std::string(what) + " qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n) + " qubits");
    }
}

} // namespace

StateVector StateVector::zero(std::size_t n, std::size_t max_qubits) {
    if (n < 1 || n > max_qubits) {
        throw CapacityError("qubit count " + std::to_string(n) + " outside [1, " +
                            std::to_string(max_qubits) + "]");
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size())) {
        throw ValidationError("amplitude count must be a power of two >= 2");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        ++n;
    }
    return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::reset() noexcept {
    std::fill(amplitudes_.begin(), amplitudes_.end(), Amplitude{});
    amplitudes_[0] = 1.0;
}

Matrix2 rx_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Amplitude{c, 0}, Amplitude{0, -s}, Amplitude{0, -s}, Amplitude{c, 0}};
}

Matrix2 ry_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Amplitude{c, 0}, Amplitude{-s, 0}, Amplitude{s, 0}, Amplitude{c, 0}};
}

Matrix2 rz_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Amplitude{c, -s}, Amplitude{}, Amplitude{}, Amplitude{c, s}};
}

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

void apply_matrix2(StateVector &state, std::size_t target, const Matrix2 &m) {
    auto amps = state.amplitudes();
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const Amplitude a0 = amps[j];
            const Amplitude a1 = amps[j + stride];
            amps[j] = m[0] * a0 + m[1] * a1;
            amps[j + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_cnot(StateVector &state, std::size_t control, std::size_t target) {
    auto amps = state.amplitudes();
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tstride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * tstride) {
        for (std::size_t i = base; i < base + tstride; ++i) {
            if (i & cmask) std::swap(amps[i], amps[i + tstride]);
        }
    }
}

void apply_cz(StateVector &state, std::size_t a, std::size_t b) {
    auto amps = state.amplitudes();
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> ring_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (n < 2) {
        return pairs;
    }
    const std::size_t count = n == 2 ? 1 : n;
    for (std::size_t j = 0; j < count; ++j) {
        pairs.emplace_back(j, (j + 1) % n);
    }
    return pairs;
}

CostEstimate trotter_cost(std::size_t n) {
    const int exponent = static_cast<int>(3 * n) - 15;
    return CostEstimate{
        n,
        std::uint64_t{1} << n,
        std::ldexp(1.0, exponent),
        16.0 * std::ldexp(1.0, static_cast<int>(2 * n)) * 3.0 / (1024.0 * 1024.0),
    };
}

namespace {

std::vector<double> ring_zz_diagonal(std::size_t n, const IsingCoefficients &c) {
    const auto pairs = ring_pairs(n);
    std::vector<double> diag(std::size_t{1} << n, 0.0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double e = 0.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const bool bj = (i >> pairs[p].first) & 1U;
            const bool bk = (i >> pairs[p].second) & 1U;
            e += (bj == bk ? 1.0 : -1.0) * c.couplings[p];
        }
        diag[i] = e;
    }
    return diag;
}

} // namespace

IsingEvolution::IsingEvolution(std::size_t qubits, IsingCoefficients coefficients,
                               double time, std::size_t trotter_steps,
                               double dense_budget_mb)
    : qubits_(qubits), coeffs_(std::move(coefficients)), time_(time),
      steps_(trotter_steps) {
    if (qubits_ < 1 || qubits_ > kDefaultMaxQubits) {
        throw CapacityError("Ising evolution on " + std::to_string(qubits_) + " qubits");
    }
    if (coeffs_.fields.size() != qubits_) {
        throw ValidationError("Ising field count " + std::to_string(coeffs_.fields.size()) +
                              ", expected " + std::to_string(qubits_));
    }
    const std::size_t npairs = ring_pairs(qubits_).size();
    if (coeffs_.couplings.size() != npairs) {
        throw ValidationError("Ising coupling count " +
                              std::to_string(coeffs_.couplings.size()) + ", expected " +
                              std::to_string(npairs));
    }
    for (double v : coeffs_.fields) {
        if (!std::isfinite(v)) throw ValidationError("non-finite Ising field");
    }
    for (double v : coeffs_.couplings) {
        if (!std::isfinite(v)) throw ValidationError("non-finite Ising coupling");
    }
    if (!std::isfinite(time_)) {
        throw ValidationError("non-finite evolution time");
    }

    const auto diag = ring_zz_diagonal(qubits_, coeffs_);
    const std::size_t dim = diag.size();

    if (steps_ > 0) {
        const double dt = time_ / static_cast<double>(steps_);
        zz_phase_.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            zz_phase_[i] = std::exp(-kI * dt * diag[i]);
        }
        for (double a : coeffs_.fields) {
            x_step_.push_back(rx_matrix(2.0 * a * dt));
        }
        return;
    }

    const CostEstimate cost = trotter_cost(qubits_);
    if (cost.memory_mb > dense_budget_mb) {
        throw CapacityError("dense Ising evolution on " + std::to_string(qubits_) +
                            " qubits needs an estimated " + std::to_string(cost.memory_mb) +
                            " MB (matrix dim " + std::to_string(cost.matrix_dim) +
                            "), budget is " + std::to_string(dense_budget_mb) +
                            " MB; use Trotter steps instead");
    }

    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < dim; ++i) {
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
        for (std::size_t j = 0; j < qubits_; ++j) {
            const std::size_t flipped = i ^ (std::size_t{1} << j);
            h(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(i)) +=
                coeffs_.fields[j];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of the Ising Hamiltonian failed");
    }
    const Eigen::MatrixXd &v = eig.eigenvectors();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases(k) = std::exp(-kI * time_ * eig.eigenvalues()(k));
    }
    const Eigen::MatrixXcd u =
        v.cast<Amplitude>() * phases.asDiagonal() * v.transpose().cast<Amplitude>();
    unitary_.resize(dim * dim);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            unitary_[static_cast<std::size_t>(r) * dim + static_cast<std::size_t>(c)] = u(r, c);
        }
    }
}

void IsingEvolution::apply(StateVector &state) const {
    if (state.qubits() != qubits_) {
        throw ValidationError("Ising evolution built for " + std::to_string(qubits_) +
                              " qubits applied to " + std::to_string(state.qubits()));
    }
    if (steps_ > 0) {
        apply_trotter(state);
        return;
    }
    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    std::vector<Amplitude> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const Amplitude *row = unitary_.data() + r * dim;
        Amplitude acc{};
        for (std::size_t c = 0; c < dim; ++c) {
            acc += row[c] * amps[c];
        }
        out[r] = acc;
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

void IsingEvolution::apply_trotter(StateVector &state) const {
    auto amps = state.amplitudes();
    for (std::size_t s = 0; s < steps_; ++s) {
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] *= zz_phase_[i];
        }
        for (std::size_t j = 0; j < qubits_; ++j) {
            apply_matrix2(state, j, x_step_[j]);
        }
    }
}

void validate_gate(const Gate &gate, std::size_t n) {
    switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        check_qubit(gate.target, n, "rotation");
        if (!std::isfinite(gate.angle)) {
            throw ValidationError("non-finite rotation angle");
        }
        return;
    case GateKind::CNOT:
    case GateKind::CZ:
        check_qubit(gate.control, n, "control");
        check_qubit(gate.target, n, "target");
        if (gate.control == gate.target) {
            throw ValidationError("two-qubit gate with control == target (" +
                                  std::to_string(gate.target) + ")");
        }
        return;
    case GateKind::IsingEvolution:
        if (!gate.ising) {
            throw ValidationError("Ising evolution gate without a Hamiltonian");
        }
        if (gate.ising->qubits() != n) {
            throw ValidationError("Ising evolution qubit count mismatch");
        }
        return;
    }
    throw ValidationError("unknown gate kind");
}

void apply_gate(StateVector &state, const Gate &gate) {
    validate_gate(gate, state.qubits());
    switch (gate.kind) {
    case GateKind::RX:
        apply_matrix2(state, gate.target, rx_matrix(gate.angle));
        break;
    case GateKind::RY:
        apply_matrix2(state, gate.target, ry_matrix(gate.angle));
        break;
    case GateKind::RZ:
        apply_matrix2(state, gate.target, rz_matrix(gate.angle));
        break;
    case GateKind::CNOT:
        apply_cnot(state, gate.control, gate.target);
        break;
    case GateKind::CZ:
        apply_cz(state, gate.control, gate.target);
        break;
    case GateKind::IsingEvolution:
        gate.ising->apply(state);
        break;
    }
}

void apply_gates(StateVector &state, std::span<const Gate> gates) {
    for (const auto &g : gates) {
        apply_gate(state, g);
    }
}

double expectation_z(const StateVector &state, std::size_t q) {
    check_qubit(q, state.qubits(), "measured");
    const auto amps = state.amplitudes();
    const std::size_t mask = std::size_t{1} << q;
    double e = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        e += (i & mask) ? -p : p;
    }
    return e;
}

void expectations_z(const StateVector &state, std::span<double> out) {
    if (out.size() > state.qubits()) {
        throw ValidationError("requested " + std::to_string(out.size()) +
                              " expectations from " + std::to_string(state.qubits()) +
                              " qubits");
    }
    std::fill(out.begin(), out.end(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        for (std::size_t q = 0; q < out.size(); ++q) {
            out[q] += ((i >> q) & 1U) ? -p : p;
        }
    }
}

void apply_ising(StateVector &state, const IsingCoefficients &coefficients, double time,
                 std::size_t trotter_steps, double dense_budget_mb) {
    IsingEvolution(state.qubits(), coefficients, time, trotter_steps, dense_budget_mb)
        .apply(state);
}

} // namespace qclreg
