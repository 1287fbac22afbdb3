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
// Test-only dense-matrix oracle. Builds full 2^n x 2^n operators from
// Kronecker products and projectors so that it shares no code path with the
// statevector kernels.

#pragma once

#include <cmath>
#include <complex>
#include <span>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qclreg/rng.hpp"
#include "qclreg/statevector.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat identity(std::size_t dim) { return Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)); }

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() { Mat m(2, 2); m << 0, cd(0, -1), cd(0, 1), 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat proj0() { Mat m(2, 2); m << 1, 0, 0, 0; return m; }
inline Mat proj1() { Mat m(2, 2); m << 0, 0, 0, 1; return m; }

/// Embeds a one-qubit operator on qubit q (qubit 0 is the rightmost factor).
inline Mat on_qubit(const Mat &g, std::size_t q, std::size_t n) {
    Mat out = identity(1);
    for (std::size_t k = n; k-- > 0;) {
        out = kron(out, k == q ? g : identity(2));
    }
    return out;
}

/// exp(-i angle P / 2) = cos(angle/2) I - i sin(angle/2) P.
inline Mat rotation(const Mat &pauli, double angle) {
    return std::cos(angle / 2) * identity(2) - cd(0, 1) * std::sin(angle / 2) * pauli;
}

inline Mat controlled(const Mat &g, std::size_t control, std::size_t target, std::size_t n) {
    return on_qubit(proj0(), control, n) + on_qubit(proj1(), control, n) * on_qubit(g, target, n);
}

inline Mat ising_hamiltonian(const qclreg::IsingCoefficients &c, std::size_t n) {
    Mat h = Mat::Zero(1 << n, 1 << n);
    for (std::size_t j = 0; j < n; ++j) h += c.fields[j] * on_qubit(pauli_x(), j, n);
    const auto pairs = qclreg::ring_pairs(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        h += c.couplings[p] * on_qubit(pauli_z(), pairs[p].first, n) *
             on_qubit(pauli_z(), pairs[p].second, n);
    }
    return h;
}

/// exp(-i H T) through the Pade-based matrix exponential.
inline Mat ising_unitary(const qclreg::IsingCoefficients &c, double time, std::size_t n) {
    const Mat a = cd(0, -time) * ising_hamiltonian(c, n);
    return a.exp();
}

inline Mat gate_matrix(const qclreg::Gate &g, std::size_t n) {
    using qclreg::GateKind;
    switch (g.kind) {
    case GateKind::RX:
        return on_qubit(rotation(pauli_x(), g.angle), g.target, n);
    case GateKind::RY:
        return on_qubit(rotation(pauli_y(), g.angle), g.target, n);
    case GateKind::RZ:
        return on_qubit(rotation(pauli_z(), g.angle), g.target, n);
    case GateKind::CNOT:
        return controlled(pauli_x(), g.control, g.target, n);
    case GateKind::CZ:
        return controlled(pauli_z(), g.control, g.target, n);
    case GateKind::IsingEvolution:
        return ising_unitary(g.ising->coefficients(), g.ising->time(), n);
    }
    return identity(std::size_t{1} << n);
}

inline Mat circuit_matrix(std::span<const qclreg::Gate> gates, std::size_t n) {
    Mat u = identity(std::size_t{1} << n);
    for (const auto &g : gates) u = gate_matrix(g, n) * u;
    return u;
}

inline Vec zero_state(std::size_t n) {
    Vec v = Vec::Zero(1 << n);
    v(0) = 1.0;
    return v;
}

inline Vec to_vec(const qclreg::StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

inline double max_deviation(const qclreg::StateVector &s, const Vec &v) {
    return (to_vec(s) - v).cwiseAbs().maxCoeff();
}

inline double expect(const Vec &psi, const Mat &op) {
    return (psi.adjoint() * op * psi)(0, 0).real();
}

/// Random circuit of rotations, CNOTs and CZs on n qubits.
inline qclreg::GateSequence random_circuit(qclreg::Rng &rng, std::size_t n, std::size_t count) {
    qclreg::GateSequence gates;
    while (gates.size() < count) {
        const auto kind = rng.below(n > 1 ? 5 : 3);
        const std::size_t q = rng.below(n);
        const double angle = rng.uniform(-2 * M_PI, 2 * M_PI);
        switch (kind) {
        case 0: gates.push_back(qclreg::Gate::rx(q, angle)); break;
        case 1: gates.push_back(qclreg::Gate::ry(q, angle)); break;
        case 2: gates.push_back(qclreg::Gate::rz(q, angle)); break;
        default: {
            std::size_t t = rng.below(n - 1);
            if (t >= q) ++t;
            gates.push_back(kind == 3 ? qclreg::Gate::cnot(q, t) : qclreg::Gate::cz(q, t));
        }
        }
    }
    return gates;
}

inline qclreg::StateVector random_state(qclreg::Rng &rng, std::size_t n) {
    std::vector<cd> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = cd(rng.normal(), rng.normal());
        norm += std::norm(a);
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return qclreg::StateVector::from_amplitudes(std::move(amps));
}

} // namespace oracle
