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
 * Dense statevector simulation.
 *
 * Qubit q corresponds to bit q of the amplitude index (qubit 0 is the least
 * significant bit). Rotations follow R^A(t) = exp(-i t A / 2).
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qclreg {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr double kDefaultDenseBudgetMb = 4096.0;

class StateVector {
  public:
    /// |0...0> on n qubits. Throws CapacityError unless 1 <= n <= max_qubits.
    static StateVector zero(std::size_t n,
                            std::size_t max_qubits = kDefaultMaxQubits);

    /// Wraps explicit amplitudes; the length must be a power of two >= 2.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t qubits() const noexcept { return qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    const Amplitude &operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const noexcept;

    /// Resets to |0...0> without reallocating.
    void reset() noexcept;

  private:
    StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes)
        : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

    std::size_t qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

Matrix2 rx_matrix(double angle);
Matrix2 ry_matrix(double angle);
Matrix2 rz_matrix(double angle);
/// a * b (apply b first, then a).
Matrix2 multiply(const Matrix2 &a, const Matrix2 &b);

// Unchecked kernels. Callers validate indices.
void apply_matrix2(StateVector &state, std::size_t target, const Matrix2 &m);
void apply_cnot(StateVector &state, std::size_t control, std::size_t target);
void apply_cz(StateVector &state, std::size_t a, std::size_t b);

/// Field and coupling coefficients of the ring Ising Hamiltonian
///   H = sum_j a_j X_j + sum_{(j,k) in ring} J_jk Z_j Z_k.
struct IsingCoefficients {
    std::vector<double> fields;    // a_j, one per qubit
    std::vector<double> couplings; // J for ring_pairs(n), same order
};

/// Ring pairs (j, (j+1) mod n). n = 1 has none; n = 2 has the single pair
/// (0, 1) since (1, 0) would repeat it.
std::vector<std::pair<std::size_t, std::size_t>> ring_pairs(std::size_t n);

/// Matrix dimension, relative cost (n = 5 normalized to 1) and memory of the
/// dense time-evolution operator for n qubits.
struct CostEstimate {
    std::size_t qubits;
    std::uint64_t matrix_dim;    // 2^n
    double relative_cost;        // 2^(3n-3) normalized so that n = 5 gives 1
    double memory_mb;            // 16 * 2^(2n) * 3 / 1024^2
};

CostEstimate trotter_cost(std::size_t n);

/// exp(-i H T) for a fixed Ising Hamiltonian. With trotter_steps == 0 the
/// exact unitary is computed once at construction (dense eigendecomposition);
/// otherwise first-order Trotter factors are applied gate-wise.
class IsingEvolution {
  public:
    IsingEvolution(std::size_t qubits, IsingCoefficients coefficients,
                   double time, std::size_t trotter_steps,
                   double dense_budget_mb = kDefaultDenseBudgetMb);

    std::size_t qubits() const noexcept { return qubits_; }
    const IsingCoefficients &coefficients() const noexcept { return coeffs_; }
    double time() const noexcept { return time_; }
    std::size_t trotter_steps() const noexcept { return steps_; }

    void apply(StateVector &state) const;

    /// Row-major 2^n x 2^n unitary; empty for the Trotter path.
    std::span<const Amplitude> dense_unitary() const noexcept { return unitary_; }

  private:
    void apply_trotter(StateVector &state) const;

    std::size_t qubits_;
    IsingCoefficients coeffs_;
    double time_;
    std::size_t steps_;
    std::vector<Amplitude> unitary_;
    std::vector<Amplitude> zz_phase_; // exp(-i dt sum J Z Z), Trotter path
    std::vector<Matrix2> x_step_;     // exp(-i dt a_j X_j) per qubit
};

enum class GateKind { RX, RY, RZ, CNOT, CZ, IsingEvolution };

struct Gate {
    GateKind kind;
    std::size_t target = 0;
    std::size_t control = 0; // also the first qubit of CZ
    double angle = 0.0;
    std::shared_ptr<const IsingEvolution> ising;

    static Gate rx(std::size_t q, double angle) { return {GateKind::RX, q, 0, angle, {}}; }
    static Gate ry(std::size_t q, double angle) { return {GateKind::RY, q, 0, angle, {}}; }
    static Gate rz(std::size_t q, double angle) { return {GateKind::RZ, q, 0, angle, {}}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, target, control, 0.0, {}};
    }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, b, a, 0.0, {}}; }
    static Gate evolution(std::shared_ptr<const IsingEvolution> e) {
        return {GateKind::IsingEvolution, 0, 0, 0.0, std::move(e)};
    }

    bool is_rotation() const noexcept {
        return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
    }
    bool is_two_qubit() const noexcept {
        return kind == GateKind::CNOT || kind == GateKind::CZ;
    }
};

using GateSequence = std::vector<Gate>;

/// Throws ValidationError if the gate does not fit an n-qubit register.
void validate_gate(const Gate &gate, std::size_t n);

void apply_gate(StateVector &state, const Gate &gate);
void apply_gates(StateVector &state, std::span<const Gate> gates);

/// <Z_q> = sum_i s_i |a_i|^2 with s_i = +1 when bit q of i is clear.
double expectation_z(const StateVector &state, std::size_t q);

/// <Z_0>, ..., <Z_{count-1}> in one pass over the amplitudes.
void expectations_z(const StateVector &state, std::span<double> out);

/// One-shot Ising evolution (no caching). See IsingEvolution.
void apply_ising(StateVector &state, const IsingCoefficients &coefficients,
                 double time, std::size_t trotter_steps,
                 double dense_budget_mb = kDefaultDenseBudgetMb);

} // namespace qclreg
