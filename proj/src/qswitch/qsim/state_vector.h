// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSWITCH_QSIM_STATE_VECTOR_H
#define QSWITCH_QSIM_STATE_VECTOR_H

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "qswitch/qcircuit/circuit.h"
#include "qswitch/qsim/bit_state.h"

namespace qswitch {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-12;

class StateVectorCapError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// 2^n amplitudes. Bit j of a basis index is qubit j (port 0 is the least
/// significant bit).
class StateVector {
   public:
    /// |0...0>. Throws StateVectorCapError when num_qubits > max_qubits.
    explicit StateVector(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxQubits);

    static StateVector basis(std::size_t num_qubits, std::uint64_t index,
                             std::size_t max_qubits = kDefaultMaxQubits);
    /// Size must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amps,
                                       std::size_t max_qubits = kDefaultMaxQubits);
    /// Unentangled product; qubits[j] = (amplitude of |0>, amplitude of |1>) for qubit j.
    static StateVector product(std::span<const std::array<Amplitude, 2>> qubits,
                               std::size_t max_qubits = kDefaultMaxQubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t max_qubits() const { return max_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }
    const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    friend bool operator==(const StateVector &a, const StateVector &b) {
        return a.num_qubits_ == b.num_qubits_ && a.amps_ == b.amps_;
    }

   private:
    std::size_t num_qubits_ = 0;
    std::size_t max_qubits_ = kDefaultMaxQubits;
    std::vector<Amplitude> amps_;
};

/// Permutes amplitudes: basis states with the control bit set have their
/// target bit flipped. Throws SimulationError on an out-of-range port.
StateVector apply_cn_state(StateVector v, CnGate g);
void apply_cn_in_place(StateVector &v, CnGate g);

StateVector run_state(const Circuit &c, StateVector v);

/// Haar-like random normalized state: independent Gaussian real and imaginary
/// parts (Box-Muller over raw engine output), then normalized.
StateVector random_state(std::size_t num_qubits, std::mt19937_64 &rng,
                         std::size_t max_qubits = kDefaultMaxQubits);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Projects onto one basis state with probability |c_i|^2.
///
/// The generator is std::mt19937_64; one draw u = (rng() >> 11) * 2^-53 per
/// sample selects the first index whose cumulative probability exceeds u.
/// Throws SimulationError if |norm^2 - 1| > 1e-12.
BitState measure(const StateVector &v, std::mt19937_64 &rng);
BitState measure(const StateVector &v, std::uint64_t seed);

/// Column j is run_state(c, |j>). Subject to the state-vector cap.
std::vector<std::vector<Amplitude>> circuit_matrix(const Circuit &c,
                                                   std::size_t max_qubits = kDefaultMaxQubits);

/// Exactly one entry equal to 1 per row and column, all others exactly 0.
bool is_permutation_matrix(const std::vector<std::vector<Amplitude>> &m);

/// U * U^dagger == I, compared exactly.
bool is_unitary_exact(const std::vector<std::vector<Amplitude>> &m);

}  // namespace qswitch

#endif
