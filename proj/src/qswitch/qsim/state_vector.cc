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

#include "qswitch/qsim/state_vector.h"

#include <bit>
#include <cmath>
#include <string>

#include "qswitch/qsim/kernels.h"

namespace qswitch {

namespace {

void check_cap(std::size_t num_qubits, std::size_t max_qubits) {
    if (num_qubits > max_qubits) {
        throw StateVectorCapError("state vector of " + std::to_string(num_qubits) +
                                  " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    if (num_qubits >= 40) {
        throw StateVectorCapError("state vector of " + std::to_string(num_qubits) +
                                  " qubits is not addressable");
    }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_(num_qubits), max_qubits_(max_qubits) {
    check_cap(num_qubits, max_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index, std::size_t max_qubits) {
    StateVector v(num_qubits, max_qubits);
    if (index >= v.amps_.size()) {
        throw SimulationError("basis index out of range");
    }
    v.amps_[0] = 0;
    v.amps_[index] = 1;
    return v;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps, std::size_t max_qubits) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw SimulationError("amplitude count must be a power of two");
    }
    std::size_t n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    StateVector v(n, max_qubits);
    v.amps_ = std::move(amps);
    return v;
}

StateVector StateVector::product(std::span<const std::array<Amplitude, 2>> qubits,
                                 std::size_t max_qubits) {
    StateVector v(qubits.size(), max_qubits);
    for (std::size_t i = 0; i < v.amps_.size(); i++) {
        Amplitude a = 1;
        for (std::size_t j = 0; j < qubits.size(); j++) {
            a *= qubits[j][(i >> j) & 1];
        }
        v.amps_[i] = a;
    }
    return v;
}

double StateVector::norm_squared() const {
    return kernels::active_kernels().norm_squared(amps_.data(), amps_.size());
}

void apply_cn_in_place(StateVector &v, CnGate g) {
    std::size_t n = v.num_qubits();
    if (g.control.index >= n || g.target.index >= n || g.control == g.target) {
        throw SimulationError("CN " + std::to_string(g.control.index) + " " +
                              std::to_string(g.target.index) + " invalid for " + std::to_string(n) +
                              " qubits");
    }
    kernels::active_kernels().cn_amplitudes(v.amplitudes().data(), n, g.control.index,
                                             g.target.index);
}

StateVector apply_cn_state(StateVector v, CnGate g) {
    apply_cn_in_place(v, g);
    return v;
}

StateVector run_state(const Circuit &c, StateVector v) {
    if (v.num_qubits() != c.num_qubits()) {
        throw SimulationError("state has " + std::to_string(v.num_qubits()) +
                              " qubits, circuit has " + std::to_string(c.num_qubits()));
    }
    for (const auto &layer : c.layers()) {
        for (const auto &g : layer.gates()) {
            apply_cn_in_place(v, g);
        }
    }
    return v;
}

StateVector random_state(std::size_t num_qubits, std::mt19937_64 &rng, std::size_t max_qubits) {
    StateVector v(num_qubits, max_qubits);
    auto unit = [&]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    double total = 0;
    for (auto &a : v.amplitudes()) {
        double r = std::sqrt(-2.0 * std::log(unit()));
        double theta = 2.0 * 3.14159265358979323846 * unit();
        a = {r * std::cos(theta), r * std::sin(theta)};
        total += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : v.amplitudes()) {
        a *= scale;
    }
    return v;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw SimulationError("fidelity of states with different qubit counts");
    }
    Amplitude overlap = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); i++) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

BitState measure(const StateVector &v, std::mt19937_64 &rng) {
    double norm = v.norm_squared();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw SimulationError("cannot measure an unnormalized state (norm^2 = " +
                              std::to_string(norm) + ")");
    }
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < v.amplitudes().size(); i++) {
        double p = std::norm(v[i]);
        if (p == 0) {
            continue;
        }
        last_nonzero = i;
        cumulative += p;
        if (u < cumulative) {
            return BitState::from_index(v.num_qubits(), i);
        }
    }
    return BitState::from_index(v.num_qubits(), last_nonzero);
}

BitState measure(const StateVector &v, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure(v, rng);
}

std::vector<std::vector<Amplitude>> circuit_matrix(const Circuit &c, std::size_t max_qubits) {
    check_cap(c.num_qubits(), max_qubits);
    std::size_t dim = std::size_t{1} << c.num_qubits();
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim));
    for (std::size_t col = 0; col < dim; col++) {
        auto out = run_state(c, StateVector::basis(c.num_qubits(), col, max_qubits));
        for (std::size_t row = 0; row < dim; row++) {
            m[row][col] = out[row];
        }
    }
    return m;
}

bool is_permutation_matrix(const std::vector<std::vector<Amplitude>> &m) {
    std::size_t dim = m.size();
    std::vector<int> col_ones(dim, 0);
    for (const auto &row : m) {
        if (row.size() != dim) {
            return false;
        }
        int row_ones = 0;
        for (std::size_t j = 0; j < dim; j++) {
            if (row[j] == Amplitude{1, 0}) {
                row_ones++;
                col_ones[j]++;
            } else if (row[j] != Amplitude{0, 0}) {
                return false;
            }
        }
        if (row_ones != 1) {
            return false;
        }
    }
    for (int ones : col_ones) {
        if (ones != 1) {
            return false;
        }
    }
    return true;
}

bool is_unitary_exact(const std::vector<std::vector<Amplitude>> &m) {
    std::size_t dim = m.size();
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            Amplitude sum = 0;
            for (std::size_t k = 0; k < dim; k++) {
                sum += m[i][k] * std::conj(m[j][k]);
            }
            if (sum != Amplitude{i == j ? 1.0 : 0.0, 0}) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qswitch
