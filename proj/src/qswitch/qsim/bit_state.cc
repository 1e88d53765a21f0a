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

#include "qswitch/qsim/bit_state.h"

#include <string>

#include "qswitch/qsim/kernels.h"

namespace qswitch {

BitState::BitState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        b = b ? 1 : 0;
    }
}

BitState BitState::from_index(std::size_t num_bits, std::uint64_t index) {
    BitState s(num_bits);
    for (std::size_t j = 0; j < num_bits && j < 64; j++) {
        s.bits_[j] = (index >> j) & 1;
    }
    return s;
}

std::uint64_t BitState::to_index() const {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < bits_.size() && j < 64; j++) {
        index |= std::uint64_t{bits_[j]} << j;
    }
    return index;
}

BitState apply_cn_bits(BitState s, CnGate g) {
    if (g.control.index >= s.size() || g.target.index >= s.size()) {
        throw SimulationError("CN " + std::to_string(g.control.index) + " " +
                              std::to_string(g.target.index) + " out of range for " +
                              std::to_string(s.size()) + " bits");
    }
    s.set(g.target.index, s[g.target.index] != s[g.control.index]);
    return s;
}

BitState run_bits(const Circuit &c, BitState s, const LayerObserver &observe) {
    if (s.size() != c.num_qubits()) {
        throw SimulationError("state has " + std::to_string(s.size()) + " bits, circuit has " +
                              std::to_string(c.num_qubits()) + " qubits");
    }
    for (std::size_t k = 0; k < c.layers().size(); k++) {
        if (observe) {
            observe(k, s);
        }
        for (const auto &g : c.layers()[k].gates()) {
            s = apply_cn_bits(std::move(s), g);
        }
    }
    return s;
}

LaneState::LaneState(std::size_t num_ports, std::size_t words)
    : num_ports_(num_ports), words_(words), data_(num_ports * words, 0) {}

std::span<std::uint64_t> LaneState::lane(std::size_t port) {
    return {data_.data() + port * words_, words_};
}

std::span<const std::uint64_t> LaneState::lane(std::size_t port) const {
    return {data_.data() + port * words_, words_};
}

void run_lanes(const Circuit &c, LaneState &s) {
    if (s.num_ports() != c.num_qubits()) {
        throw SimulationError("lane state has " + std::to_string(s.num_ports()) +
                              " ports, circuit has " + std::to_string(c.num_qubits()) + " qubits");
    }
    const auto &k = kernels::active_kernels();
    for (const auto &layer : c.layers()) {
        for (const auto &g : layer.gates()) {
            k.xor_into(s.lane(g.target.index).data(), s.lane(g.control.index).data(), s.words());
        }
    }
}

}  // namespace qswitch
