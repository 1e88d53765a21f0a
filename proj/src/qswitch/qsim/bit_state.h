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

#ifndef QSWITCH_QSIM_BIT_STATE_H
#define QSWITCH_QSIM_BIT_STATE_H

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qswitch/qcircuit/circuit.h"

namespace qswitch {

class SimulationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// One classical bit per port (a computational basis state).
class BitState {
   public:
    BitState() = default;
    explicit BitState(std::size_t num_bits) : bits_(num_bits, 0) {}
    explicit BitState(std::vector<std::uint8_t> bits);
    /// Bit j of \p index becomes port j.
    static BitState from_index(std::size_t num_bits, std::uint64_t index);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t k) const { return bits_[k] != 0; }
    void set(std::size_t k, bool value) { bits_.at(k) = value ? 1 : 0; }
    const std::vector<std::uint8_t> &bits() const { return bits_; }
    std::uint64_t to_index() const;

    friend bool operator==(const BitState &, const BitState &) = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// target ^= control. Throws SimulationError on an out-of-range port.
BitState apply_cn_bits(BitState s, CnGate g);

using LayerObserver = std::function<void(std::size_t layer, const BitState &before)>;

/// Applies the circuit layer by layer. \p observe, if set, sees the state
/// before each layer. Throws SimulationError on a size mismatch.
BitState run_bits(const Circuit &c, BitState s, const LayerObserver &observe = {});

/// Bit-sliced state: one lane of `words` 64-bit words per port, so that
/// 64 * words independent basis states are routed at once.
class LaneState {
   public:
    LaneState(std::size_t num_ports, std::size_t words);

    std::size_t num_ports() const { return num_ports_; }
    std::size_t words() const { return words_; }
    std::span<std::uint64_t> lane(std::size_t port);
    std::span<const std::uint64_t> lane(std::size_t port) const;

    friend bool operator==(const LaneState &, const LaneState &) = default;

   private:
    std::size_t num_ports_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

/// Runs every lane through the circuit with the active SIMD kernels.
void run_lanes(const Circuit &c, LaneState &s);

}  // namespace qswitch

#endif
