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

#ifndef QSWITCH_QCIRCUIT_CIRCUIT_H
#define QSWITCH_QCIRCUIT_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/digraph/port.h"

namespace qswitch {

/// Control-Not: |x, y> -> |x, x xor y>.
struct CnGate {
    PortId control;
    PortId target;
    friend constexpr auto operator<=>(const CnGate &, const CnGate &) = default;
};

class CircuitError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Gates with pairwise disjoint qubit supports. Kept sorted by control.
class Layer {
   public:
    Layer() = default;
    Layer(std::initializer_list<CnGate> gates);

    /// Throws CircuitError if the gate touches a qubit already used in this layer
    /// or if control == target.
    void add(CnGate g);
    bool touches(PortId q) const;

    const std::vector<CnGate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    friend bool operator==(const Layer &, const Layer &) = default;

   private:
    std::vector<CnGate> gates_;
};

/// Ordered layers of CN gates over a fixed number of qubits.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    /// Throws CircuitError if a gate port is out of range.
    void append(Layer layer);
    void append(const Circuit &other);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Layer> &layers() const { return layers_; }
    std::size_t depth() const { return layers_.size(); }
    std::size_t gate_count() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Layer> layers_;
};

struct CircuitStats {
    std::size_t depth = 0;
    std::size_t gate_count = 0;
    std::vector<std::size_t> per_layer_widths;
};

CircuitStats stats(const Circuit &c);

/// Text form:
///   QSWITCH-CIRCUIT v1
///   qubits <n>
///   L1: CN <control> <target>; CN <control> <target>
///   ...
/// Gates within a layer are sorted by control. Each line ends with '\n'.
std::string circuit_to_text(const Circuit &c);

class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(std::size_t line, const std::string &message);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Inverse of circuit_to_text. Throws CircuitParseError with a 1-based line number.
Circuit parse_circuit_text(std::string_view text);

}  // namespace qswitch

#endif
