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

#ifndef QSWITCH_QCIRCUIT_COMPILE_H
#define QSWITCH_QCIRCUIT_COMPILE_H

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "qswitch/digraph/connection_map.h"
#include "qswitch/planner/plan.h"
#include "qswitch/qcircuit/circuit.h"

namespace qswitch {

/// Swap of two qubits' states. Compiled as CN(first, second), CN(second, first),
/// CN(first, second).
struct Transposition {
    PortId first;
    PortId second;
    friend bool operator==(const Transposition &, const Transposition &) = default;
};

/// Pairwise disjoint transpositions, executable in the same three layers.
class TranspositionSet {
   public:
    TranspositionSet() = default;
    /// Throws CircuitError if two pairs share a qubit or a pair is degenerate.
    explicit TranspositionSet(std::vector<Transposition> pairs);

    const std::vector<Transposition> &pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    /// Data movement as a map: result[p] is where the data at p ends up.
    /// Untouched ports map to themselves.
    std::vector<PortId> as_permutation(std::size_t num_ports) const;

    friend bool operator==(const TranspositionSet &, const TranspositionSet &) = default;

   private:
    std::vector<Transposition> pairs_;
};

std::array<Layer, 3> compile_transposition(PortId a, PortId b);

/// Splits a cycle (q_0, ..., q_{n-1}), n >= 3, into two sets of disjoint
/// transpositions X and Y such that applying X then Y moves the data at q_i
/// to q_{i+1 mod n}. Indices are positions in \p cycle.
///   even n = 2m: X = (q_{m-j}, q_{m+j}),            j = 1..m-1
///                Y = (q_{m-j}, q_{m+1+j mod n}),    j = 0..m-1
///   odd n = 2m+1: X = (q_{m+1-j}, q_{m+j}),          j = 1..m
///                 Y = (q_{m+1-j}, q_{m+1+j mod n}),  j = 1..m
/// Throws CircuitError for n < 3.
std::pair<TranspositionSet, TranspositionSet> cycle_xy(std::span<const PortId> cycle);

/// Layers for a set of disjoint transpositions: three layers, every pair's
/// k-th gate in layer k.
std::array<Layer, 3> compile_transpositions(const TranspositionSet &set);

/// 3 layers for a 2-cycle, 6 layers (X then Y) for longer cycles.
/// Throws CircuitError for fewer than 2 elements.
std::vector<Layer> compile_cycle(std::span<const PortId> cycle);

/// ceil(log2(t + 1)) layers copying a basis-state source onto t targets that
/// hold |0>. Throws CircuitError when the source is among the targets or a
/// target repeats.
std::vector<Layer> compile_fanout(PortId source, const std::vector<PortId> &targets);

/// Cycle stage (all cycles share the leading 3 or 6 layers) followed by one
/// layer per recovery round. Loopbacks emit nothing. Throws PlanError when
/// plan_violations() is not empty.
Circuit compile_plan(const PermutationPlan &plan);

/// validate -> build_digraph -> plan -> compile_plan.
Circuit compile_map(const ConnectionMap &map);

}  // namespace qswitch

#endif
