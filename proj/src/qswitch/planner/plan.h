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

#ifndef QSWITCH_PLANNER_PLAN_H
#define QSWITCH_PLANNER_PLAN_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/digraph/sub_digraph.h"

namespace qswitch {

/// E1: null node -> loopback (self edge). E2: queue -> cycle (tail->head).
/// E3: tree -> forest (leaf->root).
enum class ExtensionKind { E1, E2, E3 };

const char *extension_kind_name(ExtensionKind k);

/// An edge added from an idle inlet to an outlet without traffic. It moves
/// only stuff bits, so the switching function is unchanged.
struct ExtensionRecord {
    ExtensionKind kind;
    Edge added_edge;
    friend bool operator==(const ExtensionRecord &, const ExtensionRecord &) = default;
};

/// After the cycle stage `source` holds the data of a cut inlet; it must be
/// copied to each of `targets`.
struct RecoveryGroup {
    PortId source;
    /// Ascending.
    std::vector<PortId> targets;
    friend bool operator==(const RecoveryGroup &, const RecoveryGroup &) = default;
};

/// A connection digraph reduced to disjoint cycles and loopbacks plus a
/// replication schedule.
struct PermutationPlan {
    std::size_t num_ports = 0;
    /// Each of length >= 2, smallest port first; sorted by first element.
    std::vector<std::vector<PortId>> cycles;
    /// Ascending.
    std::vector<PortId> loopbacks;
    /// Sorted by source.
    std::vector<RecoveryGroup> recovery;
    /// In the order they were applied.
    std::vector<ExtensionRecord> extensions;
    /// Sorted.
    std::vector<Edge> cut_edges;
    /// Number of nested extraction levels (0 when nothing was extracted).
    std::size_t reduction_depth = 0;

    /// Largest recovery group (0 when there is nothing to recover).
    std::size_t max_fanout() const;

    friend bool operator==(const PermutationPlan &, const PermutationPlan &) = default;
};

class PlanError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

ExtensionRecord extend_null(const SubDigraph &null_node);
ExtensionRecord extend_queue(const SubDigraph &queue);
ExtensionRecord extend_tree(const SubDigraph &tree, PortId leaf);

/// The component with the extension edge added, reclassified.
SubDigraph apply_extension(const SubDigraph &sub, const ExtensionRecord &ext);

struct CycleExtraction {
    /// Smallest port first. Length 1 when the forest's cycle is a self loop.
    std::vector<PortId> cycle;
    /// Each a NullNode, Queue, or Tree.
    std::vector<SubDigraph> detached;
    /// Every edge from a cycle node to a non-cycle node, sorted.
    std::vector<Edge> cuts;
};

/// Cuts every edge leaving the forest's cycle. Also accepts a bare Cycle or
/// Loopback, which yields no cuts.
CycleExtraction extract_cycle(const SubDigraph &forest);

/// Reduces the digraph to cycles, loopbacks and recovery groups. The smallest
/// leaf is used for every E3 extension.
PermutationPlan plan(const ConnectionDigraph &g);

/// Structural problems of a plan (coverage, cycle lengths, group disjointness).
/// Empty for every plan produced by plan().
std::vector<std::string> plan_violations(const PermutationPlan &p);

/// Smallest k with 2^k >= x (0 for x <= 1).
std::size_t ceil_log2(std::size_t x);

/// Layers needed to give t targets a copy by doubling: ceil(log2(t + 1)).
inline std::size_t fanout_depth(std::size_t targets) { return ceil_log2(targets + 1); }

/// One copy step: holder -> fresh target.
struct CopyPair {
    PortId holder;
    PortId target;
    friend bool operator==(const CopyPair &, const CopyPair &) = default;
};

using RecoveryRound = std::vector<CopyPair>;

/// Doubling schedule for one source: round k copies from every current holder
/// (source first, then targets in the order they were filled) to the next
/// unfilled targets. ceil(log2(t + 1)) rounds for t targets.
std::vector<RecoveryRound> fanout_rounds(PortId source, const std::vector<PortId> &targets);

/// All groups' doubling schedules merged round by round; pairs within a round
/// are sorted by holder.
std::vector<RecoveryRound> recovery_rounds(const PermutationPlan &p);

/// Executes the plan directly on one bit per port (no gates): cycles move
/// data one step forward, loopbacks hold, then the recovery rounds copy.
/// Throws PlanError if a recovery target is not 0 before its copy.
std::vector<std::uint8_t> interpret_plan(const PermutationPlan &p, std::span<const std::uint8_t> bits);

}  // namespace qswitch

#endif
