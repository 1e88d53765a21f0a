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

#ifndef QSWITCH_DIGRAPH_SUB_DIGRAPH_H
#define QSWITCH_DIGRAPH_SUB_DIGRAPH_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/digraph/port.h"

namespace qswitch {

/// Canonical topologies of a weakly connected component. Declaration order
/// is the specificity order used by classify().
enum class SubDigraphKind { NullNode, Loopback, Queue, Cycle, Tree, Forest };

const char *kind_name(SubDigraphKind k);

/// One classified component of a connection digraph.
///
/// Node ordering depends on the kind:
///   NullNode, Loopback: the single node.
///   Queue:  head .. tail, following the edges.
///   Cycle:  rotated so the smallest port comes first, following the edges.
///   Tree:   breadth-first from the root, children ascending.
///   Forest: the cycle (rotated smallest-first), then the attached nodes
///           breadth-first.
struct SubDigraph {
    SubDigraphKind kind = SubDigraphKind::NullNode;
    std::vector<PortId> nodes;
    /// Sorted by (from, to).
    std::vector<Edge> edges;
    /// Loopback, Cycle, Forest: the unique cycle in edge order, smallest port first.
    std::vector<PortId> cycle;
    /// Queue head or tree root.
    std::optional<PortId> root;
    /// Nodes without successors, ascending. Queue: the tail.
    std::vector<PortId> leaves;

    std::vector<PortId> successors(PortId u) const;
    bool contains(PortId p) const;
    /// Short notation, e.g. "[P2,P4,P3]" for a queue or "(P0,P1)" for a cycle.
    std::string str() const;

    friend bool operator==(const SubDigraph &, const SubDigraph &) = default;
};

class UnclassifiableError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Classifies a weakly connected node set with in-degree <= 1 everywhere,
/// returning the most specific matching kind. Throws UnclassifiableError when
/// the input is empty, disconnected, has an edge leaving the node set, or a
/// node with two predecessors.
SubDigraph classify(const std::vector<PortId> &nodes, const std::vector<Edge> &edges);

/// Splits a digraph into its weakly connected components, each classified.
/// Components are ordered by their smallest port.
std::vector<SubDigraph> decompose(const ConnectionDigraph &g);

/// As above, restricted to a node subset. Every edge must lie inside \p nodes.
std::vector<SubDigraph> decompose(const std::vector<PortId> &nodes, const std::vector<Edge> &edges);

/// Rotates a cycle so its smallest element is first.
std::vector<PortId> normalize_cycle(std::vector<PortId> cycle);

}  // namespace qswitch

#endif
