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

#ifndef QSWITCH_DIGRAPH_CONNECTION_DIGRAPH_H
#define QSWITCH_DIGRAPH_CONNECTION_DIGRAPH_H

#include <optional>
#include <vector>

#include "qswitch/digraph/connection_map.h"
#include "qswitch/digraph/port.h"

namespace qswitch {

/// Connection digraph of one time slot: one node per port, an edge u->v for
/// every active connection from inlet u to outlet v. Every node has at most
/// one predecessor.
class ConnectionDigraph {
   public:
    ConnectionDigraph() = default;

    /// Throws InvalidMapError when an edge is out of range or an outlet has two predecessors.
    static ConnectionDigraph from_edges(std::size_t num_nodes, std::vector<Edge> edges);

    std::size_t num_nodes() const { return num_nodes_; }
    /// Sorted by (from, to).
    const std::vector<Edge> &edges() const { return edges_; }
    /// Sorted ascending.
    const std::vector<PortId> &successors(PortId u) const { return succ_[u.index]; }
    std::optional<PortId> predecessor(PortId v) const { return pred_[v.index]; }

    ConnectionMap to_map() const;

    friend bool operator==(const ConnectionDigraph &a, const ConnectionDigraph &b) {
        return a.num_nodes_ == b.num_nodes_ && a.edges_ == b.edges_;
    }

   private:
    friend ConnectionDigraph build_digraph(const ConnectionMap &map);

    std::size_t num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<PortId>> succ_;
    std::vector<std::optional<PortId>> pred_;
};

/// Throws InvalidMapError if validate(map) is not empty.
ConnectionDigraph build_digraph(const ConnectionMap &map);

}  // namespace qswitch

#endif
