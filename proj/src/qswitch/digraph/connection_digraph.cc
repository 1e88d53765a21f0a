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

#include "qswitch/digraph/connection_digraph.h"

#include <algorithm>

namespace qswitch {

ConnectionDigraph build_digraph(const ConnectionMap &map) {
    auto violations = validate(map);
    if (!violations.empty()) {
        throw InvalidMapError(std::move(violations));
    }
    ConnectionDigraph g;
    g.num_nodes_ = map.num_ports();
    g.succ_.resize(g.num_nodes_);
    g.pred_.resize(g.num_nodes_);
    for (std::size_t u = 0; u < g.num_nodes_; u++) {
        const auto &d = map.destinations()[u];
        if (!d.has_value()) {
            continue;
        }
        for (PortId v : *d) {
            g.edges_.push_back({PortId(u), v});
            g.succ_[u].push_back(v);
            g.pred_[v.index] = PortId(u);
        }
    }
    return g;
}

ConnectionDigraph ConnectionDigraph::from_edges(std::size_t num_nodes, std::vector<Edge> edges) {
    std::vector<Destinations> dests(num_nodes);
    std::vector<Violation> out_of_range;
    for (const auto &e : edges) {
        if (e.from.index >= num_nodes) {
            out_of_range.push_back({ViolationKind::OutOfRange, e.from, {e.from.index}});
            continue;
        }
        auto &d = dests[e.from.index];
        if (!d.has_value()) {
            d = DestSet{};
        }
        d->push_back(e.to);
    }
    if (!out_of_range.empty()) {
        throw InvalidMapError(std::move(out_of_range));
    }
    return build_digraph(ConnectionMap(num_nodes, std::move(dests)));
}

ConnectionMap ConnectionDigraph::to_map() const {
    std::vector<Destinations> dests(num_nodes_);
    for (std::size_t u = 0; u < num_nodes_; u++) {
        if (!succ_[u].empty()) {
            dests[u] = succ_[u];
        }
    }
    return ConnectionMap(num_nodes_, std::move(dests));
}

}  // namespace qswitch
