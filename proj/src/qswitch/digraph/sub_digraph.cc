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

#include "qswitch/digraph/sub_digraph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace qswitch {

namespace {

struct LocalGraph {
    std::map<PortId, std::vector<PortId>> succ;
    std::map<PortId, std::optional<PortId>> pred;
};

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::vector<PortId> breadth_first(const LocalGraph &g, const std::vector<PortId> &starts,
                                  const std::vector<PortId> &skip) {
    std::vector<PortId> order;
    std::vector<PortId> seen = skip;
    std::queue<PortId> frontier;
    for (PortId s : starts) {
        frontier.push(s);
    }
    while (!frontier.empty()) {
        PortId u = frontier.front();
        frontier.pop();
        if (std::find(seen.begin(), seen.end(), u) != seen.end()) {
            continue;
        }
        seen.push_back(u);
        order.push_back(u);
        for (PortId v : g.succ.at(u)) {
            frontier.push(v);
        }
    }
    return order;
}

}  // namespace

const char *kind_name(SubDigraphKind k) {
    switch (k) {
        case SubDigraphKind::NullNode:
            return "null node";
        case SubDigraphKind::Loopback:
            return "loopback";
        case SubDigraphKind::Queue:
            return "queue";
        case SubDigraphKind::Cycle:
            return "cycle";
        case SubDigraphKind::Tree:
            return "tree";
        case SubDigraphKind::Forest:
            return "forest";
    }
    return "?";
}

std::vector<PortId> normalize_cycle(std::vector<PortId> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    return cycle;
}

std::vector<PortId> SubDigraph::successors(PortId u) const {
    std::vector<PortId> out;
    for (const auto &e : edges) {
        if (e.from == u) {
            out.push_back(e.to);
        }
    }
    return out;
}

bool SubDigraph::contains(PortId p) const {
    return std::find(nodes.begin(), nodes.end(), p) != nodes.end();
}

std::string SubDigraph::str() const {
    switch (kind) {
        case SubDigraphKind::NullNode:
            return port_name(nodes.front());
        case SubDigraphKind::Loopback:
        case SubDigraphKind::Cycle:
            return "(" + port_list_string(cycle) + ")";
        case SubDigraphKind::Queue:
            return "[" + port_list_string(nodes) + "]";
        case SubDigraphKind::Tree: {
            std::string out = "[" + port_name(*root) + "]";
            for (PortId u : nodes) {
                auto s = successors(u);
                if (!s.empty()) {
                    out += "[" + port_name(u) + ";" + port_list_string(s) + "]";
                }
            }
            return out;
        }
        case SubDigraphKind::Forest: {
            std::string out = "{(" + port_list_string(cycle) + ")";
            for (const auto &e : edges) {
                bool in_cycle_step = false;
                for (std::size_t k = 0; k < cycle.size(); k++) {
                    if (cycle[k] == e.from && cycle[(k + 1) % cycle.size()] == e.to) {
                        in_cycle_step = true;
                    }
                }
                if (!in_cycle_step) {
                    out += "," + port_name(e.from) + "->" + port_name(e.to);
                }
            }
            return out + "}";
        }
    }
    return "?";
}

SubDigraph classify(const std::vector<PortId> &nodes_in, const std::vector<Edge> &edges_in) {
    if (nodes_in.empty()) {
        throw UnclassifiableError("cannot classify an empty node set");
    }
    std::vector<PortId> nodes = nodes_in;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
        throw UnclassifiableError("duplicate node in node set");
    }
    std::vector<Edge> edges = edges_in;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto index_of = [&](PortId p) -> std::optional<std::size_t> {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
        if (it == nodes.end() || *it != p) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - nodes.begin());
    };

    LocalGraph g;
    for (PortId p : nodes) {
        g.succ[p];
        g.pred[p];
    }
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : edges) {
        auto a = index_of(e.from);
        auto b = index_of(e.to);
        if (!a || !b) {
            throw UnclassifiableError("edge " + edge_name(e) + " leaves the node set");
        }
        if (g.pred[e.to].has_value()) {
            throw UnclassifiableError("node " + port_name(e.to) + " has more than one predecessor");
        }
        g.pred[e.to] = e.from;
        g.succ[e.from].push_back(e.to);
        parent[find_root(parent, *a)] = find_root(parent, *b);
    }
    for (std::size_t k = 1; k < nodes.size(); k++) {
        if (find_root(parent, k) != find_root(parent, 0)) {
            throw UnclassifiableError("node set is not weakly connected");
        }
    }

    SubDigraph out;
    out.edges = edges;
    std::size_t k = nodes.size();
    std::size_t m = edges.size();

    if (k == 1) {
        out.nodes = nodes;
        if (m == 0) {
            out.kind = SubDigraphKind::NullNode;
        } else {
            out.kind = SubDigraphKind::Loopback;
            out.cycle = nodes;
        }
        return out;
    }

    bool all_unit_out = std::all_of(nodes.begin(), nodes.end(),
                                    [&](PortId p) { return g.succ[p].size() <= 1; });
    for (PortId p : nodes) {
        if (g.succ[p].empty()) {
            out.leaves.push_back(p);
        }
    }

    if (m + 1 == k) {
        PortId root = *std::find_if(nodes.begin(), nodes.end(),
                                    [&](PortId p) { return !g.pred[p].has_value(); });
        out.root = root;
        out.kind = all_unit_out ? SubDigraphKind::Queue : SubDigraphKind::Tree;
        out.nodes = breadth_first(g, {root}, {});
        return out;
    }

    // m == k: every node has exactly one predecessor, so walking predecessors
    // from any node ends on the unique cycle.
    std::vector<bool> seen(k, false);
    PortId p = nodes.front();
    while (!seen[*index_of(p)]) {
        seen[*index_of(p)] = true;
        p = *g.pred[p];
    }
    std::vector<PortId> cycle{p};
    for (PortId q = *g.pred[p]; q != p; q = *g.pred[q]) {
        cycle.push_back(q);
    }
    std::reverse(cycle.begin(), cycle.end());
    out.cycle = normalize_cycle(std::move(cycle));

    if (all_unit_out) {
        out.kind = SubDigraphKind::Cycle;
        out.nodes = out.cycle;
        return out;
    }
    out.kind = SubDigraphKind::Forest;
    out.nodes = out.cycle;
    std::vector<PortId> attached_starts;
    for (PortId c : out.cycle) {
        for (PortId v : g.succ[c]) {
            if (std::find(out.cycle.begin(), out.cycle.end(), v) == out.cycle.end()) {
                attached_starts.push_back(v);
            }
        }
    }
    auto rest = breadth_first(g, attached_starts, out.cycle);
    out.nodes.insert(out.nodes.end(), rest.begin(), rest.end());
    return out;
}

std::vector<SubDigraph> decompose(const std::vector<PortId> &nodes_in, const std::vector<Edge> &edges) {
    std::vector<PortId> nodes = nodes_in;
    std::sort(nodes.begin(), nodes.end());
    auto index_of = [&](PortId p) -> std::size_t {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
        if (it == nodes.end() || *it != p) {
            throw UnclassifiableError("edge endpoint " + port_name(p) + " outside the node set");
        }
        return static_cast<std::size_t>(it - nodes.begin());
    };
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : edges) {
        parent[find_root(parent, index_of(e.from))] = find_root(parent, index_of(e.to));
    }
    // Roots are visited in order of their smallest member since nodes are sorted.
    std::map<std::size_t, std::size_t> slot_of_root;
    std::vector<std::vector<PortId>> members;
    std::vector<std::vector<Edge>> member_edges;
    for (std::size_t k = 0; k < nodes.size(); k++) {
        auto [it, inserted] = slot_of_root.try_emplace(find_root(parent, k), members.size());
        if (inserted) {
            members.emplace_back();
            member_edges.emplace_back();
        }
        members[it->second].push_back(nodes[k]);
    }
    for (const auto &e : edges) {
        member_edges[slot_of_root.at(find_root(parent, index_of(e.from)))].push_back(e);
    }
    std::vector<SubDigraph> out;
    out.reserve(members.size());
    for (std::size_t k = 0; k < members.size(); k++) {
        out.push_back(classify(members[k], member_edges[k]));
    }
    return out;
}

std::vector<SubDigraph> decompose(const ConnectionDigraph &g) {
    std::vector<PortId> nodes;
    nodes.reserve(g.num_nodes());
    for (std::size_t v = 0; v < g.num_nodes(); v++) {
        nodes.emplace_back(v);
    }
    return decompose(nodes, g.edges());
}

}  // namespace qswitch
