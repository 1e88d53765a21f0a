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

#include "qswitch/planner/plan.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qswitch {

namespace {

void require_kind(const SubDigraph &sub, SubDigraphKind kind, const char *op) {
    if (sub.kind != kind) {
        throw PlanError(std::string(op) + ": expected a " + kind_name(kind) + ", got a " +
                        kind_name(sub.kind));
    }
}

}  // namespace

const char *extension_kind_name(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::E1:
            return "E1";
        case ExtensionKind::E2:
            return "E2";
        case ExtensionKind::E3:
            return "E3";
    }
    return "?";
}

std::size_t PermutationPlan::max_fanout() const {
    std::size_t r = 0;
    for (const auto &g : recovery) {
        r = std::max(r, g.targets.size());
    }
    return r;
}

ExtensionRecord extend_null(const SubDigraph &null_node) {
    require_kind(null_node, SubDigraphKind::NullNode, "extend_null");
    PortId v = null_node.nodes.front();
    return {ExtensionKind::E1, {v, v}};
}

ExtensionRecord extend_queue(const SubDigraph &queue) {
    require_kind(queue, SubDigraphKind::Queue, "extend_queue");
    return {ExtensionKind::E2, {queue.nodes.back(), queue.nodes.front()}};
}

ExtensionRecord extend_tree(const SubDigraph &tree, PortId leaf) {
    require_kind(tree, SubDigraphKind::Tree, "extend_tree");
    if (!std::binary_search(tree.leaves.begin(), tree.leaves.end(), leaf)) {
        throw PlanError("extend_tree: " + port_name(leaf) + " is not a leaf of the tree");
    }
    return {ExtensionKind::E3, {leaf, *tree.root}};
}

SubDigraph apply_extension(const SubDigraph &sub, const ExtensionRecord &ext) {
    auto edges = sub.edges;
    edges.push_back(ext.added_edge);
    return classify(sub.nodes, edges);
}

CycleExtraction extract_cycle(const SubDigraph &forest) {
    if (forest.kind != SubDigraphKind::Forest && forest.kind != SubDigraphKind::Cycle &&
        forest.kind != SubDigraphKind::Loopback) {
        throw PlanError(std::string("extract_cycle: expected a forest, got a ") +
                        kind_name(forest.kind));
    }
    CycleExtraction out;
    out.cycle = forest.cycle;
    std::set<PortId> on_cycle(out.cycle.begin(), out.cycle.end());
    std::vector<PortId> rest;
    for (PortId p : forest.nodes) {
        if (!on_cycle.count(p)) {
            rest.push_back(p);
        }
    }
    std::vector<Edge> rest_edges;
    for (const auto &e : forest.edges) {
        bool from_cycle = on_cycle.count(e.from) > 0;
        bool to_cycle = on_cycle.count(e.to) > 0;
        if (from_cycle && !to_cycle) {
            out.cuts.push_back(e);
        } else if (!from_cycle) {
            rest_edges.push_back(e);
        }
    }
    std::sort(out.cuts.begin(), out.cuts.end());
    if (!rest.empty()) {
        out.detached = decompose(rest, rest_edges);
    }
    return out;
}

PermutationPlan plan(const ConnectionDigraph &g) {
    PermutationPlan out;
    out.num_ports = g.num_nodes();

    struct Pending {
        SubDigraph sub;
        std::size_t depth;
    };
    std::deque<Pending> work;
    for (auto &sub : decompose(g)) {
        work.push_back({std::move(sub), 0});
    }
    std::map<PortId, std::vector<PortId>> groups;

    while (!work.empty()) {
        Pending item = std::move(work.front());
        work.pop_front();
        SubDigraph sub = std::move(item.sub);
        switch (sub.kind) {
            case SubDigraphKind::NullNode:
                out.extensions.push_back(extend_null(sub));
                out.loopbacks.push_back(sub.nodes.front());
                continue;
            case SubDigraphKind::Loopback:
                out.loopbacks.push_back(sub.nodes.front());
                continue;
            case SubDigraphKind::Queue: {
                auto ext = extend_queue(sub);
                out.extensions.push_back(ext);
                out.cycles.push_back(normalize_cycle(sub.nodes));
                continue;
            }
            case SubDigraphKind::Cycle:
                out.cycles.push_back(sub.cycle);
                continue;
            case SubDigraphKind::Tree: {
                auto ext = extend_tree(sub, sub.leaves.front());
                out.extensions.push_back(ext);
                sub = apply_extension(sub, ext);
                break;
            }
            case SubDigraphKind::Forest:
                break;
        }

        auto extraction = extract_cycle(sub);
        const auto &cycle = extraction.cycle;
        if (cycle.size() == 1) {
            out.loopbacks.push_back(cycle.front());
        } else {
            out.cycles.push_back(cycle);
        }
        for (const auto &cut : extraction.cuts) {
            auto pos = std::find(cycle.begin(), cycle.end(), cut.from) - cycle.begin();
            PortId holder = cycle[(pos + 1) % cycle.size()];
            groups[holder].push_back(cut.to);
            out.cut_edges.push_back(cut);
        }
        out.reduction_depth = std::max(out.reduction_depth, item.depth + 1);
        for (auto &d : extraction.detached) {
            work.push_back({std::move(d), item.depth + 1});
        }
    }

    std::sort(out.cycles.begin(), out.cycles.end());
    std::sort(out.loopbacks.begin(), out.loopbacks.end());
    std::sort(out.cut_edges.begin(), out.cut_edges.end());
    for (auto &[source, targets] : groups) {
        std::sort(targets.begin(), targets.end());
        out.recovery.push_back({source, std::move(targets)});
    }
    return out;
}

std::vector<std::string> plan_violations(const PermutationPlan &p) {
    std::vector<std::string> out;
    std::vector<int> cover(p.num_ports, 0);
    auto mark = [&](PortId v, const char *what) {
        if (v.index >= p.num_ports) {
            out.push_back(std::string(what) + " port " + port_name(v) + " out of range");
            return false;
        }
        cover[v.index]++;
        return true;
    };
    for (const auto &c : p.cycles) {
        if (c.size() < 2) {
            out.push_back("cycle shorter than 2");
        }
        for (PortId v : c) {
            mark(v, "cycle");
        }
    }
    for (PortId v : p.loopbacks) {
        mark(v, "loopback");
    }
    for (std::size_t v = 0; v < p.num_ports; v++) {
        if (cover[v] != 1) {
            out.push_back("port " + port_name(PortId(v)) + " covered " + std::to_string(cover[v]) +
                          " times by cycles and loopbacks");
        }
    }
    std::vector<int> used(p.num_ports, 0);
    for (const auto &g : p.recovery) {
        if (g.source.index >= p.num_ports) {
            out.push_back("recovery source out of range");
            continue;
        }
        used[g.source.index]++;
        for (PortId t : g.targets) {
            if (t.index >= p.num_ports) {
                out.push_back("recovery target out of range");
                continue;
            }
            used[t.index]++;
        }
    }
    for (std::size_t v = 0; v < p.num_ports; v++) {
        if (used[v] > 1) {
            out.push_back("port " + port_name(PortId(v)) + " appears in more than one recovery role");
        }
    }
    return out;
}

std::size_t ceil_log2(std::size_t x) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < x) {
        k++;
    }
    return k;
}

std::vector<RecoveryRound> fanout_rounds(PortId source, const std::vector<PortId> &targets) {
    std::vector<RecoveryRound> rounds;
    std::vector<PortId> holders{source};
    std::size_t next = 0;
    while (next < targets.size()) {
        RecoveryRound round;
        std::size_t holders_now = holders.size();
        for (std::size_t h = 0; h < holders_now && next < targets.size(); h++) {
            round.push_back({holders[h], targets[next]});
            holders.push_back(targets[next]);
            next++;
        }
        rounds.push_back(std::move(round));
    }
    return rounds;
}

std::vector<RecoveryRound> recovery_rounds(const PermutationPlan &p) {
    std::vector<RecoveryRound> merged;
    for (const auto &g : p.recovery) {
        auto rounds = fanout_rounds(g.source, g.targets);
        if (rounds.size() > merged.size()) {
            merged.resize(rounds.size());
        }
        for (std::size_t k = 0; k < rounds.size(); k++) {
            merged[k].insert(merged[k].end(), rounds[k].begin(), rounds[k].end());
        }
    }
    for (auto &round : merged) {
        std::sort(round.begin(), round.end(), [](const CopyPair &a, const CopyPair &b) {
            return a.holder < b.holder;
        });
    }
    return merged;
}

std::vector<std::uint8_t> interpret_plan(const PermutationPlan &p, std::span<const std::uint8_t> bits) {
    if (bits.size() != p.num_ports) {
        throw PlanError("interpret_plan: expected " + std::to_string(p.num_ports) + " bits, got " +
                        std::to_string(bits.size()));
    }
    std::vector<std::uint8_t> state(bits.begin(), bits.end());
    for (const auto &c : p.cycles) {
        for (std::size_t k = 0; k < c.size(); k++) {
            state[c[(k + 1) % c.size()].index] = bits[c[k].index];
        }
    }
    for (const auto &round : recovery_rounds(p)) {
        for (const auto &pair : round) {
            if (state[pair.target.index] != 0) {
                throw PlanError("recovery target " + port_name(pair.target) +
                                " is not 0 before its copy");
            }
            state[pair.target.index] = state[pair.holder.index];
        }
    }
    return state;
}

}  // namespace qswitch
