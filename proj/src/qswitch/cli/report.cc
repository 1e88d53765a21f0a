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

#include "qswitch/cli/report.h"

#include <algorithm>
#include <array>

namespace qswitch {

namespace {

constexpr std::array<SubDigraphKind, 6> kKinds = {
    SubDigraphKind::NullNode, SubDigraphKind::Loopback, SubDigraphKind::Queue,
    SubDigraphKind::Cycle,    SubDigraphKind::Tree,     SubDigraphKind::Forest};

std::string plural(SubDigraphKind k, std::size_t count) {
    std::string name = kind_name(k);
    if (count == 1) {
        return name;
    }
    if (name == "null node") {
        return "null nodes";
    }
    return name + "s";
}

std::string join_ports(const std::vector<PortId> &ports, const char *sep = ",") {
    std::string out;
    for (std::size_t k = 0; k < ports.size(); k++) {
        out += (k ? sep : "") + std::to_string(ports[k].index);
    }
    return out;
}

std::string edges_text(const std::vector<Edge> &edges) {
    if (edges.empty()) {
        return "none";
    }
    std::string out;
    for (std::size_t k = 0; k < edges.size(); k++) {
        out += (k ? ", " : "") + edge_name(edges[k]);
    }
    return out;
}

nlohmann::ordered_json ports_json(const std::vector<PortId> &ports) {
    auto arr = nlohmann::ordered_json::array();
    for (PortId p : ports) {
        arr.push_back(p.index);
    }
    return arr;
}

}  // namespace

bool Report::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

std::string component_summary(const std::vector<SubDigraph> &components) {
    std::string out;
    for (auto kind : kKinds) {
        auto count = static_cast<std::size_t>(std::count_if(
            components.begin(), components.end(), [&](const SubDigraph &s) { return s.kind == kind; }));
        if (count == 0) {
            continue;
        }
        out += (out.empty() ? "" : ", ") + std::to_string(count) + " " + plural(kind, count);
    }
    return out.empty() ? "none" : out;
}

std::string describe_component(const SubDigraph &sub) {
    std::string out = kind_name(sub.kind);
    switch (sub.kind) {
        case SubDigraphKind::Queue:
            out += " (head " + port_name(sub.nodes.front()) + ", tail " + port_name(sub.nodes.back()) + ")";
            break;
        case SubDigraphKind::Tree:
            out += " (root " + port_name(*sub.root) + ", " + std::to_string(sub.leaves.size()) +
                   (sub.leaves.size() == 1 ? " leaf)" : " leaves)");
            break;
        case SubDigraphKind::Cycle:
            out += " (length " + std::to_string(sub.cycle.size()) + ")";
            break;
        case SubDigraphKind::Forest:
            out += " (cycle length " + std::to_string(sub.cycle.size()) + ", " +
                   std::to_string(sub.nodes.size() - sub.cycle.size()) + " attached)";
            break;
        default:
            break;
    }
    return out + ": " + sub.str();
}

std::string report_to_text(const Report &r) {
    std::string out;
    out += "command: " + r.command + "\n";
    out += "ports: " + std::to_string(r.num_ports) + "\n";
    out += "valid: " + std::string(!r.valid ? "unknown" : (*r.valid ? "yes" : "no")) + "\n";
    out += "violations:" + std::string(r.violations.empty() ? " none" : "") + "\n";
    for (const auto &v : r.violations) {
        out += "  " + v + "\n";
    }
    out += "components: " + component_summary(r.components) + "\n";
    for (const auto &c : r.components) {
        out += "  " + describe_component(c) + "\n";
    }
    if (r.plan) {
        const auto &p = *r.plan;
        out += "extensions:";
        if (p.extensions.empty()) {
            out += " none";
        }
        for (const auto &e : p.extensions) {
            out += std::string(" ") + extension_kind_name(e.kind) + " " + edge_name(e.added_edge);
        }
        out += "\ncut edges: " + edges_text(p.cut_edges) + "\ncycles:";
        if (p.cycles.empty()) {
            out += " none";
        }
        for (const auto &c : p.cycles) {
            out += " (" + join_ports(c) + ")";
        }
        out += "\nloopbacks: " + (p.loopbacks.empty() ? std::string("none") : join_ports(p.loopbacks, " "));
        out += "\nrecovery:";
        if (p.recovery.empty()) {
            out += " none";
        }
        for (std::size_t k = 0; k < p.recovery.size(); k++) {
            const auto &g = p.recovery[k];
            out += (k ? ", " : " ") + std::to_string(g.source.index) + "->" + join_ports(g.targets);
        }
        out += "\nmax fanout: " + std::to_string(p.max_fanout()) + "\n";
    } else {
        out += "plan: none\n";
    }
    if (r.circuit) {
        out += "depth: " + std::to_string(r.circuit->depth) + "\n";
        out += "gates: " + std::to_string(r.circuit->gate_count) + "\n";
        out += "layer widths:";
        if (r.circuit->per_layer_widths.empty()) {
            out += " none";
        }
        for (auto w : r.circuit->per_layer_widths) {
            out += " " + std::to_string(w);
        }
        out += "\n";
    } else {
        out += "circuit: none\n";
    }
    out += "checks:" + std::string(r.checks.empty() ? " none" : "") + "\n";
    for (const auto &c : r.checks) {
        out += "  " + c.name + ": " + (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) {
            out += " (" + c.detail + ")";
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json report_to_json(const Report &r) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema"] = "qswitch-report/1";
    j["command"] = r.command;
    j["ports"] = r.num_ports;
    j["valid"] = r.valid ? json(*r.valid) : json(nullptr);
    j["violations"] = r.violations;
    j["summary"] = component_summary(r.components);
    auto comps = json::array();
    for (const auto &c : r.components) {
        json jc;
        jc["kind"] = kind_name(c.kind);
        jc["nodes"] = ports_json(c.nodes);
        jc["root"] = c.root ? json(c.root->index) : json(nullptr);
        jc["leaves"] = ports_json(c.leaves);
        jc["cycle"] = ports_json(c.cycle);
        jc["notation"] = c.str();
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    if (r.plan) {
        const auto &p = *r.plan;
        json jp;
        auto exts = json::array();
        for (const auto &e : p.extensions) {
            exts.push_back({{"kind", extension_kind_name(e.kind)},
                            {"from", e.added_edge.from.index},
                            {"to", e.added_edge.to.index}});
        }
        jp["extensions"] = std::move(exts);
        auto cuts = json::array();
        for (const auto &e : p.cut_edges) {
            cuts.push_back({e.from.index, e.to.index});
        }
        jp["cut_edges"] = std::move(cuts);
        auto cycles = json::array();
        for (const auto &c : p.cycles) {
            cycles.push_back(ports_json(c));
        }
        jp["cycles"] = std::move(cycles);
        jp["loopbacks"] = ports_json(p.loopbacks);
        auto groups = json::array();
        for (const auto &g : p.recovery) {
            json jg;
            jg["source"] = g.source.index;
            jg["targets"] = ports_json(g.targets);
            groups.push_back(std::move(jg));
        }
        jp["recovery"] = std::move(groups);
        jp["max_fanout"] = p.max_fanout();
        j["plan"] = std::move(jp);
    } else {
        j["plan"] = nullptr;
    }
    if (r.circuit) {
        j["circuit"] = {{"depth", r.circuit->depth},
                        {"gate_count", r.circuit->gate_count},
                        {"layer_widths", r.circuit->per_layer_widths}};
    } else {
        j["circuit"] = nullptr;
    }
    auto checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"verdict", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string plan_to_text(const PermutationPlan &p, const CircuitStats &s) {
    std::string out = "QSWITCH-PLAN v1\nports " + std::to_string(p.num_ports) + "\n";
    for (const auto &e : p.extensions) {
        out += std::string("extension ") + extension_kind_name(e.kind) + " " + edge_name(e.added_edge) + "\n";
    }
    for (const auto &e : p.cut_edges) {
        out += "cut " + edge_name(e) + "\n";
    }
    for (const auto &c : p.cycles) {
        out += "cycle (" + join_ports(c) + ")\n";
    }
    for (PortId l : p.loopbacks) {
        out += "loopback " + std::to_string(l.index) + "\n";
    }
    for (const auto &g : p.recovery) {
        for (PortId t : g.targets) {
            out += "recovery " + std::to_string(g.source.index) + "->" + std::to_string(t.index) + "\n";
        }
    }
    out += "depth " + std::to_string(s.depth) + "\ngates " + std::to_string(s.gate_count) + "\n";
    return out;
}

}  // namespace qswitch
