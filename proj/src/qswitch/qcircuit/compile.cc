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

#include "qswitch/qcircuit/compile.h"

#include <algorithm>
#include <numeric>

namespace qswitch {

TranspositionSet::TranspositionSet(std::vector<Transposition> pairs) : pairs_(std::move(pairs)) {
    std::vector<PortId> used;
    for (const auto &t : pairs_) {
        if (t.first == t.second) {
            throw CircuitError("degenerate transposition on " + port_name(t.first));
        }
        used.push_back(t.first);
        used.push_back(t.second);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
        throw CircuitError("transpositions overlap");
    }
}

std::vector<PortId> TranspositionSet::as_permutation(std::size_t num_ports) const {
    std::vector<PortId> dest(num_ports);
    for (std::size_t p = 0; p < num_ports; p++) {
        dest[p] = PortId(p);
    }
    for (const auto &t : pairs_) {
        dest.at(t.first.index) = t.second;
        dest.at(t.second.index) = t.first;
    }
    return dest;
}

std::array<Layer, 3> compile_transposition(PortId a, PortId b) {
    if (a == b) {
        throw CircuitError("transposition of " + port_name(a) + " with itself");
    }
    return {Layer{{a, b}}, Layer{{b, a}}, Layer{{a, b}}};
}

std::pair<TranspositionSet, TranspositionSet> cycle_xy(std::span<const PortId> cycle) {
    std::size_t n = cycle.size();
    if (n < 3) {
        throw CircuitError("cycle_xy needs a cycle of length >= 3, got " + std::to_string(n));
    }
    auto q = [&](std::size_t i) { return cycle[i % n]; };
    std::vector<Transposition> x;
    std::vector<Transposition> y;
    std::size_t m = n / 2;
    if (n % 2 == 0) {
        for (std::size_t j = 1; j < m; j++) {
            x.push_back({q(m - j), q(m + j)});
        }
        for (std::size_t j = 0; j < m; j++) {
            y.push_back({q(m - j), q(m + 1 + j)});
        }
    } else {
        for (std::size_t j = 1; j <= m; j++) {
            x.push_back({q(m + 1 - j), q(m + j)});
            y.push_back({q(m + 1 - j), q(m + 1 + j)});
        }
    }
    return {TranspositionSet(std::move(x)), TranspositionSet(std::move(y))};
}

std::array<Layer, 3> compile_transpositions(const TranspositionSet &set) {
    std::array<Layer, 3> layers;
    for (const auto &t : set.pairs()) {
        auto three = compile_transposition(t.first, t.second);
        for (std::size_t k = 0; k < 3; k++) {
            layers[k].add(three[k].gates().front());
        }
    }
    return layers;
}

std::vector<Layer> compile_cycle(std::span<const PortId> cycle) {
    if (cycle.size() < 2) {
        throw CircuitError("compile_cycle needs at least 2 elements");
    }
    if (cycle.size() == 2) {
        auto three = compile_transposition(cycle[0], cycle[1]);
        return {three.begin(), three.end()};
    }
    auto [x, y] = cycle_xy(cycle);
    auto first = compile_transpositions(x);
    auto second = compile_transpositions(y);
    std::vector<Layer> out(first.begin(), first.end());
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

std::vector<Layer> compile_fanout(PortId source, const std::vector<PortId> &targets) {
    if (std::find(targets.begin(), targets.end(), source) != targets.end()) {
        throw CircuitError("fan-out source " + port_name(source) + " is also a target");
    }
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw CircuitError("fan-out targets repeat");
    }
    std::vector<Layer> layers;
    for (const auto &round : fanout_rounds(source, targets)) {
        Layer layer;
        for (const auto &pair : round) {
            layer.add({pair.holder, pair.target});
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

Circuit compile_plan(const PermutationPlan &plan) {
    auto problems = plan_violations(plan);
    if (!problems.empty()) {
        std::string msg = "compile_plan: invalid plan:";
        for (const auto &p : problems) {
            msg += " " + p + ";";
        }
        throw PlanError(msg);
    }
    Circuit circuit(plan.num_ports);
    std::vector<Layer> stage;
    for (const auto &c : plan.cycles) {
        auto fragment = compile_cycle(c);
        if (fragment.size() > stage.size()) {
            stage.resize(fragment.size());
        }
        for (std::size_t k = 0; k < fragment.size(); k++) {
            for (const auto &g : fragment[k].gates()) {
                stage[k].add(g);
            }
        }
    }
    for (auto &layer : stage) {
        circuit.append(std::move(layer));
    }
    for (const auto &round : recovery_rounds(plan)) {
        Layer layer;
        for (const auto &pair : round) {
            layer.add({pair.holder, pair.target});
        }
        circuit.append(std::move(layer));
    }
    return circuit;
}

Circuit compile_map(const ConnectionMap &map) {
    return compile_plan(plan(build_digraph(map)));
}

}  // namespace qswitch
