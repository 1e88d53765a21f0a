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

#include "qswitch/cli/verify.h"

#include <cmath>
#include <random>

#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/qcircuit/compile.h"
#include "qswitch/qsim/bit_state.h"
#include "qswitch/qsim/port_map.h"

namespace qswitch {

namespace {

std::string first_difference(const PortPermutationMap &want, const PortPermutationMap &got) {
    for (std::size_t v = 0; v < want.out_source.size() && v < got.out_source.size(); v++) {
        if (want.out_source[v] != got.out_source[v]) {
            auto name = [](const std::optional<PortId> &p) {
                return p ? std::to_string(p->index) : std::string("X");
            };
            return "outlet " + std::to_string(v) + ": expected " + name(want.out_source[v]) +
                   ", got " + name(got.out_source[v]);
        }
    }
    return "port count differs";
}

CheckResult port_map_check(const char *name, const Circuit &c, PortMapMethod method,
                           const std::vector<std::uint8_t> &live, const PortPermutationMap &want) {
    try {
        auto got = extract_port_map(c, method, live);
        if (got == want) {
            return {name, true, got.str()};
        }
        return {name, false, first_difference(want, got)};
    } catch (const NotAPortMapError &e) {
        return {name, false, e.what()};
    }
}

std::vector<std::uint8_t> random_inlet_bits(const ConnectionMap &map, std::mt19937_64 &rng) {
    std::vector<std::uint8_t> bits(map.num_ports(), 0);
    for (std::size_t u = 0; u < bits.size(); u++) {
        if (!map.is_idle(PortId(u))) {
            bits[u] = uniform_below(rng, 2);
        }
    }
    return bits;
}

std::vector<std::uint8_t> expected_outlets(const ConnectionMap &map, const std::vector<std::uint8_t> &in) {
    auto pred = map.predecessors();
    std::vector<std::uint8_t> out(in.size(), 0);
    for (std::size_t v = 0; v < in.size(); v++) {
        if (pred[v]) {
            out[v] = in[pred[v]->index];
        }
    }
    return out;
}

CheckResult plan_delivery_check(const ConnectionMap &map, const PermutationPlan &plan,
                                const VerifyOptions &options) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t t = 0; t < options.trials; t++) {
        auto in = random_inlet_bits(map, rng);
        try {
            if (interpret_plan(plan, in) != expected_outlets(map, in)) {
                return {"plan_delivery", false, "trial " + std::to_string(t) + " misrouted"};
            }
        } catch (const PlanError &e) {
            return {"plan_delivery", false, e.what()};
        }
    }
    return {"plan_delivery", true, std::to_string(options.trials) + " random inlet assignments"};
}

CheckResult recovery_targets_check(const ConnectionMap &map, const Circuit &c,
                                   const PermutationPlan &plan) {
    auto rounds = recovery_rounds(plan);
    if (rounds.size() > c.depth()) {
        return {"recovery_targets_clear", false, "circuit shorter than its recovery stage"};
    }
    std::size_t first = c.depth() - rounds.size();
    std::vector<std::uint8_t> ones = live_inlets(map);
    std::string failure;
    run_bits(c, BitState(ones), [&](std::size_t layer, const BitState &before) {
        if (layer < first || !failure.empty()) {
            return;
        }
        for (const auto &pair : rounds[layer - first]) {
            if (before[pair.target.index]) {
                failure = "target " + port_name(pair.target) + " holds 1 before layer " +
                          std::to_string(layer + 1);
            }
        }
    });
    if (!failure.empty()) {
        return {"recovery_targets_clear", false, failure};
    }
    return {"recovery_targets_clear", true, std::to_string(rounds.size()) + " recovery layers"};
}

CheckResult basis_agreement_check(const Circuit &c, const VerifyOptions &options) {
    std::size_t n = c.num_qubits();
    std::mt19937_64 rng(options.seed);
    bool exhaustive = n <= kExhaustivePorts;
    std::size_t count = exhaustive ? (std::size_t{1} << n) : options.trials;
    for (std::size_t k = 0; k < count; k++) {
        std::uint64_t index = exhaustive ? k : uniform_below(rng, std::uint64_t{1} << n);
        auto bits = run_bits(c, BitState::from_index(n, index));
        auto state = run_state(c, StateVector::basis(n, index, options.max_qubits));
        if (!(state == StateVector::basis(n, bits.to_index(), options.max_qubits))) {
            return {"basis_agreement", false, "basis state " + std::to_string(index) + " disagrees"};
        }
    }
    return {"basis_agreement", true,
            std::to_string(count) + (exhaustive ? " basis states (exhaustive)" : " sampled basis states")};
}

CheckResult unitarity_check(const Circuit &c, const VerifyOptions &options) {
    std::size_t n = c.num_qubits();
    if (n <= kMatrixQubits) {
        auto m = circuit_matrix(c, options.max_qubits);
        if (!is_permutation_matrix(m)) {
            return {"unitarity", false, "matrix is not a 0/1 permutation matrix"};
        }
        if (!is_unitary_exact(m)) {
            return {"unitarity", false, "U U^dagger != I"};
        }
        return {"unitarity", true, "permutation matrix, U U^dagger = I exactly"};
    }
    // Columns are basis vectors with amplitude exactly 1 and distinct rows.
    std::size_t dim = std::size_t{1} << n;
    std::vector<bool> hit(dim, false);
    for (std::size_t col = 0; col < dim; col++) {
        auto out = run_state(c, StateVector::basis(n, col, options.max_qubits));
        std::size_t row = dim;
        for (std::size_t i = 0; i < dim; i++) {
            if (out[i] == Amplitude{1, 0} && row == dim) {
                row = i;
            } else if (out[i] != Amplitude{0, 0}) {
                return {"unitarity", false, "column " + std::to_string(col) + " is not a basis vector"};
            }
        }
        if (row == dim || hit[row]) {
            return {"unitarity", false, "columns collide at row " + std::to_string(row)};
        }
        hit[row] = true;
    }
    return {"unitarity", true, "all " + std::to_string(dim) + " columns map to distinct basis vectors"};
}

CheckResult norm_check(const Circuit &c, const VerifyOptions &options) {
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ull);
    double worst = 0;
    for (std::size_t t = 0; t < options.trials; t++) {
        auto v = random_state(c.num_qubits(), rng, options.max_qubits);
        double before = v.norm_squared();
        double after = run_state(c, std::move(v)).norm_squared();
        worst = std::max(worst, std::abs(after - before));
    }
    bool pass = worst <= kNormTolerance;
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |delta norm^2| = %.3g", worst);
    return {"norm_preservation", pass, buf};
}

}  // namespace

std::size_t depth_bound(const PermutationPlan &plan) {
    return 6 + fanout_depth(plan.max_fanout());
}

std::vector<CheckResult> verify_circuit(const ConnectionMap &map, const Circuit &circuit,
                                        const PermutationPlan *plan, const VerifyOptions &options) {
    std::vector<CheckResult> out;
    if (circuit.num_qubits() != map.num_ports()) {
        out.push_back({"circuit_width", false,
                       "circuit has " + std::to_string(circuit.num_qubits()) + " qubits, map has " +
                           std::to_string(map.num_ports()) + " ports"});
        return out;
    }
    bool bits = options.mode != VerifyMode::State;
    bool state = options.mode != VerifyMode::Bits;
    if (state && map.num_ports() > options.max_qubits) {
        throw StateVectorCapError("state mode needs " + std::to_string(map.num_ports()) +
                                  " qubits, cap is " + std::to_string(options.max_qubits));
    }
    auto want = delivery_map(map);
    auto live = live_inlets(map);
    if (bits) {
        out.push_back(port_map_check("port_map_one_hot", circuit, PortMapMethod::OneHot, live, want));
        if (map.num_ports() <= kExhaustivePorts) {
            out.push_back(port_map_check("port_map_exhaustive", circuit, PortMapMethod::Exhaustive, live, want));
        }
        if (plan != nullptr) {
            out.push_back(plan_delivery_check(map, *plan, options));
            out.push_back(recovery_targets_check(map, circuit, *plan));
            std::size_t bound = depth_bound(*plan);
            out.push_back({"depth_bound", circuit.depth() <= bound,
                           "depth " + std::to_string(circuit.depth()) + " <= " + std::to_string(bound)});
        }
    }
    if (state) {
        out.push_back(basis_agreement_check(circuit, options));
        out.push_back(unitarity_check(circuit, options));
        out.push_back(norm_check(circuit, options));
    }
    return out;
}

std::vector<CheckResult> verify_random(TrafficKind kind, std::size_t num_ports,
                                       const VerifyOptions &options) {
    bool state = options.mode != VerifyMode::Bits;
    if (state && num_ports > options.max_qubits) {
        throw StateVectorCapError("state mode needs " + std::to_string(num_ports) +
                                  " qubits, cap is " + std::to_string(options.max_qubits));
    }
    std::mt19937_64 rng(options.seed);
    std::size_t routed = 0;
    std::size_t within_bound = 0;
    std::size_t state_ok = 0;
    std::size_t max_depth = 0;
    std::string first_failure;
    for (std::size_t t = 0; t < options.trials; t++) {
        auto map = random_map(num_ports, kind, rng);
        auto p = plan(build_digraph(map));
        auto c = compile_plan(p);
        max_depth = std::max(max_depth, c.depth());
        auto check = port_map_check("port_map_one_hot", c, PortMapMethod::OneHot, live_inlets(map),
                                    delivery_map(map));
        if (check.pass) {
            routed++;
        } else if (first_failure.empty()) {
            first_failure = "trial " + std::to_string(t) + ": " + check.detail;
        }
        std::size_t bound = kind == TrafficKind::Unicast ? 6 : depth_bound(p);
        if (c.depth() <= bound) {
            within_bound++;
        }
        if (state) {
            VerifyOptions one = options;
            one.trials = 1;
            one.seed = rng();
            if (basis_agreement_check(c, one).pass && norm_check(c, one).pass) {
                state_ok++;
            }
        }
    }
    std::string n = std::to_string(options.trials);
    std::vector<CheckResult> out;
    out.push_back({"random_port_maps", routed == options.trials,
                   std::to_string(routed) + "/" + n + " maps routed correctly" +
                       (first_failure.empty() ? "" : "; first failure " + first_failure)});
    out.push_back({"random_depth_bound", within_bound == options.trials,
                   std::to_string(within_bound) + "/" + n + " within bound; max depth " +
                       std::to_string(max_depth)});
    if (state) {
        out.push_back({"random_state_checks", state_ok == options.trials,
                       std::to_string(state_ok) + "/" + n + " maps"});
    }
    return out;
}

}  // namespace qswitch
