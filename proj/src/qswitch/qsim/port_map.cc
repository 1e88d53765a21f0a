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

#include "qswitch/qsim/port_map.h"

#include <algorithm>

#include "qswitch/qsim/bit_state.h"

namespace qswitch {

namespace {

std::vector<std::size_t> live_ports(std::size_t n, const std::vector<std::uint8_t> &live) {
    if (!live.empty() && live.size() != n) {
        throw SimulationError("live mask has " + std::to_string(live.size()) + " entries for " +
                              std::to_string(n) + " ports");
    }
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n; u++) {
        if (live.empty() || live[u]) {
            out.push_back(u);
        }
    }
    return out;
}

PortPermutationMap one_hot(const Circuit &c, const std::vector<std::size_t> &inlets) {
    std::size_t n = c.num_qubits();
    // Input 0 is all zeros; input k + 1 sets only inlets[k].
    std::size_t inputs = inlets.size() + 1;
    LaneState s(n, (inputs + 63) / 64);
    for (std::size_t k = 0; k < inlets.size(); k++) {
        s.lane(inlets[k])[(k + 1) / 64] |= std::uint64_t{1} << ((k + 1) % 64);
    }
    run_lanes(c, s);
    PortPermutationMap out;
    out.out_source.resize(n);
    for (std::size_t v = 0; v < n; v++) {
        auto lane = s.lane(v);
        if (lane[0] & 1) {
            throw NotAPortMapError(PortId(v), "outlet is 1 on the all-zero input");
        }
        std::vector<std::size_t> sources;
        for (std::size_t k = 0; k < inlets.size(); k++) {
            if ((lane[(k + 1) / 64] >> ((k + 1) % 64)) & 1) {
                sources.push_back(inlets[k]);
            }
        }
        if (sources.size() > 1) {
            std::string why = "outlet is the XOR of inlets";
            for (auto u : sources) {
                why += " " + std::to_string(u);
            }
            throw NotAPortMapError(PortId(v), why);
        }
        if (!sources.empty()) {
            out.out_source[v] = PortId(sources.front());
        }
    }
    return out;
}

PortPermutationMap exhaustive(const Circuit &c, const std::vector<std::size_t> &inlets) {
    std::size_t n = c.num_qubits();
    if (inlets.size() > kMaxExhaustiveInlets) {
        throw SimulationError("exhaustive port map limited to " +
                              std::to_string(kMaxExhaustiveInlets) + " live inlets");
    }
    std::size_t inputs = std::size_t{1} << inlets.size();
    std::size_t words = (inputs + 63) / 64;
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    // Input k assigns bit i of k to inlets[i].
    LaneState in(n, words);
    for (std::size_t i = 0; i < inlets.size(); i++) {
        auto lane = in.lane(inlets[i]);
        for (std::size_t w = 0; w < words; w++) {
            lane[w] = i < 6 ? kPatterns[i] : (((w >> (i - 6)) & 1) ? ~std::uint64_t{0} : 0);
        }
    }
    LaneState out_state = in;
    run_lanes(c, out_state);

    PortPermutationMap out;
    out.out_source.resize(n);
    for (std::size_t v = 0; v < n; v++) {
        auto got = out_state.lane(v);
        if (std::all_of(got.begin(), got.end(), [](std::uint64_t w) { return w == 0; })) {
            continue;
        }
        bool found = false;
        for (std::size_t u : inlets) {
            auto src = in.lane(u);
            if (std::equal(got.begin(), got.end(), src.begin())) {
                out.out_source[v] = PortId(u);
                found = true;
                break;
            }
        }
        if (!found) {
            throw NotAPortMapError(PortId(v), "outlet matches no single inlet on all " +
                                                  std::to_string(inputs) + " inputs");
        }
    }
    return out;
}

}  // namespace

std::string PortPermutationMap::str() const {
    std::string out;
    for (std::size_t v = 0; v < out_source.size(); v++) {
        if (v) {
            out += " ";
        }
        out += std::to_string(v) + "<-" +
               (out_source[v] ? std::to_string(out_source[v]->index) : std::string("X"));
    }
    return out;
}

NotAPortMapError::NotAPortMapError(PortId outlet, const std::string &why)
    : std::runtime_error("NotAPortMap: outlet " + port_name(outlet) + ": " + why), outlet_(outlet) {}

PortPermutationMap extract_port_map(const Circuit &c, PortMapMethod method,
                                    const std::vector<std::uint8_t> &live) {
    auto inlets = live_ports(c.num_qubits(), live);
    return method == PortMapMethod::OneHot ? one_hot(c, inlets) : exhaustive(c, inlets);
}

PortPermutationMap delivery_map(const ConnectionMap &map) {
    return {map.predecessors()};
}

std::vector<std::uint8_t> live_inlets(const ConnectionMap &map) {
    std::vector<std::uint8_t> live(map.num_ports());
    for (std::size_t u = 0; u < map.num_ports(); u++) {
        live[u] = map.is_idle(PortId(u)) ? 0 : 1;
    }
    return live;
}

}  // namespace qswitch
