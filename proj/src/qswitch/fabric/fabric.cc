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

#include "qswitch/fabric/fabric.h"

#include <algorithm>
#include <deque>
#include <mutex>

#include "qswitch/qcircuit/compile.h"
#include "qswitch/qsim/bit_state.h"

namespace qswitch {

ScheduleError::ScheduleError(std::size_t slot, const std::string &what)
    : std::runtime_error("slot " + std::to_string(slot) + ": " + what), slot_(slot) {}

std::shared_ptr<const Circuit> CircuitCache::get(const ConnectionMap &map) {
    {
        std::shared_lock lock(mutex_);
        auto it = circuits_.find(map);
        if (it != circuits_.end()) {
            return it->second;
        }
    }
    auto compiled = std::make_shared<const Circuit>(compile_map(map));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = circuits_.try_emplace(map, std::move(compiled));
    return it->second;
}

std::size_t CircuitCache::size() const {
    std::shared_lock lock(mutex_);
    return circuits_.size();
}

void check_frame(const ConnectionMap &map, const Frame &frame) {
    if (frame.payload.size() != map.num_ports()) {
        throw FabricError("frame has " + std::to_string(frame.payload.size()) +
                          " ports, map has " + std::to_string(map.num_ports()));
    }
    for (std::size_t u = 0; u < map.num_ports(); u++) {
        bool live = !map.is_idle(PortId(u));
        const auto &p = frame.payload[u];
        if (live != p.has_value()) {
            throw FabricError("inlet " + port_name(PortId(u)) +
                              (live ? " is connected but has no payload"
                                    : " is idle but carries a payload"));
        }
        if (p.has_value() && p->width() != frame.width) {
            throw FabricError("inlet " + port_name(PortId(u)) + " payload is " +
                              std::to_string(p->width()) + " bits, frame width is " +
                              std::to_string(frame.width));
        }
    }
}

SwitchOutput switch_frame(const ConnectionMap &map, const Frame &frame) {
    return switch_frame(map, frame, compile_map(map));
}

SwitchOutput switch_frame(const ConnectionMap &map, const Frame &frame, const Circuit &circuit) {
    check_frame(map, frame);
    if (circuit.num_qubits() != map.num_ports()) {
        throw FabricError("circuit width does not match the map");
    }
    std::size_t n = map.num_ports();
    std::size_t width = frame.width;
    std::size_t words = (width + 63) / 64;

    // O/Q: bit k of every inlet word becomes basis-state pass k.
    LaneState lanes(n, words);
    for (std::size_t u = 0; u < n; u++) {
        if (frame.payload[u].has_value()) {
            const auto &src = frame.payload[u]->words();
            std::copy(src.begin(), src.end(), lanes.lane(u).begin());
        }
    }
    run_lanes(circuit, lanes);

    // Q/O.
    SwitchOutput out;
    out.slot = frame.slot;
    out.out_slot = frame.slot;
    out.source = map.predecessors();
    out.valid_mask.resize(n);
    out.payload.reserve(n);
    for (std::size_t v = 0; v < n; v++) {
        BitString word(width);
        auto lane = lanes.lane(v);
        std::copy(lane.begin(), lane.end(), word.words().begin());
        out.payload.push_back(std::move(word));
        out.valid_mask[v] = out.source[v].has_value() ? 1 : 0;
    }
    return out;
}

RoundRobinArbiter::Grant RoundRobinArbiter::resolve(const PacketRequests &requests) {
    if (requests.size() != num_ports_) {
        throw FabricError("arbiter sized for " + std::to_string(num_ports_) + " ports, got " +
                          std::to_string(requests.size()));
    }
    Grant grant{ConnectionMap(num_ports_), {}};
    std::vector<bool> taken(num_ports_, false);
    for (std::size_t k = 0; k < num_ports_; k++) {
        std::size_t u = (pointer_ + k) % num_ports_;
        if (!requests[u].has_value()) {
            continue;
        }
        PortId v = *requests[u];
        if (v.index >= num_ports_) {
            throw InvalidMapError({{ViolationKind::OutOfRange, PortId(u), {v.index}}});
        }
        if (taken[v.index]) {
            grant.deferred.push_back(PortId(u));
            continue;
        }
        taken[v.index] = true;
        grant.map.set(PortId(u), {v});
    }
    std::sort(grant.deferred.begin(), grant.deferred.end());
    if (num_ports_ > 0) {
        pointer_ = (pointer_ + 1) % num_ports_;
    }
    return grant;
}

PacketResolution resolve_packets(const PacketRequests &requests, ContentionMode mode,
                                 RoundRobinArbiter *arbiter) {
    if (mode == ContentionMode::Strict) {
        std::vector<Destinations> dests(requests.size());
        for (std::size_t u = 0; u < requests.size(); u++) {
            if (requests[u].has_value()) {
                dests[u] = DestSet{*requests[u]};
            }
        }
        return {ConnectionMap::checked(requests.size(), std::move(dests)), {}};
    }
    RoundRobinArbiter local(requests.size());
    auto grant = (arbiter ? arbiter : &local)->resolve(requests);
    return {std::move(grant.map), std::move(grant.deferred)};
}

namespace {

/// Store-and-forward inlet buffers for packet slots. Each inlet queues its
/// packets and offers only the head to the arbiter.
struct PacketBacklog {
    std::vector<std::deque<std::pair<PortId, BitString>>> queues;

    bool empty() const {
        return std::all_of(queues.begin(), queues.end(), [](const auto &q) { return q.empty(); });
    }

    std::pair<PacketRequests, Frame> heads(std::size_t slot, std::size_t width) const {
        PacketRequests requests(queues.size());
        Frame frame{slot, width, std::vector<std::optional<BitString>>(queues.size())};
        for (std::size_t u = 0; u < queues.size(); u++) {
            if (!queues[u].empty()) {
                requests[u] = queues[u].front().first;
                frame.payload[u] = queues[u].front().second;
            }
        }
        return {requests, frame};
    }
};

}  // namespace

std::vector<SwitchOutput> run_schedule(const SlotSchedule &s, const ScheduleOptions &options,
                                       CircuitCache *cache) {
    CircuitCache local_cache;
    if (cache == nullptr) {
        cache = &local_cache;
    }
    RoundRobinArbiter arbiter(s.num_ports);
    PacketBacklog backlog{std::vector<std::deque<std::pair<PortId, BitString>>>(s.num_ports)};
    std::vector<SwitchOutput> outputs;
    outputs.reserve(s.slots.size());

    auto packet_slot = [&](std::size_t slot) {
        auto [requests, frame] = backlog.heads(slot, s.width);
        auto resolution = resolve_packets(requests, options.contention, &arbiter);
        for (std::size_t u = 0; u < s.num_ports; u++) {
            if (!resolution.map.is_idle(PortId(u))) {
                backlog.queues[u].pop_front();
            }
        }
        for (PortId u : resolution.deferred) {
            frame.payload[u.index].reset();
        }
        auto circuit = cache->get(resolution.map);
        auto out = switch_frame(resolution.map, frame, *circuit);
        out.deferred = std::move(resolution.deferred);
        return out;
    };

    std::size_t next_slot = 0;
    for (const auto &slot : s.slots) {
        try {
            if (slot.requests.has_value()) {
                const auto &req = *slot.requests;
                if (req.size() != s.num_ports || slot.frame.payload.size() != s.num_ports) {
                    throw FabricError("packet slot sized for " + std::to_string(req.size()) + " ports");
                }
                for (std::size_t u = 0; u < s.num_ports; u++) {
                    if (req[u].has_value() != slot.frame.payload[u].has_value()) {
                        throw FabricError("inlet " + std::to_string(u) + ": header and payload disagree");
                    }
                    if (req[u].has_value()) {
                        backlog.queues[u].emplace_back(*req[u], *slot.frame.payload[u]);
                    }
                }
                outputs.push_back(packet_slot(slot.frame.slot));
                outputs.back().out_slot = slot.out_slot.value_or(slot.frame.slot);
            } else {
                auto circuit = cache->get(slot.map);
                outputs.push_back(switch_frame(slot.map, slot.frame, *circuit));
                outputs.back().out_slot = slot.out_slot.value_or(slot.frame.slot);
            }
        } catch (const std::exception &e) {
            throw ScheduleError(slot.frame.slot, e.what());
        }
        next_slot = slot.frame.slot + 1;
    }
    // Packets still buffered are forwarded in extra slots after the last one.
    while (!backlog.empty()) {
        try {
            outputs.push_back(packet_slot(next_slot));
        } catch (const std::exception &e) {
            throw ScheduleError(next_slot, e.what());
        }
        next_slot++;
    }
    return outputs;
}

}  // namespace qswitch
