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

#ifndef QSWITCH_FABRIC_FABRIC_H
#define QSWITCH_FABRIC_FABRIC_H

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "qswitch/digraph/connection_map.h"
#include "qswitch/fabric/bit_string.h"
#include "qswitch/qcircuit/circuit.h"

namespace qswitch {

/// Inlet payloads of one time slot. Idle inlets carry no payload.
struct Frame {
    std::size_t slot = 0;
    /// Word size w shared by every payload.
    std::size_t width = 1;
    std::vector<std::optional<BitString>> payload;
    friend bool operator==(const Frame &, const Frame &) = default;
};

/// Outlet side of one switched frame.
struct SwitchOutput {
    std::size_t slot = 0;
    /// Time slot the outlet words leave in (the input slot unless the
    /// schedule moves them).
    std::size_t out_slot = 0;
    /// Outlets without a predecessor carry zeros.
    std::vector<BitString> payload;
    /// 1 iff the outlet has a predecessor in the connection map.
    std::vector<std::uint8_t> valid_mask;
    /// The delivering inlet per outlet.
    std::vector<std::optional<PortId>> source;
    /// Packet slots only: inlets whose request lost arbitration this slot.
    std::vector<PortId> deferred;
    friend bool operator==(const SwitchOutput &, const SwitchOutput &) = default;
};

/// Per-inlet packet header: the requested outlet, or nullopt when no packet.
using PacketRequests = std::vector<std::optional<PortId>>;

struct ScheduledSlot {
    ConnectionMap map;
    Frame frame;
    /// Present for packet slots: the map is derived from these headers at replay.
    std::optional<PacketRequests> requests;
    /// Time-slot interchange at the outlets: the switched words are emitted in
    /// this slot instead of the input slot. A value below the input slot
    /// means the following frame.
    std::optional<std::size_t> out_slot;
    friend bool operator==(const ScheduledSlot &, const ScheduledSlot &) = default;
};

struct SlotSchedule {
    std::size_t num_ports = 0;
    std::size_t width = 1;
    std::vector<ScheduledSlot> slots;
    friend bool operator==(const SlotSchedule &, const SlotSchedule &) = default;
};

class FabricError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Wraps a failure in one slot of a schedule replay.
class ScheduleError : public std::runtime_error {
   public:
    ScheduleError(std::size_t slot, const std::string &what);
    std::size_t slot() const { return slot_; }

   private:
    std::size_t slot_;
};

/// Compiled circuits keyed by connection map. Lookups may run concurrently;
/// insertions take an exclusive lock.
class CircuitCache {
   public:
    std::shared_ptr<const Circuit> get(const ConnectionMap &map);
    std::size_t size() const;

   private:
    mutable std::shared_mutex mutex_;
    std::map<ConnectionMap, std::shared_ptr<const Circuit>> circuits_;
};

/// Throws FabricError unless payloads are present exactly on live inlets and
/// all have the frame's width.
void check_frame(const ConnectionMap &map, const Frame &frame);

/// O/Q, the compiled permutation, Q/O. The w payload bits are routed as w
/// bit-sliced passes through one circuit.
SwitchOutput switch_frame(const ConnectionMap &map, const Frame &frame);
SwitchOutput switch_frame(const ConnectionMap &map, const Frame &frame, const Circuit &circuit);

enum class ContentionMode {
    /// Two requests for one outlet is an error.
    Strict,
    /// Round-robin: the rotating priority pointer picks the winner.
    Arbiter,
};

/// Round-robin output arbiter. Each call to resolve() grants every contended
/// outlet to the first requester at or after the priority pointer, then
/// advances the pointer by one port.
class RoundRobinArbiter {
   public:
    explicit RoundRobinArbiter(std::size_t num_ports, std::size_t start = 0)
        : num_ports_(num_ports), pointer_(start % (num_ports ? num_ports : 1)) {}
    std::size_t pointer() const { return pointer_; }

    struct Grant {
        ConnectionMap map;
        std::vector<PortId> deferred;
    };
    Grant resolve(const PacketRequests &requests);

   private:
    std::size_t num_ports_;
    std::size_t pointer_;
};

struct PacketResolution {
    ConnectionMap map;
    std::vector<PortId> deferred;
};

/// Turns unicast packet headers into a connection map. Strict mode throws
/// InvalidMapError on contention; arbiter mode uses \p arbiter (a fresh one
/// with pointer 0 when null).
PacketResolution resolve_packets(const PacketRequests &requests, ContentionMode mode,
                                 RoundRobinArbiter *arbiter = nullptr);

struct ScheduleOptions {
    ContentionMode contention = ContentionMode::Strict;
};

/// Switches every slot in order. Packet slots go through per-inlet FIFO
/// buffers: each inlet offers its oldest packet, losers stay queued, and
/// packets still queued after the last slot are drained in extra packet slots
/// numbered after it. Nothing is dropped. Throws ScheduleError.
std::vector<SwitchOutput> run_schedule(const SlotSchedule &s, const ScheduleOptions &options = {},
                                       CircuitCache *cache = nullptr);

}  // namespace qswitch

#endif
