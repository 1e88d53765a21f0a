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

#ifndef QSWITCH_DIGRAPH_CONNECTION_MAP_H
#define QSWITCH_DIGRAPH_CONNECTION_MAP_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/digraph/port.h"

namespace qswitch {

/// Destination set of one inlet. Kept sorted and duplicate free.
using DestSet = std::vector<PortId>;

/// Destinations of one inlet: `std::nullopt` marks an idle inlet (no input
/// traffic; it carries all-zero stuff bits). An empty DestSet is malformed and
/// is reported by validate().
using Destinations = std::optional<DestSet>;

inline constexpr std::nullopt_t kIdle = std::nullopt;

/// The switch configuration for one time slot.
class ConnectionMap {
   public:
    ConnectionMap() = default;
    /// All inlets idle.
    explicit ConnectionMap(std::size_t num_ports);
    /// Raw construction; no checks are made. Call validate() or use checked().
    ConnectionMap(std::size_t num_ports, std::vector<Destinations> dests);

    /// Construction that fails fast: throws InvalidMapError listing every violation.
    static ConnectionMap checked(std::size_t num_ports, std::vector<Destinations> dests);
    /// Unicast shorthand: dest[u] is u's single outlet, or nullopt for idle.
    static ConnectionMap from_unicast(const std::vector<std::optional<std::size_t>> &dest);

    std::size_t num_ports() const { return dests_.size(); }
    const Destinations &at(PortId inlet) const { return dests_.at(inlet.index); }
    const std::vector<Destinations> &destinations() const { return dests_; }

    void set(PortId inlet, DestSet targets);
    void set_idle(PortId inlet);

    bool is_idle(PortId inlet) const { return !dests_.at(inlet.index).has_value(); }
    /// True iff every live inlet has exactly one destination.
    bool is_unicast() const;

    /// out[v] = the inlet delivering to outlet v, or nullopt if v has no predecessor.
    /// Requires a valid map.
    std::vector<std::optional<PortId>> predecessors() const;

    friend bool operator==(const ConnectionMap &, const ConnectionMap &) = default;
    friend auto operator<=>(const ConnectionMap &, const ConnectionMap &) = default;

   private:
    std::vector<Destinations> dests_;
};

enum class ViolationKind { OutOfRange, OutputContention, EmptyDestSet };

const char *violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    /// OutOfRange/EmptyDestSet: the offending inlet. OutputContention: the contended outlet.
    PortId port;
    /// OutOfRange: the bad destination values. OutputContention: the competing inlets.
    std::vector<std::size_t> detail;

    std::string str() const;
    friend bool operator==(const Violation &, const Violation &) = default;
};

/// Empty iff the map is well formed: destinations in range, no outlet shared
/// by two inlets, no empty destination set.
std::vector<Violation> validate(const ConnectionMap &map);

class InvalidMapError : public std::invalid_argument {
   public:
    explicit InvalidMapError(std::vector<Violation> violations);
    const std::vector<Violation> &violations() const { return violations_; }

   private:
    std::vector<Violation> violations_;
};

}  // namespace qswitch

#endif
