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

#ifndef QSWITCH_DIGRAPH_PORT_H
#define QSWITCH_DIGRAPH_PORT_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qswitch {

/// An I/O port of an n x n switch. Port k is both inlet k and outlet k.
struct PortId {
    std::uint32_t index = 0;

    constexpr PortId() = default;
    constexpr explicit PortId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

    constexpr std::size_t value() const { return index; }
    friend constexpr auto operator<=>(const PortId &, const PortId &) = default;
};

/// Directed connection: inlet `from` delivers to outlet `to`.
struct Edge {
    PortId from;
    PortId to;
    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

inline std::string port_name(PortId p) {
    return "P" + std::to_string(p.index);
}

inline std::string edge_name(Edge e) {
    return std::to_string(e.from.index) + "->" + std::to_string(e.to.index);
}

std::string port_list_string(const std::vector<PortId> &ports);

}  // namespace qswitch

template <>
struct std::hash<qswitch::PortId> {
    std::size_t operator()(qswitch::PortId p) const noexcept {
        return std::hash<std::uint32_t>{}(p.index);
    }
};

#endif
