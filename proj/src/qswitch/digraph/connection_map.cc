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

#include "qswitch/digraph/connection_map.h"

#include <algorithm>
#include <map>

namespace qswitch {

namespace {

void normalize(DestSet &set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

std::string join_violations(const std::vector<Violation> &vs) {
    std::string out = "invalid connection map:";
    for (const auto &v : vs) {
        out += " ";
        out += v.str();
        out += ";";
    }
    return out;
}

}  // namespace

ConnectionMap::ConnectionMap(std::size_t num_ports) : dests_(num_ports) {}

ConnectionMap::ConnectionMap(std::size_t num_ports, std::vector<Destinations> dests)
    : dests_(std::move(dests)) {
    dests_.resize(num_ports);
    for (auto &d : dests_) {
        if (d.has_value()) {
            normalize(*d);
        }
    }
}

ConnectionMap ConnectionMap::checked(std::size_t num_ports, std::vector<Destinations> dests) {
    ConnectionMap map(num_ports, std::move(dests));
    auto violations = validate(map);
    if (!violations.empty()) {
        throw InvalidMapError(std::move(violations));
    }
    return map;
}

ConnectionMap ConnectionMap::from_unicast(const std::vector<std::optional<std::size_t>> &dest) {
    std::vector<Destinations> dests(dest.size());
    for (std::size_t u = 0; u < dest.size(); u++) {
        if (dest[u].has_value()) {
            dests[u] = DestSet{PortId(*dest[u])};
        }
    }
    return checked(dest.size(), std::move(dests));
}

void ConnectionMap::set(PortId inlet, DestSet targets) {
    normalize(targets);
    dests_.at(inlet.index) = std::move(targets);
}

void ConnectionMap::set_idle(PortId inlet) {
    dests_.at(inlet.index) = std::nullopt;
}

bool ConnectionMap::is_unicast() const {
    return std::all_of(dests_.begin(), dests_.end(), [](const Destinations &d) {
        return !d.has_value() || d->size() == 1;
    });
}

std::vector<std::optional<PortId>> ConnectionMap::predecessors() const {
    std::vector<std::optional<PortId>> pred(dests_.size());
    for (std::size_t u = 0; u < dests_.size(); u++) {
        if (!dests_[u].has_value()) {
            continue;
        }
        for (PortId v : *dests_[u]) {
            if (v.index < pred.size()) {
                pred[v.index] = PortId(u);
            }
        }
    }
    return pred;
}

const char *violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::OutOfRange:
            return "OutOfRange";
        case ViolationKind::OutputContention:
            return "OutputContention";
        case ViolationKind::EmptyDestSet:
            return "EmptyDestSet";
    }
    return "?";
}

std::string Violation::str() const {
    std::string out = violation_kind_name(kind);
    switch (kind) {
        case ViolationKind::OutOfRange:
            out += ": inlet " + port_name(port) + " targets";
            for (auto d : detail) {
                out += " " + std::to_string(d);
            }
            break;
        case ViolationKind::OutputContention:
            out += ": outlet " + port_name(port) + " requested by inlets";
            for (auto d : detail) {
                out += " P" + std::to_string(d);
            }
            break;
        case ViolationKind::EmptyDestSet:
            out += ": inlet " + port_name(port) + " has an empty destination set";
            break;
    }
    return out;
}

std::vector<Violation> validate(const ConnectionMap &map) {
    std::vector<Violation> out;
    std::size_t n = map.num_ports();
    std::map<std::size_t, std::vector<std::size_t>> requesters;
    for (std::size_t u = 0; u < n; u++) {
        const auto &d = map.destinations()[u];
        if (!d.has_value()) {
            continue;
        }
        if (d->empty()) {
            out.push_back({ViolationKind::EmptyDestSet, PortId(u), {}});
            continue;
        }
        std::vector<std::size_t> bad;
        for (PortId v : *d) {
            if (v.index >= n) {
                bad.push_back(v.index);
            } else {
                requesters[v.index].push_back(u);
            }
        }
        if (!bad.empty()) {
            out.push_back({ViolationKind::OutOfRange, PortId(u), std::move(bad)});
        }
    }
    for (auto &[v, inlets] : requesters) {
        if (inlets.size() > 1) {
            out.push_back({ViolationKind::OutputContention, PortId(v), inlets});
        }
    }
    return out;
}

InvalidMapError::InvalidMapError(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace qswitch
