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

#ifndef QSWITCH_TESTING_FIXTURES_H
#define QSWITCH_TESTING_FIXTURES_H

#include <optional>
#include <random>
#include <vector>

#include "qswitch/digraph/connection_map.h"

namespace qswitch::qtest {

inline ConnectionMap make_map(std::size_t n, std::vector<std::pair<std::size_t, std::vector<std::size_t>>> entries) {
    std::vector<Destinations> dests(n);
    for (auto &[u, ds] : entries) {
        DestSet set;
        for (auto d : ds) {
            set.push_back(PortId(d));
        }
        dests[u] = set;
    }
    return ConnectionMap(n, std::move(dests));
}

// Chain P2 P4 P3 P7 P5 P6 P0 P1.
inline ConnectionMap queue_map_8() {
    return make_map(8, {{2, {4}}, {4, {3}}, {3, {7}}, {7, {5}}, {5, {6}}, {6, {0}}, {0, {1}}});
}

// Tree rooted at P1.
inline ConnectionMap tree_map_8() {
    return make_map(8, {{1, {3, 6}}, {6, {4}}, {3, {5, 7}}, {4, {0, 2}}});
}

// Queue q0 q1 q2 plus the 5-cycle (q3,q4,q6,q7,q5).
inline ConnectionMap unicast_map_8() {
    return make_map(8, {{0, {1}}, {1, {2}}, {3, {4}}, {4, {6}}, {6, {7}}, {7, {5}}, {5, {3}}});
}

// Tree [q0,q1][q1,q4][q1,q3][q3,q5,q2][q3,q6,q7].
inline ConnectionMap multicast_map_8() {
    return make_map(8, {{0, {1}}, {1, {3, 4}}, {3, {5, 6}}, {5, {2}}, {6, {7}}});
}

inline std::mt19937_64 test_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(0x5eed0000u + salt);
}

}  // namespace qswitch::qtest

#endif
