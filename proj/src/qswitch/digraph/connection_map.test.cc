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

#include <gtest/gtest.h>

#include "qswitch/digraph/connection_digraph.h"
#include "testing/fixtures.h"

using namespace qswitch;
using qswitch::qtest::make_map;

TEST(ConnectionMap, valid_examples_have_no_violations) {
    EXPECT_TRUE(validate(qtest::queue_map_8()).empty());
    EXPECT_TRUE(validate(qtest::tree_map_8()).empty());
    EXPECT_TRUE(validate(qtest::unicast_map_8()).empty());
    EXPECT_TRUE(validate(qtest::multicast_map_8()).empty());
    EXPECT_TRUE(validate(ConnectionMap(5)).empty());
    EXPECT_TRUE(validate(ConnectionMap(0)).empty());
}

TEST(ConnectionMap, contention_names_outlet_and_inlets) {
    auto m = make_map(4, {{0, {2}}, {3, {2}}});
    auto v = validate(m);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, ViolationKind::OutputContention);
    EXPECT_EQ(v[0].port, PortId(2));
    EXPECT_EQ(v[0].detail, (std::vector<std::size_t>{0, 3}));
    EXPECT_NE(v[0].str().find("P2"), std::string::npos);
}

TEST(ConnectionMap, out_of_range_and_empty_set) {
    auto m = make_map(3, {{0, {5}}, {1, {}}});
    auto v = validate(m);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].kind, ViolationKind::OutOfRange);
    EXPECT_EQ(v[0].port, PortId(0));
    EXPECT_EQ(v[0].detail, (std::vector<std::size_t>{5}));
    EXPECT_EQ(v[1].kind, ViolationKind::EmptyDestSet);
    EXPECT_EQ(v[1].port, PortId(1));
}

TEST(ConnectionMap, checked_throws_with_all_violations) {
    std::vector<Destinations> d(3);
    d[0] = DestSet{PortId(1)};
    d[2] = DestSet{PortId(1), PortId(7)};
    try {
        ConnectionMap::checked(3, d);
        FAIL() << "expected InvalidMapError";
    } catch (const InvalidMapError &e) {
        EXPECT_EQ(e.violations().size(), 2u);
    }
}

TEST(ConnectionMap, destinations_are_normalized) {
    auto m = make_map(4, {{0, {3, 1, 3}}});
    EXPECT_EQ(*m.at(PortId(0)), (DestSet{PortId(1), PortId(3)}));
}

TEST(ConnectionMap, from_unicast_and_predecessors) {
    auto m = ConnectionMap::from_unicast({1, std::nullopt, 0});
    EXPECT_TRUE(m.is_unicast());
    EXPECT_TRUE(m.is_idle(PortId(1)));
    auto p = m.predecessors();
    EXPECT_EQ(p[0], PortId(2));
    EXPECT_EQ(p[1], PortId(0));
    EXPECT_EQ(p[2], std::nullopt);
    EXPECT_FALSE(qtest::multicast_map_8().is_unicast());
}

TEST(ConnectionDigraph, queue_has_seven_edges_in_one_chain) {
    auto g = build_digraph(qtest::queue_map_8());
    EXPECT_EQ(g.edges().size(), 7u);
    std::size_t at = 2;
    for (int k = 0; k < 7; k++) {
        ASSERT_EQ(g.successors(PortId(at)).size(), 1u);
        at = g.successors(PortId(at))[0].index;
    }
    EXPECT_EQ(at, 1u);
    EXPECT_TRUE(g.successors(PortId(1)).empty());
    EXPECT_EQ(g.predecessor(PortId(2)), std::nullopt);
}

TEST(ConnectionDigraph, round_trips_to_map) {
    for (const auto &m : {qtest::queue_map_8(), qtest::tree_map_8(), qtest::multicast_map_8()}) {
        EXPECT_EQ(build_digraph(m).to_map(), m);
    }
}

TEST(ConnectionDigraph, rejects_invalid) {
    EXPECT_THROW(build_digraph(make_map(2, {{0, {1}}, {1, {1}}})), InvalidMapError);
    EXPECT_THROW(ConnectionDigraph::from_edges(2, {{PortId(0), PortId(2)}}), InvalidMapError);
    EXPECT_THROW(ConnectionDigraph::from_edges(3, {{PortId(0), PortId(2)}, {PortId(1), PortId(2)}}),
                 InvalidMapError);
}
