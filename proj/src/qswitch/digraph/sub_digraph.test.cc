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

#include "qswitch/digraph/sub_digraph.h"

#include <gtest/gtest.h>

#include <set>

#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/digraph/random_map.h"
#include "testing/fixtures.h"
#include "testing/oracle.h"

using namespace qswitch;

namespace {

std::vector<PortId> ports(std::initializer_list<std::size_t> xs) {
    std::vector<PortId> out;
    for (auto x : xs) {
        out.push_back(PortId(x));
    }
    return out;
}

std::string oracle_name(SubDigraphKind k) {
    switch (k) {
        case SubDigraphKind::NullNode:
            return "null";
        case SubDigraphKind::Loopback:
            return "loopback";
        case SubDigraphKind::Queue:
            return "queue";
        case SubDigraphKind::Cycle:
            return "cycle";
        case SubDigraphKind::Tree:
            return "tree";
        case SubDigraphKind::Forest:
            return "forest";
    }
    return "?";
}

}  // namespace

TEST(Decompose, queue_in_order) {
    auto parts = decompose(build_digraph(qtest::queue_map_8()));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].kind, SubDigraphKind::Queue);
    EXPECT_EQ(parts[0].nodes, ports({2, 4, 3, 7, 5, 6, 0, 1}));
    EXPECT_EQ(parts[0].root, PortId(2));
    EXPECT_EQ(parts[0].leaves, ports({1}));
    EXPECT_EQ(parts[0].str(), "[P2,P4,P3,P7,P5,P6,P0,P1]");
}

TEST(Decompose, tree_rooted_at_p1) {
    auto parts = decompose(build_digraph(qtest::tree_map_8()));
    ASSERT_EQ(parts.size(), 1u);
    const auto &t = parts[0];
    EXPECT_EQ(t.kind, SubDigraphKind::Tree);
    EXPECT_EQ(t.nodes.size(), 8u);
    EXPECT_EQ(t.root, PortId(1));
    EXPECT_EQ(t.leaves, ports({0, 2, 5, 7}));
    EXPECT_EQ(t.str(), "[P1][P1;P3,P6][P3;P5,P7][P6;P4][P4;P0,P2]");
}

TEST(Decompose, queue_and_cycle) {
    auto parts = decompose(build_digraph(qtest::unicast_map_8()));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].kind, SubDigraphKind::Queue);
    EXPECT_EQ(parts[0].nodes, ports({0, 1, 2}));
    EXPECT_EQ(parts[1].kind, SubDigraphKind::Cycle);
    EXPECT_EQ(parts[1].cycle, ports({3, 4, 6, 7, 5}));
    EXPECT_EQ(parts[1].str(), "(P3,P4,P6,P7,P5)");
}

TEST(Decompose, null_nodes_and_loopbacks) {
    auto m = qtest::make_map(3, {{1, {1}}});
    auto parts = decompose(build_digraph(m));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0].kind, SubDigraphKind::NullNode);
    EXPECT_EQ(parts[1].kind, SubDigraphKind::Loopback);
    EXPECT_EQ(parts[1].cycle, ports({1}));
    EXPECT_EQ(parts[2].kind, SubDigraphKind::NullNode);
}

TEST(Classify, forest_with_predecessor_walk) {
    // Cycle (1,3,5) with an attached branch 3->7, 1->0.
    std::vector<Edge> edges{{PortId(1), PortId(3)}, {PortId(3), PortId(5)}, {PortId(5), PortId(1)},
                            {PortId(3), PortId(7)}, {PortId(1), PortId(0)}};
    auto f = classify(ports({0, 1, 3, 5, 7}), edges);
    EXPECT_EQ(f.kind, SubDigraphKind::Forest);
    EXPECT_EQ(f.cycle, ports({1, 3, 5}));
    EXPECT_EQ(f.nodes.size(), 5u);
}

TEST(Classify, forest_with_self_loop_cycle) {
    std::vector<Edge> edges{{PortId(2), PortId(2)}, {PortId(2), PortId(4)}};
    auto f = classify(ports({2, 4}), edges);
    EXPECT_EQ(f.kind, SubDigraphKind::Forest);
    EXPECT_EQ(f.cycle, ports({2}));
}

TEST(Classify, rejects_bad_input) {
    EXPECT_THROW(classify({}, {}), UnclassifiableError);
    EXPECT_THROW(classify(ports({0, 1}), {}), UnclassifiableError);
    EXPECT_THROW(classify(ports({0}), {{PortId(0), PortId(1)}}), UnclassifiableError);
    EXPECT_THROW(classify(ports({0, 1, 2}), {{PortId(0), PortId(2)}, {PortId(1), PortId(2)}}),
                 UnclassifiableError);
}

TEST(NormalizeCycle, rotates_smallest_first) {
    EXPECT_EQ(normalize_cycle(ports({5, 2, 9})), ports({2, 9, 5}));
    EXPECT_EQ(normalize_cycle(ports({3})), ports({3}));
}

TEST(Decompose, random_maps_partition_and_match_oracle) {
    auto rng = qtest::test_rng(1);
    for (int trial = 0; trial < 1000; trial++) {
        std::size_t n = 1 + uniform_below(rng, 16);
        auto kind = trial % 2 ? TrafficKind::Multicast : TrafficKind::Unicast;
        auto m = random_map(n, kind, rng);
        auto g = build_digraph(m);
        auto parts = decompose(g);

        std::vector<int> seen(n, 0);
        std::vector<Edge> all_edges;
        std::map<std::string, std::size_t> counts;
        for (const auto &p : parts) {
            for (auto v : p.nodes) {
                seen[v.index]++;
            }
            all_edges.insert(all_edges.end(), p.edges.begin(), p.edges.end());
            counts[oracle_name(p.kind)]++;
            if (kind == TrafficKind::Unicast) {
                EXPECT_TRUE(p.kind != SubDigraphKind::Tree && p.kind != SubDigraphKind::Forest);
            }
        }
        for (auto s : seen) {
            ASSERT_EQ(s, 1);
        }
        std::sort(all_edges.begin(), all_edges.end());
        ASSERT_EQ(all_edges, g.edges());
        ASSERT_EQ(ConnectionDigraph::from_edges(n, all_edges).to_map(), m);
        ASSERT_EQ(counts, qtest::oracle_kind_counts(m)) << "trial " << trial;
    }
}
