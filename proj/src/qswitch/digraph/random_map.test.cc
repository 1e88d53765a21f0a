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

#include "qswitch/digraph/random_map.h"

#include <gtest/gtest.h>

#include "testing/fixtures.h"

using namespace qswitch;

TEST(UniformBelow, in_range_and_covers) {
    auto rng = qtest::test_rng();
    std::vector<int> hits(7, 0);
    for (int k = 0; k < 7000; k++) {
        auto x = uniform_below(rng, 7);
        ASSERT_LT(x, 7u);
        hits[x]++;
    }
    for (auto h : hits) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
    EXPECT_EQ(uniform_below(rng, 1), 0u);
}

TEST(UniformBelow, fixed_sequence_for_seed) {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(uniform_below(a, 1000), uniform_below(b, 1000));
    }
}

TEST(RandomMap, always_valid) {
    auto rng = qtest::test_rng(2);
    for (int k = 0; k < 1000; k++) {
        auto kind = k % 2 ? TrafficKind::Multicast : TrafficKind::Unicast;
        auto m = random_map(1 + k % 20, kind, rng);
        ASSERT_TRUE(validate(m).empty());
        if (kind == TrafficKind::Unicast) {
            ASSERT_TRUE(m.is_unicast());
        }
    }
}

TEST(RandomMap, multicast_produces_fanout) {
    auto rng = qtest::test_rng(3);
    bool fanout = false;
    for (int k = 0; k < 50 && !fanout; k++) {
        fanout = !random_map(8, TrafficKind::Multicast, rng).is_unicast();
    }
    EXPECT_TRUE(fanout);
}
