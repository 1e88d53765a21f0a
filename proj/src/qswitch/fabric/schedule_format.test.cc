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

#include "qswitch/fabric/schedule_format.h"

#include <gtest/gtest.h>

#include "qswitch/digraph/random_map.h"
#include "testing/fixtures.h"

using namespace qswitch;

namespace {

std::size_t error_line(const std::string &text) {
    try {
        parse_schedule_text(text);
    } catch (const FormatError &e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(ScheduleText, parse_exchange) {
    auto s = parse_schedule_text(
        "QSWITCH-SCHEDULE v1\nports 3\nwidth 8\n# comment\nslot 0\n0: X -\n1: 2 a0\n2: X -\n\nslot 2\n0: X -\n1: X -\n2: 1 b0\n");
    EXPECT_EQ(s.num_ports, 3u);
    ASSERT_EQ(s.slots.size(), 2u);
    EXPECT_EQ(s.slots[1].frame.slot, 2u);
    EXPECT_EQ(s.slots[0].map, ConnectionMap::from_unicast({std::nullopt, 2, std::nullopt}));
    EXPECT_EQ(s.slots[0].frame.payload[1]->to_hex(), "a0");
    EXPECT_FALSE(s.slots[0].requests.has_value());
}

TEST(ScheduleText, output_slot) {
    auto s = parse_schedule_text("QSWITCH-SCHEDULE v1\nports 1\nwidth 4\nslot 3 -> 1 packet\n0: 0 a\n");
    EXPECT_EQ(s.slots[0].out_slot, 1u);
    EXPECT_TRUE(s.slots[0].requests.has_value());
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 1\nwidth 4\nslot 3 ->\n0: 0 a\n"), 4u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 1\nwidth 4\nslot 3 packet -> 1\n0: 0 a\n"), 4u);
}

TEST(ScheduleText, packet_slot) {
    auto s = parse_schedule_text("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 5 packet\n0: 1 a\n1: X -\n");
    ASSERT_EQ(s.slots.size(), 1u);
    ASSERT_TRUE(s.slots[0].requests.has_value());
    EXPECT_EQ((*s.slots[0].requests)[0], PortId(1));
    EXPECT_EQ((*s.slots[0].requests)[1], std::nullopt);
}

TEST(ScheduleText, errors_carry_line) {
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v9\n"), 1u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 1\n0: 1 a\n1: X -\nslot 1\n0: 1 a\n1: X -\n"), 7u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0\n0: 1 a\n1: X 3\n"), 6u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0\n0: 1 -\n1: X -\n"), 5u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0\n1: 1 a\n0: X -\n"), 5u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0\n0: 1 zz\n1: X -\n"), 5u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0\n0: 1 a\n"), 5u);
    EXPECT_EQ(error_line("QSWITCH-SCHEDULE v1\nports 2\nwidth 4\nslot 0 packet\n0: 0,1 a\n1: X -\n"), 5u);
}

TEST(ScheduleText, round_trip_random) {
    auto rng = qtest::test_rng(22);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 1 + uniform_below(rng, 8);
        std::size_t w = 1 + uniform_below(rng, 40);
        SlotSchedule s{n, w, {}};
        std::size_t slot = 0;
        for (std::size_t k = 0; k < uniform_below(rng, 5); k++) {
            slot += 1 + uniform_below(rng, 3);
            bool packet = uniform_below(rng, 2);
            ConnectionMap m = random_map(n, packet ? TrafficKind::Unicast : TrafficKind::Multicast, rng);
            Frame f{slot, w, std::vector<std::optional<BitString>>(n)};
            std::optional<PacketRequests> req;
            if (packet) {
                req = PacketRequests(n);
            }
            for (std::size_t u = 0; u < n; u++) {
                if (!m.is_idle(PortId(u))) {
                    BitString b(w);
                    b.set_bit(uniform_below(rng, w), true);
                    f.payload[u] = b;
                    if (packet) {
                        (*req)[u] = m.at(PortId(u))->front();
                    }
                }
            }
            if (packet) {
                m = ConnectionMap(n);
            }
            std::optional<std::size_t> out_slot;
            if (uniform_below(rng, 3) == 0) {
                out_slot = uniform_below(rng, 10);
            }
            s.slots.push_back({m, f, req, out_slot});
        }
        auto text = schedule_to_text(s);
        auto back = parse_schedule_text(text);
        ASSERT_EQ(back, s) << text;
        ASSERT_EQ(schedule_to_text(back), text);
    }
}

TEST(OutputText, format) {
    SwitchOutput o;
    o.slot = 3;
    o.out_slot = 3;
    o.payload = {BitString::from_hex("b", 4), BitString(4)};
    o.valid_mask = {1, 0};
    o.source = {PortId(1), std::nullopt};
    o.deferred = {PortId(0)};
    EXPECT_EQ(outputs_to_text(2, 4, {o}),
              "QSWITCH-OUTPUT v1\nports 2\nwidth 4\nslot 3\n0: 1 b\n1: X 0\nvalid: 10\ndeferred: 0\n");
}
