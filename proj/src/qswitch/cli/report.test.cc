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

#include "qswitch/cli/report.h"

#include <gtest/gtest.h>

#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/qcircuit/compile.h"
#include "testing/fixtures.h"

using namespace qswitch;

namespace {

Report full_report() {
    auto m = qtest::multicast_map_8();
    Report r;
    r.command = "verify";
    r.num_ports = 8;
    r.valid = true;
    r.components = decompose(build_digraph(m));
    r.plan = plan(build_digraph(m));
    r.circuit = stats(compile_plan(*r.plan));
    r.checks = {{"port_map_one_hot", true, "ok"}, {"depth_bound", false, "depth 9 <= 7"}};
    return r;
}

}  // namespace

TEST(Report, summary_and_description) {
    auto parts = decompose(build_digraph(qtest::tree_map_8()));
    EXPECT_EQ(component_summary(parts), "1 tree");
    EXPECT_EQ(describe_component(parts[0]), "tree (root P1, 4 leaves): [P1][P1;P3,P6][P3;P5,P7][P6;P4][P4;P0,P2]");
    auto mixed = decompose(build_digraph(qtest::make_map(4, {{1, {1}}})));
    EXPECT_EQ(component_summary(mixed), "3 null nodes, 1 loopback");
    EXPECT_EQ(component_summary({}), "none");
}

TEST(Report, text_lists_plan) {
    auto text = report_to_text(full_report());
    EXPECT_NE(text.find("cut edges: 1->4, 3->6\n"), std::string::npos);
    EXPECT_NE(text.find("recovery: 3->4, 5->6\n"), std::string::npos);
    EXPECT_NE(text.find("depth: 7\n"), std::string::npos);
    EXPECT_NE(text.find("depth_bound: FAIL (depth 9 <= 7)"), std::string::npos);
}

TEST(Report, json_has_same_content) {
    auto r = full_report();
    auto j = report_to_json(r);
    EXPECT_EQ(j["schema"], "qswitch-report/1");
    EXPECT_EQ(j["command"], "verify");
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["summary"], "1 tree");
    EXPECT_EQ(j["plan"]["cut_edges"].size(), 2u);
    EXPECT_EQ(j["plan"]["max_fanout"], 1);
    EXPECT_EQ(j["circuit"]["depth"], 7);
    EXPECT_EQ(j["circuit"]["gate_count"], 17);
    EXPECT_EQ(j["checks"][1]["verdict"], "FAIL");
    EXPECT_FALSE(r.all_checks_pass());
}

TEST(Report, absent_sections_are_present_as_null) {
    Report r;
    r.command = "stats";
    auto j = report_to_json(r);
    for (const char *key : {"valid", "plan", "circuit"}) {
        ASSERT_TRUE(j.contains(key));
        EXPECT_TRUE(j[key].is_null());
    }
    EXPECT_TRUE(j["checks"].is_array());
    auto text = report_to_text(r);
    EXPECT_NE(text.find("plan: none"), std::string::npos);
    EXPECT_NE(text.find("circuit: none"), std::string::npos);
}

TEST(Report, plan_listing) {
    auto r = full_report();
    EXPECT_EQ(plan_to_text(*r.plan, *r.circuit),
              "QSWITCH-PLAN v1\nports 8\nextension E3 2->0\nextension E1 4->4\nextension E2 7->6\n"
              "cut 1->4\ncut 3->6\ncycle (0,1,3,5,2)\ncycle (6,7)\nloopback 4\nrecovery 3->4\nrecovery 5->6\n"
              "depth 7\ngates 17\n");
}
