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

#include "qswitch/cli/commands.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qswitch/qcircuit/circuit.h"

using namespace qswitch;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return std::string(QSWITCH_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(CliValidate, queue_file) {
    auto r = run({"validate", data("queue8.map")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("components: 1 queue\n"), std::string::npos);
}

TEST(CliValidate, tree_file) {
    auto r = run({"validate", data("tree8.map")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1 tree"), std::string::npos);
    EXPECT_NE(r.out.find("tree (root P1, 4 leaves)"), std::string::npos);
}

TEST(CliValidate, contention_names_outlet_and_line) {
    auto r = run({"validate", data("contention.map")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("line 6: OutputContention: outlet P2"), std::string::npos);
}

TEST(CliValidate, structured_output) {
    auto r = run({"validate", data("unicast8.map"), "--format", "structured"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"], "1 queue, 1 cycle");
    EXPECT_EQ(j["components"][1]["cycle"], nlohmann::json({3, 4, 6, 7, 5}));
}

TEST(CliErrors, usage_parse_and_io) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"validate"}).code, 2);
    EXPECT_EQ(run({"validate", data("nope.map")}).code, 2);
    EXPECT_EQ(run({"compile", data("queue8.map"), "--emit", "dot"}).code, 2);
    auto r = run({"validate", data("exchange.sched")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3: expected header"), std::string::npos) << r.err;
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCompile, unicast_circuit_matches_file) {
    auto r = run({"compile", data("unicast8.map")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(data("unicast8.circuit")));
    auto c = parse_circuit_text(r.out);
    EXPECT_EQ(c.depth(), 6u);
    EXPECT_EQ(c.gate_count(), 18u);
}

TEST(CliCompile, multicast_plan_lists_recovery) {
    auto r = run({"compile", data("multicast8.map"), "--emit", "plan"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("recovery 3->4\nrecovery 5->6\n"), std::string::npos);
    EXPECT_NE(r.out.find("depth 7\n"), std::string::npos);
    auto s = run({"compile", data("multicast8.map"), "--emit", "plan", "--format", "structured"});
    auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["circuit"]["depth"], 7);
    EXPECT_EQ(j["plan"]["recovery"].size(), 2u);
}

TEST(CliCompile, identity_is_empty_circuit) {
    auto r = run({"compile", data("identity.map")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "QSWITCH-CIRCUIT v1\nqubits 4\n");
}

TEST(CliCompile, invalid_map_fails) {
    auto r = run({"compile", data("contention.map")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("OutputContention"), std::string::npos);
}

TEST(CliCompile, writes_output_file) {
    auto path = (std::filesystem::temp_directory_path() / "qswitch_cli_test.circuit").string();
    auto r = run({"compile", data("multicast8.map"), "-o", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), slurp(data("multicast8.circuit")));
    std::remove(path.c_str());
}

TEST(CliCompile, structured_circuit) {
    auto r = run({"compile", data("multicast8.map"), "--format", "structured"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "qswitch-circuit/1");
    EXPECT_EQ(j["layers"].size(), 7u);
    EXPECT_EQ(j["layers"][6], nlohmann::json({{3, 4}, {5, 6}}));
}

TEST(CliVerify, multicast_both_modes_pass) {
    auto r = run({"verify", data("multicast8.map"), "--mode", "both"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("port_map_exhaustive: PASS"), std::string::npos);
    EXPECT_NE(r.out.find("basis_agreement: PASS (256 basis states (exhaustive))"), std::string::npos);
    EXPECT_NE(r.out.find("unitarity: PASS"), std::string::npos);
    EXPECT_NE(r.out.find("norm_preservation: PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, corrupted_circuit_fails_with_outlet) {
    auto r = run({"verify", data("multicast8.map"), "--circuit", data("multicast8_corrupted.circuit")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("port_map_one_hot: FAIL (NotAPortMap: outlet P7"), std::string::npos);
}

TEST(CliVerify, random_unicast_sixteen_ports) {
    auto r = run({"verify", "--random", "unicast", "--ports", "16"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("random_port_maps: PASS (1000/1000"), std::string::npos);
    EXPECT_NE(r.out.find("max depth 6"), std::string::npos);
}

TEST(CliVerify, state_cap) {
    EXPECT_EQ(run({"verify", "--random", "unicast", "--ports", "13", "--mode", "state", "--trials", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--random", "unicast", "--ports", "5", "--mode", "state", "--trials", "3",
                   "--max-statevector-qubits", "4"})
                  .code,
              2);
    EXPECT_EQ(run({"verify", "--random", "unicast"}).code, 2);
}

TEST(CliVerify, byte_identical_across_runs) {
    std::vector<std::string> args{"verify", "--random", "multicast", "--ports", "6", "--mode", "both",
                                  "--trials", "20", "--seed", "99", "--format", "structured"};
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto c = run({"verify", data("multicast8.map"), "--mode", "both", "--seed", "5"});
    auto d = run({"verify", data("multicast8.map"), "--mode", "both", "--seed", "5"});
    EXPECT_EQ(c.out, d.out);
}

TEST(CliSchedule, exchange) {
    auto r = run({"schedule", data("exchange.sched")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "QSWITCH-OUTPUT v1\nports 3\nwidth 8\n"
              "slot 0 -> 2\n0: X 00\n1: X 00\n2: 1 a0\nvalid: 001\n"
              "slot 2 -> 0\n0: X 00\n1: 2 b0\n2: X 00\nvalid: 010\n");
}

TEST(CliSchedule, packet_permutation) {
    auto r = run({"schedule", data("packet_slot.sched")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("slot 5\n0: 3 c3\n1: 2 c2\n2: 0 c0\n3: 1 c1\nvalid: 1111\n"), std::string::npos);
}

TEST(CliSchedule, contention_modes) {
    auto strict = run({"schedule", data("contended_packets.sched")});
    EXPECT_EQ(strict.code, 1);
    EXPECT_NE(strict.err.find("slot 0"), std::string::npos);
    auto arb = run({"schedule", data("contended_packets.sched"), "--contention", "arbiter"});
    EXPECT_EQ(arb.code, 0);
    EXPECT_NE(arb.out.find("deferred: 2\n"), std::string::npos);
    EXPECT_NE(arb.out.find("slot 1\n"), std::string::npos);
}

TEST(CliSchedule, empty_schedule_prints_nothing) {
    auto r = run({"schedule", data("empty.sched")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
}

TEST(CliStats, circuit_and_map) {
    auto c = run({"stats", data("multicast8.circuit")});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("depth: 7\ngates: 17\nlayer widths: 3 3 3 2 2 2 2\n"), std::string::npos);
    auto m = run({"stats", data("unicast8.map"), "--format", "structured"});
    auto j = nlohmann::json::parse(m.out);
    EXPECT_EQ(j["circuit"]["gate_count"], 18);
    EXPECT_EQ(run({"stats", data("contention.map")}).code, 1);
}
