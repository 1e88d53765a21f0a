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

#ifndef QSWITCH_CLI_REPORT_H
#define QSWITCH_CLI_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qswitch/digraph/sub_digraph.h"
#include "qswitch/planner/plan.h"
#include "qswitch/qcircuit/circuit.h"

namespace qswitch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Everything a command found out. Rendered as text or as JSON with the same
/// fields; absent sections render as "none" / null, never omitted.
struct Report {
    std::string command;
    std::size_t num_ports = 0;
    std::optional<bool> valid;
    std::vector<std::string> violations;
    std::vector<SubDigraph> components;
    std::optional<PermutationPlan> plan;
    std::optional<CircuitStats> circuit;
    std::vector<CheckResult> checks;

    bool all_checks_pass() const;
};

/// "1 tree, 2 null nodes" in kind order.
std::string component_summary(const std::vector<SubDigraph> &components);
/// "tree (root P1, 4 leaves): [P1][P1;P3,P6]..."
std::string describe_component(const SubDigraph &sub);

std::string report_to_text(const Report &r);
nlohmann::ordered_json report_to_json(const Report &r);

/// Plan listing used by `compile --emit plan`.
std::string plan_to_text(const PermutationPlan &p, const CircuitStats &s);

}  // namespace qswitch

#endif
