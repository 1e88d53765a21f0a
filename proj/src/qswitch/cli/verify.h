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

#ifndef QSWITCH_CLI_VERIFY_H
#define QSWITCH_CLI_VERIFY_H

#include <cstdint>
#include <vector>

#include "qswitch/cli/report.h"
#include "qswitch/digraph/connection_map.h"
#include "qswitch/digraph/random_map.h"
#include "qswitch/planner/plan.h"
#include "qswitch/qcircuit/circuit.h"
#include "qswitch/qsim/state_vector.h"

namespace qswitch {

enum class VerifyMode { Bits, State, Both };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Bits;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t max_qubits = kDefaultMaxQubits;
};

/// Exhaustive basis enumeration is used up to this many ports.
inline constexpr std::size_t kExhaustivePorts = 10;
/// The full 2^n x 2^n matrix product is formed up to this many qubits.
inline constexpr std::size_t kMatrixQubits = 6;

/// Checks a circuit against the map's delivery relation. \p plan enables the
/// plan-level checks (direct interpretation, depth bound, recovery targets).
/// State checks require num_ports <= options.max_qubits (throws
/// StateVectorCapError otherwise).
std::vector<CheckResult> verify_circuit(const ConnectionMap &map, const Circuit &circuit,
                                        const PermutationPlan *plan, const VerifyOptions &options);

/// options.trials random maps of the given kind, each compiled and checked
/// with the one-hot port map and the depth bound (plus basis agreement and
/// norm preservation per map in state mode).
std::vector<CheckResult> verify_random(TrafficKind kind, std::size_t num_ports,
                                       const VerifyOptions &options);

/// Depth bound for a plan: 6 + ceil(log2(r + 1)).
std::size_t depth_bound(const PermutationPlan &plan);

}  // namespace qswitch

#endif
