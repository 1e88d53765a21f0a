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

#ifndef QSWITCH_DIGRAPH_RANDOM_MAP_H
#define QSWITCH_DIGRAPH_RANDOM_MAP_H

#include <cstdint>
#include <random>

#include "qswitch/digraph/connection_map.h"

namespace qswitch {

enum class TrafficKind {
    /// Partial permutation: each inlet targets at most one outlet.
    Unicast,
    /// Each outlet independently picks a predecessor or none, so inlets may
    /// fan out to several outlets.
    Multicast,
};

/// Uniform in [0, bound). Uses only raw engine output so results are the same
/// on every standard library.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

/// A valid random map. Unicast maps leave roughly a quarter of the inlets
/// idle; multicast maps leave roughly a fifth of the outlets unconnected.
ConnectionMap random_map(std::size_t num_ports, TrafficKind kind, std::mt19937_64 &rng);

}  // namespace qswitch

#endif
