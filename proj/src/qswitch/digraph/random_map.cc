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

#include <utility>

namespace qswitch {

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

ConnectionMap random_map(std::size_t num_ports, TrafficKind kind, std::mt19937_64 &rng) {
    std::vector<Destinations> dests(num_ports);
    if (kind == TrafficKind::Unicast) {
        std::vector<std::size_t> perm(num_ports);
        for (std::size_t k = 0; k < num_ports; k++) {
            perm[k] = k;
        }
        for (std::size_t k = num_ports; k > 1; k--) {
            std::swap(perm[k - 1], perm[uniform_below(rng, k)]);
        }
        for (std::size_t u = 0; u < num_ports; u++) {
            if (uniform_below(rng, 4) != 0) {
                dests[u] = DestSet{PortId(perm[u])};
            }
        }
    } else {
        for (std::size_t v = 0; v < num_ports; v++) {
            if (uniform_below(rng, 5) == 0) {
                continue;
            }
            auto u = uniform_below(rng, num_ports);
            if (!dests[u].has_value()) {
                dests[u] = DestSet{};
            }
            dests[u]->emplace_back(v);
        }
    }
    return ConnectionMap::checked(num_ports, std::move(dests));
}

}  // namespace qswitch
