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

#ifndef QSWITCH_QSIM_PORT_MAP_H
#define QSWITCH_QSIM_PORT_MAP_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/digraph/connection_map.h"
#include "qswitch/qcircuit/circuit.h"

namespace qswitch {

/// For every outlet, the inlet whose bit it carries, or nullopt when it
/// always carries 0.
struct PortPermutationMap {
    std::vector<std::optional<PortId>> out_source;

    /// e.g. "0<-X 1<-0 2<-1".
    std::string str() const;
    friend bool operator==(const PortPermutationMap &, const PortPermutationMap &) = default;
};

class NotAPortMapError : public std::runtime_error {
   public:
    NotAPortMapError(PortId outlet, const std::string &why);
    PortId outlet() const { return outlet_; }

   private:
    PortId outlet_;
};

enum class PortMapMethod {
    /// The all-zero input plus one one-hot input per live inlet.
    OneHot,
    /// Every assignment of the live inlets (2^live inputs, bit-sliced).
    Exhaustive,
};

inline constexpr std::size_t kMaxExhaustiveInlets = 20;

/// Black-box routing function of a circuit. Inlets with live[u] == 0 are held
/// at 0 (stuff bits); an empty mask means every inlet is live. Throws
/// NotAPortMapError when an outlet is not a copy of exactly one inlet or of
/// the constant 0.
PortPermutationMap extract_port_map(const Circuit &c, PortMapMethod method = PortMapMethod::OneHot,
                                    const std::vector<std::uint8_t> &live = {});

/// Expected routing of a valid map: outlet v carries its predecessor's bit.
PortPermutationMap delivery_map(const ConnectionMap &map);

/// 1 for inlets with destinations, 0 for idle inlets.
std::vector<std::uint8_t> live_inlets(const ConnectionMap &map);

}  // namespace qswitch

#endif
