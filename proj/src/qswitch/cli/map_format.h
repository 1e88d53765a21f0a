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

#ifndef QSWITCH_CLI_MAP_FORMAT_H
#define QSWITCH_CLI_MAP_FORMAT_H

#include <string>
#include <string_view>
#include <vector>

#include "qswitch/digraph/connection_map.h"
#include "qswitch/fabric/schedule_format.h"

namespace qswitch {

struct ParsedMap {
    ConnectionMap map;
    /// 1-based source line of each port's entry.
    std::vector<std::size_t> line_of_port;
};

/// Map text:
///   QSWITCH-MAP v1
///   ports <n>
///   <port>: <dest[,dest...]>    or    <port>: X
/// Every port 0..n-1 appears exactly once, in any order. Blank lines and '#'
/// comments are ignored. Destinations are not range-checked here; validate()
/// reports them. Throws FormatError with the offending line.
ParsedMap parse_map_text(std::string_view text);

/// Canonical form: ports in order, destinations ascending.
std::string map_to_text(const ConnectionMap &map);

}  // namespace qswitch

#endif
