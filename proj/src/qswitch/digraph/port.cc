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

#include "qswitch/digraph/port.h"

namespace qswitch {

std::string port_list_string(const std::vector<PortId> &ports) {
    std::string out;
    for (std::size_t k = 0; k < ports.size(); k++) {
        if (k) {
            out += ",";
        }
        out += port_name(ports[k]);
    }
    return out;
}

}  // namespace qswitch
