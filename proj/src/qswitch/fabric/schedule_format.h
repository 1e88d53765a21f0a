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

#ifndef QSWITCH_FABRIC_SCHEDULE_FORMAT_H
#define QSWITCH_FABRIC_SCHEDULE_FORMAT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/fabric/fabric.h"

namespace qswitch {

/// Schedule text:
///   QSWITCH-SCHEDULE v1
///   ports <n>
///   width <w>
///   slot <k> [-> <j>] [packet]
///                       "-> j" emits the switched words in slot j;
///                       "packet" resolves the map from per-inlet headers
///   <port>: <dest[,dest...]|X> <hex-payload|->     n lines, ports in order
///   ...
/// Slot numbers strictly increase. Blank lines and lines starting with '#'
/// are ignored.
SlotSchedule parse_schedule_text(std::string_view text);
std::string schedule_to_text(const SlotSchedule &s);

/// Output text: the same header with QSWITCH-OUTPUT, then per slot
///   slot <k>            ("slot <k> -> <j>" when the words leave in slot j)
///   <port>: <source|X> <hex-payload>
///   valid: <one 0/1 digit per port>
///   deferred: <port,...>            (only when some packet lost arbitration)
std::string outputs_to_text(std::size_t num_ports, std::size_t width,
                            const std::vector<SwitchOutput> &outputs);

class FormatError : public std::runtime_error {
   public:
    FormatError(std::size_t line, const std::string &message);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

}  // namespace qswitch

#endif
