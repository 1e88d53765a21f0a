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

#include "qswitch/cli/map_format.h"

#include <algorithm>
#include <charconv>

namespace qswitch {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_size(std::string_view s, std::size_t &out) {
    s = trim(s);
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ParsedMap parse_map_text(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        number++;
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        if (!line.empty() && line.front() != '#') {
            lines.emplace_back(number, line);
        }
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    if (lines.empty() || lines[0].second != "QSWITCH-MAP v1") {
        throw FormatError(lines.empty() ? 1 : lines[0].first, "expected header 'QSWITCH-MAP v1'");
    }
    std::size_t n = 0;
    if (lines.size() < 2 || lines[1].second.substr(0, 6) != "ports " ||
        !parse_size(lines[1].second.substr(6), n)) {
        throw FormatError(lines.size() < 2 ? lines[0].first : lines[1].first,
                          "expected 'ports <n>'");
    }
    ParsedMap out;
    out.line_of_port.assign(n, 0);
    std::vector<Destinations> dests(n);
    for (std::size_t k = 2; k < lines.size(); k++) {
        auto [no, line] = lines[k];
        auto colon = line.find(':');
        std::size_t port = 0;
        if (colon == std::string_view::npos || !parse_size(line.substr(0, colon), port)) {
            throw FormatError(no, "expected '<port>: <dest[,dest...]>' or '<port>: X'");
        }
        if (port >= n) {
            throw FormatError(no, "port " + std::to_string(port) + " out of range for " +
                                      std::to_string(n) + " ports");
        }
        if (out.line_of_port[port] != 0) {
            throw FormatError(no, "port " + std::to_string(port) + " already given on line " +
                                      std::to_string(out.line_of_port[port]));
        }
        out.line_of_port[port] = no;
        auto body = trim(line.substr(colon + 1));
        if (body.empty()) {
            throw FormatError(no, "expected destinations or X");
        }
        if (body == "X") {
            continue;
        }
        DestSet set;
        while (!body.empty()) {
            auto comma = body.find(',');
            std::size_t d = 0;
            if (!parse_size(body.substr(0, comma), d)) {
                throw FormatError(no, "bad destination list");
            }
            if (std::find(set.begin(), set.end(), PortId(d)) != set.end()) {
                throw FormatError(no, "destination " + std::to_string(d) + " repeated");
            }
            set.emplace_back(d);
            if (comma == std::string_view::npos) {
                break;
            }
            body = trim(body.substr(comma + 1));
            if (body.empty()) {
                throw FormatError(no, "trailing comma");
            }
        }
        dests[port] = std::move(set);
    }
    for (std::size_t p = 0; p < n; p++) {
        if (out.line_of_port[p] == 0) {
            throw FormatError(lines.back().first, "port " + std::to_string(p) + " missing");
        }
    }
    out.map = ConnectionMap(n, std::move(dests));
    return out;
}

std::string map_to_text(const ConnectionMap &map) {
    std::string out = "QSWITCH-MAP v1\nports " + std::to_string(map.num_ports()) + "\n";
    for (std::size_t u = 0; u < map.num_ports(); u++) {
        out += std::to_string(u) + ":";
        const auto &d = map.at(PortId(u));
        if (!d.has_value()) {
            out += " X\n";
            continue;
        }
        for (std::size_t k = 0; k < d->size(); k++) {
            out += (k ? "," : " ") + std::to_string((*d)[k].index);
        }
        out += "\n";
    }
    return out;
}

}  // namespace qswitch
