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

#include "qswitch/fabric/schedule_format.h"

#include <algorithm>
#include <charconv>

namespace qswitch {

FormatError::FormatError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

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

struct Lines {
    std::vector<std::pair<std::size_t, std::string_view>> items;
    std::size_t pos = 0;

    explicit Lines(std::string_view text) {
        std::size_t number = 0;
        while (!text.empty()) {
            number++;
            auto nl = text.find('\n');
            auto line = trim(text.substr(0, nl));
            if (!line.empty() && line.front() != '#') {
                items.emplace_back(number, line);
            }
            if (nl == std::string_view::npos) {
                break;
            }
            text.remove_prefix(nl + 1);
        }
    }
    bool done() const { return pos >= items.size(); }
    std::size_t last_line() const { return items.empty() ? 1 : items.back().first; }
    std::pair<std::size_t, std::string_view> next(const char *expected) {
        if (done()) {
            throw FormatError(last_line(), std::string("unexpected end of input, expected ") + expected);
        }
        return items[pos++];
    }
};

std::size_t keyword_value(Lines &lines, std::string_view keyword) {
    auto [no, line] = lines.next(std::string(keyword).c_str());
    std::size_t value = 0;
    if (line.substr(0, keyword.size() + 1) != std::string(keyword) + " " ||
        !parse_size(line.substr(keyword.size() + 1), value)) {
        throw FormatError(no, "expected '" + std::string(keyword) + " <number>'");
    }
    return value;
}

}  // namespace

SlotSchedule parse_schedule_text(std::string_view text) {
    Lines lines(text);
    auto [hno, header] = lines.next("header");
    if (header != "QSWITCH-SCHEDULE v1") {
        throw FormatError(hno, "expected header 'QSWITCH-SCHEDULE v1'");
    }
    SlotSchedule s;
    s.num_ports = keyword_value(lines, "ports");
    s.width = keyword_value(lines, "width");
    if (s.width == 0) {
        throw FormatError(lines.items[lines.pos - 1].first, "width must be positive");
    }
    std::optional<std::size_t> previous_slot;
    while (!lines.done()) {
        auto [sno, slot_line] = lines.next("slot");
        if (slot_line.substr(0, 5) != "slot ") {
            throw FormatError(sno, "expected 'slot <k>'");
        }
        std::vector<std::string_view> words;
        for (auto rest = trim(slot_line.substr(5)); !rest.empty();) {
            auto space = rest.find(' ');
            words.push_back(rest.substr(0, space));
            rest = space == std::string_view::npos ? std::string_view{} : trim(rest.substr(space + 1));
        }
        const char *shape = "expected 'slot <k> [-> <j>] [packet]'";
        std::size_t k = 0;
        if (words.empty() || !parse_size(words[0], k)) {
            throw FormatError(sno, shape);
        }
        std::optional<std::size_t> out_slot;
        std::size_t w = 1;
        if (w < words.size() && words[w] == "->") {
            std::size_t j = 0;
            if (w + 1 >= words.size() || !parse_size(words[w + 1], j)) {
                throw FormatError(sno, shape);
            }
            out_slot = j;
            w += 2;
        }
        bool packet = false;
        if (w < words.size() && words[w] == "packet") {
            packet = true;
            w++;
        }
        if (w != words.size()) {
            throw FormatError(sno, shape);
        }
        if (previous_slot.has_value() && k <= *previous_slot) {
            throw FormatError(sno, "slot numbers must strictly increase");
        }
        previous_slot = k;

        ScheduledSlot slot;
        slot.out_slot = out_slot;
        slot.frame.slot = k;
        slot.frame.width = s.width;
        slot.frame.payload.resize(s.num_ports);
        std::vector<Destinations> dests(s.num_ports);
        PacketRequests requests(s.num_ports);
        for (std::size_t port = 0; port < s.num_ports; port++) {
            auto [no, line] = lines.next("port line");
            auto colon = line.find(':');
            std::size_t p = 0;
            if (colon == std::string_view::npos || !parse_size(line.substr(0, colon), p)) {
                throw FormatError(no, "expected '<port>: <dests|X> <hex|->'");
            }
            if (p != port) {
                throw FormatError(no, "expected port " + std::to_string(port));
            }
            auto body = trim(line.substr(colon + 1));
            auto space = body.find(' ');
            if (space == std::string_view::npos) {
                throw FormatError(no, "expected '<dests|X> <hex|->'");
            }
            auto dest_text = trim(body.substr(0, space));
            auto payload_text = trim(body.substr(space + 1));
            bool idle = dest_text == "X";
            if (!idle) {
                DestSet set;
                while (!dest_text.empty()) {
                    auto comma = dest_text.find(',');
                    std::size_t d = 0;
                    if (!parse_size(dest_text.substr(0, comma), d)) {
                        throw FormatError(no, "bad destination list");
                    }
                    set.emplace_back(d);
                    dest_text = comma == std::string_view::npos ? std::string_view{}
                                                                : dest_text.substr(comma + 1);
                }
                if (packet && set.size() != 1) {
                    throw FormatError(no, "packet slots take exactly one destination per port");
                }
                if (packet) {
                    requests[p] = set.front();
                }
                dests[p] = std::move(set);
            }
            if (idle != (payload_text == "-")) {
                throw FormatError(no, idle ? "idle inlet carries a payload"
                                                       : "live inlet needs a payload");
            }
            if (payload_text != "-") {
                try {
                    slot.frame.payload[p] = BitString::from_hex(payload_text, s.width);
                } catch (const std::invalid_argument &e) {
                    throw FormatError(no, e.what());
                }
            }
        }
        if (packet) {
            // The map of a packet slot comes from arbitration at replay.
            slot.requests = std::move(requests);
            slot.map = ConnectionMap(s.num_ports);
        } else {
            slot.map = ConnectionMap(s.num_ports, std::move(dests));
        }
        s.slots.push_back(std::move(slot));
    }
    return s;
}

std::string schedule_to_text(const SlotSchedule &s) {
    std::string out = "QSWITCH-SCHEDULE v1\nports " + std::to_string(s.num_ports) + "\nwidth " +
                      std::to_string(s.width) + "\n";
    for (const auto &slot : s.slots) {
        out += "slot " + std::to_string(slot.frame.slot);
        if (slot.out_slot.has_value()) {
            out += " -> " + std::to_string(*slot.out_slot);
        }
        out += slot.requests.has_value() ? " packet\n" : "\n";
        for (std::size_t u = 0; u < s.num_ports; u++) {
            out += std::to_string(u) + ": ";
            Destinations d = slot.map.at(PortId(u));
            if (slot.requests.has_value()) {
                const auto &r = (*slot.requests)[u];
                d = r ? Destinations(DestSet{*r}) : kIdle;
            }
            if (!d.has_value()) {
                out += "X";
            } else {
                for (std::size_t k = 0; k < d->size(); k++) {
                    out += (k ? "," : "") + std::to_string((*d)[k].index);
                }
            }
            const auto &p = slot.frame.payload[u];
            out += " " + (p.has_value() ? p->to_hex() : std::string("-")) + "\n";
        }
    }
    return out;
}

std::string outputs_to_text(std::size_t num_ports, std::size_t width,
                            const std::vector<SwitchOutput> &outputs) {
    std::string out = "QSWITCH-OUTPUT v1\nports " + std::to_string(num_ports) + "\nwidth " +
                      std::to_string(width) + "\n";
    for (const auto &o : outputs) {
        out += "slot " + std::to_string(o.slot);
        if (o.out_slot != o.slot) {
            out += " -> " + std::to_string(o.out_slot);
        }
        out += "\n";
        for (std::size_t v = 0; v < o.payload.size(); v++) {
            out += std::to_string(v) + ": " +
                   (o.source[v] ? std::to_string(o.source[v]->index) : std::string("X")) + " " +
                   o.payload[v].to_hex() + "\n";
        }
        out += "valid: ";
        for (auto b : o.valid_mask) {
            out += b ? '1' : '0';
        }
        out += "\n";
        if (!o.deferred.empty()) {
            out += "deferred: ";
            for (std::size_t k = 0; k < o.deferred.size(); k++) {
                out += (k ? "," : "") + std::to_string(o.deferred[k].index);
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace qswitch
