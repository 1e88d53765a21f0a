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

#include "qswitch/qcircuit/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qswitch {

Layer::Layer(std::initializer_list<CnGate> gates) {
    for (const auto &g : gates) {
        add(g);
    }
}

bool Layer::touches(PortId q) const {
    return std::any_of(gates_.begin(), gates_.end(),
                       [&](const CnGate &g) { return g.control == q || g.target == q; });
}

void Layer::add(CnGate g) {
    if (g.control == g.target) {
        throw CircuitError("CN gate with control == target on qubit " +
                           std::to_string(g.control.index));
    }
    if (touches(g.control) || touches(g.target)) {
        throw CircuitError("CN " + std::to_string(g.control.index) + " " +
                           std::to_string(g.target.index) + " overlaps another gate in its layer");
    }
    auto pos = std::upper_bound(gates_.begin(), gates_.end(), g);
    gates_.insert(pos, g);
}

void Circuit::append(Layer layer) {
    for (const auto &g : layer.gates()) {
        if (g.control.index >= num_qubits_ || g.target.index >= num_qubits_) {
            throw CircuitError("gate CN " + std::to_string(g.control.index) + " " +
                               std::to_string(g.target.index) + " out of range for " +
                               std::to_string(num_qubits_) + " qubits");
        }
    }
    layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw CircuitError("appending a wider circuit");
    }
    for (const auto &layer : other.layers_) {
        append(layer);
    }
}

std::size_t Circuit::gate_count() const {
    std::size_t total = 0;
    for (const auto &layer : layers_) {
        total += layer.size();
    }
    return total;
}

CircuitStats stats(const Circuit &c) {
    CircuitStats s;
    s.depth = c.depth();
    for (const auto &layer : c.layers()) {
        s.per_layer_widths.push_back(layer.size());
        s.gate_count += layer.size();
    }
    return s;
}

std::string circuit_to_text(const Circuit &c) {
    std::string out = "QSWITCH-CIRCUIT v1\nqubits " + std::to_string(c.num_qubits()) + "\n";
    for (std::size_t k = 0; k < c.layers().size(); k++) {
        out += "L" + std::to_string(k + 1) + ":";
        const auto &gates = c.layers()[k].gates();
        for (std::size_t i = 0; i < gates.size(); i++) {
            out += i ? "; CN " : " CN ";
            out += std::to_string(gates[i].control.index) + " " + std::to_string(gates[i].target.index);
        }
        out += "\n";
    }
    return out;
}

CircuitParseError::CircuitParseError(std::size_t line, const std::string &message)
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

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return lines;
}

}  // namespace

Circuit parse_circuit_text(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t idx = 0;
    auto next_line = [&]() -> std::string_view {
        while (idx < lines.size() && trim(lines[idx]).empty()) {
            idx++;
        }
        return idx < lines.size() ? trim(lines[idx++]) : std::string_view{};
    };
    if (next_line() != "QSWITCH-CIRCUIT v1") {
        throw CircuitParseError(idx == 0 ? 1 : idx, "expected header 'QSWITCH-CIRCUIT v1'");
    }
    auto qubits_line = next_line();
    std::size_t n = 0;
    if (qubits_line.substr(0, 7) != "qubits " || !parse_size(qubits_line.substr(7), n)) {
        throw CircuitParseError(idx, "expected 'qubits <n>'");
    }
    Circuit c(n);
    std::size_t expected_layer = 1;
    for (auto line = next_line(); !line.empty(); line = next_line()) {
        std::size_t line_no = idx;
        auto colon = line.find(':');
        std::size_t k = 0;
        if (line.front() != 'L' || colon == std::string_view::npos ||
            !parse_size(line.substr(1, colon - 1), k)) {
            throw CircuitParseError(line_no, "expected 'L<k>: ...'");
        }
        if (k != expected_layer) {
            throw CircuitParseError(line_no, "expected layer L" + std::to_string(expected_layer));
        }
        expected_layer++;
        Layer layer;
        auto body = trim(line.substr(colon + 1));
        while (!body.empty()) {
            auto semi = body.find(';');
            auto item = trim(body.substr(0, semi));
            body = semi == std::string_view::npos ? std::string_view{} : trim(body.substr(semi + 1));
            if (item.substr(0, 3) != "CN ") {
                throw CircuitParseError(line_no, "expected 'CN <control> <target>'");
            }
            auto args = trim(item.substr(3));
            auto space = args.find(' ');
            std::size_t control = 0;
            std::size_t target = 0;
            if (space == std::string_view::npos || !parse_size(args.substr(0, space), control) ||
                !parse_size(args.substr(space + 1), target)) {
                throw CircuitParseError(line_no, "expected 'CN <control> <target>'");
            }
            try {
                layer.add({PortId(control), PortId(target)});
            } catch (const CircuitError &e) {
                throw CircuitParseError(line_no, e.what());
            }
        }
        try {
            c.append(std::move(layer));
        } catch (const CircuitError &e) {
            throw CircuitParseError(line_no, e.what());
        }
    }
    return c;
}

}  // namespace qswitch
