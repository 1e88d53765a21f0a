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

#include "qswitch/cli/commands.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qswitch/cli/map_format.h"
#include "qswitch/cli/report.h"
#include "qswitch/cli/verify.h"
#include "qswitch/digraph/connection_digraph.h"
#include "qswitch/fabric/schedule_format.h"
#include "qswitch/qcircuit/compile.h"

namespace qswitch {

namespace {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw IoError("cannot write " + path);
    }
}

std::string render(const Report &r, const std::string &format) {
    if (format == "structured") {
        return report_to_json(r).dump(2) + "\n";
    }
    return report_to_text(r);
}

/// Violations with the source line of the entry that caused each one.
std::vector<std::string> located_violations(const ParsedMap &parsed) {
    std::vector<std::string> out;
    for (const auto &v : validate(parsed.map)) {
        std::size_t inlet = v.port.index;
        if (v.kind == ViolationKind::OutputContention && !v.detail.empty()) {
            inlet = v.detail.back();
        }
        std::string where;
        if (inlet < parsed.line_of_port.size()) {
            where = "line " + std::to_string(parsed.line_of_port[inlet]) + ": ";
        }
        out.push_back(where + v.str());
    }
    return out;
}

Report base_report(const std::string &command, const ParsedMap &parsed) {
    Report r;
    r.command = command;
    r.num_ports = parsed.map.num_ports();
    r.violations = located_violations(parsed);
    r.valid = r.violations.empty();
    if (*r.valid) {
        r.components = decompose(build_digraph(parsed.map));
    }
    return r;
}

nlohmann::ordered_json circuit_to_json(const Circuit &c) {
    nlohmann::ordered_json j;
    j["schema"] = "qswitch-circuit/1";
    j["qubits"] = c.num_qubits();
    j["depth"] = c.depth();
    j["gate_count"] = c.gate_count();
    auto layers = nlohmann::ordered_json::array();
    for (const auto &layer : c.layers()) {
        auto gates = nlohmann::ordered_json::array();
        for (const auto &g : layer.gates()) {
            gates.push_back({g.control.index, g.target.index});
        }
        layers.push_back(gates);
    }
    j["layers"] = layers;
    return j;
}

nlohmann::ordered_json outputs_to_json(const SlotSchedule &s, const std::vector<SwitchOutput> &outputs) {
    nlohmann::ordered_json j;
    j["schema"] = "qswitch-output/1";
    j["ports"] = s.num_ports;
    j["width"] = s.width;
    auto slots = nlohmann::ordered_json::array();
    for (const auto &o : outputs) {
        nlohmann::ordered_json slot;
        slot["slot"] = o.slot;
        slot["out_slot"] = o.out_slot;
        auto outlets = nlohmann::ordered_json::array();
        for (std::size_t v = 0; v < o.payload.size(); v++) {
            nlohmann::ordered_json e;
            e["port"] = v;
            e["source"] = o.source[v] ? nlohmann::ordered_json(o.source[v]->index) : nlohmann::ordered_json();
            e["payload"] = o.payload[v].to_hex();
            e["valid"] = o.valid_mask[v] != 0;
            outlets.push_back(e);
        }
        slot["outlets"] = outlets;
        auto deferred = nlohmann::ordered_json::array();
        for (auto p : o.deferred) {
            deferred.push_back(p.index);
        }
        slot["deferred"] = deferred;
        slots.push_back(slot);
    }
    j["slots"] = slots;
    return j;
}

bool starts_with_header(const std::string &text, const std::string &header) {
    std::size_t i = 0;
    // Skip blank and comment lines.
    while (i < text.size()) {
        std::size_t end = text.find('\n', i);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string line = text.substr(i, end - i);
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
            return line.compare(first, header.size(), header) == 0;
        }
        i = end + 1;
    }
    return false;
}

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string emit = "circuit";
    std::string mode = "bits";
    std::string circuit_file;
    std::string random;
    std::size_t ports = 0;
    std::string contention = "strict";
    VerifyOptions verify;
};

int cmd_validate(const Options &o, std::ostream &out) {
    auto parsed = parse_map_text(read_file(o.input));
    auto r = base_report("validate", parsed);
    out << render(r, o.format);
    return *r.valid ? kExitOk : kExitFailed;
}

int cmd_compile(const Options &o, std::ostream &out, std::ostream &err) {
    auto parsed = parse_map_text(read_file(o.input));
    auto r = base_report("compile", parsed);
    if (!*r.valid) {
        for (const auto &v : r.violations) {
            err << "error: " << v << "\n";
        }
        return kExitFailed;
    }
    auto p = plan(build_digraph(parsed.map));
    auto c = compile_plan(p);
    std::string text;
    if (o.emit == "plan") {
        if (o.format == "structured") {
            r.plan = p;
            r.circuit = stats(c);
            text = render(r, o.format);
        } else {
            text = plan_to_text(p, stats(c));
        }
    } else {
        text = o.format == "structured" ? circuit_to_json(c).dump(2) + "\n" : circuit_to_text(c);
    }
    write_output(o.output, text, out);
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    VerifyOptions v = o.verify;
    v.mode = o.mode == "state" ? VerifyMode::State : o.mode == "both" ? VerifyMode::Both : VerifyMode::Bits;
    Report r;
    r.command = "verify";
    if (!o.random.empty()) {
        if (o.ports == 0) {
            err << "error: --random needs --ports\n";
            return kExitUsage;
        }
        r.num_ports = o.ports;
        auto kind = o.random == "multicast" ? TrafficKind::Multicast : TrafficKind::Unicast;
        r.checks = verify_random(kind, o.ports, v);
    } else {
        if (o.input.empty()) {
            err << "error: verify needs a map file or --random\n";
            return kExitUsage;
        }
        auto parsed = parse_map_text(read_file(o.input));
        r = base_report("verify", parsed);
        if (!*r.valid) {
            out << render(r, o.format);
            return kExitFailed;
        }
        std::optional<Circuit> circuit;
        if (!o.circuit_file.empty()) {
            circuit = parse_circuit_text(read_file(o.circuit_file));
        } else {
            r.plan = plan(build_digraph(parsed.map));
            circuit = compile_plan(*r.plan);
        }
        r.circuit = stats(*circuit);
        r.checks = verify_circuit(parsed.map, *circuit, r.plan ? &*r.plan : nullptr, v);
    }
    out << render(r, o.format);
    return r.all_checks_pass() ? kExitOk : kExitFailed;
}

int cmd_schedule(const Options &o, std::ostream &out) {
    auto s = parse_schedule_text(read_file(o.input));
    ScheduleOptions options;
    options.contention = o.contention == "arbiter" ? ContentionMode::Arbiter : ContentionMode::Strict;
    auto outputs = run_schedule(s, options);
    if (outputs.empty()) {
        return kExitOk;
    }
    std::string text = o.format == "structured" ? outputs_to_json(s, outputs).dump(2) + "\n"
                                                : outputs_to_text(s.num_ports, s.width, outputs);
    write_output(o.output, text, out);
    return kExitOk;
}

int cmd_stats(const Options &o, std::ostream &out, std::ostream &err) {
    std::string text = read_file(o.input);
    Report r;
    r.command = "stats";
    if (starts_with_header(text, "QSWITCH-CIRCUIT")) {
        auto c = parse_circuit_text(text);
        r.num_ports = c.num_qubits();
        r.circuit = stats(c);
    } else {
        auto parsed = parse_map_text(text);
        r = base_report("stats", parsed);
        if (!*r.valid) {
            for (const auto &v : r.violations) {
                err << "error: " << v << "\n";
            }
            return kExitFailed;
        }
        r.plan = plan(build_digraph(parsed.map));
        r.circuit = stats(compile_plan(*r.plan));
    }
    out << render(r, o.format);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Quantum switch compiler and verifier", "qswitch"};
    app.require_subcommand(1);
    auto formats = CLI::IsMember({"text", "structured"});

    auto *validate_cmd = app.add_subcommand("validate", "Check a connection map file");
    validate_cmd->add_option("map", o.input, "Connection map file")->required();
    validate_cmd->add_option("--format", o.format, "text|structured")->check(formats);

    auto *compile_cmd = app.add_subcommand("compile", "Emit the switching plan or CN circuit");
    compile_cmd->add_option("map", o.input, "Connection map file")->required();
    compile_cmd->add_option("--emit", o.emit, "plan|circuit")->check(CLI::IsMember({"plan", "circuit"}));
    compile_cmd->add_option("--format", o.format, "text|structured")->check(formats);
    compile_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Simulate the circuit and check delivery");
    verify_cmd->add_option("map", o.input, "Connection map file");
    verify_cmd->add_option("--mode", o.mode, "bits|state|both")->check(CLI::IsMember({"bits", "state", "both"}));
    verify_cmd->add_option("--seed", o.verify.seed, "RNG seed");
    verify_cmd->add_option("--trials", o.verify.trials, "Random trials")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-statevector-qubits", o.verify.max_qubits, "State-vector qubit cap")
        ->check(CLI::Range(1, 30));
    verify_cmd->add_option("--circuit", o.circuit_file, "Verify this circuit instead of compiling");
    verify_cmd->add_option("--random", o.random, "unicast|multicast")->check(CLI::IsMember({"unicast", "multicast"}));
    verify_cmd->add_option("--ports", o.ports, "Port count for --random")->check(CLI::Range(1, 4096));
    verify_cmd->add_option("--format", o.format, "text|structured")->check(formats);

    auto *schedule_cmd = app.add_subcommand("schedule", "Replay a slot schedule through the switch");
    schedule_cmd->add_option("schedule", o.input, "Schedule file")->required();
    schedule_cmd->add_option("--contention", o.contention, "strict|arbiter")
        ->check(CLI::IsMember({"strict", "arbiter"}));
    schedule_cmd->add_option("--format", o.format, "text|structured")->check(formats);
    schedule_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto *stats_cmd = app.add_subcommand("stats", "Depth, gate count and layer widths");
    stats_cmd->add_option("file", o.input, "Circuit or connection map file")->required();
    stats_cmd->add_option("--format", o.format, "text|structured")->check(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(o, out);
        }
        if (compile_cmd->parsed()) {
            return cmd_compile(o, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (schedule_cmd->parsed()) {
            return cmd_schedule(o, out);
        }
        return cmd_stats(o, out, err);
    } catch (const FormatError &e) {
        err << "error: " << o.input << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const CircuitParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StateVectorCapError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ScheduleError &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const InvalidMapError &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace qswitch
