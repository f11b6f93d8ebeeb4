#include "qwram/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qwram/errors.hpp"

namespace qwram {

namespace {

using nlohmann::json;

std::string position_token(const Position& pos, bool parenthesize_branchless) {
    std::string depth = std::to_string(pos.depth);
    if (pos.phase == Phase::AtCell) {
        depth += "*";
    } else if (pos.phase == Phase::Backward) {
        depth += "'";
    }
    if (pos.has_branch()) {
        return "(" + depth + "," + std::to_string(pos.branch) + ")";
    }
    return parenthesize_branchless ? "(" + depth + ")" : depth;
}

std::string render_entry(const ConfigEntry& entry, const SubsystemId& id, Encoding encoding) {
    std::string state;
    std::string pos;
    switch (encoding) {
        case Encoding::Qudit:
            switch (entry.state) {
                case WalkerState::Red: state = "(1,R)"; break;
                case WalkerState::Blue: state = "(1,B)"; break;
                case WalkerState::HollowRed: state = "(0,R)"; break;
                case WalkerState::HollowBlue: state = "(0,B)"; break;
                case WalkerState::Empty: state = "∅"; break;
            }
            pos = position_token(entry.position, false);
            break;
        case Encoding::DualRail: {
            // Rail 0 is the upper rail (vacant cell), rail 1 the lower one.
            const bool upper = is_hollow(entry.state) || entry.state == WalkerState::Empty;
            switch (entry.state) {
                case WalkerState::Red:
                case WalkerState::HollowRed: state = "R"; break;
                case WalkerState::Blue:
                case WalkerState::HollowBlue: state = "B"; break;
                case WalkerState::Empty: state = "∅"; break;
            }
            pos = (upper ? "upper" : "lower") + position_token(entry.position, true);
            break;
        }
        case Encoding::Base:
            switch (entry.state) {
                case WalkerState::Red: state = "R"; break;
                case WalkerState::Blue: state = "B"; break;
                case WalkerState::Empty: state = "∅"; break;
                case WalkerState::HollowRed: state = "(0,R)"; break;
                case WalkerState::HollowBlue: state = "(0,B)"; break;
            }
            pos = position_token(entry.position, false);
            break;
    }
    return state + "@" + pos + "·" + subsystem_name(id);
}

json config_json(const ProtocolConfig& config) {
    return json{{"n", config.n},
                {"m", config.m},
                {"variant", variant_name(config.variant)},
                {"copy", copy_mode_name(config.copy_mode)},
                {"encoding", encoding_name(config.encoding)}};
}

const json& require_field(const json& doc, const char* field, const char* where) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        throw ValidationError(std::string(where) + ": missing field \"" + field + "\"");
    }
    return *it;
}

int int_field(const json& doc, const char* field, const char* where) {
    const json& value = require_field(doc, field, where);
    if (!value.is_number_integer()) {
        throw ValidationError(std::string(where) + ": field \"" + field + "\" must be an integer");
    }
    return value.get<int>();
}

std::string string_field(const json& doc, const char* field, const char* where) {
    const json& value = require_field(doc, field, where);
    if (!value.is_string()) {
        throw ValidationError(std::string(where) + ": field \"" + field + "\" must be a string");
    }
    return value.get<std::string>();
}

double number_field(const json& doc, const char* field, const char* where) {
    const json& value = require_field(doc, field, where);
    if (!value.is_number()) {
        throw ValidationError(std::string(where) + ": field \"" + field + "\" must be a number");
    }
    return value.get<double>();
}

ProtocolConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("config: not a JSON object");
    ProtocolConfig config;
    config.n = int_field(doc, "n", "config");
    config.m = int_field(doc, "m", "config");
    config.variant = parse_variant(string_field(doc, "variant", "config"));
    config.copy_mode = parse_copy_mode(string_field(doc, "copy", "config"));
    config.encoding = parse_encoding(string_field(doc, "encoding", "config"));
    validate(config);
    return config;
}

json state_json(const QState& state, const RegisterLayout& layout) {
    json components = json::array();
    for (const auto& [config, amplitude] : state.terms()) {
        json walkers = json::array();
        for (std::size_t i = 0; i < config.entries.size(); ++i) {
            const ConfigEntry& entry = config.entries[i];
            walkers.push_back(json{{"name", subsystem_name(layout.at(i))},
                                   {"state", std::string(1, state_char(entry.state))},
                                   {"depth", entry.position.depth},
                                   {"branch", entry.position.branch},
                                   {"phase", phase_name(entry.position.phase)}});
        }
        components.push_back(json{{"re", amplitude.real()},
                                  {"im", amplitude.imag()},
                                  {"ket", render_ket(config, layout)},
                                  {"switches_on", config.switches_on},
                                  {"walkers", std::move(walkers)}});
    }
    return components;
}

QState state_from_json(const json& doc, const RegisterLayout& layout) {
    if (!doc.is_array()) throw ValidationError("state: not a JSON array");
    std::map<BasisConfig, Amplitude> terms;
    for (const json& component : doc) {
        if (!component.is_object()) throw ValidationError("state: component is not an object");
        BasisConfig config;
        const json& walkers = require_field(component, "walkers", "state");
        if (!walkers.is_array() || walkers.size() != layout.size()) {
            throw ValidationError("state: component does not match the register layout");
        }
        for (std::size_t i = 0; i < walkers.size(); ++i) {
            const json& walker = walkers[i];
            const std::string name = string_field(walker, "name", "state");
            if (name != subsystem_name(layout.at(i))) {
                throw ValidationError("state: walker \"" + name +
                                      "\" out of injection order");
            }
            const std::string state_label = string_field(walker, "state", "state");
            if (state_label.size() != 1) {
                throw ValidationError("state: walker state must be a single character");
            }
            ConfigEntry entry;
            entry.state = state_from_char(state_label[0]);
            entry.position.depth = int_field(walker, "depth", "state");
            entry.position.branch = int_field(walker, "branch", "state");
            entry.position.phase = parse_phase(string_field(walker, "phase", "state"));
            config.entries.push_back(entry);
        }
        const json& switches = require_field(component, "switches_on", "state");
        if (!switches.is_array()) throw ValidationError("state: switches_on must be an array");
        for (const json& cell : switches) {
            if (!cell.is_number_integer()) {
                throw ValidationError("state: switches_on entries must be integers");
            }
            config.switches_on.push_back(cell.get<int>());
        }
        const Amplitude amplitude(number_field(component, "re", "state"),
                                  number_field(component, "im", "state"));
        if (!terms.emplace(std::move(config), amplitude).second) {
            throw ValidationError("state: duplicate component");
        }
    }
    return QState::from_terms(std::move(terms));
}

json gate_json(const GateDescriptor& gate) {
    using Kind = GateDescriptor::Kind;
    switch (gate.kind) {
        case Kind::ULevel:
            return json{{"kind", "U"},
                        {"level", gate.level},
                        {"direction",
                         gate.direction == Direction::Forward ? "forward" : "backward"}};
        case Kind::Scatter: return json{{"kind", "S"}};
        case Kind::ScatterInverse: return json{{"kind", "S-dagger"}};
        case Kind::CopyGlobal: return json{{"kind", "copy"}};
        case Kind::SwitchToggle:
            return json{{"kind", "switch-toggle"}, {"trigger", subsystem_name(gate.trigger)}};
        case Kind::CopySwitch: return json{{"kind", "copy-switch"}};
        case Kind::UIn: return json{{"kind", "U-in"}, {"level", gate.level}};
        case Kind::UBlock:
            return json{{"kind", "U-block"}, {"control", subsystem_name(gate.control)}};
        case Kind::CopyBackup: return json{{"kind", "copy-backup"}};
    }
    throw InternalError("gate_json: unknown gate kind");
}

GateDescriptor gate_from_json(const json& doc) {
    using Kind = GateDescriptor::Kind;
    if (!doc.is_object()) throw ValidationError("gate: not a JSON object");
    const std::string kind = string_field(doc, "kind", "gate");
    GateDescriptor gate;
    if (kind == "U") {
        gate.kind = Kind::ULevel;
        gate.level = int_field(doc, "level", "gate");
        const std::string direction = string_field(doc, "direction", "gate");
        if (direction == "forward") {
            gate.direction = Direction::Forward;
        } else if (direction == "backward") {
            gate.direction = Direction::Backward;
        } else {
            throw ValidationError("gate: unknown direction \"" + direction + "\"");
        }
    } else if (kind == "S") {
        gate.kind = Kind::Scatter;
    } else if (kind == "S-dagger") {
        gate.kind = Kind::ScatterInverse;
    } else if (kind == "copy") {
        gate.kind = Kind::CopyGlobal;
    } else if (kind == "switch-toggle") {
        gate.kind = Kind::SwitchToggle;
        gate.trigger = parse_subsystem_name(string_field(doc, "trigger", "gate"));
    } else if (kind == "copy-switch") {
        gate.kind = Kind::CopySwitch;
    } else if (kind == "U-in") {
        gate.kind = Kind::UIn;
        gate.level = int_field(doc, "level", "gate");
    } else if (kind == "U-block") {
        gate.kind = Kind::UBlock;
        gate.control = parse_subsystem_name(string_field(doc, "control", "gate"));
    } else if (kind == "copy-backup") {
        gate.kind = Kind::CopyBackup;
    } else {
        throw ValidationError("gate: unknown kind \"" + kind + "\"");
    }
    return gate;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string render_ket(const BasisConfig& config, const RegisterLayout& layout) {
    if (config.entries.size() != layout.size()) {
        throw InternalError("render_ket: component does not match the register layout");
    }
    std::string out;
    for (std::size_t i = 0; i < config.entries.size(); ++i) {
        if (i > 0) out += " ⊗ ";
        out += render_entry(config.entries[i], layout.at(i), layout.config().encoding);
    }
    return out;
}

std::vector<QueryTerm> load_query(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("query document: ") + err.what());
    }
    if (!doc.is_object()) throw ValidationError("query document: not a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "terms") {
            throw ValidationError("query document: unknown field \"" + key + "\"");
        }
    }
    const json& terms = require_field(doc, "terms", "query document");
    if (!terms.is_array()) throw ValidationError("query document: \"terms\" must be an array");
    std::vector<QueryTerm> out;
    for (const json& term : terms) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_string() ||
            !term[1].is_number() || !term[2].is_number()) {
            throw ValidationError(
                "query document: each term must be [address, re, im]");
        }
        out.push_back(QueryTerm{term[0].get<std::string>(),
                                Amplitude(term[1].get<double>(), term[2].get<double>())});
    }
    return out;
}

std::string store_query(const std::vector<QueryTerm>& terms) {
    json list = json::array();
    for (const QueryTerm& term : terms) {
        list.push_back(json::array(
            {term.address, term.amplitude.real(), term.amplitude.imag()}));
    }
    return dump_document(json{{"terms", std::move(list)}});
}

std::string result_document(const ProtocolConfig& config,
                            const std::vector<DecodedTerm>& output) {
    json terms = json::array();
    for (const DecodedTerm& term : output) {
        terms.push_back(json{{"address", term.address},
                             {"message", term.message},
                             {"re", term.amplitude.real()},
                             {"im", term.amplitude.imag()}});
    }
    return dump_document(json{{"config", config_json(config)}, {"output", std::move(terms)}});
}

std::string trace_document(const Trace& trace) {
    const RegisterLayout layout(trace.config);
    json steps = json::array();
    for (const TraceStep& step : trace.steps) {
        json entry{{"stage", step.stage},
                   {"level", step.level},
                   {"gate", gate_json(step.gate)},
                   {"node_carriers", step.node_carriers}};
        if (step.state.has_value()) {
            entry["state"] = state_json(*step.state, layout);
        }
        steps.push_back(std::move(entry));
    }
    return dump_document(json{{"config", config_json(trace.config)},
                              {"bank", json::parse(store_bank(trace.bank))},
                              {"input", state_json(trace.input, layout)},
                              {"steps", std::move(steps)}});
}

Trace trace_from_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("trace document: ") + err.what());
    }
    if (!doc.is_object()) throw ValidationError("trace document: not a JSON object");
    const ProtocolConfig config = config_from_json(require_field(doc, "config", "trace document"));
    const RegisterLayout layout(config);
    MemoryBank bank = load_bank(require_field(doc, "bank", "trace document").dump());
    if (bank.n() != config.n || bank.m() != config.m) {
        throw ValidationError("trace document: bank dimensions do not match the config");
    }
    Trace trace{config, std::move(bank),
                state_from_json(require_field(doc, "input", "trace document"), layout),
                {}};
    const json& steps = require_field(doc, "steps", "trace document");
    if (!steps.is_array()) throw ValidationError("trace document: \"steps\" must be an array");
    for (const json& step : steps) {
        if (!step.is_object()) throw ValidationError("trace document: step is not an object");
        TraceStep out;
        out.stage = string_field(step, "stage", "trace document");
        out.level = int_field(step, "level", "trace document");
        out.gate = gate_from_json(require_field(step, "gate", "trace document"));
        const json& carriers = require_field(step, "node_carriers", "trace document");
        if (!carriers.is_number_integer()) {
            throw ValidationError("trace document: node_carriers must be an integer");
        }
        out.node_carriers = carriers.get<long long>();
        if (auto it = step.find("state"); it != step.end()) {
            out.state = state_from_json(*it, layout);
        }
        trace.steps.push_back(std::move(out));
    }
    return trace;
}

std::string ledger_document(const ProtocolConfig& config, const ResourceLedger& ledger) {
    json rows = json::array();
    for (const LevelCost& row : ledger.per_level) {
        rows.push_back(json{{"stage", row.stage},
                            {"level", row.level},
                            {"two_body", row.two_body},
                            {"node_ops", row.node_ops},
                            {"depth", row.depth}});
    }
    return dump_document(json{{"config", config_json(config)},
                              {"walker_count", ledger.walker_count},
                              {"two_body_ops", ledger.two_body_ops},
                              {"node_ops", ledger.node_ops},
                              {"depth", ledger.depth},
                              {"per_level", std::move(rows)}});
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write file: " + tmp);
        out << content;
        if (!out.flush()) throw ValidationError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ValidationError("cannot replace file: " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace qwram
