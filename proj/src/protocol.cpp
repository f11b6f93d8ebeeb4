#include "qwram/protocol.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qwram/encodings.hpp"
#include "qwram/errors.hpp"

namespace qwram {

namespace {

std::vector<ProtocolStep> level_unit(const RegisterLayout& layout, int d, Direction direction) {
    std::vector<ProtocolStep> steps;
    const std::string stage = direction == Direction::Forward ? "forward" : "backward";
    if (layout.config().variant == Variant::Standard) {
        GateDescriptor gate;
        gate.kind = GateDescriptor::Kind::ULevel;
        gate.level = d;
        gate.direction = direction;
        steps.push_back(ProtocolStep{stage, d, gate});
        return steps;
    }
    std::vector<GateDescriptor> gates;
    {
        GateDescriptor seed;
        seed.kind = GateDescriptor::Kind::UIn;
        seed.level = d;
        gates.push_back(seed);
    }
    for (const SubsystemId& id : layout.subsystems()) {
        if ((id.kind == SubsystemKind::AddressBackup && id.index >= d) ||
            id.kind == SubsystemKind::DataBackup) {
            GateDescriptor block;
            block.kind = GateDescriptor::Kind::UBlock;
            block.control = id;
            gates.push_back(block);
        }
    }
    if (direction == Direction::Backward) {
        std::reverse(gates.begin(), gates.end());
    }
    for (const GateDescriptor& gate : gates) steps.push_back(ProtocolStep{stage, d, gate});
    return steps;
}

std::vector<ProtocolStep> copy_unit(const RegisterLayout& layout) {
    const ProtocolConfig& config = layout.config();
    std::vector<ProtocolStep> steps;
    switch (config.copy_mode) {
        case CopyMode::Global: {
            GateDescriptor gate;
            gate.kind = GateDescriptor::Kind::CopyGlobal;
            steps.push_back(ProtocolStep{"copy", 0, gate});
            break;
        }
        case CopyMode::Switch: {
            GateDescriptor arm;
            arm.kind = GateDescriptor::Kind::SwitchToggle;
            arm.trigger = data_id(0);
            GateDescriptor write;
            write.kind = GateDescriptor::Kind::CopySwitch;
            GateDescriptor disarm;
            disarm.kind = GateDescriptor::Kind::SwitchToggle;
            disarm.trigger = data_id(config.m + 1);
            steps.push_back(ProtocolStep{"copy", 0, arm});
            steps.push_back(ProtocolStep{"copy", 0, write});
            steps.push_back(ProtocolStep{"copy", 0, disarm});
            break;
        }
        case CopyMode::BackupControlled: {
            GateDescriptor gate;
            gate.kind = GateDescriptor::Kind::CopyBackup;
            steps.push_back(ProtocolStep{"copy", 0, gate});
            break;
        }
    }
    return steps;
}

ProtocolStep scatter_step(const std::string& stage, int level, bool inverse) {
    GateDescriptor gate;
    gate.kind = inverse ? GateDescriptor::Kind::ScatterInverse : GateDescriptor::Kind::Scatter;
    return ProtocolStep{stage, level, gate};
}

long long count_carriers(const QState& state) {
    long long total = 0;
    for (const auto& [config, amp] : state.terms()) {
        for (const ConfigEntry& entry : config.entries) {
            if (is_present(entry.state)) ++total;
        }
    }
    return total;
}

std::string component_address(const BasisConfig& config, const RegisterLayout& layout) {
    const ProtocolConfig& pc = layout.config();
    std::string bits(static_cast<std::size_t>(pc.n), '0');
    for (int i = 1; i <= pc.n; ++i) {
        const ConfigEntry& entry = config.entries[layout.index_of(address_id(i))];
        if (is_present(entry.state) && !is_hollow(entry.state)) {
            bits[static_cast<std::size_t>(i - 1)] = '1';
        }
    }
    return bits;
}

}  // namespace

std::vector<ProtocolStep> protocol_steps(const ProtocolConfig& config) {
    validate(config);
    const RegisterLayout layout(config);
    std::vector<ProtocolStep> steps;
    for (int d = 1; d <= config.n; ++d) {
        for (ProtocolStep& s : level_unit(layout, d, Direction::Forward)) {
            steps.push_back(std::move(s));
        }
        steps.push_back(scatter_step("forward", d, false));
    }
    for (ProtocolStep& s : copy_unit(layout)) steps.push_back(std::move(s));
    for (int d = config.n; d >= 1; --d) {
        steps.push_back(scatter_step("backward", d, true));
        for (ProtocolStep& s : level_unit(layout, d, Direction::Backward)) {
            steps.push_back(std::move(s));
        }
    }
    return steps;
}

QueryResult run_query(const ProtocolConfig& config, const MemoryBank& bank,
                      const std::vector<QueryTerm>& terms, TraceDetail detail) {
    validate(config);
    if (bank.n() != config.n || bank.m() != config.m) {
        throw ValidationError("run: bank dimensions do not match the config");
    }
    const RegisterLayout layout(config);
    QState state = encode_query(terms, layout);
    if (config.encoding != Encoding::Base) state = to_qudit(state, layout);

    Trace trace{config, bank, state, {}};
    const std::vector<ProtocolStep> steps = protocol_steps(config);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const ProtocolStep& step = steps[k];
        state = apply_gate(state, layout, step.gate, &bank);
        TraceStep record{step.stage, step.level, step.gate, std::nullopt, 0};
        if (step.gate.kind == GateDescriptor::Kind::Scatter ||
            step.gate.kind == GateDescriptor::Kind::ScatterInverse) {
            record.node_carriers = count_carriers(state);
        }
        const bool last_of_unit = k + 1 == steps.size() ||
                                  steps[k + 1].stage != step.stage ||
                                  steps[k + 1].level != step.level;
        const bool snapshot = detail == TraceDetail::PerGate ||
                              (detail == TraceDetail::PerLevel &&
                               (step.stage == "copy" || last_of_unit));
        if (snapshot) record.state = state;
        trace.steps.push_back(std::move(record));
    }

    QState readout = config.encoding == Encoding::Base ? state : from_qudit(state, layout);
    return QueryResult{decode_output(readout, layout), std::move(trace)};
}

QState forward_route(const QState& state, const RegisterLayout& layout) {
    QState out = state;
    for (int d = 1; d <= layout.config().n; ++d) {
        for (const ProtocolStep& step : level_unit(layout, d, Direction::Forward)) {
            out = apply_gate(out, layout, step.gate, nullptr);
        }
        out = apply_S(out, layout);
    }
    return out;
}

QState copy_phase(const QState& state, const RegisterLayout& layout, const MemoryBank& bank) {
    QState out = state;
    for (const ProtocolStep& step : copy_unit(layout)) {
        out = apply_gate(out, layout, step.gate, &bank);
    }
    return out;
}

QState backward_route(const QState& state, const RegisterLayout& layout) {
    QState out = state;
    for (int d = layout.config().n; d >= 1; --d) {
        out = apply_S_dagger(out, layout);
        for (const ProtocolStep& step : level_unit(layout, d, Direction::Backward)) {
            out = apply_gate(out, layout, step.gate, nullptr);
        }
    }
    return out;
}

RecollectionReport verify_recollection(const Trace& trace) {
    const RegisterLayout layout(trace.config);
    RecollectionReport report;
    for (const TraceStep& step : trace.steps) {
        if (!step.state.has_value()) {
            throw ValidationError("recollection check requires a per-gate trace");
        }
    }

    // Node coincidence just before each backward level gate, which is the
    // state the outbound scattering of that level leaves behind.
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const TraceStep& step = trace.steps[k];
        if (step.stage != "backward" ||
            step.gate.kind != GateDescriptor::Kind::ScatterInverse) {
            continue;
        }
        const int d = step.level;
        const std::size_t ctrl = layout.index_of(address_id(d));
        for (const auto& [config, amp] : step.state->terms()) {
            const ConfigEntry& control = config.entries[ctrl];
            if (control.state != WalkerState::Red) continue;
            for (std::size_t t = ctrl + 1; t < config.entries.size(); ++t) {
                const ConfigEntry& target = config.entries[t];
                if (!target.position.has_branch()) continue;
                if (target.position.depth != control.position.depth ||
                    target.position.branch != control.position.branch) {
                    report.violations.push_back(
                        "step " + std::to_string(k + 1) + " (backward level " +
                        std::to_string(d) + "): component " +
                        component_address(config, layout) + ": " +
                        subsystem_name(layout.at(t)) + " is off the control node");
                }
            }
        }
    }

    // Dispersal intervals: for each component and each present address
    // walker, the contiguous step range it spent away from the data train.
    std::map<std::pair<std::string, int>, std::pair<std::size_t, std::size_t>> intervals;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        for (const auto& [config, amp] : trace.steps[k].state->terms()) {
            const std::string address = component_address(config, layout);
            int train_branch = 0;
            int train_depth = 0;
            for (auto it = config.entries.rbegin(); it != config.entries.rend(); ++it) {
                if (it->position.has_branch()) {
                    train_branch = it->position.branch;
                    train_depth = it->position.depth;
                    break;
                }
            }
            if (train_branch == 0) continue;
            for (int i = 1; i <= trace.config.n; ++i) {
                const ConfigEntry& a = config.entries[layout.index_of(address_id(i))];
                if (!a.position.has_branch()) continue;
                if (a.position.depth == train_depth && a.position.branch == train_branch) {
                    continue;
                }
                auto [it, inserted] =
                    intervals.emplace(std::make_pair(address, i), std::make_pair(k, k));
                if (!inserted) it->second.second = k;
            }
        }
    }
    for (const auto& [key, span] : intervals) {
        report.dispersals.push_back(
            "component " + key.first + ": A" + std::to_string(key.second) +
            " apart from the train during steps " + std::to_string(span.first + 1) + ".." +
            std::to_string(span.second + 1));
    }

    report.clean = report.violations.empty();
    return report;
}

}  // namespace qwram
