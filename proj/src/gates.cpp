#include "qwram/gates.hpp"

#include <algorithm>

#include "qwram/errors.hpp"

namespace qwram {

namespace {

// Every gate acts on components whose entries share one depth and phase;
// walkers move through the tree in lockstep.
struct ComponentFrame {
    int depth;
    Phase phase;
};

ComponentFrame frame_of(const BasisConfig& config, const RegisterLayout& layout,
                        const char* gate) {
    if (config.entries.size() != layout.size()) {
        throw ProtocolError(std::string(gate) + ": component does not match the register layout");
    }
    const ConfigEntry& first = config.entries.front();
    for (const ConfigEntry& entry : config.entries) {
        if (entry.position.depth != first.position.depth ||
            entry.position.phase != first.position.phase) {
            throw ProtocolError(std::string(gate) + ": walkers are out of step");
        }
    }
    return ComponentFrame{first.position.depth, first.position.phase};
}

void require_branch_bounds(const Position& p, const char* gate) {
    if (p.branch < 0 || (p.has_branch() && p.branch > (1 << (p.depth - 1)))) {
        throw InternalError(std::string(gate) + ": branch outside the tree");
    }
}

// Co-location cross-check for identity-keyed controls: any walker a control
// flips must share the control's node.
void require_colocated(const Position& control, const Position& target, const char* gate) {
    if (target.depth != control.depth) {
        throw InternalError(std::string(gate) + ": flipped walker at a different depth");
    }
    if (target.has_branch() && control.has_branch() && target.branch != control.branch) {
        throw InternalError(std::string(gate) + ": flipped walker off the control's node");
    }
}

void toggle_switch(std::vector<int>& switches_on, int cell_branch) {
    auto it = std::lower_bound(switches_on.begin(), switches_on.end(), cell_branch);
    if (it != switches_on.end() && *it == cell_branch) {
        switches_on.erase(it);
    } else {
        switches_on.insert(it, cell_branch);
    }
}

// The local copy against one stored bit: bit 1 leaves the data walker alone,
// bit 0 exchanges a Red walker with an absent one at the cell. Blue walkers
// are untouched either way. "Absent" is Empty in the base encoding and the
// hollow Red state under the qudit encodings.
void local_copy(ConfigEntry& data, char bit, int cell_branch, Encoding encoding,
                const char* gate) {
    if (bit == '1') return;
    const WalkerState absent =
        encoding == Encoding::Base ? WalkerState::Empty : WalkerState::HollowRed;
    if (data.state == WalkerState::Red) {
        if (data.position.branch != cell_branch) {
            throw InternalError(std::string(gate) + ": data walker away from the copy cell");
        }
        data.state = absent;
        data.position.branch = 0;
    } else if (data.state == absent) {
        data.state = WalkerState::Red;
        data.position.branch = cell_branch;
    }
}

bool is_absent_state(WalkerState s, Encoding encoding) {
    return s == (encoding == Encoding::Base ? WalkerState::Empty : WalkerState::HollowRed);
}

void require_at_cells(const ComponentFrame& frame, int n, const char* gate) {
    if (frame.depth != n + 1 || frame.phase != Phase::AtCell) {
        throw ProtocolError(std::string(gate) + ": walkers have not reached the memory cells");
    }
}

void require_bank_shape(const MemoryBank& bank, const ProtocolConfig& config, const char* gate) {
    if (bank.n() != config.n || bank.m() != config.m) {
        throw ValidationError(std::string(gate) + ": bank dimensions do not match the config");
    }
}

BasisConfig config_U_level(const BasisConfig& config, const RegisterLayout& layout, int d,
                           Direction direction) {
    const ComponentFrame frame = frame_of(config, layout, "U-level");
    if (frame.depth != d ||
        frame.phase != (direction == Direction::Forward ? Phase::Forward : Phase::Backward)) {
        throw ProtocolError("U-level: walkers are not at level " + std::to_string(d) +
                            " in the expected phase");
    }
    const std::size_t ctrl = layout.index_of(address_id(d));
    const ConfigEntry& control = config.entries[ctrl];
    BasisConfig out = config;
    if (control.state == WalkerState::Red) {
        for (std::size_t k = ctrl + 1; k < out.entries.size(); ++k) {
            ConfigEntry& target = out.entries[k];
            if (target.state == WalkerState::Red || target.state == WalkerState::Blue) {
                require_colocated(control.position, target.position, "U-level");
                target.state = negate_color(target.state);
            }
        }
    } else if (control.state == WalkerState::HollowRed && direction == Direction::Forward) {
        // Qudit encodings: a hollow Red control flips the hollow colors of
        // the downstream subsystems on the inbound pass.
        for (std::size_t k = ctrl + 1; k < out.entries.size(); ++k) {
            ConfigEntry& target = out.entries[k];
            if (is_hollow(target.state)) target.state = negate_color(target.state);
        }
    }
    return out;
}

BasisConfig config_S(const BasisConfig& config, const RegisterLayout& layout) {
    const int n = layout.config().n;
    const ComponentFrame frame = frame_of(config, layout, "S");
    if (frame.phase != Phase::Forward) {
        throw ProtocolError("S: walkers are not in the forward phase");
    }
    if (frame.depth > n) {
        throw ProtocolError("S: walkers are already at the memory cells");
    }
    const Phase next_phase = frame.depth + 1 == n + 1 ? Phase::AtCell : Phase::Forward;
    BasisConfig out = config;
    for (ConfigEntry& entry : out.entries) {
        require_branch_bounds(entry.position, "S");
        switch (entry.state) {
            case WalkerState::Red:
                entry.position.branch = child_branch_left(entry.position.branch);
                break;
            case WalkerState::Blue:
                entry.position.branch = child_branch_right(entry.position.branch);
                entry.state = WalkerState::Red;
                break;
            case WalkerState::HollowRed:
            case WalkerState::HollowBlue:
                entry.state = WalkerState::HollowRed;
                break;
            case WalkerState::Empty:
                break;
        }
        entry.position.depth = frame.depth + 1;
        entry.position.phase = next_phase;
    }
    return out;
}

BasisConfig config_S_dagger(const BasisConfig& config, const RegisterLayout& layout) {
    const int n = layout.config().n;
    const ComponentFrame frame = frame_of(config, layout, "S-dagger");
    if (frame.depth < 2) {
        throw ProtocolError("S-dagger: walkers are already at the root");
    }
    if (frame.depth == n + 1 ? frame.phase == Phase::Forward : frame.phase != Phase::Backward) {
        throw ProtocolError("S-dagger: walkers are not in the outbound phase");
    }
    BasisConfig out = config;
    for (ConfigEntry& entry : out.entries) {
        require_branch_bounds(entry.position, "S-dagger");
        switch (entry.state) {
            case WalkerState::Red: {
                const int l = entry.position.branch;
                entry.position.branch = parent_branch(l);
                if (l % 2 == 0) entry.state = WalkerState::Blue;
                break;
            }
            case WalkerState::Blue:
                throw ProtocolError("S-dagger: Blue walker entering the outbound scattering");
            case WalkerState::HollowBlue:
                throw ProtocolError(
                    "S-dagger: hollow Blue walker entering the outbound scattering");
            case WalkerState::HollowRed:
            case WalkerState::Empty:
                break;
        }
        entry.position.depth = frame.depth - 1;
        entry.position.phase = Phase::Backward;
    }
    return out;
}

BasisConfig config_copy_global(const BasisConfig& config, const RegisterLayout& layout,
                               const MemoryBank& bank) {
    const ProtocolConfig& pc = layout.config();
    const ComponentFrame frame = frame_of(config, layout, "copy");
    const std::size_t flag = layout.index_of(data_id(0));
    const ConfigEntry& control = config.entries[flag];
    if (control.state != WalkerState::Red) return config;
    require_at_cells(frame, pc.n, "copy");
    const int cell = control.position.branch;
    const std::string& bits = cell_lookup(bank, address_for_branch(cell, pc.n));
    BasisConfig out = config;
    for (int j = 1; j <= pc.m; ++j) {
        local_copy(entry_of(out, layout, data_id(j)), bits[static_cast<std::size_t>(j - 1)],
                   cell, pc.encoding, "copy");
    }
    return out;
}

BasisConfig config_switch_toggle(const BasisConfig& config, const RegisterLayout& layout,
                                 const SubsystemId& trigger) {
    const ComponentFrame frame = frame_of(config, layout, "switch");
    const ConfigEntry& t = config.entries[layout.index_of(trigger)];
    if (t.state != WalkerState::Red) return config;
    require_at_cells(frame, layout.config().n, "switch");
    BasisConfig out = config;
    toggle_switch(out.switches_on, t.position.branch);
    return out;
}

BasisConfig config_copy_switch(const BasisConfig& config, const RegisterLayout& layout,
                               const MemoryBank& bank) {
    const ProtocolConfig& pc = layout.config();
    if (config.switches_on.empty()) return config;
    const ComponentFrame frame = frame_of(config, layout, "write");
    require_at_cells(frame, pc.n, "write");
    BasisConfig out = config;
    for (int j = 1; j <= pc.m; ++j) {
        ConfigEntry& data = entry_of(out, layout, data_id(j));
        if (is_absent_state(data.state, pc.encoding)) {
            // An absent data walker can only be restored where exactly one
            // armed cell stores a 0 bit; more than one would make the swap
            // target ambiguous, which no reachable state produces.
            int restore_cell = 0;
            for (int cell : config.switches_on) {
                const std::string& bits = cell_lookup(bank, address_for_branch(cell, pc.n));
                if (bits[static_cast<std::size_t>(j - 1)] == '0') {
                    if (restore_cell != 0) {
                        throw InternalError("write: ambiguous restore of an absent data walker");
                    }
                    restore_cell = cell;
                }
            }
            if (restore_cell != 0) {
                data.state = WalkerState::Red;
                data.position.branch = restore_cell;
            }
        } else if (std::binary_search(config.switches_on.begin(), config.switches_on.end(),
                                      data.position.branch)) {
            const std::string& bits =
                cell_lookup(bank, address_for_branch(data.position.branch, pc.n));
            local_copy(data, bits[static_cast<std::size_t>(j - 1)], data.position.branch,
                       pc.encoding, "write");
        }
    }
    return out;
}

BasisConfig config_U_in(const BasisConfig& config, const RegisterLayout& layout, int d) {
    const ComponentFrame frame = frame_of(config, layout, "U-in");
    if (frame.depth != d || frame.phase == Phase::AtCell) {
        throw ProtocolError("U-in: walkers are not at level " + std::to_string(d));
    }
    const ConfigEntry& control = config.entries[layout.index_of(address_id(d))];
    if (control.state != WalkerState::Red) return config;
    BasisConfig out = config;
    ConfigEntry& target = entry_of(out, layout, address_backup_id(d));
    require_colocated(control.position, target.position, "U-in");
    target.state = negate_color(target.state);
    return out;
}

BasisConfig config_U_block(const BasisConfig& config, const RegisterLayout& layout,
                           const SubsystemId& control_id) {
    if (control_id.kind != SubsystemKind::AddressBackup &&
        control_id.kind != SubsystemKind::DataBackup) {
        throw ValidationError("U-block: control must be a backup subsystem");
    }
    frame_of(config, layout, "U-block");
    const std::size_t ctrl = layout.index_of(control_id);
    if (ctrl + 1 >= layout.size()) {
        throw ValidationError("U-block: control has no following subsystem");
    }
    const ConfigEntry& control = config.entries[ctrl];
    if (control.state != WalkerState::Blue) return config;
    BasisConfig out = config;
    const auto negate_at = [&](std::size_t k) {
        ConfigEntry& target = out.entries[k];
        if (is_present(target.state)) {
            require_colocated(control.position, target.position, "U-block");
            target.state = negate_color(target.state);
        }
    };
    negate_at(ctrl + 1);
    // The target's own backup companion, when it has one, flips with it.
    if (ctrl + 2 < layout.size()) {
        const SubsystemId& primary = layout.at(ctrl + 1);
        const SubsystemId& next = layout.at(ctrl + 2);
        const bool companion =
            (primary.kind == SubsystemKind::Address &&
             next == address_backup_id(primary.index)) ||
            (primary.kind == SubsystemKind::Data && next == data_backup_id(primary.index));
        if (companion) negate_at(ctrl + 2);
    }
    return out;
}

BasisConfig config_copy_backup(const BasisConfig& config, const RegisterLayout& layout,
                               const MemoryBank& bank) {
    const ProtocolConfig& pc = layout.config();
    const ComponentFrame frame = frame_of(config, layout, "copy-backup");
    BasisConfig out = config;
    for (int j = 1; j <= pc.m; ++j) {
        const SubsystemId control_id = j == 1 ? address_backup_id(pc.n) : data_backup_id(j - 1);
        const ConfigEntry& control = out.entries[layout.index_of(control_id)];
        if (control.state != WalkerState::Red) continue;
        require_at_cells(frame, pc.n, "copy-backup");
        const int cell = control.position.branch;
        const std::string& bits = cell_lookup(bank, address_for_branch(cell, pc.n));
        local_copy(entry_of(out, layout, data_id(j)), bits[static_cast<std::size_t>(j - 1)],
                   cell, pc.encoding, "copy-backup");
    }
    return out;
}

std::vector<SubsystemId> chain_controls(const RegisterLayout& layout, int d) {
    std::vector<SubsystemId> controls;
    for (const SubsystemId& id : layout.subsystems()) {
        if ((id.kind == SubsystemKind::AddressBackup && id.index >= d) ||
            id.kind == SubsystemKind::DataBackup) {
            controls.push_back(id);
        }
    }
    return controls;
}

void require_level(const RegisterLayout& layout, int d, const char* gate) {
    if (d < 1 || d > layout.config().n) {
        throw ValidationError(std::string(gate) + ": level " + std::to_string(d) +
                              " outside 1..n");
    }
}

}  // namespace

std::string gate_name(const GateDescriptor& gate) {
    using Kind = GateDescriptor::Kind;
    switch (gate.kind) {
        case Kind::ULevel: return "U[" + std::to_string(gate.level) + "]";
        case Kind::Scatter: return "S";
        case Kind::ScatterInverse: return "S-dagger";
        case Kind::CopyGlobal: return "copy";
        case Kind::SwitchToggle: return "switch[" + subsystem_name(gate.trigger) + "]";
        case Kind::CopySwitch: return "write";
        case Kind::UIn: return "U-in[" + std::to_string(gate.level) + "]";
        case Kind::UBlock: return "U-block[" + subsystem_name(gate.control) + "]";
        case Kind::CopyBackup: return "copy-backup";
    }
    throw InternalError("gate_name: unknown gate kind");
}

QState apply_U_level(const QState& state, const RegisterLayout& layout, int d,
                     Direction direction) {
    require_level(layout, d, "U-level");
    return state.mapped(
        [&](const BasisConfig& c) { return config_U_level(c, layout, d, direction); });
}

QState apply_S(const QState& state, const RegisterLayout& layout) {
    return state.mapped([&](const BasisConfig& c) { return config_S(c, layout); });
}

QState apply_S_dagger(const QState& state, const RegisterLayout& layout) {
    return state.mapped([&](const BasisConfig& c) { return config_S_dagger(c, layout); });
}

QState apply_copy_global(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank) {
    require_bank_shape(bank, layout.config(), "copy");
    return state.mapped([&](const BasisConfig& c) { return config_copy_global(c, layout, bank); });
}

std::pair<QState, MemoryBank> apply_switch_toggle(const QState& state,
                                                  const RegisterLayout& layout,
                                                  const MemoryBank& bank,
                                                  const SubsystemId& trigger) {
    require_bank_shape(bank, layout.config(), "switch");
    const int m = layout.config().m;
    if (trigger.kind != SubsystemKind::Data || (trigger.index != 0 && trigger.index != m + 1)) {
        throw ValidationError("switch: trigger must be the flag D0 or the terminator D" +
                              std::to_string(m + 1));
    }
    if (!layout.contains(trigger)) {
        throw ValidationError("switch: trigger " + subsystem_name(trigger) +
                              " is not part of this layout");
    }
    QState toggled = state.mapped(
        [&](const BasisConfig& c) { return config_switch_toggle(c, layout, trigger); });
    return {std::move(toggled), bank};
}

QState apply_copy_switch(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank) {
    require_bank_shape(bank, layout.config(), "write");
    return state.mapped([&](const BasisConfig& c) { return config_copy_switch(c, layout, bank); });
}

QState apply_U_in(const QState& state, const RegisterLayout& layout, int d) {
    require_level(layout, d, "U-in");
    if (layout.config().variant != Variant::Backup) {
        throw ValidationError("U-in: requires the backup variant");
    }
    return state.mapped([&](const BasisConfig& c) { return config_U_in(c, layout, d); });
}

QState apply_U_block(const QState& state, const RegisterLayout& layout,
                     const SubsystemId& control) {
    return state.mapped([&](const BasisConfig& c) { return config_U_block(c, layout, control); });
}

QState apply_level_backup(const QState& state, const RegisterLayout& layout, int d,
                          Direction direction) {
    require_level(layout, d, "backup level");
    std::vector<SubsystemId> controls = chain_controls(layout, d);
    QState out = state;
    if (direction == Direction::Forward) {
        out = apply_U_in(out, layout, d);
        for (const SubsystemId& c : controls) out = apply_U_block(out, layout, c);
    } else {
        for (auto it = controls.rbegin(); it != controls.rend(); ++it) {
            out = apply_U_block(out, layout, *it);
        }
        out = apply_U_in(out, layout, d);
    }
    return out;
}

QState apply_copy_backup(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank) {
    require_bank_shape(bank, layout.config(), "copy-backup");
    if (layout.config().variant != Variant::Backup) {
        throw ValidationError("copy-backup: requires the backup variant");
    }
    return state.mapped([&](const BasisConfig& c) { return config_copy_backup(c, layout, bank); });
}

QState apply_gate(const QState& state, const RegisterLayout& layout, const GateDescriptor& gate,
                  const MemoryBank* bank) {
    using Kind = GateDescriptor::Kind;
    const auto need_bank = [&]() -> const MemoryBank& {
        if (bank == nullptr) {
            throw InternalError("apply_gate: " + gate_name(gate) + " requires a memory bank");
        }
        return *bank;
    };
    switch (gate.kind) {
        case Kind::ULevel: return apply_U_level(state, layout, gate.level, gate.direction);
        case Kind::Scatter: return apply_S(state, layout);
        case Kind::ScatterInverse: return apply_S_dagger(state, layout);
        case Kind::CopyGlobal: return apply_copy_global(state, layout, need_bank());
        case Kind::SwitchToggle:
            return apply_switch_toggle(state, layout, need_bank(), gate.trigger).first;
        case Kind::CopySwitch: return apply_copy_switch(state, layout, need_bank());
        case Kind::UIn: return apply_U_in(state, layout, gate.level);
        case Kind::UBlock: return apply_U_block(state, layout, gate.control);
        case Kind::CopyBackup: return apply_copy_backup(state, layout, need_bank());
    }
    throw InternalError("apply_gate: unknown gate kind");
}

BasisConfig apply_gate_config(const BasisConfig& config, const RegisterLayout& layout,
                              const GateDescriptor& gate, const MemoryBank* bank) {
    using Kind = GateDescriptor::Kind;
    const auto need_bank = [&]() -> const MemoryBank& {
        if (bank == nullptr) {
            throw InternalError("apply_gate_config: " + gate_name(gate) +
                                " requires a memory bank");
        }
        return *bank;
    };
    switch (gate.kind) {
        case Kind::ULevel:
            require_level(layout, gate.level, "U-level");
            return config_U_level(config, layout, gate.level, gate.direction);
        case Kind::Scatter: return config_S(config, layout);
        case Kind::ScatterInverse: return config_S_dagger(config, layout);
        case Kind::CopyGlobal: return config_copy_global(config, layout, need_bank());
        case Kind::SwitchToggle: return config_switch_toggle(config, layout, gate.trigger);
        case Kind::CopySwitch: return config_copy_switch(config, layout, need_bank());
        case Kind::UIn:
            require_level(layout, gate.level, "U-in");
            return config_U_in(config, layout, gate.level);
        case Kind::UBlock: return config_U_block(config, layout, gate.control);
        case Kind::CopyBackup: return config_copy_backup(config, layout, need_bank());
    }
    throw InternalError("apply_gate_config: unknown gate kind");
}

}  // namespace qwram
