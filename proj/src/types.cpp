#include "qwram/types.hpp"

#include "qwram/errors.hpp"

namespace qwram {

WalkerState negate_color(WalkerState s) {
    switch (s) {
        case WalkerState::Red: return WalkerState::Blue;
        case WalkerState::Blue: return WalkerState::Red;
        case WalkerState::HollowRed: return WalkerState::HollowBlue;
        case WalkerState::HollowBlue: return WalkerState::HollowRed;
        case WalkerState::Empty: return WalkerState::Empty;
    }
    throw InternalError("negate_color: unknown walker state");
}

bool is_present(WalkerState s) { return s != WalkerState::Empty; }

bool is_hollow(WalkerState s) {
    return s == WalkerState::HollowRed || s == WalkerState::HollowBlue;
}

char state_char(WalkerState s) {
    switch (s) {
        case WalkerState::Empty: return '-';
        case WalkerState::Red: return 'R';
        case WalkerState::Blue: return 'B';
        case WalkerState::HollowRed: return 'r';
        case WalkerState::HollowBlue: return 'b';
    }
    throw InternalError("state_char: unknown walker state");
}

WalkerState state_from_char(char c) {
    switch (c) {
        case '-': return WalkerState::Empty;
        case 'R': return WalkerState::Red;
        case 'B': return WalkerState::Blue;
        case 'r': return WalkerState::HollowRed;
        case 'b': return WalkerState::HollowBlue;
        default: break;
    }
    throw ValidationError(std::string("unknown walker state character '") + c + "'");
}

std::string phase_name(Phase p) {
    switch (p) {
        case Phase::Forward: return "forward";
        case Phase::AtCell: return "at-cell";
        case Phase::Backward: return "backward";
    }
    throw InternalError("phase_name: unknown phase");
}

Phase parse_phase(const std::string& name) {
    if (name == "forward") return Phase::Forward;
    if (name == "at-cell") return Phase::AtCell;
    if (name == "backward") return Phase::Backward;
    throw ValidationError("unknown phase '" + name + "'");
}

int child_branch_left(int branch) { return 2 * branch - 1; }

int child_branch_right(int branch) { return 2 * branch; }

int parent_branch(int branch) { return (branch + 1) / 2; }

std::string subsystem_name(const SubsystemId& id) {
    switch (id.kind) {
        case SubsystemKind::Address: return "A" + std::to_string(id.index);
        case SubsystemKind::AddressBackup: return "tA" + std::to_string(id.index);
        case SubsystemKind::Data: return "D" + std::to_string(id.index);
        case SubsystemKind::DataBackup: return "tD" + std::to_string(id.index);
    }
    throw InternalError("subsystem_name: unknown kind");
}

SubsystemId parse_subsystem_name(const std::string& name) {
    std::string rest = name;
    bool backup = false;
    if (!rest.empty() && rest.front() == 't') {
        backup = true;
        rest.erase(rest.begin());
    }
    if (rest.size() < 2 || (rest.front() != 'A' && rest.front() != 'D')) {
        throw ValidationError("unknown subsystem name '" + name + "'");
    }
    const SubsystemKind kind =
        rest.front() == 'A'
            ? (backup ? SubsystemKind::AddressBackup : SubsystemKind::Address)
            : (backup ? SubsystemKind::DataBackup : SubsystemKind::Data);
    int index = 0;
    for (std::size_t k = 1; k < rest.size(); ++k) {
        if (rest[k] < '0' || rest[k] > '9') {
            throw ValidationError("unknown subsystem name '" + name + "'");
        }
        index = 10 * index + (rest[k] - '0');
    }
    return SubsystemId{kind, index};
}

}  // namespace qwram
