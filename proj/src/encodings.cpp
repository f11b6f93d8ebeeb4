#include "qwram/encodings.hpp"

#include "qwram/errors.hpp"
#include "qwram/gates.hpp"

namespace qwram {

BasisConfig to_qudit(const BasisConfig& config, const RegisterLayout& layout) {
    if (config.entries.size() != layout.size()) {
        throw ValidationError("to_qudit: component does not match the register layout");
    }
    BasisConfig out = config;
    for (ConfigEntry& entry : out.entries) {
        if (entry.state == WalkerState::Empty) {
            entry.state = WalkerState::HollowRed;
            entry.position.branch = 0;
        }
    }
    return out;
}

BasisConfig from_qudit(const BasisConfig& config, const RegisterLayout& layout) {
    if (config.entries.size() != layout.size()) {
        throw ValidationError("from_qudit: component does not match the register layout");
    }
    BasisConfig out = config;
    for (std::size_t k = 0; k < out.entries.size(); ++k) {
        ConfigEntry& entry = out.entries[k];
        if (entry.state == WalkerState::HollowBlue) {
            throw ProtocolError("from_qudit: " + subsystem_name(layout.at(k)) +
                                " carries the transient hollow Blue state");
        }
        if (entry.state == WalkerState::HollowRed) {
            entry.state = WalkerState::Empty;
            entry.position.branch = 0;
        }
    }
    return out;
}

QState to_qudit(const QState& state, const RegisterLayout& layout) {
    return state.mapped([&](const BasisConfig& c) { return to_qudit(c, layout); });
}

QState from_qudit(const QState& state, const RegisterLayout& layout) {
    return state.mapped([&](const BasisConfig& c) { return from_qudit(c, layout); });
}

BasisConfig to_dualrail(const BasisConfig& config, const RegisterLayout& layout) {
    return to_qudit(config, layout);
}

BasisConfig from_dualrail(const BasisConfig& config, const RegisterLayout& layout) {
    return from_qudit(config, layout);
}

QState apply_U_qudit(const QState& state, const RegisterLayout& layout, int d,
                     Direction direction) {
    return apply_U_level(state, layout, d, direction);
}

QState apply_S_qudit(const QState& state, const RegisterLayout& layout) {
    return apply_S(state, layout);
}

QState apply_S_dagger_qudit(const QState& state, const RegisterLayout& layout) {
    return apply_S_dagger(state, layout);
}

}  // namespace qwram
