#include "qwram/config_state.hpp"

#include <cmath>
#include <utility>

#include "qwram/errors.hpp"

namespace qwram {

QState QState::from_terms(std::map<BasisConfig, Amplitude> terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) < kDropTolerance) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    QState state(std::move(terms));
    const double n = norm(state);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw ValidationError("state construction: squared norm deviates from 1 by more than " +
                              std::to_string(kNormTolerance));
    }
    return state;
}

QState QState::mapped(const std::function<BasisConfig(const BasisConfig&)>& f) const {
    std::map<BasisConfig, Amplitude> out;
    for (const auto& [config, amp] : terms_) {
        auto [it, inserted] = out.emplace(f(config), amp);
        if (!inserted) {
            throw InternalError("gate application collided two basis configurations");
        }
    }
    return QState(std::move(out));
}

double norm(const QState& state) {
    double total = 0.0;
    for (const auto& [config, amp] : state.terms()) total += std::norm(amp);
    return total;
}

Amplitude inner_product(const QState& a, const QState& b) {
    // Walk the smaller map for the usual case of few components.
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = a.terms().size() <= b.terms().size() ? b : a;
    Amplitude total = 0.0;
    for (const auto& [config, amp] : small.terms()) {
        auto it = large.terms().find(config);
        if (it == large.terms().end()) continue;
        const Amplitude& amp_a = (&small == &a) ? amp : it->second;
        const Amplitude& amp_b = (&small == &a) ? it->second : amp;
        total += std::conj(amp_a) * amp_b;
    }
    return total;
}

Amplitude config_lookup(const QState& state, const BasisConfig& config) {
    auto it = state.terms().find(config);
    return it == state.terms().end() ? Amplitude{0.0, 0.0} : it->second;
}

const ConfigEntry& entry_of(const BasisConfig& config, const RegisterLayout& layout,
                            const SubsystemId& id) {
    return config.entries.at(layout.index_of(id));
}

ConfigEntry& entry_of(BasisConfig& config, const RegisterLayout& layout, const SubsystemId& id) {
    return config.entries.at(layout.index_of(id));
}

}  // namespace qwram
