#pragma once
// Basis configurations of the register train and the sparse state-vector
// algebra over them. States are kept as ordered maps from configuration to
// complex amplitude so that iteration order, and with it every serialized
// artifact, is deterministic.

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "qwram/layout.hpp"

namespace qwram {

using Amplitude = std::complex<double>;

// Terms with |amplitude| below this are dropped when a state is constructed.
// Gate applications never rescale amplitudes, so no dropping happens there.
inline constexpr double kDropTolerance = 1e-15;

// A state's squared norm must stay within this distance of 1.
inline constexpr double kNormTolerance = 1e-12;

struct ConfigEntry {
    WalkerState state = WalkerState::Empty;
    Position position;

    auto operator<=>(const ConfigEntry&) const = default;
};

// One classical configuration of the whole register train. Entries follow
// the injection order of the governing RegisterLayout, which owns the
// subsystem identities; configs store only per-slot contents so comparisons
// stay cheap. switches_on lists the armed cell branches (ascending) and is
// used only when the switch copy mode is active: a controlled toggle
// entangles cell switches with walkers, so the switch record is part of the
// basis label.
struct BasisConfig {
    std::vector<ConfigEntry> entries;
    std::vector<int> switches_on;

    auto operator<=>(const BasisConfig&) const = default;
};

// Sparse unit vector over basis configurations.
class QState {
public:
    QState() = default;

    // Validates normalization within kNormTolerance and drops terms with
    // |amplitude| < kDropTolerance. Throws ValidationError on a bad norm.
    static QState from_terms(std::map<BasisConfig, Amplitude> terms);

    const std::map<BasisConfig, Amplitude>& terms() const { return terms_; }
    std::size_t component_count() const { return terms_.size(); }
    bool operator==(const QState& other) const { return terms_ == other.terms_; }

    // Applies a basis permutation component by component. Throws
    // InternalError if two components collide, which would mean the map is
    // not injective and the gate not unitary.
    QState mapped(const std::function<BasisConfig(const BasisConfig&)>& f) const;

private:
    explicit QState(std::map<BasisConfig, Amplitude> terms) : terms_(std::move(terms)) {}
    std::map<BasisConfig, Amplitude> terms_;
};

double norm(const QState& state);

// Conjugates the first argument.
Amplitude inner_product(const QState& a, const QState& b);

// Amplitude of one configuration, zero if absent.
Amplitude config_lookup(const QState& state, const BasisConfig& config);

// Entry accessors tying a config to its layout.
const ConfigEntry& entry_of(const BasisConfig& config, const RegisterLayout& layout,
                            const SubsystemId& id);
ConfigEntry& entry_of(BasisConfig& config, const RegisterLayout& layout, const SubsystemId& id);

}  // namespace qwram
