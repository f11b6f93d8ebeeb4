#include "qwram/reference_traces.hpp"

#include <cmath>

namespace qwram {

namespace {

constexpr WalkerState R = WalkerState::Red;
constexpr WalkerState B = WalkerState::Blue;
constexpr WalkerState E = WalkerState::Empty;
constexpr Phase F = Phase::Forward;
constexpr Phase C = Phase::AtCell;
constexpr Phase W = Phase::Backward;

ConfigEntry e(WalkerState s, int depth, int branch, Phase phase) {
    return ConfigEntry{s, Position{depth, branch, phase}};
}

// Register order for n = 2, m = 1 standard: A1, A2, D0, D1.
BasisConfig cfg(ConfigEntry a1, ConfigEntry a2, ConfigEntry d0, ConfigEntry d1) {
    BasisConfig out;
    out.entries = {a1, a2, d0, d1};
    return out;
}

QState pure(const BasisConfig& config) {
    return QState::from_terms({{config, Amplitude{1.0, 0.0}}});
}

QState pair(const BasisConfig& first, const BasisConfig& second) {
    const double amp = 1.0 / std::sqrt(2.0);
    return QState::from_terms({{first, Amplitude{amp, 0.0}}, {second, Amplitude{amp, 0.0}}});
}

std::vector<GateDescriptor> gate_order() {
    const auto ulevel = [](int d, Direction dir) {
        GateDescriptor g;
        g.kind = GateDescriptor::Kind::ULevel;
        g.level = d;
        g.direction = dir;
        return g;
    };
    GateDescriptor scatter;
    scatter.kind = GateDescriptor::Kind::Scatter;
    GateDescriptor scatter_inv;
    scatter_inv.kind = GateDescriptor::Kind::ScatterInverse;
    GateDescriptor copy;
    copy.kind = GateDescriptor::Kind::CopyGlobal;
    return {ulevel(1, Direction::Forward), scatter,     ulevel(2, Direction::Forward),
            scatter,                       copy,        scatter_inv,
            ulevel(2, Direction::Backward), scatter_inv, ulevel(1, Direction::Backward)};
}

}  // namespace

ReferenceTrace reference_trace_classical() {
    ReferenceTrace ref{
        ProtocolConfig{2, 1, Variant::Standard, CopyMode::Global, Encoding::Base},
        MemoryBank(2, 1, {{"00", "0"}, {"01", "0"}, {"10", "1"}, {"11", "0"}}),
        {QueryTerm{"10", {1.0, 0.0}}},
        gate_order(),
        {},
        {DecodedTerm{"10", "1", {1.0, 0.0}}}};

    // After U[1]: A1 stays Red and recolors everything behind it Blue.
    ref.snapshots.push_back(
        pure(cfg(e(R, 1, 1, F), e(E, 1, 0, F), e(B, 1, 1, F), e(B, 1, 1, F))));
    // After S: A1 disperses left, the Blue train turns right and resets Red.
    ref.snapshots.push_back(
        pure(cfg(e(R, 2, 1, F), e(E, 2, 0, F), e(R, 2, 2, F), e(R, 2, 2, F))));
    // After U[2]: the level-2 control is absent, nothing changes.
    ref.snapshots.push_back(
        pure(cfg(e(R, 2, 1, F), e(E, 2, 0, F), e(R, 2, 2, F), e(R, 2, 2, F))));
    // After S: everything Red routes left; the train reaches cell 3.
    ref.snapshots.push_back(
        pure(cfg(e(R, 3, 1, C), e(E, 3, 0, C), e(R, 3, 3, C), e(R, 3, 3, C))));
    // After the copy: the stored bit is 1, an identity on the data walker.
    ref.snapshots.push_back(
        pure(cfg(e(R, 3, 1, C), e(E, 3, 0, C), e(R, 3, 3, C), e(R, 3, 3, C))));
    // After S-dagger: odd branches return Red to their parents.
    ref.snapshots.push_back(
        pure(cfg(e(R, 2, 1, W), e(E, 2, 0, W), e(R, 2, 2, W), e(R, 2, 2, W))));
    // After U[2]: still no level-2 control.
    ref.snapshots.push_back(
        pure(cfg(e(R, 2, 1, W), e(E, 2, 0, W), e(R, 2, 2, W), e(R, 2, 2, W))));
    // After S-dagger: the train returns from an even branch and turns Blue;
    // A1 rejoins it Red at the root.
    ref.snapshots.push_back(
        pure(cfg(e(R, 1, 1, W), e(E, 1, 0, W), e(B, 1, 1, W), e(B, 1, 1, W))));
    // After U[1]: A1 recolors the train Red, undoing its first action.
    ref.snapshots.push_back(
        pure(cfg(e(R, 1, 1, W), e(E, 1, 0, W), e(R, 1, 1, W), e(R, 1, 1, W))));
    return ref;
}

ReferenceTrace reference_trace_superposed() {
    const double amp = 1.0 / std::sqrt(2.0);
    ReferenceTrace ref{
        ProtocolConfig{2, 1, Variant::Standard, CopyMode::Global, Encoding::Base},
        MemoryBank(2, 1, {{"00", "1"}, {"01", "0"}, {"10", "0"}, {"11", "0"}}),
        {QueryTerm{"00", {amp, 0.0}}, QueryTerm{"11", {amp, 0.0}}},
        gate_order(),
        {},
        {}};
    ref.expected_output = {DecodedTerm{"00", "1", {amp, 0.0}},
                           DecodedTerm{"11", "0", {amp, 0.0}}};

    // The 00 component has no address walkers: every gate but the
    // scatterings is an identity and the train rides the leftmost branches.
    // The 11 component routes to cell 4 and loses its data walker there.
    ref.snapshots.push_back(
        pair(cfg(e(E, 1, 0, F), e(E, 1, 0, F), e(R, 1, 1, F), e(R, 1, 1, F)),
             cfg(e(R, 1, 1, F), e(B, 1, 1, F), e(B, 1, 1, F), e(B, 1, 1, F))));
    ref.snapshots.push_back(
        pair(cfg(e(E, 2, 0, F), e(E, 2, 0, F), e(R, 2, 1, F), e(R, 2, 1, F)),
             cfg(e(R, 2, 1, F), e(R, 2, 2, F), e(R, 2, 2, F), e(R, 2, 2, F))));
    ref.snapshots.push_back(
        pair(cfg(e(E, 2, 0, F), e(E, 2, 0, F), e(R, 2, 1, F), e(R, 2, 1, F)),
             cfg(e(R, 2, 1, F), e(R, 2, 2, F), e(B, 2, 2, F), e(B, 2, 2, F))));
    ref.snapshots.push_back(
        pair(cfg(e(E, 3, 0, C), e(E, 3, 0, C), e(R, 3, 1, C), e(R, 3, 1, C)),
             cfg(e(R, 3, 1, C), e(R, 3, 3, C), e(R, 3, 4, C), e(R, 3, 4, C))));
    // Copy: cell 1 stores 1 (identity), cell 4 stores 0 (data walker out).
    ref.snapshots.push_back(
        pair(cfg(e(E, 3, 0, C), e(E, 3, 0, C), e(R, 3, 1, C), e(R, 3, 1, C)),
             cfg(e(R, 3, 1, C), e(R, 3, 3, C), e(R, 3, 4, C), e(E, 3, 0, C))));
    // S-dagger: the 11 flag returns from even branch 4 and turns Blue.
    ref.snapshots.push_back(
        pair(cfg(e(E, 2, 0, W), e(E, 2, 0, W), e(R, 2, 1, W), e(R, 2, 1, W)),
             cfg(e(R, 2, 1, W), e(R, 2, 2, W), e(B, 2, 2, W), e(E, 2, 0, W))));
    // U[2]: the level-2 control of the 11 component re-reddens the flag.
    ref.snapshots.push_back(
        pair(cfg(e(E, 2, 0, W), e(E, 2, 0, W), e(R, 2, 1, W), e(R, 2, 1, W)),
             cfg(e(R, 2, 1, W), e(R, 2, 2, W), e(R, 2, 2, W), e(E, 2, 0, W))));
    ref.snapshots.push_back(
        pair(cfg(e(E, 1, 0, W), e(E, 1, 0, W), e(R, 1, 1, W), e(R, 1, 1, W)),
             cfg(e(R, 1, 1, W), e(B, 1, 1, W), e(B, 1, 1, W), e(E, 1, 0, W))));
    ref.snapshots.push_back(
        pair(cfg(e(E, 1, 0, W), e(E, 1, 0, W), e(R, 1, 1, W), e(R, 1, 1, W)),
             cfg(e(R, 1, 1, W), e(R, 1, 1, W), e(R, 1, 1, W), e(E, 1, 0, W))));
    return ref;
}

}  // namespace qwram
