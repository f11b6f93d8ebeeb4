#pragma once
// Alternative walker encodings. The qudit encoding gives every subsystem a
// physical carrier with four internal states, (rail, color): an absent
// base walker becomes the hollow Red state (0,R), a present one keeps its
// color on rail 1. The hollow Blue state (0,B) appears only transiently
// between a level gate and the next scattering step. The dual-rail encoding
// reads the rail bit as a physical rail index and is a pure relabeling of
// the qudit data.

#include "qwram/config_state.hpp"
#include "qwram/memory_bank.hpp"

namespace qwram {

// Base <-> qudit translation. to_qudit replaces Empty with HollowRed (the
// position keeps its depth and phase, branchless). from_qudit inverts it and
// throws ProtocolError on a hollow Blue walker, which no finished state may
// contain.
BasisConfig to_qudit(const BasisConfig& config, const RegisterLayout& layout);
BasisConfig from_qudit(const BasisConfig& config, const RegisterLayout& layout);
QState to_qudit(const QState& state, const RegisterLayout& layout);
QState from_qudit(const QState& state, const RegisterLayout& layout);

// Dual-rail translation: identical carrier data, read as rail occupancy.
BasisConfig to_dualrail(const BasisConfig& config, const RegisterLayout& layout);
BasisConfig from_dualrail(const BasisConfig& config, const RegisterLayout& layout);

// The qudit forms of the protocol gates. A filled Red control flips the
// filled colors of the downstream subsystems; a hollow Red control flips
// their hollow colors on the inbound pass. The scattering step routes filled
// walkers exactly as the base gate does and resets hollow walkers to hollow
// Red one level deeper. These are thin named forms of the encoding-aware
// gate set, kept so call sites can say which encoding they mean.
QState apply_U_qudit(const QState& state, const RegisterLayout& layout, int d,
                     Direction direction);
QState apply_S_qudit(const QState& state, const RegisterLayout& layout);
QState apply_S_dagger_qudit(const QState& state, const RegisterLayout& layout);

}  // namespace qwram
