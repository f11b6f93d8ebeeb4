#pragma once
// The protocol gate set: level routing gates, scattering steps, the three
// copy mechanisms, and the backup chain gates. Every gate is a basis
// permutation; amplitudes are never rescaled.
//
// Gates are identity-keyed: a control acts through its internal state alone,
// never through its position. A debug cross-check still verifies that every
// walker a control flips shares the control's tree node, which is exactly
// the recollection property the routing protocol maintains.

#include <utility>

#include "qwram/config_state.hpp"
#include "qwram/memory_bank.hpp"

namespace qwram {

struct GateDescriptor {
    enum class Kind {
        ULevel,        // level-d routing gate, control Address(d)
        Scatter,       // one synchronous inbound scattering step
        ScatterInverse,  // one synchronous outbound scattering step
        CopyGlobal,    // flag-controlled cell copy
        SwitchToggle,  // trigger-controlled cell switch flip
        CopySwitch,    // switch-armed cell writer
        UIn,           // backup seeding gate at level d
        UBlock,        // one backup chain block
        CopyBackup     // backup-controlled cell copy
    };

    Kind kind = Kind::Scatter;
    int level = 0;                              // ULevel, UIn
    Direction direction = Direction::Forward;   // ULevel
    SubsystemId trigger{};                      // SwitchToggle
    SubsystemId control{};                      // UBlock

    auto operator<=>(const GateDescriptor&) const = default;
};

std::string gate_name(const GateDescriptor& gate);

// Level-d routing gate. When Address(d) holds a Red walker, the colors of
// every subsystem strictly after it in injection order are negated; an
// Empty or Blue control leaves the component unchanged. Under the qudit
// encodings a HollowRed control flips the hollow colors of the downstream
// subsystems instead, on the forward pass only. Involution.
QState apply_U_level(const QState& state, const RegisterLayout& layout, int d,
                     Direction direction);

// One inbound scattering step: Red walkers take the left child, Blue walkers
// take the right child and turn Red, absent walkers deepen. Walkers reaching
// depth n+1 switch phase to AtCell.
QState apply_S(const QState& state, const RegisterLayout& layout);

// One outbound scattering step: a Red walker on an odd branch returns Red to
// its parent, on an even branch it returns Blue. AtCell walkers are
// converted to Backward. A Blue walker entering this gate is a
// protocol-order error.
QState apply_S_dagger(const QState& state, const RegisterLayout& layout);

// Flag-controlled copy: when D0 holds a Red walker at cell a, every data
// walker D_j undergoes the local copy against cell a's stored bits (bit 1:
// identity; bit 0: Red and absent swap). Involution.
QState apply_copy_global(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank);

// Trigger-controlled switch flip: when the trigger subsystem holds a Red
// walker at a cell, that cell's switch annotation toggles. The bank itself
// is classical state shared by all components and is returned unchanged;
// the per-cell switch records live in the basis labels.
std::pair<QState, MemoryBank> apply_switch_toggle(const QState& state,
                                                  const RegisterLayout& layout,
                                                  const MemoryBank& bank,
                                                  const SubsystemId& trigger);

// Cell writer: every armed cell applies the local copies to the data
// walkers located at it. Involution.
QState apply_copy_switch(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank);

// Backup seeding gate: when Address(d) holds a Red walker, the color of its
// backup companion is negated. Involution.
QState apply_U_in(const QState& state, const RegisterLayout& layout, int d);

// One backup chain block. The control must be a backup subsystem; when it
// holds a Blue walker, the next subsystem in injection order and, if that
// subsystem has a backup companion, the companion as well are color-negated.
// The final block of a chain degenerates to the single target D_m.
// Involution.
QState apply_U_block(const QState& state, const RegisterLayout& layout,
                     const SubsystemId& control);

// The full level-d gate of the backup variant: the seeding gate followed by
// the chain blocks on the forward pass, the reversed blocks followed by the
// seeding gate on the backward pass.
QState apply_level_backup(const QState& state, const RegisterLayout& layout, int d,
                          Direction direction);

// Backup-controlled copy: data walker D_j copies against the cell where its
// controlling backup (the companion of A_n for j = 1, of D_{j-1} otherwise)
// holds a Red walker. Involution.
QState apply_copy_backup(const QState& state, const RegisterLayout& layout,
                         const MemoryBank& bank);

// Uniform dispatch used by the protocol engine, the replay tool, and the
// dense oracle. bank may be null for gates that do not consult it.
QState apply_gate(const QState& state, const RegisterLayout& layout,
                  const GateDescriptor& gate, const MemoryBank* bank);

// Single-component forms of the above, used by the dense oracle.
BasisConfig apply_gate_config(const BasisConfig& config, const RegisterLayout& layout,
                              const GateDescriptor& gate, const MemoryBank* bank);

}  // namespace qwram
