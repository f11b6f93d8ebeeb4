#pragma once
// Walker colors, tree positions, and register subsystem identities.

#include <compare>
#include <cstdint>
#include <string>

namespace qwram {

// Internal state of one register subsystem. Empty means the subsystem holds
// no walker. HollowRed and HollowBlue are the rail-0 colors that appear only
// under the qudit and dual-rail encodings; base-encoding configurations never
// contain them.
enum class WalkerState : std::uint8_t { Empty, Red, Blue, HollowRed, HollowBlue };

// Red <-> Blue and HollowRed <-> HollowBlue; Empty is fixed.
WalkerState negate_color(WalkerState s);

// True for any state that is not Empty. Under the qudit encodings the hollow
// states still describe a physical carrier, so they count as present.
bool is_present(WalkerState s);

bool is_hollow(WalkerState s);

// Single-character tag used in kets and serialized documents:
// R, B, - (Empty), r (HollowRed), b (HollowBlue).
char state_char(WalkerState s);
WalkerState state_from_char(char c);

enum class Phase : std::uint8_t { Forward, AtCell, Backward };

std::string phase_name(Phase p);
Phase parse_phase(const std::string& name);

// Direction tag for level gates: the same unitary applied on the way into
// the tree or on the way out.
enum class Direction : std::uint8_t { Forward, Backward };

// Location on the binary routing tree. Depth runs 1..n+1; the memory cells
// sit at depth n+1. branch indexes the node within its level, 1..2^(depth-1).
// Subsystems without a branch (Empty walkers and rail-0 qudit states) store
// branch = 0.
struct Position {
    int depth = 1;
    int branch = 0;
    Phase phase = Phase::Forward;

    bool has_branch() const { return branch != 0; }
    auto operator<=>(const Position&) const = default;
};

// Children of node (d, l) are (d+1, 2l-1) and (d+1, 2l); the parent of
// (d, l) is (d-1, ceil(l/2)).
int child_branch_left(int branch);
int child_branch_right(int branch);
int parent_branch(int branch);

enum class SubsystemKind : std::uint8_t { Address, AddressBackup, Data, DataBackup };

// Identity of one slot in the register train. Address indices run 1..n.
// Data indices run 0..m+1: Data(0) is the flag walker and Data(m+1) the
// switch-mode terminator; both exist only in the standard variant.
struct SubsystemId {
    SubsystemKind kind = SubsystemKind::Address;
    int index = 1;

    auto operator<=>(const SubsystemId&) const = default;
};

// Short printable name: "A1", "D0", and "tA1" / "tD2" for backups, where the
// leading t marks the tilde companion.
std::string subsystem_name(const SubsystemId& id);
SubsystemId parse_subsystem_name(const std::string& name);

}  // namespace qwram
