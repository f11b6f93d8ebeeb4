#pragma once
// Encoding of address bit strings and query superpositions into walker
// configurations, and decoding of finished protocol states back into
// classical (address, message, amplitude) terms.

#include <string>
#include <vector>

#include "qwram/config_state.hpp"

namespace qwram {

struct QueryTerm {
    std::string address;
    Amplitude amplitude{1.0, 0.0};

    bool operator==(const QueryTerm&) const = default;
};

struct DecodedTerm {
    std::string address;
    std::string message;
    Amplitude amplitude{0.0, 0.0};

    bool operator==(const DecodedTerm&) const = default;
};

// Classical input configuration for one address: address bit 1 holds a Red
// walker, bit 0 none; every data walker, backup, flag, and terminator starts
// Red. All walkers sit at the root (1,1) in Forward phase. Throws
// ValidationError on a malformed or wrong-width address.
BasisConfig encode_address(const std::string& bits, const RegisterLayout& layout);

// Superposition input. Throws ValidationError on duplicate addresses or if
// the squared amplitudes miss 1 by more than 1e-9. Already-normalized
// amplitudes are encoded bit-exactly; inputs between the two tolerances are
// rescaled to unit norm.
QState encode_query(const std::vector<QueryTerm>& terms, const RegisterLayout& layout);

// Reads a finished output state. Preconditions: every component has all
// walkers back at depth 1 in Backward phase, ancillaries restored (backups,
// flag, and terminator Red; switches off). Violations throw ProtocolError:
// a Blue walker is a coherence fault, a walker away from depth 1 an
// incomplete protocol, an unrestored ancillary a protocol fault. The result
// is sorted by address.
std::vector<DecodedTerm> decode_output(const QState& state, const RegisterLayout& layout);

// Tolerance for input query normalization before exact renormalization.
inline constexpr double kQueryNormTolerance = 1e-9;

}  // namespace qwram
