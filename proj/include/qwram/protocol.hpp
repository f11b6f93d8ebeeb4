#pragma once
// The full query protocol: inbound routing, the copy stage, outbound
// routing, and the trace machinery that records every intermediate state.

#include <optional>
#include <string>
#include <vector>

#include "qwram/encode.hpp"
#include "qwram/gates.hpp"

namespace qwram {

// How many snapshots a trace carries. PerGate stores one after every gate
// (required by the replay tool and the recollection checker), PerLevel only
// after the last gate of each routing level and each copy-stage gate, None
// keeps just the gate list.
enum class TraceDetail : std::uint8_t { PerGate, PerLevel, None };

struct ProtocolStep {
    std::string stage;  // "forward", "copy", "backward"
    int level = 0;      // routing level, 0 for the copy stage
    GateDescriptor gate;
};

// The ordered gate list the configured protocol applies.
std::vector<ProtocolStep> protocol_steps(const ProtocolConfig& config);

struct TraceStep {
    std::string stage;
    int level = 0;
    GateDescriptor gate;
    std::optional<QState> state;  // snapshot after this gate
    // Total number of walker carriers scattered at this step (summed over
    // components), recorded for scattering steps so resource accounting
    // works at any snapshot granularity.
    long long node_carriers = 0;
};

struct Trace {
    ProtocolConfig config;
    MemoryBank bank;
    QState input;  // the encoded query, in the active encoding
    std::vector<TraceStep> steps;
};

struct QueryResult {
    std::vector<DecodedTerm> output;
    Trace trace;
};

// Runs one full query. The trace's first snapshot equals the encoded input
// and its last snapshot is the state handed to the decoder; consecutive
// snapshots differ by exactly one gate application.
QueryResult run_query(const ProtocolConfig& config, const MemoryBank& bank,
                      const std::vector<QueryTerm>& terms,
                      TraceDetail detail = TraceDetail::PerGate);

// Stage functions. Each expects walkers in the phase the previous stage
// leaves them in and throws ProtocolError otherwise.
QState forward_route(const QState& state, const RegisterLayout& layout);
QState copy_phase(const QState& state, const RegisterLayout& layout, const MemoryBank& bank);
QState backward_route(const QState& state, const RegisterLayout& layout);

struct RecollectionReport {
    bool clean = true;
    // One entry per broken node-coincidence: a component where some walker
    // downstream of an active control sat on a different node.
    std::vector<std::string> violations;
    // Human-readable dispersal intervals: for each component and each
    // present address walker, the step range during which it was parted
    // from the data train.
    std::vector<std::string> dispersals;
};

// Checks the trace for the node coincidences the routing argument promises:
// before every backward level-d gate, the level-d address walker shares its
// node with every walker it is about to act on. Requires a per-gate trace.
RecollectionReport verify_recollection(const Trace& trace);

}  // namespace qwram
