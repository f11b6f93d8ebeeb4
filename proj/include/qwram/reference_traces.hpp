#pragma once
// Hand-derived end-to-end expectations for two canonical walkthroughs of the
// n = 2, m = 1 instance: a classical query of address 10 and a two-term
// superposed query of 00 and 11. Every snapshot is written out literally so
// the engine can be checked step by step against an independent derivation.

#include <string>
#include <vector>

#include "qwram/memory_bank.hpp"
#include "qwram/protocol.hpp"

namespace qwram {

struct ReferenceTrace {
    ProtocolConfig config;
    MemoryBank bank;
    std::vector<QueryTerm> query;
    std::vector<GateDescriptor> gates;   // expected gate order
    std::vector<QState> snapshots;       // expected state after each gate
    std::vector<DecodedTerm> expected_output;
};

// Classical query: address 10, stored bit 1. The address walker A1 disperses
// left at level 1, the train routes right to cell 3, the copy is an
// identity, and the return pass restores every walker Red at the root.
ReferenceTrace reference_trace_classical();

// Superposed query: (|00> + |11>)/sqrt(2) against stored bits 1 at cell 00
// and 0 at cell 11. The 00 component routes trivially to cell 1; the 11
// component routes to cell 4, loses its data walker to the 0 bit, and
// returns with the flag re-reddened by the level-2 gate.
ReferenceTrace reference_trace_superposed();

}  // namespace qwram
