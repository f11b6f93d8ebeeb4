#pragma once
// JSON document formats for banks, queries, results, traces, and resource
// ledgers, plus the ket renderer used in traces. All serialization is
// deterministic: object keys are sorted, amplitudes print with full
// round-trip precision, and no document carries a timestamp, so identical
// inputs yield byte-identical documents.

#include <string>
#include <vector>

#include "qwram/resources.hpp"

namespace qwram {

// Pretty form of one component, subsystems in injection order, for example
// "R@(2,1)·A1 ⊗ ∅@2·A2 ⊗ R@(2,2)·D0 ⊗ R@(2,2)·D1". Outbound positions carry
// a prime on the depth. The qudit and dual-rail encodings use their own
// state labels, (1,R)@(2,2)·D1 and R@lower(2,2)·D1 respectively.
std::string render_ket(const BasisConfig& config, const RegisterLayout& layout);

// Query documents: {"terms": [[address, re, im], ...]}.
std::vector<QueryTerm> load_query(const std::string& text);
std::string store_query(const std::vector<QueryTerm>& terms);

// Result documents: config echo plus the decoded terms.
std::string result_document(const ProtocolConfig& config,
                            const std::vector<DecodedTerm>& output);

// Trace documents embed the config, the bank, the encoded input, and every
// step with its gate, stage, and snapshot (when recorded). trace_from_document
// is strict and rejects malformed or inconsistent documents.
std::string trace_document(const Trace& trace);
Trace trace_from_document(const std::string& text);

// Ledger documents: config echo plus the measured totals and breakdown.
std::string ledger_document(const ProtocolConfig& config, const ResourceLedger& ledger);

// Writes through a temporary file and renames, so readers never observe a
// partial document.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace qwram
