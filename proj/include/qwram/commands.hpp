#pragma once
// The command layer behind the CLI. Each command is a plain function taking
// a request struct and the output streams, so tests can drive it exactly the
// way the binary does. Exit codes: 0 success, 1 validation error, 2 failed
// protocol or verification property, 3 internal fault.

#include <iosfwd>
#include <string>
#include <vector>

#include "qwram/resources.hpp"

namespace qwram {

struct RunRequest {
    ProtocolConfig config;  // n and m are taken from the bank document
    std::string bank_path;
    std::string address;      // classical query; exclusive with query_path
    std::string query_path;   // superposition document
    std::string out_path;     // result document; empty prints to out
    std::string trace_path;   // optional trace document
    std::string ledger_path;  // optional resource ledger document
    std::string snapshots = "per-gate";  // per-gate | per-level | none
};

int cmd_run(const RunRequest& request, std::ostream& out, std::ostream& err);

struct VerifyRequest {
    std::string scope;  // golden | unitarity | equivalence | recollection
    ProtocolConfig config;
    int trials = 100;
    unsigned seed = 7;
};

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

struct ResourcesRequest {
    ProtocolConfig config;     // n is ignored in favor of ns
    std::vector<int> ns;       // tree depths to measure
    bool csv = false;
    bool fit = false;          // append scaling verdicts
    bool asymptotics = false;  // append the reference scaling table
    std::string out_path;      // empty prints to out
};

int cmd_resources(const ResourcesRequest& request, std::ostream& out, std::ostream& err);

struct ReplayRequest {
    std::string trace_path;
};

int cmd_replay(const ReplayRequest& request, std::ostream& out, std::ostream& err);

// Parses "2..8" or "2,3,5" or "4" into an ascending list.
std::vector<int> parse_n_range(const std::string& text);

}  // namespace qwram
