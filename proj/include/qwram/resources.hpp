#pragma once
// Resource accounting: a ledger of gate and node operations measured from a
// trace, closed-form hardware footprints, asymptotic fits over measured
// series, and the static reference scaling table for the three qRAM
// architectures.

#include <string>
#include <vector>

#include "qwram/protocol.hpp"

namespace qwram {

struct LevelCost {
    std::string stage;
    int level = 0;
    long long two_body = 0;
    long long node_ops = 0;
    long long depth = 0;

    bool operator==(const LevelCost&) const = default;
};

struct ResourceLedger {
    int walker_count = 0;
    long long two_body_ops = 0;
    long long node_ops = 0;
    long long depth = 0;
    std::vector<LevelCost> per_level;

    bool operator==(const ResourceLedger&) const = default;
};

// Counts the conventions the protocol's circuit decomposition fixes: a
// standard level-d gate costs n+m-d sequential two-body operations, backup
// seeding gates and chain blocks cost one each, a scattering step costs one
// node operation per walker carrier and one unit of depth, and each copy
// stage gate costs one unit of depth (m two-body copies run in parallel,
// switch toggles are single two-body gates). Deterministic in the trace.
ResourceLedger measure(const Trace& trace);

// Closed-form count of two-body couplers a hardware realization pins down:
// one per sequential operation of each level gate, summed over the nodes of
// each level. The backup variant adds its seeding gate at every node.
long long hardware_footprint(int n, int m, Variant variant);

struct ScalingSample {
    int n = 0;
    ResourceLedger ledger;
    long long footprint = 0;
};

struct ScalingVerdicts {
    double depth_residual_fraction = 0.0;  // max |fit error| / max depth
    bool depth_quadratic = false;          // residual fraction below 1%
    bool depth_zero_growth = false;        // all depths equal
    std::vector<double> footprint_log2_ratios;
    bool footprint_doubles = false;  // every ratio within 1.0 +/- 0.1
};

// Least-squares quadratic fit of measured depth against n plus doubling
// analysis of the footprint series. Throws ValidationError on fewer than
// four points.
ScalingVerdicts scaling_fit(const std::vector<ScalingSample>& series);

// Reference asymptotics for the bucket-brigade (BB) and fanout (ASY)
// architectures and for this protocol, split by call type. Carried verbatim
// as metadata, never computed.
struct ReferenceScalingRow {
    std::string model;
    std::string call_type;
    std::string particles;
    std::string circuit_depth;
    std::string binary_trees;
    std::string two_qubit_gates;
    std::string node_operations;
};

const std::vector<ReferenceScalingRow>& reference_scalings();

}  // namespace qwram
