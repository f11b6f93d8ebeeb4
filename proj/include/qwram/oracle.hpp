#pragma once
// Independent dense-matrix oracle. The reachable configuration space is
// enumerated by breadth-first closure of all classical inputs under the
// staged gate sequence, branching over every possible stored message at the
// copy stages so the space covers every bank. Each protocol step is then
// realized as an explicit permutation matrix over that space; the scattering
// steps extend their domain with the sibling-branch completion states that
// close the single-node walker space, so unitarity is checked on the gate's
// full declared domain rather than only on protocol-typical inputs.

#include <Eigen/Dense>
#include <cstddef>

#include "qwram/protocol.hpp"

namespace qwram {

struct ReachableSpace {
    ProtocolConfig config;
    std::vector<ProtocolStep> steps;
    // Every configuration reached at any stage, sorted.
    std::vector<BasisConfig> configs;
    // The configurations feeding each step, aligned with steps.
    std::vector<std::vector<BasisConfig>> stage_inputs;
};

// Throws ValidationError beyond the enumeration cap n <= 3, m <= 2 or for a
// non-base encoding.
ReachableSpace enumerate_reachable(const ProtocolConfig& config);

struct DenseGate {
    std::vector<BasisConfig> basis;  // space configs plus completion states
    Eigen::MatrixXcd matrix;
};

// Dense matrix of one protocol step for one bank. The matrix acts as the
// gate on the orbit closure of the step's input set and as the identity on
// the rest of the space.
DenseGate dense_build(const ReachableSpace& space, std::size_t step_index,
                      const MemoryBank& bank);

// Product of all step matrices over a common basis: the full query unitary
// for one bank.
DenseGate composed_query(const ReachableSpace& space, const MemoryBank& bank);

struct UnitaryCheck {
    bool ok = true;
    std::string detail;  // falsifying column pair or entry on failure
};

// Exact checks: every entry 0 or 1 with exactly one 1 per row and column,
// and M-adjoint times M equal to the identity with no tolerance.
bool is_permutation(const DenseGate& gate);
UnitaryCheck check_unitary(const DenseGate& gate);

struct CrossCheck {
    bool ok = true;
    double max_deviation = 0.0;
    int first_divergent_step = -1;  // 1-based step index, -1 if none
};

// Runs the gate sequence both through the sparse engine and the dense
// matrices on the given input superpositions and compares amplitudes after
// every step at 1e-12.
CrossCheck cross_check(const ReachableSpace& space, const MemoryBank& bank,
                       const std::vector<QState>& inputs);

// The full single-carrier scattering matrix on the eight walker states a
// node couples: color states on the node, on both children, and the absent
// state on either side. Used to validate the completion terms on their whole
// domain; the permutation has two 3-cycles and one 2-cycle, hence order 6.
DenseGate single_carrier_scatter(int n, int node_level, int node_branch, bool inverse);

}  // namespace qwram
