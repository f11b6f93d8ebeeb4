#include "qwram/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qwram/errors.hpp"

namespace qwram {

namespace {

// The full single-carrier scattering action on the eight states a node
// couples: the three node-side states, the four colored child states, and
// the absent state on the child side. The protocol only ever drives the
// node-to-child terms (inbound) or child-to-node terms (outbound); the
// remaining sibling-branch terms complete the map to a permutation and are
// exercised by the dense oracle alone.
ConfigEntry full_scatter_entry(const ConfigEntry& in, int d, int n, bool inverse) {
    const auto phase_for = [&](int depth) {
        if (depth == n + 1) return Phase::AtCell;
        return inverse ? Phase::Backward : Phase::Forward;
    };
    const int depth = in.position.depth;
    if (depth != d && depth != d + 1) {
        throw InternalError("full scatter: walker outside the node's levels");
    }
    if (is_hollow(in.state)) {
        throw InternalError("full scatter: the dense oracle covers the base encoding");
    }
    ConfigEntry out = in;
    if (in.state == WalkerState::Empty) {
        out.position = Position{depth == d ? d + 1 : d, 0, Phase::Forward};
        out.position.phase = phase_for(out.position.depth);
        return out;
    }
    const int l = in.position.branch;
    int new_depth = 0;
    int new_branch = 0;
    WalkerState new_state = in.state;
    if (!inverse) {
        if (depth == d) {
            new_depth = d + 1;
            new_branch = in.state == WalkerState::Red ? child_branch_left(l)
                                                      : child_branch_right(l);
            new_state = WalkerState::Red;
        } else if (in.state == WalkerState::Red) {
            new_depth = d + 1;
            new_branch = l % 2 == 1 ? l + 1 : l - 1;
            new_state = WalkerState::Blue;
        } else {
            new_depth = d;
            new_branch = parent_branch(l);
            new_state = l % 2 == 1 ? WalkerState::Blue : WalkerState::Red;
        }
    } else {
        if (depth == d + 1) {
            if (in.state == WalkerState::Red) {
                new_depth = d;
                new_branch = parent_branch(l);
                new_state = l % 2 == 1 ? WalkerState::Red : WalkerState::Blue;
            } else {
                new_depth = d + 1;
                new_branch = l % 2 == 1 ? l + 1 : l - 1;
                new_state = WalkerState::Red;
            }
        } else {
            new_depth = d + 1;
            new_branch = in.state == WalkerState::Red ? child_branch_right(l)
                                                      : child_branch_left(l);
            new_state = WalkerState::Blue;
        }
    }
    out.state = new_state;
    out.position = Position{new_depth, new_branch, phase_for(new_depth)};
    return out;
}

BasisConfig full_scatter_config(const BasisConfig& config, int d, int n, bool inverse) {
    BasisConfig out = config;
    for (ConfigEntry& entry : out.entries) {
        entry = full_scatter_entry(entry, d, n, inverse);
    }
    return out;
}

bool is_scatter(const GateDescriptor& gate) {
    return gate.kind == GateDescriptor::Kind::Scatter ||
           gate.kind == GateDescriptor::Kind::ScatterInverse;
}

// One application of the step's gate in its full-domain form.
BasisConfig step_image(const ReachableSpace& space, const RegisterLayout& layout,
                       std::size_t step_index, const MemoryBank& bank,
                       const BasisConfig& config) {
    const ProtocolStep& step = space.steps[step_index];
    if (is_scatter(step.gate)) {
        return full_scatter_config(config, step.level, space.config.n,
                                   step.gate.kind == GateDescriptor::Kind::ScatterInverse);
    }
    return apply_gate_config(config, layout, step.gate, &bank);
}

// Orbit closure of the step's input set: the union of the full gate's
// cycles through every input configuration. Involutions contribute pairs,
// the scattering steps cycles of length at most six.
std::set<BasisConfig> step_domain(const ReachableSpace& space, const RegisterLayout& layout,
                                  std::size_t step_index, const MemoryBank& bank) {
    std::set<BasisConfig> domain;
    for (const BasisConfig& start : space.stage_inputs[step_index]) {
        if (domain.count(start) != 0) continue;
        BasisConfig current = start;
        for (int guard = 0;; ++guard) {
            if (guard > 16) throw InternalError("step domain: gate cycle did not close");
            domain.insert(current);
            current = step_image(space, layout, step_index, bank, current);
            if (current == start) break;
        }
    }
    return domain;
}

std::vector<BasisConfig> merged_basis(const std::vector<BasisConfig>& space_configs,
                                      const std::set<BasisConfig>& extras) {
    std::vector<BasisConfig> basis = space_configs;
    for (const BasisConfig& c : extras) {
        if (!std::binary_search(space_configs.begin(), space_configs.end(), c)) {
            basis.push_back(c);
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

Eigen::MatrixXcd step_matrix(const ReachableSpace& space, const RegisterLayout& layout,
                             std::size_t step_index, const MemoryBank& bank,
                             const std::vector<BasisConfig>& basis,
                             const std::map<BasisConfig, int>& index) {
    const std::set<BasisConfig> domain = step_domain(space, layout, step_index, bank);
    Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis.size()),
                                                     static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const BasisConfig& config = basis[j];
        const BasisConfig image = domain.count(config) != 0
                                      ? step_image(space, layout, step_index, bank, config)
                                      : config;
        auto it = index.find(image);
        if (it == index.end()) {
            throw InternalError("dense build: image configuration left the basis");
        }
        matrix(it->second, static_cast<Eigen::Index>(j)) = 1.0;
    }
    return matrix;
}

std::map<BasisConfig, int> index_basis(const std::vector<BasisConfig>& basis) {
    std::map<BasisConfig, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], static_cast<int>(k));
    }
    return index;
}

std::set<BasisConfig> all_step_domains(const ReachableSpace& space,
                                       const RegisterLayout& layout, const MemoryBank& bank) {
    std::set<BasisConfig> extras;
    for (std::size_t k = 0; k < space.steps.size(); ++k) {
        const std::set<BasisConfig> domain = step_domain(space, layout, k, bank);
        extras.insert(domain.begin(), domain.end());
    }
    return extras;
}

}  // namespace

ReachableSpace enumerate_reachable(const ProtocolConfig& config) {
    validate(config);
    if (config.n > 3 || config.m > 2) {
        throw ValidationError("reachable enumeration is capped at n <= 3, m <= 2");
    }
    if (config.encoding != Encoding::Base) {
        throw ValidationError("reachable enumeration covers the base encoding");
    }
    const RegisterLayout layout(config);

    // Uniform banks: one bank per possible stored message, every cell alike,
    // so the copy stages branch over all messages a cell could hold.
    std::vector<MemoryBank> uniform_banks;
    for (int w = 0; w < (1 << config.m); ++w) {
        std::string bits(static_cast<std::size_t>(config.m), '0');
        for (int j = 0; j < config.m; ++j) {
            if ((w >> (config.m - 1 - j)) & 1) bits[static_cast<std::size_t>(j)] = '1';
        }
        std::map<std::string, std::string> cells;
        for (int a = 0; a < (1 << config.n); ++a) {
            cells[address_for_branch(a + 1, config.n)] = bits;
        }
        uniform_banks.emplace_back(config.n, config.m, std::move(cells));
    }

    ReachableSpace space;
    space.config = config;
    space.steps = protocol_steps(config);

    std::set<BasisConfig> all;
    std::set<BasisConfig> current;
    for (int a = 0; a < (1 << config.n); ++a) {
        current.insert(encode_address(address_for_branch(a + 1, config.n), layout));
    }
    all.insert(current.begin(), current.end());

    for (const ProtocolStep& step : space.steps) {
        space.stage_inputs.emplace_back(current.begin(), current.end());
        std::set<BasisConfig> next;
        const bool bank_dependent = step.gate.kind == GateDescriptor::Kind::CopyGlobal ||
                                    step.gate.kind == GateDescriptor::Kind::CopySwitch ||
                                    step.gate.kind == GateDescriptor::Kind::CopyBackup;
        for (const BasisConfig& c : current) {
            if (bank_dependent) {
                for (const MemoryBank& bank : uniform_banks) {
                    next.insert(apply_gate_config(c, layout, step.gate, &bank));
                }
            } else {
                next.insert(apply_gate_config(c, layout, step.gate, &uniform_banks.front()));
            }
        }
        all.insert(next.begin(), next.end());
        if (all.size() > (1u << 20)) {
            throw InternalError("reachable enumeration exceeded the size guard");
        }
        current = std::move(next);
    }
    space.configs.assign(all.begin(), all.end());
    return space;
}

DenseGate dense_build(const ReachableSpace& space, std::size_t step_index,
                      const MemoryBank& bank) {
    if (step_index >= space.steps.size()) {
        throw ValidationError("dense_build: step index out of range");
    }
    const RegisterLayout layout(space.config);
    const std::set<BasisConfig> domain = step_domain(space, layout, step_index, bank);
    DenseGate gate;
    gate.basis = merged_basis(space.configs, domain);
    const std::map<BasisConfig, int> index = index_basis(gate.basis);
    gate.matrix = step_matrix(space, layout, step_index, bank, gate.basis, index);
    return gate;
}

DenseGate composed_query(const ReachableSpace& space, const MemoryBank& bank) {
    const RegisterLayout layout(space.config);
    DenseGate composed;
    composed.basis = merged_basis(space.configs, all_step_domains(space, layout, bank));
    const std::map<BasisConfig, int> index = index_basis(composed.basis);
    const auto dim = static_cast<Eigen::Index>(composed.basis.size());
    composed.matrix = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t k = 0; k < space.steps.size(); ++k) {
        composed.matrix =
            step_matrix(space, layout, k, bank, composed.basis, index) * composed.matrix;
    }
    return composed;
}

bool is_permutation(const DenseGate& gate) {
    const Eigen::Index dim = gate.matrix.rows();
    if (gate.matrix.cols() != dim) return false;
    for (Eigen::Index j = 0; j < dim; ++j) {
        int column_ones = 0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Amplitude v = gate.matrix(i, j);
            if (v == Amplitude{0.0, 0.0}) continue;
            if (v != Amplitude{1.0, 0.0}) return false;
            ++column_ones;
        }
        if (column_ones != 1) return false;
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        int row_ones = 0;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (gate.matrix(i, j) != Amplitude{0.0, 0.0}) ++row_ones;
        }
        if (row_ones != 1) return false;
    }
    return true;
}

UnitaryCheck check_unitary(const DenseGate& gate) {
    const Eigen::MatrixXcd product = gate.matrix.adjoint() * gate.matrix;
    const Eigen::Index dim = product.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Amplitude expected = i == j ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (product(i, j) != expected) {
                UnitaryCheck failure;
                failure.ok = false;
                failure.detail = "columns " + std::to_string(i) + " and " + std::to_string(j) +
                                 " have inner product " + std::to_string(product(i, j).real()) +
                                 (product(i, j).imag() == 0.0
                                      ? ""
                                      : " + " + std::to_string(product(i, j).imag()) + "i");
                return failure;
            }
        }
    }
    return UnitaryCheck{};
}

CrossCheck cross_check(const ReachableSpace& space, const MemoryBank& bank,
                       const std::vector<QState>& inputs) {
    const RegisterLayout layout(space.config);
    const std::vector<BasisConfig> basis =
        merged_basis(space.configs, all_step_domains(space, layout, bank));
    const std::map<BasisConfig, int> index = index_basis(basis);
    std::vector<Eigen::MatrixXcd> matrices;
    matrices.reserve(space.steps.size());
    for (std::size_t k = 0; k < space.steps.size(); ++k) {
        matrices.push_back(step_matrix(space, layout, k, bank, basis, index));
    }

    CrossCheck report;
    for (const QState& input : inputs) {
        Eigen::VectorXcd dense = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
        for (const auto& [config, amp] : input.terms()) {
            auto it = index.find(config);
            if (it == index.end()) {
                throw ValidationError("cross_check: input leaves the reachable space");
            }
            dense(it->second) = amp;
        }
        QState sparse = input;
        for (std::size_t k = 0; k < space.steps.size(); ++k) {
            sparse = apply_gate(sparse, layout, space.steps[k].gate, &bank);
            dense = matrices[k] * dense;
            double step_dev = 0.0;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const Amplitude diff =
                    dense(static_cast<Eigen::Index>(i)) - config_lookup(sparse, basis[i]);
                step_dev = std::max(step_dev, std::abs(diff));
            }
            report.max_deviation = std::max(report.max_deviation, step_dev);
            if (step_dev > 1e-12 && report.first_divergent_step < 0) {
                report.first_divergent_step = static_cast<int>(k) + 1;
            }
        }
    }
    report.ok = report.first_divergent_step < 0;
    return report;
}

DenseGate single_carrier_scatter(int n, int node_level, int node_branch, bool inverse) {
    if (node_level < 1 || node_level > n || node_branch < 1 ||
        node_branch > (1 << (node_level - 1))) {
        throw ValidationError("single_carrier_scatter: node outside the tree");
    }
    const auto phase_for = [&](int depth) {
        if (depth == n + 1) return Phase::AtCell;
        return inverse ? Phase::Backward : Phase::Forward;
    };
    const int d = node_level;
    const int left = child_branch_left(node_branch);
    const int right = child_branch_right(node_branch);
    std::vector<ConfigEntry> states = {
        {WalkerState::Red, Position{d, node_branch, phase_for(d)}},
        {WalkerState::Blue, Position{d, node_branch, phase_for(d)}},
        {WalkerState::Empty, Position{d, 0, phase_for(d)}},
        {WalkerState::Red, Position{d + 1, left, phase_for(d + 1)}},
        {WalkerState::Red, Position{d + 1, right, phase_for(d + 1)}},
        {WalkerState::Blue, Position{d + 1, left, phase_for(d + 1)}},
        {WalkerState::Blue, Position{d + 1, right, phase_for(d + 1)}},
        {WalkerState::Empty, Position{d + 1, 0, phase_for(d + 1)}},
    };
    DenseGate gate;
    for (const ConfigEntry& s : states) {
        BasisConfig c;
        c.entries = {s};
        gate.basis.push_back(c);
    }
    std::sort(gate.basis.begin(), gate.basis.end());
    const std::map<BasisConfig, int> index = index_basis(gate.basis);
    gate.matrix = Eigen::MatrixXcd::Zero(8, 8);
    for (std::size_t j = 0; j < gate.basis.size(); ++j) {
        BasisConfig image = gate.basis[j];
        image.entries[0] = full_scatter_entry(image.entries[0], d, n, inverse);
        auto it = index.find(image);
        if (it == index.end()) {
            throw InternalError("single_carrier_scatter: image left the eight-state space");
        }
        gate.matrix(it->second, static_cast<Eigen::Index>(j)) = 1.0;
    }
    return gate;
}

}  // namespace qwram
