#include "qwram/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "qwram/encodings.hpp"
#include "qwram/errors.hpp"
#include "qwram/oracle.hpp"
#include "qwram/reference_traces.hpp"
#include "qwram/serialize.hpp"

namespace qwram {

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const ProtocolError& e) {
        err << "protocol error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

TraceDetail parse_detail(const std::string& name) {
    if (name == "per-gate") return TraceDetail::PerGate;
    if (name == "per-level") return TraceDetail::PerLevel;
    if (name == "none") return TraceDetail::None;
    throw ValidationError("unknown snapshot detail \"" + name +
                          "\" (expected per-gate, per-level, or none)");
}

std::string config_label(const ProtocolConfig& config) {
    std::string label = "n=" + std::to_string(config.n) + " m=" + std::to_string(config.m) +
                        " " + variant_name(config.variant) + "/" +
                        copy_mode_name(config.copy_mode);
    if (config.encoding != Encoding::Base) label += "/" + encoding_name(config.encoding);
    return label;
}

// Bank whose cell contents are the bits of `code`, cell-major then
// bit-major, used to enumerate every bank of a small instance.
MemoryBank bank_from_code(int n, int m, unsigned long long code) {
    std::map<std::string, std::string> cells;
    const int cell_count = 1 << n;
    for (int a = 0; a < cell_count; ++a) {
        std::string bits(static_cast<std::size_t>(m), '0');
        for (int j = 0; j < m; ++j) {
            if ((code >> (a * m + j)) & 1ULL) bits[static_cast<std::size_t>(j)] = '1';
        }
        cells.emplace(address_for_branch(a + 1, n), std::move(bits));
    }
    return MemoryBank(n, m, std::move(cells));
}

// Raw engine draws only: distribution classes vary between standard
// libraries, so sampling sticks to the generator's specified output.
MemoryBank random_bank(int n, int m, std::mt19937& gen) {
    std::map<std::string, std::string> cells;
    const int cell_count = 1 << n;
    for (int a = 0; a < cell_count; ++a) {
        std::string bits(static_cast<std::size_t>(m), '0');
        for (int j = 0; j < m; ++j) {
            if (gen() & 1u) bits[static_cast<std::size_t>(j)] = '1';
        }
        cells.emplace(address_for_branch(a + 1, n), std::move(bits));
    }
    return MemoryBank(n, m, std::move(cells));
}

std::vector<QueryTerm> random_query(int n, int max_terms, std::mt19937& gen) {
    const int cell_count = 1 << n;
    const int limit = std::min(max_terms, cell_count);
    const int k = 1 + static_cast<int>(gen() % static_cast<unsigned>(limit));
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < k) {
        picked.insert(static_cast<int>(gen() % static_cast<unsigned>(cell_count)));
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(k));
    std::vector<QueryTerm> terms;
    for (int a : picked) {
        terms.push_back(QueryTerm{address_for_branch(a + 1, n), Amplitude{amp, 0.0}});
    }
    return terms;
}

int verify_golden(std::ostream& out) {
    int failures = 0;
    const auto check = [&](const char* name, const ReferenceTrace& ref) {
        const QueryResult result = run_query(ref.config, ref.bank, ref.query,
                                             TraceDetail::PerGate);
        std::string detail;
        if (result.trace.steps.size() != ref.gates.size()) {
            detail = "gate count " + std::to_string(result.trace.steps.size()) +
                     " differs from " + std::to_string(ref.gates.size());
        }
        for (std::size_t i = 0; detail.empty() && i < ref.gates.size(); ++i) {
            const TraceStep& step = result.trace.steps[i];
            if (step.gate != ref.gates[i]) {
                detail = "gate " + std::to_string(i + 1) + " is " + gate_name(step.gate) +
                         ", expected " + gate_name(ref.gates[i]);
            } else if (!step.state.has_value() || *step.state != ref.snapshots[i]) {
                detail = "state after gate " + std::to_string(i + 1) + " (" +
                         gate_name(step.gate) + ") deviates";
            }
        }
        if (detail.empty() && result.output != ref.expected_output) {
            detail = "decoded output deviates";
        }
        if (detail.empty()) {
            out << "ok: golden " << name << ": " << ref.gates.size()
                << " gates and the decoded output match\n";
        } else {
            out << "FAIL: golden " << name << ": " << detail << '\n';
            ++failures;
        }
    };
    check("classical", reference_trace_classical());
    check("superposed", reference_trace_superposed());
    return failures == 0 ? 0 : 2;
}

std::vector<MemoryBank> verification_banks(const ProtocolConfig& config, int trials,
                                           unsigned seed) {
    const int bank_bits = (1 << config.n) * config.m;
    std::vector<MemoryBank> banks;
    if (bank_bits <= 4) {
        for (unsigned long long code = 0; code < (1ULL << bank_bits); ++code) {
            banks.push_back(bank_from_code(config.n, config.m, code));
        }
    } else {
        std::mt19937 gen(seed);
        for (int t = 0; t < trials; ++t) {
            banks.push_back(random_bank(config.n, config.m, gen));
        }
    }
    return banks;
}

int verify_unitarity(const VerifyRequest& request, std::ostream& out) {
    ProtocolConfig config = request.config;
    validate(config);
    const ReachableSpace space = enumerate_reachable(config);
    const std::vector<MemoryBank> banks = verification_banks(config, request.trials,
                                                             request.seed);
    int failures = 0;
    for (const MemoryBank& bank : banks) {
        for (std::size_t k = 0; k < space.steps.size(); ++k) {
            const DenseGate gate = dense_build(space, k, bank);
            if (!is_permutation(gate)) {
                out << "FAIL: step " << k + 1 << " (" << gate_name(space.steps[k].gate)
                    << ") is not a permutation on bank " << store_bank(bank);
                ++failures;
                continue;
            }
            const UnitaryCheck check = check_unitary(gate);
            if (!check.ok) {
                out << "FAIL: step " << k + 1 << " (" << gate_name(space.steps[k].gate)
                    << "): " << check.detail << '\n';
                ++failures;
            }
        }
        const DenseGate full = composed_query(space, bank);
        const UnitaryCheck check = check_unitary(full);
        if (!is_permutation(full) || !check.ok) {
            out << "FAIL: composed query unitary: "
                << (check.ok ? "not a permutation" : check.detail) << '\n';
            ++failures;
        }
    }
    if (failures == 0) {
        out << "ok: unitarity " << config_label(config) << ": " << banks.size()
            << " banks, " << space.steps.size()
            << " step matrices each plus the composed query, all exact permutation"
               " unitaries on " << space.configs.size() << " reachable configurations\n";
        return 0;
    }
    return 2;
}

int verify_equivalence(const VerifyRequest& request, std::ostream& out) {
    ProtocolConfig base = request.config;
    base.variant = Variant::Standard;
    base.copy_mode = CopyMode::Global;
    base.encoding = Encoding::Base;
    validate(base);
    ProtocolConfig with_switch = base;
    with_switch.copy_mode = CopyMode::Switch;
    ProtocolConfig backup = base;
    backup.variant = Variant::Backup;
    backup.copy_mode = CopyMode::BackupControlled;

    const std::vector<MemoryBank> banks = verification_banks(base, request.trials,
                                                             request.seed);
    std::mt19937 gen(request.seed + 1);
    int failures = 0;
    long long compared = 0;
    for (const MemoryBank& bank : banks) {
        std::vector<std::vector<QueryTerm>> queries;
        for (int a = 0; a < (1 << base.n); ++a) {
            queries.push_back({QueryTerm{address_for_branch(a + 1, base.n), {1.0, 0.0}}});
        }
        queries.push_back(random_query(base.n, 1 << base.n, gen));
        for (const std::vector<QueryTerm>& terms : queries) {
            const auto reference = run_query(base, bank, terms, TraceDetail::None).output;
            for (const ProtocolConfig& other : {with_switch, backup}) {
                const auto output = run_query(other, bank, terms, TraceDetail::None).output;
                ++compared;
                if (output != reference) {
                    out << "FAIL: " << config_label(other) << " deviates from "
                        << config_label(base) << " on bank " << store_bank(bank);
                    ++failures;
                }
            }
        }
    }
    if (failures == 0) {
        out << "ok: equivalence n=" << base.n << " m=" << base.m << ": " << banks.size()
            << " banks, " << compared
            << " query comparisons, switch and backup outputs match the global"
               " copy exactly\n";
        return 0;
    }
    return 2;
}

int verify_recollection(const VerifyRequest& request, std::ostream& out) {
    ProtocolConfig config = request.config;
    validate(config);
    std::mt19937 gen(request.seed);
    long long violations = 0;
    long long dispersals = 0;
    for (int t = 0; t < request.trials; ++t) {
        const MemoryBank bank = random_bank(config.n, config.m, gen);
        const std::vector<QueryTerm> terms = random_query(config.n, 3, gen);
        const QueryResult result = run_query(config, bank, terms, TraceDetail::PerGate);
        const RecollectionReport report = verify_recollection(result.trace);
        violations += static_cast<long long>(report.violations.size());
        dispersals += static_cast<long long>(report.dispersals.size());
        for (const std::string& violation : report.violations) {
            out << "FAIL: query " << t + 1 << ": " << violation << '\n';
        }
    }
    if (violations == 0) {
        out << "ok: recollection " << config_label(config) << ": " << request.trials
            << " random queries, every outbound control re-collected on its node, "
            << dispersals << " dispersal intervals observed\n";
        return 0;
    }
    return 2;
}

std::string resources_report(const ResourcesRequest& request,
                             const std::vector<ScalingSample>& samples) {
    std::ostringstream body;
    if (request.csv) {
        body << "n,walkers,two_body_ops,node_ops,depth,footprint\n";
        for (const ScalingSample& s : samples) {
            body << s.n << ',' << s.ledger.walker_count << ',' << s.ledger.two_body_ops
                 << ',' << s.ledger.node_ops << ',' << s.ledger.depth << ','
                 << s.footprint << '\n';
        }
    } else {
        body << std::setw(4) << "n" << std::setw(9) << "walkers" << std::setw(14)
             << "two_body_ops" << std::setw(10) << "node_ops" << std::setw(8) << "depth"
             << std::setw(11) << "footprint" << '\n';
        for (const ScalingSample& s : samples) {
            body << std::setw(4) << s.n << std::setw(9) << s.ledger.walker_count
                 << std::setw(14) << s.ledger.two_body_ops << std::setw(10)
                 << s.ledger.node_ops << std::setw(8) << s.ledger.depth << std::setw(11)
                 << s.footprint << '\n';
        }
    }
    if (request.fit) {
        const ScalingVerdicts verdicts = scaling_fit(samples);
        body << "depth fit: residual fraction " << verdicts.depth_residual_fraction
             << ", quadratic " << (verdicts.depth_quadratic ? "yes" : "no")
             << ", zero growth " << (verdicts.depth_zero_growth ? "yes" : "no") << '\n';
        body << "footprint log2 ratios:";
        for (double ratio : verdicts.footprint_log2_ratios) body << ' ' << ratio;
        body << "; doubling " << (verdicts.footprint_doubles ? "yes" : "no") << '\n';
    }
    if (request.asymptotics) {
        body << "model | call type | particles | circuit depth | binary trees |"
             << " two-qubit gates | node operations\n";
        for (const ReferenceScalingRow& row : reference_scalings()) {
            body << row.model << " | " << row.call_type << " | " << row.particles << " | "
                 << row.circuit_depth << " | " << row.binary_trees << " | "
                 << row.two_qubit_gates << " | " << row.node_operations << '\n';
        }
    }
    return body.str();
}

}  // namespace

int cmd_run(const RunRequest& request, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const TraceDetail detail = parse_detail(request.snapshots);
        if (request.bank_path.empty()) {
            throw ValidationError("run: a bank document is required");
        }
        const MemoryBank bank = load_bank(read_file(request.bank_path));
        // The tree depth and message width come from the bank document.
        ProtocolConfig config = request.config;
        config.n = bank.n();
        config.m = bank.m();
        validate(config);
        if (!request.address.empty() && !request.query_path.empty()) {
            throw ValidationError("run: give either an address or a query document, not both");
        }
        std::vector<QueryTerm> terms;
        if (!request.address.empty()) {
            terms.push_back(QueryTerm{request.address, {1.0, 0.0}});
        } else if (!request.query_path.empty()) {
            terms = load_query(read_file(request.query_path));
        } else {
            throw ValidationError("run: an address or a query document is required");
        }
        const QueryResult result = run_query(config, bank, terms, detail);
        const std::string document = result_document(config, result.output);
        if (request.out_path.empty()) {
            out << document;
        } else {
            atomic_write_file(request.out_path, document);
        }
        if (!request.trace_path.empty()) {
            atomic_write_file(request.trace_path, trace_document(result.trace));
        }
        if (!request.ledger_path.empty()) {
            atomic_write_file(request.ledger_path,
                              ledger_document(config, measure(result.trace)));
        }
        return 0;
    });
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (request.trials < 1) throw ValidationError("verify: trials must be positive");
        if (request.scope == "golden") return verify_golden(out);
        if (request.scope == "unitarity") return verify_unitarity(request, out);
        if (request.scope == "equivalence") return verify_equivalence(request, out);
        if (request.scope == "recollection") return verify_recollection(request, out);
        throw ValidationError("verify: unknown scope \"" + request.scope +
                              "\" (expected golden, unitarity, equivalence, or recollection)");
    });
}

int cmd_resources(const ResourcesRequest& request, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (request.ns.empty()) throw ValidationError("resources: no tree depths given");
        std::vector<ScalingSample> samples;
        for (int n : request.ns) {
            ProtocolConfig config = request.config;
            config.n = n;
            validate(config);
            std::map<std::string, std::string> cells;
            for (int a = 0; a < (1 << n); ++a) {
                cells.emplace(address_for_branch(a + 1, n),
                              std::string(static_cast<std::size_t>(config.m), '1'));
            }
            const MemoryBank bank(n, config.m, std::move(cells));
            const std::vector<QueryTerm> probe{{std::string(static_cast<std::size_t>(n), '1'),
                                                Amplitude{1.0, 0.0}}};
            const QueryResult result = run_query(config, bank, probe, TraceDetail::None);
            samples.push_back(ScalingSample{n, measure(result.trace),
                                            hardware_footprint(n, config.m, config.variant)});
        }
        const std::string report = resources_report(request, samples);
        if (request.out_path.empty()) {
            out << report;
        } else {
            atomic_write_file(request.out_path, report);
        }
        return 0;
    });
}

int cmd_replay(const ReplayRequest& request, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (request.trace_path.empty()) {
            throw ValidationError("replay: a trace document is required");
        }
        const Trace trace = trace_from_document(read_file(request.trace_path));
        const RegisterLayout layout(trace.config);
        QState state = trace.input;
        std::size_t verified = 0;
        for (std::size_t k = 0; k < trace.steps.size(); ++k) {
            const TraceStep& step = trace.steps[k];
            state = apply_gate(state, layout, step.gate, &trace.bank);
            if (!step.state.has_value()) continue;
            if (*step.state != state) {
                out << "FAIL: replay diverges after gate " << k + 1 << " ("
                    << gate_name(step.gate) << ")\n";
                return 2;
            }
            ++verified;
        }
        QState final_state = state;
        if (trace.config.encoding != Encoding::Base) {
            final_state = from_qudit(final_state, layout);
        }
        const std::vector<DecodedTerm> output = decode_output(final_state, layout);
        out << "ok: replay " << config_label(trace.config) << ": " << trace.steps.size()
            << " gates reapplied, " << verified << " snapshots match\n";
        out << result_document(trace.config, output);
        return 0;
    });
}

std::vector<int> parse_n_range(const std::string& text) {
    if (text.empty()) throw ValidationError("empty tree-depth list");
    std::vector<int> out;
    const auto parse_int = [](const std::string& token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ValidationError("malformed tree depth \"" + token + "\"");
        }
        if (used != token.size()) {
            throw ValidationError("malformed tree depth \"" + token + "\"");
        }
        return value;
    };
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        if (const std::size_t dots = piece.find(".."); dots != std::string::npos) {
            const int first = parse_int(piece.substr(0, dots));
            const int last = parse_int(piece.substr(dots + 2));
            if (last < first) {
                throw ValidationError("descending tree-depth range \"" + piece + "\"");
            }
            for (int n = first; n <= last; ++n) out.push_back(n);
        } else {
            out.push_back(parse_int(piece));
        }
    }
    if (out.empty()) throw ValidationError("empty tree-depth list");
    return out;
}

}  // namespace qwram
