// Command line front end: run queries, verify protocol properties, measure
// resource scalings, and replay recorded traces.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qwram/commands.hpp"
#include "qwram/errors.hpp"

namespace {

struct ConfigFlags {
    int n = 2;
    int m = 1;
    std::string variant = "standard";
    std::string copy;  // empty picks the variant's natural mode
    std::string encoding = "base";
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags, bool with_dimensions) {
    if (with_dimensions) {
        cmd->add_option("--n", flags.n, "address bits (tree depth)")
            ->capture_default_str();
        cmd->add_option("--m", flags.m, "message bits per cell")->capture_default_str();
    }
    cmd->add_option("--variant", flags.variant, "protocol variant")
        ->check(CLI::IsMember({"standard", "backup"}))
        ->capture_default_str();
    cmd->add_option("--copy", flags.copy,
                    "copy mechanism (default: global, backup-controlled for the backup"
                    " variant)")
        ->check(CLI::IsMember({"global", "switch", "backup-controlled"}));
    cmd->add_option("--encoding", flags.encoding, "walker encoding")
        ->check(CLI::IsMember({"base", "qudit", "dual-rail"}))
        ->capture_default_str();
}

qwram::ProtocolConfig make_config(const ConfigFlags& flags) {
    std::string copy = flags.copy;
    if (copy.empty()) {
        copy = flags.variant == "backup" ? "backup-controlled" : "global";
    }
    qwram::ProtocolConfig config;
    config.n = flags.n;
    config.m = flags.m;
    config.variant = qwram::parse_variant(flags.variant);
    config.copy_mode = qwram::parse_copy_mode(copy);
    config.encoding = qwram::parse_encoding(flags.encoding);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic exact simulator of the quantum-walker qRAM protocol"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* run = app.add_subcommand("run", "run one query against a bank document");
    ConfigFlags run_flags;
    qwram::RunRequest run_request;
    run->add_option("--db", run_request.bank_path, "bank document (JSON)")->required();
    run->add_option("--address", run_request.address, "classical address bit string");
    run->add_option("--query", run_request.query_path, "query document (JSON superposition)");
    run->add_option("--out", run_request.out_path, "result document path (default: stdout)");
    run->add_option("--trace", run_request.trace_path, "write the full trace document here");
    run->add_option("--ledger", run_request.ledger_path,
                    "write the resource ledger document here");
    run->add_option("--snapshots", run_request.snapshots, "trace snapshot detail")
        ->check(CLI::IsMember({"per-gate", "per-level", "none"}))
        ->capture_default_str();
    add_config_flags(run, run_flags, false);
    run->callback([&] {
        run_request.config = make_config(run_flags);
        exit_code = qwram::cmd_run(run_request, std::cout, std::cerr);
    });

    auto* verify = app.add_subcommand("verify", "check a protocol property");
    ConfigFlags verify_flags;
    qwram::VerifyRequest verify_request;
    verify->add_option("scope", verify_request.scope, "property to check")
        ->required()
        ->check(CLI::IsMember({"golden", "unitarity", "equivalence", "recollection"}));
    verify->add_option("--trials", verify_request.trials, "random trials where sampling applies")
        ->capture_default_str();
    verify->add_option("--seed", verify_request.seed, "random seed")->capture_default_str();
    add_config_flags(verify, verify_flags, true);
    verify->callback([&] {
        verify_request.config = make_config(verify_flags);
        exit_code = qwram::cmd_verify(verify_request, std::cout, std::cerr);
    });

    auto* resources = app.add_subcommand(
        "resources", "measure gate, depth, and footprint counts over tree depths");
    ConfigFlags resources_flags;
    qwram::ResourcesRequest resources_request;
    std::string n_range = "2..8";
    resources->add_option("--n", n_range, "tree depths, e.g. 4, 2..8, or 2,3,5")
        ->capture_default_str();
    resources->add_option("--out", resources_request.out_path,
                          "report path (default: stdout)");
    resources->add_flag("--csv", resources_request.csv, "emit CSV instead of a table");
    resources->add_flag("--fit", resources_request.fit,
                        "append quadratic-depth and footprint-doubling verdicts");
    resources->add_flag("--asymptotics", resources_request.asymptotics,
                        "append the reference scaling table");
    resources->add_option("--m", resources_flags.m, "message bits per cell")
        ->capture_default_str();
    add_config_flags(resources, resources_flags, false);
    resources->callback([&] {
        resources_request.config = make_config(resources_flags);
        resources_request.ns = qwram::parse_n_range(n_range);
        exit_code = qwram::cmd_resources(resources_request, std::cout, std::cerr);
    });

    auto* replay = app.add_subcommand("replay", "reapply a recorded trace and diff snapshots");
    qwram::ReplayRequest replay_request;
    replay->add_option("trace", replay_request.trace_path, "trace document (JSON)")
        ->required();
    replay->callback([&] { exit_code = qwram::cmd_replay(replay_request, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const qwram::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
