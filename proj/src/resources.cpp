#include "qwram/resources.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qwram/errors.hpp"

namespace qwram {

namespace {

LevelCost& row_for(std::vector<LevelCost>& rows, const std::string& stage, int level) {
    for (LevelCost& row : rows) {
        if (row.stage == stage && row.level == level) return row;
    }
    rows.push_back(LevelCost{stage, level, 0, 0, 0});
    return rows.back();
}

}  // namespace

ResourceLedger measure(const Trace& trace) {
    const ProtocolConfig& config = trace.config;
    const RegisterLayout layout(config);
    ResourceLedger ledger;
    ledger.walker_count = static_cast<int>(layout.size());
    for (const TraceStep& step : trace.steps) {
        long long two_body = 0;
        long long node_ops = 0;
        long long depth = 0;
        using Kind = GateDescriptor::Kind;
        switch (step.gate.kind) {
            case Kind::ULevel:
                two_body = config.n + config.m - step.gate.level;
                depth = two_body;
                break;
            case Kind::UIn:
            case Kind::UBlock:
            case Kind::SwitchToggle:
                two_body = 1;
                depth = 1;
                break;
            case Kind::Scatter:
            case Kind::ScatterInverse:
                node_ops = step.node_carriers;
                depth = 1;
                break;
            case Kind::CopyGlobal:
            case Kind::CopySwitch:
            case Kind::CopyBackup:
                // m parallel local copies, one unit of depth.
                two_body = config.m;
                depth = 1;
                break;
        }
        ledger.two_body_ops += two_body;
        ledger.node_ops += node_ops;
        ledger.depth += depth;
        LevelCost& row = row_for(ledger.per_level, step.stage, step.level);
        row.two_body += two_body;
        row.node_ops += node_ops;
        row.depth += depth;
    }
    return ledger;
}

long long hardware_footprint(int n, int m, Variant variant) {
    if (n < 1 || n > 40 || m < 1) {
        throw ValidationError("hardware_footprint: n or m out of range");
    }
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        const long long nodes = 1LL << (d - 1);
        long long per_node = n + m - d;
        if (variant == Variant::Backup) per_node += 1;
        total += nodes * per_node;
    }
    return total;
}

ScalingVerdicts scaling_fit(const std::vector<ScalingSample>& series) {
    if (series.size() < 4) {
        throw ValidationError("scaling_fit: at least four points are required");
    }
    const auto count = static_cast<Eigen::Index>(series.size());
    Eigen::MatrixXd design(count, 3);
    Eigen::VectorXd depths(count);
    for (Eigen::Index k = 0; k < count; ++k) {
        const double n = static_cast<double>(series[static_cast<std::size_t>(k)].n);
        design(k, 0) = n * n;
        design(k, 1) = n;
        design(k, 2) = 1.0;
        depths(k) = static_cast<double>(series[static_cast<std::size_t>(k)].ledger.depth);
    }
    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(depths);
    const Eigen::VectorXd errors = design * coeffs - depths;

    ScalingVerdicts verdicts;
    const double largest = depths.cwiseAbs().maxCoeff();
    verdicts.depth_residual_fraction =
        largest == 0.0 ? 0.0 : errors.cwiseAbs().maxCoeff() / largest;
    verdicts.depth_quadratic = verdicts.depth_residual_fraction < 0.01;
    verdicts.depth_zero_growth = depths.maxCoeff() == depths.minCoeff();

    verdicts.footprint_doubles = true;
    for (std::size_t k = 1; k < series.size(); ++k) {
        const double ratio = static_cast<double>(series[k].footprint) /
                             static_cast<double>(series[k - 1].footprint);
        const double log2_ratio = std::log2(ratio);
        verdicts.footprint_log2_ratios.push_back(log2_ratio);
        if (std::abs(log2_ratio - 1.0) > 0.1) verdicts.footprint_doubles = false;
    }
    return verdicts;
}

const std::vector<ReferenceScalingRow>& reference_scalings() {
    static const std::vector<ReferenceScalingRow> rows = {
        {"BB", "classical", "2^n - 1 qutrits, n + m qubits", "O(n^2 + nm)", "1",
         "O(n^2 + nm)", "-"},
        {"BB", "superposition", "2^n - 1 qutrits, n + m qubits", "O(n^2 + nm)", "1",
         "O((n + m) 2^n)", "-"},
        {"ASY", "classical", "n + m qubits", "O(n^2 + nm)", "2(n + m)", "O(n^2 + nm)",
         "O(n^2 + nm)"},
        {"ASY", "superposition", "n + m qubits", "O(n^2 + nm)", "2(n + m)",
         "O((n + m) 2^n)", "O((n + m) 2^n)"},
        {"this model", "classical", "O(n + m) qubits", "O(n^2 + nm)", "1", "O(n^2 + nm)",
         "O(n^2 + nm)"},
        {"this model", "superposition", "O(n + m) qubits", "O(n^2 + nm)", "1",
         "O((n + m) 2^n)", "O((n + m) 2^n)"},
    };
    return rows;
}

}  // namespace qwram
