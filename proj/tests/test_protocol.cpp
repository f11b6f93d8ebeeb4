// Unit tests for the full protocol: gate schedules, the two hand-derived
// walkthroughs, the end-to-end contract, reversibility, and the
// dispersion-and-recollection checker.

#include <random>

#include "doctest.h"
#include "qwram/errors.hpp"
#include "qwram/reference_traces.hpp"
#include "test_helpers.hpp"

using namespace qwram;

TEST_CASE("the standard schedule runs level gates down, copy, and back up") {
    const auto steps = protocol_steps(qwram_test::standard_global(2, 1));
    REQUIRE(steps.size() == 9);
    CHECK(gate_name(steps[0].gate) == "U[1]");
    CHECK(gate_name(steps[1].gate) == "S");
    CHECK(gate_name(steps[2].gate) == "U[2]");
    CHECK(gate_name(steps[3].gate) == "S");
    CHECK(gate_name(steps[4].gate) == "copy");
    CHECK(gate_name(steps[5].gate) == "S-dagger");
    CHECK(gate_name(steps[6].gate) == "U[2]");
    CHECK(gate_name(steps[7].gate) == "S-dagger");
    CHECK(gate_name(steps[8].gate) == "U[1]");
    CHECK(steps[0].stage == "forward");
    CHECK(steps[4].stage == "copy");
    CHECK(steps[5].stage == "backward");
    CHECK(steps[5].level == 2);
    CHECK(steps[8].level == 1);
}

TEST_CASE("the switch schedule arms, writes, and disarms") {
    const auto steps = protocol_steps(qwram_test::standard_switch(2, 1));
    REQUIRE(steps.size() == 11);
    CHECK(gate_name(steps[4].gate) == "switch[D0]");
    CHECK(gate_name(steps[5].gate) == "write");
    CHECK(gate_name(steps[6].gate) == "switch[D2]");
}

TEST_CASE("the backup schedule decomposes each level into seed and chain blocks") {
    const auto steps = protocol_steps(qwram_test::backup_config(2, 1));
    // Level d: U-in + (n+m-d) blocks + S, both directions, plus one copy.
    // n=2, m=1: (1+2+1) + (1+1+1) = 7 forward gates, 1 copy, 7 backward.
    REQUIRE(steps.size() == 15);
    CHECK(gate_name(steps[0].gate) == "U-in[1]");
    CHECK(gate_name(steps[1].gate) == "U-block[tA1]");
    CHECK(gate_name(steps[2].gate) == "U-block[tA2]");
    CHECK(gate_name(steps[3].gate) == "S");
    CHECK(gate_name(steps[4].gate) == "U-in[2]");
    CHECK(gate_name(steps[5].gate) == "U-block[tA2]");
    CHECK(gate_name(steps[6].gate) == "S");
    CHECK(gate_name(steps[7].gate) == "copy-backup");
    // The backward chain reverses the block order and seeds last.
    CHECK(gate_name(steps[8].gate) == "S-dagger");
    CHECK(gate_name(steps[9].gate) == "U-block[tA2]");
    CHECK(gate_name(steps[10].gate) == "U-in[2]");
    CHECK(gate_name(steps[11].gate) == "S-dagger");
    CHECK(gate_name(steps[12].gate) == "U-block[tA2]");
    CHECK(gate_name(steps[13].gate) == "U-block[tA1]");
    CHECK(gate_name(steps[14].gate) == "U-in[1]");
}

namespace {

void check_against_reference(const ReferenceTrace& ref) {
    const QueryResult result = run_query(ref.config, ref.bank, ref.query, TraceDetail::PerGate);
    REQUIRE(result.trace.steps.size() == ref.gates.size());
    for (std::size_t i = 0; i < ref.gates.size(); ++i) {
        CAPTURE(i);
        CHECK(result.trace.steps[i].gate == ref.gates[i]);
        REQUIRE(result.trace.steps[i].state.has_value());
        CHECK(*result.trace.steps[i].state == ref.snapshots[i]);
    }
    CHECK(result.output == ref.expected_output);
}

}  // namespace

TEST_CASE("the classical walkthrough reproduces every derived snapshot") {
    check_against_reference(reference_trace_classical());
}

TEST_CASE("the superposed walkthrough reproduces every derived snapshot") {
    check_against_reference(reference_trace_superposed());
}

TEST_CASE("queries decode to the address-tagged stored messages") {
    std::mt19937 gen(11);
    for (const ProtocolConfig& config :
         {qwram_test::standard_global(2, 2), qwram_test::standard_switch(2, 2),
          qwram_test::backup_config(2, 2), qwram_test::standard_global(3, 1)}) {
        for (int t = 0; t < 10; ++t) {
            const MemoryBank bank = qwram_test::random_bank(config.n, config.m, gen);
            const auto terms = qwram_test::random_query(config.n, 1 << config.n, gen);
            const auto result = run_query(config, bank, terms, TraceDetail::None);
            CHECK(qwram_test::output_deviation(
                      result.output, qwram_test::expected_output(bank, terms)) == 0.0);
        }
    }
}

TEST_CASE("trace detail controls how many snapshots are kept") {
    const ProtocolConfig config = qwram_test::standard_global(2, 1);
    const MemoryBank bank = qwram_test::bank_from_code(2, 1, 5);
    const std::vector<QueryTerm> terms{{"10", Amplitude{1.0, 0.0}}};

    const auto per_gate = run_query(config, bank, terms, TraceDetail::PerGate);
    std::size_t with_state = 0;
    for (const TraceStep& s : per_gate.trace.steps) with_state += s.state.has_value();
    CHECK(with_state == 9);

    const auto per_level = run_query(config, bank, terms, TraceDetail::PerLevel);
    with_state = 0;
    for (const TraceStep& s : per_level.trace.steps) with_state += s.state.has_value();
    CHECK(with_state == 5);

    const auto none = run_query(config, bank, terms, TraceDetail::None);
    with_state = 0;
    for (const TraceStep& s : none.trace.steps) with_state += s.state.has_value();
    CHECK(with_state == 0);
    // Node carrier counts are recorded regardless of snapshot detail.
    CHECK(none.trace.steps[1].node_carriers > 0);
}

namespace {

QState retagged_backward(const QState& state) {
    return state.mapped([](const BasisConfig& config) {
        BasisConfig out = config;
        for (ConfigEntry& entry : out.entries) entry.position.phase = Phase::Backward;
        return out;
    });
}

}  // namespace

TEST_CASE("skipping the copy makes the walk its own inverse") {
    std::mt19937 gen(23);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(gen() % 4);
        const int m = 1 + static_cast<int>(gen() % 3);
        const ProtocolConfig config =
            (gen() & 1u) ? qwram_test::standard_global(n, m) : qwram_test::backup_config(n, m);
        const RegisterLayout layout(config);
        const QState input =
            encode_query(qwram_test::random_query(n, 1 << n, gen), layout);
        const QState routed = forward_route(input, layout);
        const QState returned = backward_route(routed, layout);
        CHECK(returned == retagged_backward(input));
    }
}

TEST_CASE("recollection holds on the walkthrough traces") {
    const ReferenceTrace ref = reference_trace_classical();
    const QueryResult result = run_query(ref.config, ref.bank, ref.query, TraceDetail::PerGate);
    const RecollectionReport report = verify_recollection(result.trace);
    CHECK(report.clean);
    CHECK(report.violations.empty());
    // Address walker A1 disperses at level 1 and rejoins two levels later.
    CHECK_FALSE(report.dispersals.empty());
}

TEST_CASE("the recollection checker demands a per-gate trace") {
    const ReferenceTrace ref = reference_trace_classical();
    const QueryResult result = run_query(ref.config, ref.bank, ref.query, TraceDetail::PerLevel);
    CHECK_THROWS_AS(verify_recollection(result.trace), ValidationError);
}

TEST_CASE("address encoding validates its input") {
    const RegisterLayout layout(qwram_test::standard_global(2, 1));
    CHECK_THROWS_AS(encode_address("1", layout), ValidationError);
    CHECK_THROWS_AS(encode_address("102", layout), ValidationError);
    CHECK_THROWS_AS(encode_address("1x", layout), ValidationError);
    const BasisConfig config = encode_address("10", layout);
    CHECK(config.entries[0].state == WalkerState::Red);
    CHECK(config.entries[1].state == WalkerState::Empty);
    CHECK_FALSE(config.entries[1].position.has_branch());
    CHECK(config.entries[2].state == WalkerState::Red);
    CHECK(config.entries[3].state == WalkerState::Red);
}

TEST_CASE("query encoding validates amplitudes and addresses") {
    const RegisterLayout layout(qwram_test::standard_global(2, 1));
    CHECK_THROWS_AS(encode_query({}, layout), ValidationError);
    CHECK_THROWS_AS(encode_query({{"10", Amplitude{1.0, 0.0}}, {"10", Amplitude{0.0, 0.0}}},
                                 layout),
                    ValidationError);
    CHECK_THROWS_AS(encode_query({{"10", Amplitude{0.5, 0.0}}}, layout), ValidationError);
    // A normalized query passes through with its amplitudes untouched.
    const double amp = 1.0 / std::sqrt(2.0);
    const QState state = encode_query(
        {{"10", Amplitude{amp, 0.0}}, {"01", Amplitude{0.0, -amp}}}, layout);
    CHECK(config_lookup(state, encode_address("01", layout)) == Amplitude{0.0, -amp});
}

TEST_CASE("decoding rejects unfinished or corrupted states") {
    const RegisterLayout layout(qwram_test::standard_global(2, 1));
    const auto root = [](WalkerState s, Phase phase) {
        ConfigEntry entry;
        entry.state = s;
        entry.position.depth = 1;
        entry.position.branch = s == WalkerState::Empty ? 0 : 1;
        entry.position.phase = phase;
        return entry;
    };
    const auto pure = [](BasisConfig c) {
        return QState::from_terms({{std::move(c), Amplitude{1.0, 0.0}}});
    };

    BasisConfig done;
    done.entries = {root(WalkerState::Red, Phase::Backward),
                    root(WalkerState::Empty, Phase::Backward),
                    root(WalkerState::Red, Phase::Backward),
                    root(WalkerState::Red, Phase::Backward)};
    const auto decoded = decode_output(pure(done), layout);
    REQUIRE(decoded.size() == 1);
    CHECK(decoded[0].address == "10");
    CHECK(decoded[0].message == "1");

    // A Blue walker means a broken color restoration.
    BasisConfig blue = done;
    blue.entries[3].state = WalkerState::Blue;
    CHECK_THROWS_AS(decode_output(pure(blue), layout), ProtocolError);

    // A walker away from the root means the protocol did not finish.
    BasisConfig deep = done;
    for (ConfigEntry& entry : deep.entries) {
        entry.position.depth = 2;
        if (entry.position.has_branch()) entry.position.branch = 1;
    }
    CHECK_THROWS_AS(decode_output(pure(deep), layout), ProtocolError);

    // Forward phase at depth 1 is the input, not a finished output.
    BasisConfig unstarted = done;
    for (ConfigEntry& entry : unstarted.entries) entry.position.phase = Phase::Forward;
    CHECK_THROWS_AS(decode_output(pure(unstarted), layout), ProtocolError);

    // An unrestored flag is a protocol fault.
    BasisConfig flagless = done;
    flagless.entries[2] = root(WalkerState::Empty, Phase::Backward);
    CHECK_THROWS_AS(decode_output(pure(flagless), layout), ProtocolError);

    // A hollow walker means the state was never translated back from the
    // qudit encoding.
    BasisConfig hollow = done;
    hollow.entries[1].state = WalkerState::HollowRed;
    CHECK_THROWS_AS(decode_output(pure(hollow), layout), ProtocolError);

    // A live switch record is a protocol fault.
    BasisConfig armed = done;
    armed.switches_on = {2};
    CHECK_THROWS_AS(decode_output(pure(armed), layout), ProtocolError);
}

TEST_CASE("run rejects a bank that does not match the config") {
    const ProtocolConfig config = qwram_test::standard_global(2, 1);
    const MemoryBank bank = qwram_test::bank_from_code(3, 1, 0);
    CHECK_THROWS_AS(run_query(config, bank, {{"10", Amplitude{1.0, 0.0}}}, TraceDetail::None),
                    ValidationError);
}
