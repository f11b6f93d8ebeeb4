// Unit tests for the qudit and dual-rail encodings: translation round-trips,
// the hollow-color gate action, and per-gate commutation with the base
// encoding across the reachable space.

#include "doctest.h"
#include "qwram/encodings.hpp"
#include "qwram/errors.hpp"
#include "qwram/oracle.hpp"
#include "test_helpers.hpp"

using namespace qwram;

namespace {

ConfigEntry e(WalkerState s, int depth, int branch, Phase phase) {
    ConfigEntry entry;
    entry.state = s;
    entry.position.depth = depth;
    entry.position.branch = branch;
    entry.position.phase = phase;
    return entry;
}

QState pure(BasisConfig config) {
    return QState::from_terms({{std::move(config), Amplitude{1.0, 0.0}}});
}

constexpr WalkerState R = WalkerState::Red;
constexpr WalkerState E = WalkerState::Empty;
constexpr WalkerState HR = WalkerState::HollowRed;
constexpr WalkerState HB = WalkerState::HollowBlue;
constexpr Phase F = Phase::Forward;

// Transient hollow colors are reset by the next scattering step; equality up
// to that reset is the per-gate commutation statement.
BasisConfig settle_hollows(const BasisConfig& config) {
    BasisConfig out = config;
    for (ConfigEntry& entry : out.entries) {
        if (entry.state == HB) entry.state = HR;
    }
    return out;
}

}  // namespace

TEST_CASE("qudit translation replaces absence by hollow Red and back") {
    const RegisterLayout layout(qwram_test::standard_global(2, 1));
    const BasisConfig base = encode_address("01", layout);
    const BasisConfig qudit = to_qudit(base, layout);
    CHECK(qudit.entries[0].state == HR);
    CHECK_FALSE(qudit.entries[0].position.has_branch());
    CHECK(qudit.entries[1].state == R);
    CHECK(from_qudit(qudit, layout) == base);

    BasisConfig transient = qudit;
    transient.entries[0].state = HB;
    CHECK_THROWS_AS(from_qudit(transient, layout), ProtocolError);
}

TEST_CASE("dual-rail translation carries the same data as the qudit one") {
    const RegisterLayout layout(qwram_test::standard_global(2, 1));
    const BasisConfig base = encode_address("10", layout);
    CHECK(to_dualrail(base, layout) == to_qudit(base, layout));
    CHECK(from_dualrail(to_dualrail(base, layout), layout) == base);
}

TEST_CASE("a hollow Red control flips hollow colors on the inbound pass only") {
    ProtocolConfig config = qwram_test::standard_global(2, 1);
    config.encoding = Encoding::Qudit;
    const RegisterLayout layout(config);
    // Address 00: both address carriers hollow.
    const BasisConfig hollow_ctrl{
        {e(HR, 1, 0, F), e(HR, 1, 0, F), e(R, 1, 1, F), e(R, 1, 1, F)}, {}};
    const QState out = apply_U_qudit(pure(hollow_ctrl), layout, 1, Direction::Forward);
    // A1 hollow Red: the hollow A2 flips to hollow Blue, filled walkers stay.
    const BasisConfig expected{
        {e(HR, 1, 0, F), e(HB, 1, 0, F), e(R, 1, 1, F), e(R, 1, 1, F)}, {}};
    CHECK(out == pure(expected));

    // The next scattering step resets the transient hollow Blue.
    const QState scattered = apply_S_qudit(out, layout);
    const BasisConfig settled{
        {e(HR, 2, 0, F), e(HR, 2, 0, F), e(R, 2, 1, F), e(R, 2, 1, F)}, {}};
    CHECK(scattered == pure(settled));
}

TEST_CASE("the outbound scattering rejects a transient hollow carrier") {
    ProtocolConfig config = qwram_test::standard_global(1, 1);
    config.encoding = Encoding::Qudit;
    const RegisterLayout layout(config);
    const BasisConfig bad{{e(HB, 2, 0, Phase::AtCell), e(R, 2, 1, Phase::AtCell),
                           e(R, 2, 1, Phase::AtCell)},
                          {}};
    CHECK_THROWS_AS(apply_S_dagger_qudit(pure(bad), layout), ProtocolError);
}

TEST_CASE("qudit and dual-rail runs decode exactly like the base run") {
    std::mt19937 gen(31);
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 2; ++m) {
            const MemoryBank bank = qwram_test::random_bank(n, m, gen);
            for (int a = 0; a < (1 << n); ++a) {
                const std::vector<QueryTerm> terms{
                    {address_for_branch(a + 1, n), Amplitude{1.0, 0.0}}};
                const auto base =
                    run_query(qwram_test::standard_global(n, m), bank, terms,
                              TraceDetail::None);
                for (Encoding encoding : {Encoding::Qudit, Encoding::DualRail}) {
                    ProtocolConfig config = qwram_test::standard_global(n, m);
                    config.encoding = encoding;
                    const auto other = run_query(config, bank, terms, TraceDetail::None);
                    CHECK(other.output == base.output);
                }
            }
        }
    }
}

TEST_CASE("every gate commutes with the encoding translation on reachable states") {
    const ProtocolConfig base_config = qwram_test::standard_global(2, 1);
    ProtocolConfig qudit_config = base_config;
    qudit_config.encoding = Encoding::Qudit;
    const RegisterLayout base_layout(base_config);
    const RegisterLayout qudit_layout(qudit_config);
    const ReachableSpace space = enumerate_reachable(base_config);
    const MemoryBank bank = qwram_test::bank_from_code(2, 1, 6);

    std::size_t deferred = 0;
    for (std::size_t k = 0; k < space.steps.size(); ++k) {
        const GateDescriptor& gate = space.steps[k].gate;
        for (const BasisConfig& config : space.stage_inputs[k]) {
            const BasisConfig base_next =
                apply_gate_config(config, base_layout, gate, &bank);
            const BasisConfig qudit_next =
                apply_gate_config(to_qudit(config, base_layout), qudit_layout, gate, &bank);
            // Where the translation is defined the results agree exactly; a
            // hollow-control flip leaves transient hollow Blues that the
            // next scattering resets, so compare after settling them.
            CHECK(settle_hollows(qudit_next) == to_qudit(base_next, base_layout));
            if (settle_hollows(qudit_next) != qudit_next) ++deferred;
        }
    }
    // The hollow-control case does occur, so the settled comparison is load
    // bearing rather than vacuous.
    CHECK(deferred > 0);
}
