// Unit tests for the walker state primitives, register layouts, and the
// sparse state algebra.

#include <cmath>

#include "doctest.h"
#include "qwram/config_state.hpp"
#include "qwram/errors.hpp"
#include "test_helpers.hpp"

using namespace qwram;

TEST_CASE("walker state characters round-trip") {
    for (WalkerState s : {WalkerState::Empty, WalkerState::Red, WalkerState::Blue,
                          WalkerState::HollowRed, WalkerState::HollowBlue}) {
        CHECK(state_from_char(state_char(s)) == s);
    }
    CHECK(state_char(WalkerState::Red) == 'R');
    CHECK(state_char(WalkerState::Empty) == '-');
    CHECK_THROWS_AS(state_from_char('x'), ValidationError);
}

TEST_CASE("color negation swaps colors and fixes the empty state") {
    CHECK(negate_color(WalkerState::Red) == WalkerState::Blue);
    CHECK(negate_color(WalkerState::Blue) == WalkerState::Red);
    CHECK(negate_color(WalkerState::HollowRed) == WalkerState::HollowBlue);
    CHECK(negate_color(WalkerState::HollowBlue) == WalkerState::HollowRed);
    CHECK(negate_color(WalkerState::Empty) == WalkerState::Empty);
    for (WalkerState s : {WalkerState::Red, WalkerState::Blue, WalkerState::HollowRed,
                          WalkerState::HollowBlue, WalkerState::Empty}) {
        CHECK(negate_color(negate_color(s)) == s);
    }
}

TEST_CASE("presence and hollowness predicates") {
    CHECK(is_present(WalkerState::Red));
    CHECK(is_present(WalkerState::HollowBlue));
    CHECK_FALSE(is_present(WalkerState::Empty));
    CHECK(is_hollow(WalkerState::HollowRed));
    CHECK_FALSE(is_hollow(WalkerState::Red));
    CHECK_FALSE(is_hollow(WalkerState::Empty));
}

TEST_CASE("phase names round-trip") {
    for (Phase p : {Phase::Forward, Phase::AtCell, Phase::Backward}) {
        CHECK(parse_phase(phase_name(p)) == p);
    }
    CHECK(phase_name(Phase::AtCell) == "at-cell");
    CHECK_THROWS_AS(parse_phase("sideways"), ValidationError);
}

TEST_CASE("tree position children and parents") {
    CHECK(child_branch_left(1) == 1);
    CHECK(child_branch_right(1) == 2);
    CHECK(child_branch_left(3) == 5);
    CHECK(child_branch_right(3) == 6);
    CHECK(parent_branch(5) == 3);
    CHECK(parent_branch(6) == 3);
    for (int l = 1; l <= 16; ++l) {
        CHECK(parent_branch(child_branch_left(l)) == l);
        CHECK(parent_branch(child_branch_right(l)) == l);
    }
    Position branchless;
    branchless.branch = 0;
    CHECK_FALSE(branchless.has_branch());
    Position rooted;
    CHECK(rooted.depth == 1);
}

TEST_CASE("subsystem names round-trip") {
    for (const SubsystemId& id : {address_id(1), address_id(12), address_backup_id(3),
                                  data_id(0), data_id(2), data_backup_id(1)}) {
        CHECK(parse_subsystem_name(subsystem_name(id)) == id);
    }
    CHECK(subsystem_name(address_id(2)) == "A2");
    CHECK(subsystem_name(address_backup_id(2)) == "tA2");
    CHECK(subsystem_name(data_id(0)) == "D0");
    CHECK(subsystem_name(data_backup_id(3)) == "tD3");
    CHECK_THROWS_AS(parse_subsystem_name("Q1"), ValidationError);
    CHECK_THROWS_AS(parse_subsystem_name("A"), ValidationError);
    CHECK_THROWS_AS(parse_subsystem_name("tAx"), ValidationError);
}

TEST_CASE("configuration names parse") {
    CHECK(parse_variant("standard") == Variant::Standard);
    CHECK(parse_variant("backup") == Variant::Backup);
    CHECK(parse_copy_mode("backup-controlled") == CopyMode::BackupControlled);
    CHECK(parse_encoding("dual-rail") == Encoding::DualRail);
    CHECK_THROWS_AS(parse_variant("fancy"), ValidationError);
    CHECK_THROWS_AS(parse_copy_mode("none"), ValidationError);
    CHECK_THROWS_AS(parse_encoding("trinary"), ValidationError);
}

TEST_CASE("standard layout lists addresses, flag, then data walkers") {
    const RegisterLayout layout(qwram_test::standard_global(2, 2));
    REQUIRE(layout.size() == 5);
    CHECK(layout.at(0) == address_id(1));
    CHECK(layout.at(1) == address_id(2));
    CHECK(layout.at(2) == data_id(0));
    CHECK(layout.at(3) == data_id(1));
    CHECK(layout.at(4) == data_id(2));
    CHECK(layout.index_of(data_id(1)) == 3);
    CHECK(layout.contains(data_id(0)));
    CHECK_FALSE(layout.contains(address_backup_id(1)));
    CHECK_THROWS_AS(layout.index_of(data_id(3)), ValidationError);
}

TEST_CASE("switch layout appends the terminator") {
    const RegisterLayout layout(qwram_test::standard_switch(2, 2));
    REQUIRE(layout.size() == 6);
    CHECK(layout.at(5) == data_id(3));
}

TEST_CASE("backup layout interleaves companions and drops the flag") {
    const RegisterLayout layout(qwram_test::backup_config(2, 2));
    REQUIRE(layout.size() == 2 * (2 + 2) - 1);
    CHECK(layout.at(0) == address_id(1));
    CHECK(layout.at(1) == address_backup_id(1));
    CHECK(layout.at(2) == address_id(2));
    CHECK(layout.at(3) == address_backup_id(2));
    CHECK(layout.at(4) == data_id(1));
    CHECK(layout.at(5) == data_backup_id(1));
    CHECK(layout.at(6) == data_id(2));
    CHECK_FALSE(layout.contains(data_id(0)));
    CHECK_FALSE(layout.contains(data_backup_id(2)));
}

TEST_CASE("inconsistent configurations are rejected") {
    CHECK_THROWS_AS(validate(qwram_test::make_config(0, 1, Variant::Standard, CopyMode::Global)),
                    ValidationError);
    CHECK_THROWS_AS(validate(qwram_test::make_config(2, 0, Variant::Standard, CopyMode::Global)),
                    ValidationError);
    CHECK_THROWS_AS(validate(qwram_test::make_config(2, 1, Variant::Backup, CopyMode::Global)),
                    ValidationError);
    CHECK_THROWS_AS(validate(qwram_test::make_config(2, 1, Variant::Backup, CopyMode::Switch)),
                    ValidationError);
    CHECK_THROWS_AS(
        validate(qwram_test::make_config(2, 1, Variant::Standard, CopyMode::BackupControlled)),
        ValidationError);
    CHECK_THROWS_AS(validate(qwram_test::make_config(2, 1, Variant::Backup,
                                                     CopyMode::BackupControlled,
                                                     Encoding::Qudit)),
                    ValidationError);
    CHECK_NOTHROW(validate(qwram_test::make_config(2, 1, Variant::Standard, CopyMode::Switch,
                                                   Encoding::DualRail)));
}

namespace {

BasisConfig root_config(const RegisterLayout& layout) {
    BasisConfig config;
    config.entries.assign(layout.size(), ConfigEntry{WalkerState::Red, Position{}});
    return config;
}

}  // namespace

TEST_CASE("states validate norm and drop negligible terms") {
    const RegisterLayout layout(qwram_test::standard_global(1, 1));
    BasisConfig a = root_config(layout);
    BasisConfig b = root_config(layout);
    b.entries[0].state = WalkerState::Empty;
    b.entries[0].position.branch = 0;

    CHECK_THROWS_AS(QState::from_terms({{a, Amplitude{0.5, 0.0}}}), ValidationError);

    const double amp = 1.0 / std::sqrt(2.0);
    const QState state = QState::from_terms(
        {{a, Amplitude{amp, 0.0}}, {b, Amplitude{0.0, amp}}});
    CHECK(state.component_count() == 2);
    CHECK(norm(state) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(config_lookup(state, b) == Amplitude{0.0, amp});

    const QState dropped = QState::from_terms(
        {{a, Amplitude{1.0, 0.0}}, {b, Amplitude{1e-16, 0.0}}});
    CHECK(dropped.component_count() == 1);
}

TEST_CASE("inner products conjugate the first argument") {
    const RegisterLayout layout(qwram_test::standard_global(1, 1));
    BasisConfig a = root_config(layout);
    const QState state = QState::from_terms({{a, Amplitude{0.0, 1.0}}});
    const QState other = QState::from_terms({{a, Amplitude{1.0, 0.0}}});
    CHECK(inner_product(state, other) == Amplitude{0.0, -1.0});
    CHECK(inner_product(state, state) == Amplitude{1.0, 0.0});
}

TEST_CASE("colliding basis maps are rejected as non-unitary") {
    const RegisterLayout layout(qwram_test::standard_global(1, 1));
    BasisConfig a = root_config(layout);
    BasisConfig b = root_config(layout);
    b.entries[0].state = WalkerState::Blue;
    const double amp = 1.0 / std::sqrt(2.0);
    const QState state = QState::from_terms(
        {{a, Amplitude{amp, 0.0}}, {b, Amplitude{amp, 0.0}}});
    CHECK_THROWS_AS(state.mapped([&](const BasisConfig&) { return a; }), InternalError);
}

TEST_CASE("entry accessors address slots through the layout") {
    const RegisterLayout layout(qwram_test::backup_config(1, 1));
    BasisConfig config = root_config(layout);
    entry_of(config, layout, address_backup_id(1)).state = WalkerState::Blue;
    CHECK(config.entries[1].state == WalkerState::Blue);
    CHECK(entry_of(config, layout, data_id(1)).state == WalkerState::Red);
}
