// Unit tests for the classical memory bank and its document format.

#include "doctest.h"
#include "qwram/errors.hpp"
#include "qwram/memory_bank.hpp"
#include "test_helpers.hpp"

using namespace qwram;

TEST_CASE("bank construction validates its shape") {
    CHECK_NOTHROW(MemoryBank(1, 2, {{"0", "10"}, {"1", "01"}}));
    // Wrong cell count.
    CHECK_THROWS_AS(MemoryBank(2, 1, {{"00", "1"}}), ValidationError);
    // Malformed address.
    CHECK_THROWS_AS(MemoryBank(1, 1, {{"0", "1"}, {"2", "1"}}), ValidationError);
    // Wrong address width.
    CHECK_THROWS_AS(MemoryBank(1, 1, {{"0", "1"}, {"11", "1"}}), ValidationError);
    // Malformed cell contents.
    CHECK_THROWS_AS(MemoryBank(1, 1, {{"0", "x"}, {"1", "1"}}), ValidationError);
    // Wrong cell width.
    CHECK_THROWS_AS(MemoryBank(1, 2, {{"0", "1"}, {"1", "01"}}), ValidationError);
    CHECK_THROWS_AS(MemoryBank(0, 1, {}), ValidationError);
}

TEST_CASE("cell lookup and stored-bit walker states") {
    const MemoryBank bank(2, 2, {{"00", "10"}, {"01", "00"}, {"10", "11"}, {"11", "01"}});
    CHECK(bank.n() == 2);
    CHECK(bank.m() == 2);
    CHECK(cell_lookup(bank, "10") == "11");
    CHECK_THROWS_AS(cell_lookup(bank, "22"), ValidationError);
    CHECK(memory_walker_state('1') == WalkerState::Red);
    CHECK(memory_walker_state('0') == WalkerState::Empty);
}

TEST_CASE("cell branches enumerate addresses in binary order") {
    CHECK(branch_for_address("00") == 1);
    CHECK(branch_for_address("01") == 2);
    CHECK(branch_for_address("10") == 3);
    CHECK(branch_for_address("11") == 4);
    for (int n = 1; n <= 4; ++n) {
        for (int branch = 1; branch <= (1 << n); ++branch) {
            CHECK(branch_for_address(address_for_branch(branch, n)) == branch);
        }
    }
    CHECK_THROWS_AS(branch_for_address("2"), ValidationError);
    CHECK_THROWS_AS(address_for_branch(5, 2), ValidationError);
    CHECK_THROWS_AS(address_for_branch(0, 2), ValidationError);
}

TEST_CASE("bank documents round-trip byte-identically") {
    const MemoryBank bank(2, 1, {{"00", "1"}, {"01", "0"}, {"10", "1"}, {"11", "0"}});
    const std::string text = store_bank(bank);
    const MemoryBank loaded = load_bank(text);
    CHECK(loaded.cells() == bank.cells());
    CHECK(store_bank(loaded) == text);
}

TEST_CASE("bank documents are parsed strictly") {
    CHECK_THROWS_AS(load_bank("not json"), ValidationError);
    CHECK_THROWS_AS(load_bank("[1,2]"), ValidationError);
    // Unknown field.
    CHECK_THROWS_AS(load_bank(R"({"n":1,"m":1,"cells":{"0":"1","1":"0"},"note":"hi"})"),
                    ValidationError);
    // Missing field.
    CHECK_THROWS_AS(load_bank(R"({"n":1,"cells":{"0":"1","1":"0"}})"), ValidationError);
    // Non-integer dimension.
    CHECK_THROWS_AS(load_bank(R"({"n":1.5,"m":1,"cells":{"0":"1","1":"0"}})"), ValidationError);
    // Non-string cell.
    CHECK_THROWS_AS(load_bank(R"({"n":1,"m":1,"cells":{"0":1,"1":"0"}})"), ValidationError);
    // Missing cell.
    CHECK_THROWS_AS(load_bank(R"({"n":1,"m":1,"cells":{"0":"1"}})"), ValidationError);
    CHECK_NOTHROW(load_bank(R"({"n":1,"m":1,"cells":{"0":"1","1":"0"}})"));
}

TEST_CASE("exhaustive bank codes cover every bank once") {
    std::set<std::string> seen;
    for (unsigned long long code = 0; code < 16; ++code) {
        seen.insert(store_bank(qwram_test::bank_from_code(2, 1, code)));
    }
    CHECK(seen.size() == 16);
}
