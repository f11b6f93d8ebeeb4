#pragma once
// The classical database behind the tree: 2^n cells of m bits each,
// addressed by n-bit strings.

#include <map>
#include <string>

#include "qwram/types.hpp"

namespace qwram {

class MemoryBank {
public:
    // Validates shape: exactly 2^n cells, every address an n-bit string,
    // every cell value an m-bit string. Throws ValidationError otherwise.
    MemoryBank(int n, int m, std::map<std::string, std::string> cells);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::map<std::string, std::string>& cells() const { return cells_; }

    bool operator==(const MemoryBank& other) const = default;

private:
    int n_;
    int m_;
    std::map<std::string, std::string> cells_;
};

// Cell content for an address; throws ValidationError on a malformed or
// missing address.
const std::string& cell_lookup(const MemoryBank& bank, const std::string& address);

// Walker encoding of one stored bit: '1' holds a Red walker, '0' none.
WalkerState memory_walker_state(char bit);

// Cells at depth n+1 are numbered 1..2^n left to right; the cell reached by
// address a1..an (a1 most significant) is branch 1 + int(a).
int branch_for_address(const std::string& address);
std::string address_for_branch(int branch, int n);

// Bank documents are JSON objects {"n":.., "m":.., "cells":{address:bits}}.
// load_bank is strict: unknown fields, dimension mismatches, malformed bit
// strings, and missing or extra cells are all ValidationErrors. store_bank
// emits the canonical form, which load_bank round-trips byte-identically.
MemoryBank load_bank(const std::string& text);
std::string store_bank(const MemoryBank& bank);

}  // namespace qwram
