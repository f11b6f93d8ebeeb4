#include "qwram/memory_bank.hpp"

#include "json.hpp"
#include "qwram/errors.hpp"

namespace qwram {

namespace {

bool is_bit_string(const std::string& s, int width) {
    if (static_cast<int>(s.size()) != width) return false;
    for (char c : s) {
        if (c != '0' && c != '1') return false;
    }
    return true;
}

}  // namespace

MemoryBank::MemoryBank(int n, int m, std::map<std::string, std::string> cells)
    : n_(n), m_(m), cells_(std::move(cells)) {
    if (n_ < 1 || n_ > 30) throw ValidationError("bank: n out of range");
    if (m_ < 1) throw ValidationError("bank: m out of range");
    const std::size_t expected = std::size_t{1} << n_;
    if (cells_.size() != expected) {
        throw ValidationError("bank: expected " + std::to_string(expected) + " cells, got " +
                              std::to_string(cells_.size()));
    }
    for (const auto& [address, bits] : cells_) {
        if (!is_bit_string(address, n_)) {
            throw ValidationError("bank: malformed cell address '" + address + "'");
        }
        if (!is_bit_string(bits, m_)) {
            throw ValidationError("bank: malformed cell content '" + bits + "' at address " +
                                  address);
        }
    }
}

const std::string& cell_lookup(const MemoryBank& bank, const std::string& address) {
    auto it = bank.cells().find(address);
    if (it == bank.cells().end()) {
        throw ValidationError("bank: no cell named by address '" + address + "'");
    }
    return it->second;
}

WalkerState memory_walker_state(char bit) {
    if (bit == '1') return WalkerState::Red;
    if (bit == '0') return WalkerState::Empty;
    throw ValidationError(std::string("memory bit must be '0' or '1', got '") + bit + "'");
}

int branch_for_address(const std::string& address) {
    int value = 0;
    for (char c : address) {
        if (c != '0' && c != '1') {
            throw ValidationError("malformed address '" + address + "'");
        }
        value = 2 * value + (c - '0');
    }
    return 1 + value;
}

std::string address_for_branch(int branch, int n) {
    if (branch < 1 || branch > (1 << n)) {
        throw ValidationError("cell branch " + std::to_string(branch) + " out of range for n = " +
                              std::to_string(n));
    }
    std::string bits(static_cast<std::size_t>(n), '0');
    int value = branch - 1;
    for (int i = n - 1; i >= 0; --i) {
        bits[static_cast<std::size_t>(i)] = static_cast<char>('0' + (value & 1));
        value >>= 1;
    }
    return bits;
}

MemoryBank load_bank(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("bank document: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("bank document: expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "m" && key != "cells") {
            throw ValidationError("bank document: unknown field '" + key + "'");
        }
    }
    if (!doc.contains("n") || !doc.contains("m") || !doc.contains("cells")) {
        throw ValidationError("bank document: fields n, m, cells are required");
    }
    if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer()) {
        throw ValidationError("bank document: n and m must be integers");
    }
    if (!doc["cells"].is_object()) {
        throw ValidationError("bank document: cells must be an object");
    }
    std::map<std::string, std::string> cells;
    for (const auto& [address, bits] : doc["cells"].items()) {
        if (!bits.is_string()) {
            throw ValidationError("bank document: cell contents must be strings");
        }
        cells[address] = bits.get<std::string>();
    }
    return MemoryBank(doc["n"].get<int>(), doc["m"].get<int>(), std::move(cells));
}

std::string store_bank(const MemoryBank& bank) {
    nlohmann::json doc;
    doc["n"] = bank.n();
    doc["m"] = bank.m();
    doc["cells"] = nlohmann::json::object();
    for (const auto& [address, bits] : bank.cells()) doc["cells"][address] = bits;
    return doc.dump(2) + "\n";
}

}  // namespace qwram
