#include "qwram/encode.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qwram/errors.hpp"
#include "qwram/memory_bank.hpp"

namespace qwram {

BasisConfig encode_address(const std::string& bits, const RegisterLayout& layout) {
    const ProtocolConfig& config = layout.config();
    if (static_cast<int>(bits.size()) != config.n) {
        throw ValidationError("address '" + bits + "' does not have n = " +
                              std::to_string(config.n) + " bits");
    }
    for (char c : bits) {
        if (c != '0' && c != '1') throw ValidationError("address '" + bits + "' is not binary");
    }
    const Position root{1, 1, Phase::Forward};
    const Position absent{1, 0, Phase::Forward};
    BasisConfig out;
    out.entries.reserve(layout.size());
    for (const SubsystemId& id : layout.subsystems()) {
        if (id.kind == SubsystemKind::Address) {
            const bool present = bits[static_cast<std::size_t>(id.index - 1)] == '1';
            out.entries.push_back(present ? ConfigEntry{WalkerState::Red, root}
                                          : ConfigEntry{WalkerState::Empty, absent});
        } else {
            // Data walkers, backups, flag, and terminator all start Red.
            out.entries.push_back(ConfigEntry{WalkerState::Red, root});
        }
    }
    return out;
}

QState encode_query(const std::vector<QueryTerm>& terms, const RegisterLayout& layout) {
    if (terms.empty()) throw ValidationError("query: no terms");
    std::set<std::string> seen;
    double total = 0.0;
    for (const QueryTerm& term : terms) {
        if (!seen.insert(term.address).second) {
            throw ValidationError("query: duplicate address '" + term.address + "'");
        }
        total += std::norm(term.amplitude);
    }
    if (std::abs(total - 1.0) > kQueryNormTolerance) {
        throw ValidationError("query: squared amplitudes sum to " + std::to_string(total) +
                              ", more than 1e-9 away from 1");
    }
    // Amplitudes within the state norm tolerance pass through untouched, so
    // a normalized input is encoded bit-exactly; only inputs in the gap up
    // to the validation tolerance are rescaled.
    const double scale =
        std::abs(total - 1.0) <= kNormTolerance ? 1.0 : 1.0 / std::sqrt(total);
    std::map<BasisConfig, Amplitude> out;
    for (const QueryTerm& term : terms) {
        out.emplace(encode_address(term.address, layout), term.amplitude * scale);
    }
    return QState::from_terms(std::move(out));
}

std::vector<DecodedTerm> decode_output(const QState& state, const RegisterLayout& layout) {
    const ProtocolConfig& config = layout.config();
    std::vector<DecodedTerm> out;
    for (const auto& [basis, amp] : state.terms()) {
        if (basis.entries.size() != layout.size()) {
            throw ProtocolError("decode: component does not match the register layout");
        }
        if (!basis.switches_on.empty()) {
            throw ProtocolError("decode: protocol fault, a cell switch was left on");
        }
        std::string address(static_cast<std::size_t>(config.n), '0');
        std::string message(static_cast<std::size_t>(config.m), '0');
        for (std::size_t k = 0; k < layout.size(); ++k) {
            const SubsystemId& id = layout.at(k);
            const ConfigEntry& entry = basis.entries[k];
            if (entry.state == WalkerState::Blue || entry.state == WalkerState::HollowBlue) {
                throw ProtocolError("decode: coherence fault, " + subsystem_name(id) +
                                    " came back Blue");
            }
            if (is_hollow(entry.state)) {
                throw ProtocolError("decode: " + subsystem_name(id) +
                                    " still carries a qudit encoding");
            }
            if (is_present(entry.state) &&
                (entry.position.depth != 1 || entry.position.phase != Phase::Backward)) {
                throw ProtocolError("decode: incomplete protocol, " + subsystem_name(id) +
                                    " is not back at the root");
            }
            switch (id.kind) {
                case SubsystemKind::Address:
                    if (entry.state == WalkerState::Red) {
                        address[static_cast<std::size_t>(id.index - 1)] = '1';
                    }
                    break;
                case SubsystemKind::Data:
                    if (id.index >= 1 && id.index <= config.m) {
                        if (entry.state == WalkerState::Red) {
                            message[static_cast<std::size_t>(id.index - 1)] = '1';
                        }
                    } else if (entry.state != WalkerState::Red) {
                        // Flag D0 and terminator D_{m+1} must come back Red.
                        throw ProtocolError("decode: protocol fault, " + subsystem_name(id) +
                                            " was not restored");
                    }
                    break;
                case SubsystemKind::AddressBackup:
                case SubsystemKind::DataBackup:
                    if (entry.state != WalkerState::Red) {
                        throw ProtocolError("decode: protocol fault, backup " +
                                            subsystem_name(id) + " was not restored");
                    }
                    break;
            }
        }
        out.push_back(DecodedTerm{std::move(address), std::move(message), amp});
    }
    // std::map iteration already visits configurations in a deterministic
    // order, but sorting by address makes the contract explicit.
    std::sort(out.begin(), out.end(),
              [](const DecodedTerm& a, const DecodedTerm& b) { return a.address < b.address; });
    return out;
}

}  // namespace qwram
