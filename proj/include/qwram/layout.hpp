#pragma once
// Protocol configuration and the register layout derived from it.

#include <cstddef>
#include <vector>

#include "qwram/types.hpp"

namespace qwram {

enum class Variant : std::uint8_t { Standard, Backup };
enum class CopyMode : std::uint8_t { Global, Switch, BackupControlled };
enum class Encoding : std::uint8_t { Base, Qudit, DualRail };

std::string variant_name(Variant v);
std::string copy_mode_name(CopyMode c);
std::string encoding_name(Encoding e);
Variant parse_variant(const std::string& name);
CopyMode parse_copy_mode(const std::string& name);
Encoding parse_encoding(const std::string& name);

struct ProtocolConfig {
    int n = 1;
    int m = 1;
    Variant variant = Variant::Standard;
    CopyMode copy_mode = CopyMode::Global;
    Encoding encoding = Encoding::Base;

    auto operator<=>(const ProtocolConfig&) const = default;
};

// Throws ValidationError on inconsistent combinations: the backup variant
// pairs only with backup-controlled copying, the switch mode and the qudit
// and dual-rail encodings require the standard variant.
void validate(const ProtocolConfig& config);

// The fixed injection-ordered list of register subsystems. Address walkers
// enter the tree first and therefore sit deepest in the train; in the backup
// variant each subsystem is followed immediately by its tilde companion, the
// flag D0 is absent, and the last data walker D_m carries no companion.
class RegisterLayout {
public:
    explicit RegisterLayout(const ProtocolConfig& config);

    const ProtocolConfig& config() const { return config_; }
    const std::vector<SubsystemId>& subsystems() const { return subsystems_; }
    std::size_t size() const { return subsystems_.size(); }

    const SubsystemId& at(std::size_t index) const { return subsystems_.at(index); }
    std::size_t index_of(const SubsystemId& id) const;  // throws ValidationError if absent
    bool contains(const SubsystemId& id) const;

private:
    ProtocolConfig config_;
    std::vector<SubsystemId> subsystems_;
};

SubsystemId address_id(int i);
SubsystemId address_backup_id(int i);
SubsystemId data_id(int j);
SubsystemId data_backup_id(int j);

}  // namespace qwram
