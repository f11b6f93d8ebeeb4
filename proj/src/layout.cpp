#include "qwram/layout.hpp"

#include <algorithm>

#include "qwram/errors.hpp"

namespace qwram {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::Backup: return "backup";
    }
    throw InternalError("variant_name: unknown variant");
}

std::string copy_mode_name(CopyMode c) {
    switch (c) {
        case CopyMode::Global: return "global";
        case CopyMode::Switch: return "switch";
        case CopyMode::BackupControlled: return "backup-controlled";
    }
    throw InternalError("copy_mode_name: unknown copy mode");
}

std::string encoding_name(Encoding e) {
    switch (e) {
        case Encoding::Base: return "base";
        case Encoding::Qudit: return "qudit";
        case Encoding::DualRail: return "dual-rail";
    }
    throw InternalError("encoding_name: unknown encoding");
}

Variant parse_variant(const std::string& name) {
    if (name == "standard") return Variant::Standard;
    if (name == "backup") return Variant::Backup;
    throw ValidationError("unknown variant '" + name + "'");
}

CopyMode parse_copy_mode(const std::string& name) {
    if (name == "global") return CopyMode::Global;
    if (name == "switch") return CopyMode::Switch;
    if (name == "backup-controlled") return CopyMode::BackupControlled;
    throw ValidationError("unknown copy mode '" + name + "'");
}

Encoding parse_encoding(const std::string& name) {
    if (name == "base") return Encoding::Base;
    if (name == "qudit") return Encoding::Qudit;
    if (name == "dual-rail") return Encoding::DualRail;
    throw ValidationError("unknown encoding '" + name + "'");
}

void validate(const ProtocolConfig& config) {
    if (config.n < 1) throw ValidationError("config: n must be at least 1");
    if (config.m < 1) throw ValidationError("config: m must be at least 1");
    const bool backup_variant = config.variant == Variant::Backup;
    const bool backup_copy = config.copy_mode == CopyMode::BackupControlled;
    if (backup_variant != backup_copy) {
        throw ValidationError(
            "config: the backup variant pairs exactly with backup-controlled copying");
    }
    if (config.copy_mode == CopyMode::Switch && config.variant != Variant::Standard) {
        throw ValidationError("config: switch copy mode requires the standard variant");
    }
    if (config.encoding != Encoding::Base && config.variant != Variant::Standard) {
        throw ValidationError(
            "config: qudit and dual-rail encodings are defined for the standard variant only");
    }
}

RegisterLayout::RegisterLayout(const ProtocolConfig& config) : config_(config) {
    validate(config);
    if (config.variant == Variant::Standard) {
        for (int i = 1; i <= config.n; ++i) subsystems_.push_back(address_id(i));
        subsystems_.push_back(data_id(0));
        for (int j = 1; j <= config.m; ++j) subsystems_.push_back(data_id(j));
        if (config.copy_mode == CopyMode::Switch) subsystems_.push_back(data_id(config.m + 1));
    } else {
        for (int i = 1; i <= config.n; ++i) {
            subsystems_.push_back(address_id(i));
            subsystems_.push_back(address_backup_id(i));
        }
        for (int j = 1; j < config.m; ++j) {
            subsystems_.push_back(data_id(j));
            subsystems_.push_back(data_backup_id(j));
        }
        subsystems_.push_back(data_id(config.m));
    }
}

std::size_t RegisterLayout::index_of(const SubsystemId& id) const {
    auto it = std::find(subsystems_.begin(), subsystems_.end(), id);
    if (it == subsystems_.end()) {
        throw ValidationError("layout: subsystem " + subsystem_name(id) + " is not present");
    }
    return static_cast<std::size_t>(it - subsystems_.begin());
}

bool RegisterLayout::contains(const SubsystemId& id) const {
    return std::find(subsystems_.begin(), subsystems_.end(), id) != subsystems_.end();
}

SubsystemId address_id(int i) { return SubsystemId{SubsystemKind::Address, i}; }

SubsystemId address_backup_id(int i) { return SubsystemId{SubsystemKind::AddressBackup, i}; }

SubsystemId data_id(int j) { return SubsystemId{SubsystemKind::Data, j}; }

SubsystemId data_backup_id(int j) { return SubsystemId{SubsystemKind::DataBackup, j}; }

}  // namespace qwram
