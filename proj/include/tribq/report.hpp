#pragma once

#include "tribq/audit.hpp"
#include "tribq/quaternion.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace tribq {

constexpr int kReportSchemaVersion = 1;

/// {"a0": "...", "a1": "...", "a2": "...", "a3": "..."} with decimal strings.
nlohmann::json to_json(const Quaternion& q);
/// Throws std::invalid_argument on missing keys or non-decimal values.
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerdictReport& report);

struct ReportOptions {
    /// Off: omit "generated_at" and write 0 for every "elapsed_ms" so that
    /// repeated runs serialize identically.
    bool timestamps = true;
};

nlohmann::json audit_to_json(const AuditResult& result, const AuditProfile& profile, const ReportOptions& options = {});

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string serialize(const nlohmann::json& j);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace tribq
