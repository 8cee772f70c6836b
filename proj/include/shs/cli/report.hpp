#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct IdentityRecord {
  std::string label;
  bool expect_zero = true;
  bool ok = true;
  /// Serialized residual (text expression format).
  std::string residual;
};

struct ReportEntry {
  std::string check_id;
  bool pass = false;
  /// Residual of the first failing identity, empty when the check passes.
  std::string residual;
  double elapsed_ms = 0;
  std::vector<IdentityRecord> identities;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  std::string version = kToolVersion;
  std::string timestamp;
  std::string config_hash;

  bool all_pass() const;
};

ReportEntry make_entry(const hs::CheckResult& r, double elapsed_ms);

nlohmann::json to_json(const VerificationReport& r);
/// Throws std::runtime_error on a document that is not a verification report.
VerificationReport report_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);
/// UTC, ISO 8601.
std::string utc_timestamp();

/// Writes to a temporary sibling and renames it over `path`.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace shs::cli
