#include "shs/cli/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "shs/cas/text_format.hpp"

namespace shs::cli {

using nlohmann::json;

bool VerificationReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return !entries.empty();
}

ReportEntry make_entry(const hs::CheckResult& r, double elapsed_ms) {
  ReportEntry e;
  e.check_id = r.id;
  e.pass = r.pass();
  e.elapsed_ms = elapsed_ms;
  e.notes = r.notes;
  for (const auto& i : r.identities) {
    IdentityRecord rec{i.label, i.expect_zero, i.ok(), cas::serialize(i.residual)};
    if (!rec.ok && e.residual.empty()) e.residual = rec.residual;
    e.identities.push_back(std::move(rec));
  }
  return e;
}

json to_json(const VerificationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json ids = json::array();
    for (const auto& i : e.identities)
      ids.push_back({{"label", i.label}, {"expect", i.expect_zero ? "zero" : "nonzero"}, {"ok", i.ok},
                     {"residual", i.residual}});
    entries.push_back({{"check_id", e.check_id},
                       {"verdict", e.pass ? "pass" : "fail"},
                       {"residual", e.residual},
                       {"elapsed_ms", e.elapsed_ms},
                       {"identities", ids},
                       {"notes", e.notes}});
  }
  return {{"kind", "verification"},
          {"metadata", {{"version", r.version}, {"timestamp", r.timestamp}, {"config_hash", r.config_hash}}},
          {"entries", entries}};
}

VerificationReport report_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != "verification" || !j.contains("entries"))
    throw std::runtime_error("not a verification report");
  VerificationReport r;
  const json& meta = j.at("metadata");
  r.version = meta.value("version", "");
  r.timestamp = meta.value("timestamp", "");
  r.config_hash = meta.value("config_hash", "");
  for (const auto& e : j.at("entries")) {
    ReportEntry entry;
    entry.check_id = e.at("check_id").get<std::string>();
    const std::string verdict = e.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw std::runtime_error("bad verdict: " + verdict);
    entry.pass = verdict == "pass";
    entry.residual = e.value("residual", "");
    entry.elapsed_ms = e.value("elapsed_ms", 0.0);
    for (const auto& i : e.value("identities", json::array()))
      entry.identities.push_back({i.at("label").get<std::string>(), i.value("expect", "zero") == "zero",
                                  i.value("ok", false), i.value("residual", "")});
    entry.notes = e.value("notes", std::vector<std::string>{});
    r.entries.push_back(std::move(entry));
  }
  return r;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace shs::cli
