#include "shs/cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "shs/cli/report.hpp"
#include "shs/hs/checks.hpp"
#include "shs/num/config.hpp"
#include "shs/num/solver.hpp"

namespace shs::cli {

using nlohmann::json;

namespace {

std::vector<std::string> expand_suites(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      const std::vector<std::string> names = name == "all" ? hs::check_names() : std::vector<std::string>{name};
      for (const auto& n : names) {
        if (!hs::is_check_name(n)) throw std::invalid_argument("unknown suite: " + n);
        if (seen.insert(n).second) out.push_back(n);
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("no suite given");
  // Report order follows the registry, independent of the command line.
  std::vector<std::string> ordered;
  for (const auto& n : hs::check_names())
    if (seen.count(n)) ordered.push_back(n);
  return ordered;
}

std::string level_column(const char* prefix, GeneratorSet level) { return std::string(prefix) + "_" + level_label(level); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string series_csv(const num::Trajectory& tr, int n_grassmann) {
  const auto levels = num::levels(n_grassmann, Parity::even);
  std::ostringstream os;
  os << "time";
  for (auto l : levels) os << ',' << level_column("H1", l);
  for (auto l : levels) os << ',' << level_column("H2", l);
  os << ",max_abs_ux\n";
  for (const auto& c : tr.series) {
    os << fmt(c.time);
    for (auto l : levels) os << ',' << fmt(c.H1.coeff(l));
    for (auto l : levels) os << ',' << fmt(c.H2.coeff(l));
    os << ',' << fmt(c.max_abs_ux) << '\n';
  }
  return os.str();
}

std::string snapshot_csv(const num::GridState& s) {
  std::ostringstream os;
  os << "x";
  for (const auto& [l, v] : s.u) os << ',' << level_column("u", l);
  for (const auto& [l, v] : s.xi) os << ',' << level_column("xi", l);
  os << '\n';
  for (int i = 0; i < s.n_modes; ++i) {
    os << fmt(num::grid_point(i, s.n_modes));
    for (const auto& [l, v] : s.u) os << ',' << fmt(v[i]);
    for (const auto& [l, v] : s.xi) os << ',' << fmt(v[i]);
    os << '\n';
  }
  return os.str();
}

std::string shorten(const std::string& s, std::size_t n = 72) { return s.size() <= n ? s : s.substr(0, n - 3) + "..."; }

int report_verification(const json& j, const std::string& path, std::ostream& out) {
  const VerificationReport r = report_from_json(j);
  out << path << " (version " << r.version << ", config " << r.config_hash << ")\n";
  out << std::left << std::setw(14) << "check" << std::setw(8) << "verdict" << std::right << std::setw(12)
      << "elapsed_ms" << "\n";
  for (const auto& e : r.entries) {
    out << std::left << std::setw(14) << e.check_id << std::setw(8) << (e.pass ? "PASS" : "FAIL") << std::right
        << std::setw(12) << std::fixed << std::setprecision(2) << e.elapsed_ms << std::defaultfloat << "\n";
    if (!e.pass) {
      for (const auto& i : e.identities)
        if (!i.ok) out << "    " << i.label << ": " << shorten(i.residual) << "\n";
    }
  }
  return r.all_pass() ? kSuccess : kCheckFailure;
}

int report_simulation(const json& j, const std::string& path, std::ostream& out) {
  out << path << " (simulation, status " << j.at("status").get<std::string>() << ", t = " << j.at("final_time")
      << ", steps " << j.at("steps") << ")\n";
  for (const char* h : {"H1", "H2"})
    for (const auto& [level, drift] : j.at("drifts").at(h).items())
      out << "  " << h << "[" << level << "] drift " << drift.get<double>() << "\n";
  if (!j.at("residual_check").is_null()) out << "  residual_check " << j.at("residual_check").get<double>() << "\n";
  if (j.contains("diagnostic") && !j.at("diagnostic").get<std::string>().empty())
    out << "  diagnostic: " << j.at("diagnostic").get<std::string>() << "\n";
  return j.at("status") == "ok" ? kSuccess : kCheckFailure;
}

int report_series(std::istream& in, const std::string& path, std::ostream& out) {
  std::string header, line, last;
  if (!std::getline(in, header) || header.rfind("time", 0) != 0) throw std::runtime_error("not a series file");
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) {
      ++rows;
      last = line;
    }
  out << path << " (series, " << rows << " rows)\n  " << header << "\n  " << last << "\n";
  return kSuccess;
}

}  // namespace

int cmd_verify(const std::vector<std::string>& suites, const std::string& out, std::ostream& log) {
  std::vector<std::string> names;
  try {
    names = expand_suites(suites);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kUsageError;
  }
  // Checks are independent pure computations.
  std::vector<std::future<ReportEntry>> running;
  for (const auto& n : names)
    running.push_back(std::async(std::launch::async, [n] {
      const auto t0 = std::chrono::steady_clock::now();
      const hs::CheckResult r = hs::run_check(n);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return make_entry(r, ms);
    }));
  VerificationReport report;
  report.timestamp = utc_timestamp();
  json cfg = names;
  report.config_hash = fnv1a_hex(cfg.dump());
  for (auto& f : running) report.entries.push_back(f.get());
  for (const auto& e : report.entries) {
    log << e.check_id << ": " << (e.pass ? "pass" : "fail") << "\n";
    if (!e.pass) log << "  residual: " << shorten(e.residual, 200) << "\n";
  }
  if (!out.empty()) {
    try {
      write_atomically(out, to_json(report).dump(2) + "\n");
    } catch (const std::exception& e) {
      log << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return report.all_pass() ? kSuccess : kCheckFailure;
}

int cmd_simulate(const std::string& config, const std::string& out_dir, std::ostream& log) {
  num::SimulationSpec spec;
  num::GridState initial;
  try {
    spec = num::load_simulation(config);
    initial = spec.initial.sample(spec.solver);
  } catch (const num::ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const num::SolverConfig& cfg = spec.solver;
  const num::Trajectory tr = num::evolve(initial, cfg);

  json summary;
  summary["kind"] = "simulation";
  summary["version"] = kToolVersion;
  summary["timestamp"] = utc_timestamp();
  summary["config"] = num::to_json(spec);
  summary["config_hash"] = fnv1a_hex(summary["config"].dump());
  summary["status"] = tr.blew_up ? "blowup" : "ok";
  summary["diagnostic"] = tr.diagnostic;
  summary["final_time"] = tr.final_state.time;
  summary["steps"] = tr.steps;
  summary["warnings"] = tr.warnings;
  json drifts = {{"H1", json::object()}, {"H2", json::object()}};
  for (auto l : num::levels(cfg.n_grassmann, Parity::even)) {
    drifts["H1"][level_label(l)] = num::max_drift(tr.series, l, false);
    drifts["H2"][level_label(l)] = num::max_drift(tr.series, l, true);
  }
  summary["drifts"] = drifts;
  summary["residual_check"] = tr.samples.size() >= 3 ? json(num::residual_check(tr.samples)) : json(nullptr);
  summary["files"] = {"series.csv", "snapshot_initial.csv", "snapshot_final.csv", "summary.json"};

  try {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    write_atomically((dir / "series.csv").string(), series_csv(tr, cfg.n_grassmann));
    write_atomically((dir / "snapshot_initial.csv").string(), snapshot_csv(initial));
    write_atomically((dir / "snapshot_final.csv").string(), snapshot_csv(tr.final_state));
    write_atomically((dir / "summary.json").string(), summary.dump(2) + "\n");
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kUsageError;
  }
  for (const auto& w : tr.warnings) log << "warning: " << w << "\n";
  if (tr.blew_up) {
    log << "blow-up: " << tr.diagnostic << "\n";
    return kBlowUp;
  }
  log << "completed " << tr.steps << " steps to t = " << tr.final_state.time << "\n";
  return kSuccess;
}

int cmd_report(const std::vector<std::string>& paths, std::ostream& out) {
  if (paths.empty()) {
    out << "error: no input files\n";
    return kUsageError;
  }
  int code = kSuccess;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      out << "error: cannot read " << path << "\n";
      return kUsageError;
    }
    try {
      int c;
      if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        c = report_series(in, path, out);
      } else {
        const json j = json::parse(in);
        const std::string kind = j.is_object() ? j.value("kind", "") : "";
        if (kind == "verification")
          c = report_verification(j, path, out);
        else if (kind == "simulation")
          c = report_simulation(j, path, out);
        else
          throw std::runtime_error("unrecognized document");
      }
      code = std::max(code, c);
    } catch (const std::exception& e) {
      out << "error: " << path << ": " << e.what() << "\n";
      return kUsageError;
    }
  }
  return code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic checks and simulations for the supersymmetric Hunter-Saxton system", "shs"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::vector<std::string> suites;
  std::string report_out;
  auto* verify = app.add_subcommand("verify", "Run symbolic verification suites");
  verify->add_option("--suite", suites, "Suite names (comma separated) or 'all'")->required();
  verify->add_option("--out", report_out, "Write the JSON report here");

  std::string config, out_dir;
  auto* simulate = app.add_subcommand("simulate", "Integrate the system from a JSON configuration");
  simulate->add_option("--config", config, "Configuration file")->required();
  simulate->add_option("--out-dir", out_dir, "Output directory")->required();

  std::vector<std::string> inputs;
  auto* report = app.add_subcommand("report", "Summarize report, summary and series files");
  report->add_option("files", inputs, "Input files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kSuccess;
    }
    app.exit(e, out, err);
    return kUsageError;
  }
  if (*verify) return cmd_verify(suites, report_out, out);
  if (*simulate) return cmd_simulate(config, out_dir, out);
  return cmd_report(inputs, out);
}

}  // namespace shs::cli
