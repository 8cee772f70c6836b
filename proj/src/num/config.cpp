#include "shs/num/config.hpp"

#include <cmath>
#include <fstream>
#include <tuple>

namespace shs::num {

using nlohmann::json;

void SolverConfig::validate() const {
  if (n_modes < 16 || (n_modes & (n_modes - 1)) != 0)
    throw ConfigError("n_modes must be a power of two and at least 16");
  if (!(dt > 0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (!(t_end >= 0) || !std::isfinite(t_end)) throw ConfigError("t_end must be non-negative");
  if (n_grassmann < 0 || n_grassmann > 12) throw ConfigError("n_grassmann must be between 0 and 12");
  if (sample_every < 1) throw ConfigError("sample_every must be at least 1");
  if (!(blowup_threshold > 0)) throw ConfigError("blowup_threshold must be positive");
}

GeneratorSet parse_level(const std::string& label) {
  if (label == "1") return 0;
  GeneratorSet s = 0;
  std::size_t i = 0;
  int last = 0;
  while (i < label.size()) {
    if (label[i] != 'e') throw ConfigError("bad level label: " + label);
    std::size_t j = i + 1;
    while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
    if (j == i + 1) throw ConfigError("bad level label: " + label);
    const int g = std::stoi(label.substr(i + 1, j - i - 1));
    if (g < 1 || g > kMaxGenerators || g <= last) throw ConfigError("bad level label: " + label);
    s |= GeneratorSet{1} << (g - 1);
    last = g;
    i = j;
  }
  if (s == 0) throw ConfigError("bad level label: " + label);
  return s;
}

namespace {

void add_modes(std::vector<double>& values, const std::vector<FourierMode>& modes, int n) {
  for (const FourierMode& m : modes)
    for (int i = 0; i < n; ++i) {
      const double x = grid_point(i, n);
      values[i] += m.cos * std::cos(m.k * x) + m.sin * std::sin(m.k * x);
    }
}

std::vector<LevelModes> parse_levels(const json& arr, const char* field) {
  std::vector<LevelModes> out;
  if (!arr.is_array()) throw ConfigError(std::string("initial.") + field + " must be an array");
  for (const auto& entry : arr) {
    LevelModes lm;
    lm.level = parse_level(entry.at("level").get<std::string>());
    for (const auto& m : entry.at("modes")) {
      FourierMode fm;
      fm.k = m.at("k").get<int>();
      fm.cos = m.value("cos", 0.0);
      fm.sin = m.value("sin", 0.0);
      if (fm.k < 0) throw ConfigError("wavenumbers must be non-negative");
      lm.modes.push_back(fm);
    }
    out.push_back(std::move(lm));
  }
  return out;
}

json levels_to_json(const std::vector<LevelModes>& levels) {
  json arr = json::array();
  for (const auto& lm : levels) {
    json modes = json::array();
    for (const auto& m : lm.modes) modes.push_back({{"k", m.k}, {"cos", m.cos}, {"sin", m.sin}});
    arr.push_back({{"level", level_label(lm.level)}, {"modes", modes}});
  }
  return arr;
}

}  // namespace

GridState InitialData::sample(const SolverConfig& cfg) const {
  GridState s = GridState::zero(cfg.n_modes, cfg.n_grassmann);
  const GeneratorSet all = (GeneratorSet{1} << cfg.n_grassmann) - 1;
  for (const auto& [list, field, odd] : {std::tuple{&u, &s.u, false}, std::tuple{&xi, &s.xi, true}}) {
    for (const LevelModes& lm : *list) {
      if ((lm.level & ~all) != 0)
        throw ConfigError("level " + level_label(lm.level) + " uses generators beyond n_grassmann");
      if ((cardinality(lm.level) % 2 == 1) != odd)
        throw ConfigError("level " + level_label(lm.level) + " has the wrong parity for " + (odd ? "xi" : "u"));
      add_modes((*field)[lm.level], lm.modes, cfg.n_modes);
    }
  }
  return s;
}

SimulationSpec parse_simulation(const json& j) {
  try {
    SimulationSpec spec;
    SolverConfig& c = spec.solver;
    c.n_modes = j.value("n_modes", c.n_modes);
    c.dt = j.value("dt", c.dt);
    c.t_end = j.value("t_end", c.t_end);
    c.n_grassmann = j.value("n_grassmann", c.n_grassmann);
    c.dealias = j.value("dealias", c.dealias);
    c.sample_every = j.value("sample_every", c.sample_every);
    c.blowup_threshold = j.value("blowup_threshold", c.blowup_threshold);
    const std::string gauge = j.value("gauge", std::string("zero_mean_ut"));
    if (gauge != "zero_mean_ut") throw ConfigError("unknown gauge: " + gauge);
    c.validate();
    if (j.contains("initial")) {
      const json& init = j.at("initial");
      if (init.contains("u")) spec.initial.u = parse_levels(init.at("u"), "u");
      if (init.contains("xi")) spec.initial.xi = parse_levels(init.at("xi"), "xi");
    }
    spec.initial.sample(c);  // level checks
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}

SimulationSpec load_simulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed configuration " + path + ": " + e.what());
  }
  return parse_simulation(j);
}

json to_json(const SimulationSpec& spec) {
  const SolverConfig& c = spec.solver;
  return {{"n_modes", c.n_modes},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"n_grassmann", c.n_grassmann},
          {"gauge", "zero_mean_ut"},
          {"dealias", c.dealias},
          {"sample_every", c.sample_every},
          {"blowup_threshold", c.blowup_threshold},
          {"initial", {{"u", levels_to_json(spec.initial.u)}, {"xi", levels_to_json(spec.initial.xi)}}}};
}

}  // namespace shs::num
