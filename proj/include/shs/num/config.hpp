#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "shs/num/grid_state.hpp"

namespace shs::num {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Gauge { zero_mean_ut };

struct SolverConfig {
  int n_modes = 256;
  double dt = 1e-3;
  double t_end = 1.0;
  int n_grassmann = 2;
  Gauge gauge = Gauge::zero_mean_ut;
  bool dealias = true;
  /// Steps between stored samples.
  int sample_every = 10;
  /// max|u_x| above this is treated as wave breaking.
  double blowup_threshold = 1e6;

  /// Throws ConfigError.
  void validate() const;
};

/// a cos(kx) + b sin(kx)
struct FourierMode {
  int k = 0;
  double cos = 0;
  double sin = 0;
};

struct LevelModes {
  GeneratorSet level = 0;
  std::vector<FourierMode> modes;
};

struct InitialData {
  std::vector<LevelModes> u;
  std::vector<LevelModes> xi;

  /// Throws ConfigError on levels of the wrong parity or beyond n_grassmann.
  GridState sample(const SolverConfig& cfg) const;
};

struct SimulationSpec {
  SolverConfig solver;
  InitialData initial;
};

/// Inverse of level_label: "1" -> {}, "e1e2" -> {1,2}. Throws ConfigError.
GeneratorSet parse_level(const std::string& label);

SimulationSpec parse_simulation(const nlohmann::json& j);
SimulationSpec load_simulation(const std::string& path);
nlohmann::json to_json(const SimulationSpec& spec);

}  // namespace shs::num
