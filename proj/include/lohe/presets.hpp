#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lohe/config.hpp"

namespace lohe {

/// Built-in experiment: five oscillators on a directed cycle with integer
/// frequency matrices.
struct Preset {
  std::string name;
  std::string description;
  std::vector<IntMatrix> omegas;
  IntMatrix adjacency;
  double default_k = 1.0;
  double default_t_end = 100.0;
  std::optional<Vector> default_p;
};

const std::vector<Preset>& presets();

/// nullptr when the name is unknown.
const Preset* find_preset(const std::string& name);

/// Config for a preset with its default gain, horizon and cap center.
RunConfig preset_config(const Preset& preset);

}  // namespace lohe
