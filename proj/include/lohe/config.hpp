#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lohe/graph.hpp"
#include "lohe/linalg.hpp"
#include "lohe/wspace.hpp"

namespace lohe {

/// Soft limit on the state dimension; the analysis is dense.
inline constexpr Eigen::Index kMaxDimension = 64;

struct RunConfig {
  std::string name = "run";
  std::optional<std::string> preset;
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::vector<Matrix> omegas;
  Matrix adjacency;
  double k = 1.0;
  double dt = 1e-3;
  /// Unset means 100 for synchronizable ensembles and 50 otherwise.
  std::optional<double> t_end;
  std::int64_t stride = 10;
  std::uint64_t seed = 1;
  double margin = 0.05;
  /// Cap center for the initial states; must lie in W. Defaults to the
  /// verdict's p.
  std::optional<Vector> p;
};

/// Parses and validates a JSON config document. Throws ParseError for
/// malformed input or ValidationError naming the offending field.
RunConfig parse_config(const std::string& text, const std::string& name = "run");

RunConfig load_config(const std::filesystem::path& path);

/// Shape and range checks; also applied by parse_config.
void validate(const RunConfig& cfg);

FrequencyEnsemble make_ensemble(const RunConfig& cfg);
Digraph make_graph(const RunConfig& cfg);

/// Horizon actually used once the verdict is known.
double effective_t_end(const RunConfig& cfg, bool synchronizable);

}  // namespace lohe
