#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lohe/config.hpp"
#include "lohe/dynamics.hpp"
#include "lohe/observables.hpp"
#include "lohe/wspace.hpp"

namespace lohe {

struct Hypotheses {
  bool strongly_connected = false;
  std::size_t component_count = 0;
  bool skew_symmetric = false;
  double max_skew_residual = 0.0;
};

enum class VerdictStatus { Sync, NoSync, UnsupportedTopology };

std::string_view to_string(VerdictStatus s);

/// Exit status for scripting: SYNC 0, NO-SYNC 1, anything else 2.
int exit_code(VerdictStatus s);

struct Outcome {
  double t_end = 0.0;
  std::string initial_condition;
  std::optional<Vector> p;
  /// Laplacian left null vector weighting V.
  Vector beta;
  SyncSummary summary;
  CertificateCheck certificates;
  double monotonicity_slack = 0.0;
  double max_norm_correction = 0.0;
};

struct RunReport {
  RunConfig config;
  Hypotheses hypotheses;
  VerdictStatus status = VerdictStatus::NoSync;
  SyncVerdict verdict;
  std::optional<RejectWitness> quick_reject;
  std::optional<Outcome> outcome;
  /// INCONSISTENT, W_TRIVIAL, CERTIFICATE_VIOLATION.
  std::vector<std::string> flags;
};

struct RunArtifacts {
  RunReport report;
  Trajectory trajectory;
  CertificateTrace certificates;
};

/// Hypothesis checks and verdict without simulating.
RunReport analyze(const RunConfig& cfg);

/// analyze, then simulate from admissible initial data (sampled on the cap
/// around p when synchronizable, uniformly on the sphere otherwise) and
/// monitor the certificates. Throws NotStronglyConnected before simulating
/// on unsupported topologies.
RunArtifacts run(const RunConfig& cfg);

/// Writes trajectory.csv, certificates.csv and report.json into `dir`.
void write_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& dir);

struct SweepPoint {
  double k = 0.0;
  std::uint64_t seed = 0;
};

/// Runs every (k, seed) pair concurrently, each into its own subdirectory of
/// `dir` when given, and returns the reports in input order.
std::vector<RunReport> sweep(const RunConfig& base, const std::vector<SweepPoint>& points,
                             const std::optional<std::filesystem::path>& dir,
                             unsigned max_threads = 0);

}  // namespace lohe
