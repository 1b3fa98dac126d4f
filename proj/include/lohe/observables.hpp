#pragma once

#include <vector>

#include "lohe/dynamics.hpp"
#include "lohe/graph.hpp"
#include "lohe/linalg.hpp"

namespace lohe {

/// h_i = eta . r_i
Vector h_values(const State& snapshot, const Vector& eta);

/// V = -sum_i beta_i eta . r_i
double lyapunov(const State& snapshot, const Vector& eta, const Vector& beta);

/// Analytic dV/dt = -k sum_ij a_ij beta_i (1 - r_i . r_j) h_i, valid while
/// eta stays in W.
double lyapunov_rate(const State& snapshot, const Vector& eta, const Vector& beta,
                     const Digraph& g, double k);

/// max_{i,j} ||r_i - r_j||
double diameter(const State& snapshot);

/// max_i ||r_i - P_W r_i||. For the zero subspace this is max_i ||r_i||,
/// i.e. 1.0 for unit states.
double distance_to_w(const State& snapshot, const Subspace& w);

/// Integrator error allowance for monotonicity checks, scaled linearly from
/// 1e-6 at dt = 1e-3.
inline double monotonicity_slack(double dt) { return 1e-6 * (dt / kDefaultStep); }

struct CertificateTrace {
  std::vector<double> times;
  /// h_min, v and v_dot_analytic are NaN when the trajectory carries no eta
  /// (NO-SYNC runs have no certificate).
  std::vector<double> h_min;
  std::vector<double> v;
  std::vector<double> v_dot_analytic;
  std::vector<double> diameter;
  std::vector<double> dist_w;
  bool has_certificate = false;
  /// Set when W = {0}; dist_w is then identically 1.
  bool w_trivial = false;
};

CertificateTrace compute_certificates(const Trajectory& traj, const Subspace& w,
                                      const Vector& beta, const Digraph& g, double k);

struct CertificateCheck {
  std::size_t h_violations = 0;
  std::size_t v_violations = 0;
  double worst_h_drop = 0.0;
  double worst_v_rise = 0.0;
  double max_v_dot = 0.0;
  /// max |Vdot_analytic - centered difference of V| over interior samples.
  double max_fd_error = 0.0;
};

/// Monotonicity and finite-difference checks, violations counted beyond
/// `slack`.
CertificateCheck check_certificates(const CertificateTrace& trace, double slack);

struct SyncSummary {
  double final_diameter = 0.0;
  double final_dist_w = 0.0;
  /// Diameter below threshold on every sample with t >= 0.9 t_end.
  bool sync_detected = false;
  /// First sample time after which the diameter stays below threshold, or a
  /// negative value if it never settles.
  double settle_time = -1.0;
  double min_diameter = 0.0;
  double mean_diameter = 0.0;
};

inline constexpr double kSyncDiameter = 1e-3;

/// `window_start`: time from which min/mean diameter are measured.
SyncSummary summarize(const CertificateTrace& trace, double threshold = kSyncDiameter,
                      double window_start = 0.0);

}  // namespace lohe
