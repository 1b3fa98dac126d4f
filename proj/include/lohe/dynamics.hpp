#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lohe/graph.hpp"
#include "lohe/linalg.hpp"
#include "lohe/wspace.hpp"

namespace lohe {

/// m oscillator states packed as the columns of an n x m matrix.
using State = Matrix;

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kDefaultMargin = 0.05;
/// Per-step renormalization correction above which integration aborts.
inline constexpr double kMaxNormCorrection = 1e-6;

/// Unit-sphere oscillator network with frequency ensemble, topology and gain.
struct OscillatorSystem {
  OscillatorSystem(FrequencyEnsemble ensemble, Digraph graph, double gain, State initial);

  FrequencyEnsemble ens;
  Digraph g;
  double k;
  State state;
};

/// dr_i/dt = Omega_i r_i + k sum_j a_ij (r_j - (r_i . r_j) r_i) for every
/// column of `state`.
State rhs(const FrequencyEnsemble& ens, const Digraph& g, double k, const State& state);
inline State rhs(const OscillatorSystem& sys) { return rhs(sys.ens, sys.g, sys.k, sys.state); }

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  /// eta(t) with d eta/dt = Omega_1 eta, sampled alongside `states`; empty
  /// when no auxiliary vector was requested.
  std::vector<Vector> etas;
  double dt = 0.0;
  std::int64_t stride = 1;
  std::int64_t steps = 0;
  /// Largest max_i | ||r_i|| - 1 | seen before any renormalization.
  double max_norm_correction = 0.0;
};

struct IntegrateOptions {
  double dt = kDefaultStep;
  double t_end = 0.0;
  std::int64_t stride = 1;
  std::optional<Vector> eta0;
};

/// Fixed-step classical RK4 with per-step renormalization onto the sphere.
/// When t_end is not a multiple of dt the last step is shortened to land on
/// it. Snapshots are kept every `stride` steps and always at the final step. Throws StepTooLarge
/// when a renormalization correction exceeds kMaxNormCorrection.
Trajectory integrate(const OscillatorSystem& sys, const IntegrateOptions& opts);

/// m unit vectors uniform on the cap { r : p . r >= margin }. Deterministic
/// for a given seed.
State sample_hemisphere(const Vector& p, Eigen::Index m, double margin, std::uint64_t seed);

/// m unit vectors uniform on the whole sphere S^{n-1}.
State sample_sphere(Eigen::Index n, Eigen::Index m, std::uint64_t seed);

}  // namespace lohe
