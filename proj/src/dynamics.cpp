#include "lohe/dynamics.hpp"

#include <cmath>
#include <random>
#include <string>

#include "lohe/error.hpp"

namespace lohe {

OscillatorSystem::OscillatorSystem(FrequencyEnsemble ensemble, Digraph graph, double gain,
                                   State initial)
    : ens(std::move(ensemble)), g(std::move(graph)), k(gain), state(std::move(initial)) {
  if (static_cast<Eigen::Index>(ens.size()) != g.agents()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(ens.size()) + " frequency matrices for a graph with " +
                    std::to_string(g.agents()) + " agents");
  }
  if (state.rows() != ens.dim() || state.cols() != g.agents()) {
    throw Error(ErrorCode::DimensionMismatch, "initial state must be n x m");
  }
  if (!(k >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "coupling gain must be nonnegative");
  }
  for (Eigen::Index i = 0; i < state.cols(); ++i) {
    if (std::abs(state.col(i).norm() - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidArgument,
                  "initial state r_" + std::to_string(i + 1) + " is not a unit vector");
    }
  }
}

State rhs(const FrequencyEnsemble& ens, const Digraph& g, double k, const State& state) {
  const Matrix& a = g.adjacency();
  State out(state.rows(), state.cols());
  for (Eigen::Index i = 0; i < state.cols(); ++i) {
    out.col(i).noalias() = ens[static_cast<std::size_t>(i)].matrix() * state.col(i);
  }
  if (k == 0.0) {
    return out;
  }
  const Matrix gram = state.transpose() * state;
  // pull_i = sum_j a_ij (r_i . r_j)
  const Vector pull = a.cwiseProduct(gram).rowwise().sum();
  out.noalias() += k * (state * a.transpose());
  out -= k * (state * pull.asDiagonal());
  return out;
}

namespace {

double renormalize(State& s) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.cols(); ++i) {
    const double norm = s.col(i).norm();
    worst = std::max(worst, std::abs(norm - 1.0));
    s.col(i) /= norm;
  }
  return worst;
}

}  // namespace

Trajectory integrate(const OscillatorSystem& sys, const IntegrateOptions& opts) {
  if (!(opts.dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  }
  if (!(opts.t_end >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "t_end must be nonnegative");
  }
  if (opts.stride < 1) {
    throw Error(ErrorCode::InvalidArgument, "stride must be at least 1");
  }
  const bool with_eta = opts.eta0.has_value();
  const Matrix& omega1 = sys.ens[0].matrix();
  if (with_eta && opts.eta0->size() != sys.ens.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "eta0 must have dimension n");
  }

  Trajectory traj;
  traj.dt = opts.dt;
  traj.stride = opts.stride;
  // Whole steps of dt, then one shorter step so the run ends exactly at t_end.
  const double ratio = opts.t_end / opts.dt;
  traj.steps = static_cast<std::int64_t>(std::ceil(ratio - 1e-9));
  const double last_dt = opts.t_end - static_cast<double>(traj.steps - 1) * opts.dt;

  State r = sys.state;
  Vector eta = with_eta ? Vector(opts.eta0->normalized()) : Vector();
  auto record = [&](std::int64_t step) {
    traj.times.push_back(step == traj.steps ? opts.t_end : static_cast<double>(step) * opts.dt);
    traj.states.push_back(r);
    if (with_eta) {
      traj.etas.push_back(eta);
    }
  };
  record(0);

  for (std::int64_t step = 1; step <= traj.steps; ++step) {
    const double h = step == traj.steps ? last_dt : opts.dt;
    const State k1 = rhs(sys.ens, sys.g, sys.k, r);
    const State k2 = rhs(sys.ens, sys.g, sys.k, r + 0.5 * h * k1);
    const State k3 = rhs(sys.ens, sys.g, sys.k, r + 0.5 * h * k2);
    const State k4 = rhs(sys.ens, sys.g, sys.k, r + h * k3);
    r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    double correction = renormalize(r);

    if (with_eta) {
      const Vector e1 = omega1 * eta;
      const Vector e2 = omega1 * (eta + 0.5 * h * e1);
      const Vector e3 = omega1 * (eta + 0.5 * h * e2);
      const Vector e4 = omega1 * (eta + h * e3);
      eta += (h / 6.0) * (e1 + 2.0 * e2 + 2.0 * e3 + e4);
      const double norm = eta.norm();
      correction = std::max(correction, std::abs(norm - 1.0));
      eta /= norm;
    }

    traj.max_norm_correction = std::max(traj.max_norm_correction, correction);
    if (correction > kMaxNormCorrection) {
      throw Error(ErrorCode::StepTooLarge,
                  "renormalization correction " + std::to_string(correction) + " at step " +
                      std::to_string(step) + " (dt = " + std::to_string(opts.dt) + ")");
    }
    if (step % opts.stride == 0 || step == traj.steps) {
      record(step);
    }
  }
  return traj;
}

namespace {

Vector random_unit(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = normal(rng);
    }
    norm = v.norm();
  } while (norm < 1e-12);
  return v / norm;
}

}  // namespace

State sample_hemisphere(const Vector& p, Eigen::Index m, double margin, std::uint64_t seed) {
  const Eigen::Index n = p.size();
  if (n < 1 || std::abs(p.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidArgument, "cap center p must be a unit vector");
  }
  if (!(margin > 0.0 && margin < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "margin must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  State out(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (n == 1) {
      out.col(i) = p;
      continue;
    }
    if (n == 2) {
      const double half_width = std::acos(margin);
      const double phi = half_width * (2.0 * uniform(rng) - 1.0);
      const Vector q{{-p(1), p(0)}};
      out.col(i) = std::cos(phi) * p + std::sin(phi) * q;
      continue;
    }
    // The height t = p . r of a uniform point on S^{n-1} has density
    // proportional to (1 - t^2)^((n-3)/2); it is nonincreasing on [margin, 1],
    // so a uniform proposal accepted with the density ratio at t = margin is
    // exact.
    const double expo = 0.5 * static_cast<double>(n - 3);
    const double floor = 1.0 - margin * margin;
    double t = 0.0;
    while (true) {
      t = margin + (1.0 - margin) * uniform(rng);
      if (expo == 0.0 || uniform(rng) <= std::pow((1.0 - t * t) / floor, expo)) {
        break;
      }
    }
    Vector u;
    double norm = 0.0;
    do {
      u = random_unit(rng, n);
      u -= u.dot(p) * p;
      norm = u.norm();
    } while (norm < 1e-8);
    out.col(i) = (t * p + std::sqrt(1.0 - t * t) * (u / norm)).normalized();
  }
  return out;
}

State sample_sphere(Eigen::Index n, Eigen::Index m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  State out(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    out.col(i) = random_unit(rng, n);
  }
  return out;
}

}  // namespace lohe
