#include "lohe/observables.hpp"

#include <cmath>
#include <limits>

#include "lohe/error.hpp"

namespace lohe {

Vector h_values(const State& snapshot, const Vector& eta) {
  return snapshot.transpose() * eta;
}

double lyapunov(const State& snapshot, const Vector& eta, const Vector& beta) {
  return -beta.dot(h_values(snapshot, eta));
}

double lyapunov_rate(const State& snapshot, const Vector& eta, const Vector& beta,
                     const Digraph& g, double k) {
  const Vector h = h_values(snapshot, eta);
  const Matrix gram = snapshot.transpose() * snapshot;
  const Matrix& a = g.adjacency();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) {
        row += a(i, j) * (1.0 - gram(i, j));
      }
    }
    sum += beta(i) * row * h(i);
  }
  return -k * sum;
}

double diameter(const State& snapshot) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < snapshot.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < snapshot.cols(); ++j) {
      worst = std::max(worst, (snapshot.col(i) - snapshot.col(j)).norm());
    }
  }
  return worst;
}

double distance_to_w(const State& snapshot, const Subspace& w) {
  if (w.ambient_dim() != snapshot.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "distance_to_w: ambient dimension mismatch");
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < snapshot.cols(); ++i) {
    worst = std::max(worst, w.residual(snapshot.col(i)));
  }
  return worst;
}

CertificateTrace compute_certificates(const Trajectory& traj, const Subspace& w,
                                      const Vector& beta, const Digraph& g, double k) {
  CertificateTrace trace;
  trace.times = traj.times;
  trace.has_certificate = !traj.etas.empty();
  trace.w_trivial = w.dim() == 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::size_t count = traj.states.size();
  trace.h_min.reserve(count);
  trace.v.reserve(count);
  trace.v_dot_analytic.reserve(count);
  trace.diameter.reserve(count);
  trace.dist_w.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const State& snap = traj.states[s];
    if (trace.has_certificate) {
      const Vector& eta = traj.etas[s];
      trace.h_min.push_back(h_values(snap, eta).minCoeff());
      trace.v.push_back(lyapunov(snap, eta, beta));
      trace.v_dot_analytic.push_back(lyapunov_rate(snap, eta, beta, g, k));
    } else {
      trace.h_min.push_back(nan);
      trace.v.push_back(nan);
      trace.v_dot_analytic.push_back(nan);
    }
    trace.diameter.push_back(diameter(snap));
    trace.dist_w.push_back(distance_to_w(snap, w));
  }
  return trace;
}

CertificateCheck check_certificates(const CertificateTrace& trace, double slack) {
  CertificateCheck check;
  if (!trace.has_certificate || trace.times.empty()) {
    return check;
  }
  const auto& t = trace.times;
  check.max_v_dot = trace.v_dot_analytic.front();
  for (std::size_t s = 0; s < t.size(); ++s) {
    check.max_v_dot = std::max(check.max_v_dot, trace.v_dot_analytic[s]);
    if (s == 0) {
      continue;
    }
    const double drop = trace.h_min[s - 1] - trace.h_min[s];
    const double rise = trace.v[s] - trace.v[s - 1];
    check.worst_h_drop = std::max(check.worst_h_drop, drop);
    check.worst_v_rise = std::max(check.worst_v_rise, rise);
    if (drop > slack) {
      ++check.h_violations;
    }
    if (rise > slack) {
      ++check.v_violations;
    }
  }
  for (std::size_t s = 1; s + 1 < t.size(); ++s) {
    const double back = t[s] - t[s - 1];
    const double ahead = t[s + 1] - t[s];
    if (std::abs(back - ahead) > 1e-9 * ahead) {
      continue;
    }
    const double fd = (trace.v[s + 1] - trace.v[s - 1]) / (t[s + 1] - t[s - 1]);
    check.max_fd_error = std::max(check.max_fd_error, std::abs(fd - trace.v_dot_analytic[s]));
  }
  return check;
}

SyncSummary summarize(const CertificateTrace& trace, double threshold, double window_start) {
  SyncSummary out;
  if (trace.times.empty()) {
    return out;
  }
  const auto& t = trace.times;
  const auto& d = trace.diameter;
  out.final_diameter = d.back();
  out.final_dist_w = trace.dist_w.back();

  const double tail_start = 0.9 * t.back();
  out.sync_detected = true;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s] >= tail_start && !(d[s] < threshold)) {
      out.sync_detected = false;
    }
  }

  std::size_t settle = t.size();
  while (settle > 0 && d[settle - 1] < threshold) {
    --settle;
  }
  out.settle_time = settle < t.size() ? t[settle] : -1.0;

  out.min_diameter = std::numeric_limits<double>::infinity();
  double area = 0.0;
  double span = 0.0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s] < window_start) {
      continue;
    }
    out.min_diameter = std::min(out.min_diameter, d[s]);
    if (s > 0 && t[s - 1] >= window_start) {
      area += 0.5 * (d[s] + d[s - 1]) * (t[s] - t[s - 1]);
      span += t[s] - t[s - 1];
    }
  }
  out.mean_diameter = span > 0.0 ? area / span : out.min_diameter;
  return out;
}

}  // namespace lohe
