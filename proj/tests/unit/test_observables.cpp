#include <gtest/gtest.h>

#include <cmath>

#include "lohe/dynamics.hpp"
#include "lohe/error.hpp"
#include "lohe/graph.hpp"
#include "lohe/observables.hpp"
#include "lohe/presets.hpp"
#include "lohe/wspace.hpp"
#include "test_support.hpp"

using namespace lohe;

namespace {

struct PresetRun {
  FrequencyEnsemble ens;
  Digraph g;
  SyncVerdict verdict;
  Vector beta;
  Trajectory traj;
  CertificateTrace trace;
};

PresetRun run_preset(const std::string& name, double k, const Vector& p, std::uint64_t seed,
                     double t_end, std::int64_t stride) {
  const Preset& pre = *find_preset(name);
  FrequencyEnsemble ens = oracle::to_ensemble(pre.omegas);
  Digraph g(pre.adjacency.cast<double>());
  SyncVerdict verdict = compute_w(ens);
  Vector beta = left_null_vector(laplacian(g), is_strongly_connected(g));
  const OscillatorSystem sys(ens, g, k, sample_hemisphere(p, 5, 0.05, seed));
  Trajectory traj = integrate(sys, {.dt = 1e-3, .t_end = t_end, .stride = stride, .eta0 = p});
  CertificateTrace trace = compute_certificates(traj, verdict.w, beta, g, k);
  return {std::move(ens), std::move(g), std::move(verdict), std::move(beta), std::move(traj),
          std::move(trace)};
}

const Vector kN4Center = Vector{{0, 1, -1, 0}}.normalized();

}  // namespace

TEST(HValues, Examples) {
  const Vector eta = Vector::Unit(3, 0);
  EXPECT_EQ(h_values(eta.replicate(1, 4), eta), Vector::Ones(4));
  State perp(3, 2);
  perp << 0, 0, 1, 0, 0, 1;
  EXPECT_EQ(h_values(perp, eta), Vector::Zero(2));

  const State s = sample_sphere(5, 5, 3);
  EXPECT_EQ(h_values(s, Vector::Unit(5, 3)), Vector(s.row(3).transpose()));
}

TEST(Lyapunov, Examples) {
  const Vector eta = Vector::Unit(4, 2);
  const Vector beta = Vector::Constant(5, 0.2);
  EXPECT_DOUBLE_EQ(lyapunov(eta.replicate(1, 5), eta, beta), -1.0);
  EXPECT_DOUBLE_EQ(lyapunov((-eta).replicate(1, 5), eta, beta), 1.0);

  const Vector weights{{0.1, 0.3, 0.2, 0.15, 0.25}};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const State s = sample_hemisphere(eta, 5, 0.05, seed);
    double direct = 0.0;
    for (Eigen::Index i = 0; i < 5; ++i)
      for (Eigen::Index c = 0; c < 4; ++c) direct -= weights(i) * eta(c) * s(c, i);
    EXPECT_NEAR(lyapunov(s, eta, weights), direct, 1e-14);
    const double v = lyapunov(s, eta, weights);
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(LyapunovRate, Examples) {
  const Digraph g = Digraph::directed_cycle(5);
  const Vector beta = Vector::Constant(5, 0.2);
  const Vector eta = Vector::Unit(4, 0);
  EXPECT_EQ(lyapunov_rate(eta.replicate(1, 5), eta, beta, g, 3.0), 0.0);
  const State s = sample_hemisphere(eta, 5, 0.05, 2);
  EXPECT_EQ(lyapunov_rate(s, eta, beta, g, 0.0), -0.0);
  // Nonpositive inside the hemisphere.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    EXPECT_LE(lyapunov_rate(sample_hemisphere(eta, 5, 0.05, seed), eta, beta, g, 0.9), 0.0);
  }
}

TEST(LyapunovRate, VanishesAtEqualStatesAnywhere) {
  const Digraph g = Digraph::complete(4);
  const Vector beta = Vector::Constant(4, 0.25);
  const State s = sample_sphere(6, 1, 5).replicate(1, 4);
  EXPECT_NEAR(lyapunov_rate(s, Vector::Unit(6, 1), beta, g, 2.0), 0.0, 1e-15);
}

TEST(Diameter, Examples) {
  const Vector v = Vector::Unit(3, 1);
  EXPECT_EQ(diameter(v.replicate(1, 3)), 0.0);
  State antipodal(3, 2);
  antipodal.col(0) = v;
  antipodal.col(1) = -v;
  EXPECT_DOUBLE_EQ(diameter(antipodal), 2.0);
  EXPECT_DOUBLE_EQ(diameter(Matrix::Identity(3, 3)), std::sqrt(2.0));
}

TEST(DistanceToW, Examples) {
  const Subspace w = Subspace::span((Matrix(3, 2) << 1, 0, 0, 1, 0, 0).finished());
  State in(3, 2);
  in << 1, 0.6, 0, 0.8, 0, 0;
  EXPECT_NEAR(distance_to_w(in, w), 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(distance_to_w(sample_sphere(3, 4, 1), Subspace::zero(3)), 1.0);
  in(2, 1) = 1.0;
  EXPECT_NEAR(distance_to_w(in, w), 1.0, 1e-15);
  EXPECT_THROW(distance_to_w(in, Subspace::zero(4)), Error);
}

TEST(DistanceToW, QuinticRunLeadingComponentsDecay) {
  const PresetRun r = run_preset("paper-n5", 1.0, Vector::Unit(5, 3), 1, 40.0, 100);
  const State& end = r.traj.states.back();
  const double leading = end.topRows(3).colwise().norm().maxCoeff();
  EXPECT_NEAR(r.trace.dist_w.back(), leading, 1e-15);
  EXPECT_LT(leading, 1e-3);
  EXPECT_GT(r.trace.dist_w.front(), 0.1);
}

TEST(Certificates, TraceShapeAndRecomputation) {
  const PresetRun r = run_preset("paper-n4", 0.9, kN4Center, 2, 10.0, 10);
  const auto& tr = r.trace;
  ASSERT_TRUE(tr.has_certificate);
  EXPECT_FALSE(tr.w_trivial);
  ASSERT_EQ(tr.times.size(), r.traj.times.size());
  for (const auto* seq : {&tr.h_min, &tr.v, &tr.v_dot_analytic, &tr.diameter, &tr.dist_w}) {
    EXPECT_EQ(seq->size(), tr.times.size());
  }
  for (std::size_t s = 0; s < tr.times.size(); ++s) {
    double v = 0.0;
    for (Eigen::Index i = 0; i < 5; ++i) v -= r.beta(i) * r.traj.etas[s].dot(r.traj.states[s].col(i));
    EXPECT_NEAR(tr.v[s], v, 1e-12);
    EXPECT_LE(tr.v_dot_analytic[s], 1e-12);
  }
  EXPECT_GE(tr.h_min.front(), 0.05);
}

TEST(Certificates, FiniteDifferenceAgreesAtUnitStride) {
  const PresetRun r = run_preset("paper-n4", 0.9, kN4Center, 3, 20.0, 1);
  const CertificateCheck c = check_certificates(r.trace, monotonicity_slack(1e-3));
  EXPECT_LE(c.max_fd_error, 1e-5);
  EXPECT_GT(c.max_fd_error, 0.0);
  EXPECT_EQ(c.h_violations, 0u);
  EXPECT_EQ(c.v_violations, 0u);
  EXPECT_LE(c.max_v_dot, 1e-12);
}

TEST(Certificates, MonotoneOnSyncPresets) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const PresetRun a = run_preset("paper-n4", 0.9, kN4Center, seed, 30.0, 10);
    const PresetRun b = run_preset("paper-n5", 0.9, Vector::Unit(5, 3), seed, 30.0, 10);
    for (const PresetRun* r : {&a, &b}) {
      const CertificateCheck c = check_certificates(r->trace, monotonicity_slack(1e-3));
      EXPECT_EQ(c.h_violations, 0u);
      EXPECT_EQ(c.v_violations, 0u);
      EXPECT_LE(c.worst_h_drop, 1e-6);
      EXPECT_LE(c.worst_v_rise, 1e-6);
    }
  }
}

TEST(Certificates, NoEtaMeansNoCertificate) {
  const Preset& pre = *find_preset("paper-n3");
  const FrequencyEnsemble ens = oracle::to_ensemble(pre.omegas);
  const Digraph g(pre.adjacency.cast<double>());
  const Trajectory traj = integrate(OscillatorSystem(ens, g, 2.0, sample_sphere(3, 5, 1)),
                                    {.dt = 1e-3, .t_end = 1.0, .stride = 100});
  const CertificateTrace tr = compute_certificates(traj, Subspace::zero(3), Vector::Constant(5, 0.2),
                                                   g, 2.0);
  EXPECT_FALSE(tr.has_certificate);
  EXPECT_TRUE(tr.w_trivial);
  EXPECT_TRUE(std::isnan(tr.v.front()));
  EXPECT_DOUBLE_EQ(tr.dist_w.back(), 1.0);
  const CertificateCheck c = check_certificates(tr, 1e-6);
  EXPECT_EQ(c.h_violations + c.v_violations, 0u);
}

TEST(CheckCertificates, CountsViolationsBeyondSlack) {
  CertificateTrace tr;
  tr.has_certificate = true;
  tr.times = {0, 1, 2, 3};
  tr.h_min = {0.1, 0.2, 0.2 - 5e-7, 0.1};
  tr.v = {0.0, -0.1, -0.1 + 2e-6, -0.2};
  tr.v_dot_analytic = {-0.1, -0.05, 0.0, -0.1};
  tr.diameter = tr.dist_w = {1, 1, 1, 1};
  const CertificateCheck c = check_certificates(tr, 1e-6);
  EXPECT_EQ(c.h_violations, 1u);
  EXPECT_EQ(c.v_violations, 1u);
  EXPECT_NEAR(c.worst_h_drop, 0.2 - 5e-7 - 0.1, 1e-15);
  EXPECT_NEAR(c.worst_v_rise, 2e-6, 1e-15);
  EXPECT_DOUBLE_EQ(c.max_v_dot, 0.0);
  // Centered differences: (-0.1 + 2e-6 - 0) / 2 vs -0.05, (-0.2 + 0.1) / 2 vs 0.
  EXPECT_NEAR(c.max_fd_error, 0.05, 1e-12);
}

TEST(MonotonicitySlack, ScalesWithStep) {
  EXPECT_DOUBLE_EQ(monotonicity_slack(1e-3), 1e-6);
  EXPECT_DOUBLE_EQ(monotonicity_slack(1e-2), 1e-5);
}

TEST(Summarize, DetectsSustainedSync) {
  CertificateTrace tr;
  for (int s = 0; s <= 100; ++s) {
    tr.times.push_back(s);
    tr.diameter.push_back(s < 60 ? 1.0 : 1e-4);
    tr.dist_w.push_back(0.5);
  }
  const SyncSummary sum = summarize(tr, 1e-3, 20.0);
  EXPECT_TRUE(sum.sync_detected);
  EXPECT_DOUBLE_EQ(sum.settle_time, 60.0);
  EXPECT_DOUBLE_EQ(sum.final_diameter, 1e-4);
  EXPECT_DOUBLE_EQ(sum.final_dist_w, 0.5);
  EXPECT_DOUBLE_EQ(sum.min_diameter, 1e-4);
  // Trapezoid over [20, 100]: 39 units at 1, one ramp, 40 units at 1e-4.
  EXPECT_NEAR(sum.mean_diameter, (39.0 + 0.5 * (1.0 + 1e-4) + 40 * 1e-4) / 80.0, 1e-14);

  tr.diameter[95] = 0.5;
  const SyncSummary broken = summarize(tr);
  EXPECT_FALSE(broken.sync_detected);
  EXPECT_DOUBLE_EQ(broken.settle_time, 96.0);

  tr.diameter.back() = 0.5;
  EXPECT_LT(summarize(tr).settle_time, 0.0);
}
