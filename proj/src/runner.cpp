#include "lohe/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include "lohe/error.hpp"
#include "lohe/report.hpp"

namespace lohe {

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Sync: return "SYNC";
    case VerdictStatus::NoSync: return "NO-SYNC";
    case VerdictStatus::UnsupportedTopology: return "UNSUPPORTED_TOPOLOGY";
  }
  return "UNSUPPORTED_TOPOLOGY";
}

int exit_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Sync: return 0;
    case VerdictStatus::NoSync: return 1;
    case VerdictStatus::UnsupportedTopology: return 2;
  }
  return 2;
}

RunReport analyze(const RunConfig& cfg) {
  validate(cfg);
  const Digraph g = make_graph(cfg);
  const FrequencyEnsemble ens = make_ensemble(cfg);

  Hypotheses hyp;
  hyp.component_count = strongly_connected_components(g).size();
  hyp.strongly_connected = hyp.component_count == 1;
  for (const auto& o : cfg.omegas) {
    hyp.max_skew_residual = std::max(hyp.max_skew_residual, skew_residual(o));
  }
  hyp.skew_symmetric = true;

  SyncVerdict verdict = compute_w(ens);
  RunReport report{cfg, hyp, VerdictStatus::NoSync, verdict, quick_reject(ens), std::nullopt, {}};
  if (!hyp.strongly_connected) {
    report.status = VerdictStatus::UnsupportedTopology;
  } else {
    report.status = verdict.synchronizable ? VerdictStatus::Sync : VerdictStatus::NoSync;
  }
  return report;
}

RunArtifacts run(const RunConfig& cfg) {
  RunReport report = analyze(cfg);
  if (report.status == VerdictStatus::UnsupportedTopology) {
    throw Error(ErrorCode::NotStronglyConnected,
                "graph has " + std::to_string(report.hypotheses.component_count) +
                    " strongly connected components (UNSUPPORTED_TOPOLOGY)");
  }
  const Digraph g = make_graph(cfg);
  const FrequencyEnsemble ens = make_ensemble(cfg);
  const SyncVerdict& verdict = report.verdict;

  Outcome outcome;
  outcome.beta = left_null_vector(laplacian(g), true);
  outcome.t_end = effective_t_end(cfg, verdict.synchronizable);
  outcome.monotonicity_slack = monotonicity_slack(cfg.dt);

  IntegrateOptions opts;
  opts.dt = cfg.dt;
  opts.t_end = outcome.t_end;
  opts.stride = cfg.stride;

  State initial;
  if (verdict.synchronizable) {
    Vector p = cfg.p ? Vector(cfg.p->normalized()) : *verdict.p;
    const double residual = verdict.w.residual(p);
    if (residual > 1e-10) {
      throw Error(ErrorCode::ValidationError,
                  "p: cap center is not in W (projection residual " + format_double(residual) +
                      ")");
    }
    initial = sample_hemisphere(p, g.agents(), cfg.margin, cfg.seed);
    outcome.initial_condition = "cap";
    outcome.p = p;
    opts.eta0 = p;
  } else {
    initial = sample_sphere(ens.dim(), g.agents(), cfg.seed);
    outcome.initial_condition = "sphere";
  }

  OscillatorSystem sys(ens, g, cfg.k, std::move(initial));
  Trajectory traj = integrate(sys, opts);
  CertificateTrace trace = compute_certificates(traj, verdict.w, outcome.beta, g, cfg.k);
  outcome.certificates = check_certificates(trace, outcome.monotonicity_slack);
  outcome.summary = summarize(trace, kSyncDiameter, 0.2 * outcome.t_end);
  outcome.max_norm_correction = traj.max_norm_correction;

  if (outcome.summary.sync_detected && !verdict.synchronizable) {
    report.flags.emplace_back("INCONSISTENT");
  }
  if (trace.w_trivial) {
    report.flags.emplace_back("W_TRIVIAL");
  }
  if (trace.has_certificate &&
      (outcome.certificates.h_violations > 0 || outcome.certificates.v_violations > 0 ||
       outcome.certificates.max_v_dot > 1e-12)) {
    report.flags.emplace_back("CERTIFICATE_VIOLATION");
  }
  report.outcome = std::move(outcome);
  return RunArtifacts{std::move(report), std::move(traj), std::move(trace)};
}

void write_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::InvalidArgument, "cannot write " + (dir / name).string());
    }
    return out;
  };
  {
    auto out = open("trajectory.csv");
    write_trajectory_csv(out, artifacts.trajectory);
  }
  {
    auto out = open("certificates.csv");
    write_certificates_csv(out, artifacts.certificates);
  }
  {
    auto out = open("report.json");
    out << report_json(artifacts.report) << '\n';
  }
}

namespace {

std::string point_dir(const SweepPoint& pt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "k%g_seed%llu", pt.k, static_cast<unsigned long long>(pt.seed));
  return buf;
}

}  // namespace

std::vector<RunReport> sweep(const RunConfig& base, const std::vector<SweepPoint>& points,
                             const std::optional<std::filesystem::path>& dir,
                             unsigned max_threads) {
  std::vector<std::optional<RunReport>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        RunConfig cfg = base;
        cfg.k = points[i].k;
        cfg.seed = points[i].seed;
        cfg.name = base.name + "/" + point_dir(points[i]);
        RunArtifacts artifacts = run(cfg);
        if (dir) {
          write_artifacts(artifacts, *dir / point_dir(points[i]));
        }
        results[i] = std::move(artifacts.report);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = max_threads != 0 ? max_threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<RunReport> out;
  out.reserve(points.size());
  for (auto& r : results) {
    out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace lohe
