#include "lohe/report.hpp"

#include <cstdio>
#include <json.hpp>

#include "lohe/version.hpp"

namespace lohe {

using ojson = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  if (traj.states.empty()) {
    out << "t\n";
    return;
  }
  const Eigen::Index n = traj.states.front().rows();
  const Eigen::Index m = traj.states.front().cols();
  out << 't';
  for (Eigen::Index i = 1; i <= m; ++i) {
    for (Eigen::Index c = 1; c <= n; ++c) {
      out << ",r" << i << '_' << c;
    }
  }
  out << '\n';
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    out << format_double(traj.times[s]);
    const State& snap = traj.states[s];
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index c = 0; c < n; ++c) {
        out << ',' << format_double(snap(c, i));
      }
    }
    out << '\n';
  }
}

void write_certificates_csv(std::ostream& out, const CertificateTrace& trace) {
  out << "t,h_min,V,Vdot,diameter,dist_w\n";
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    out << format_double(trace.times[s]) << ',' << format_double(trace.h_min[s]) << ','
        << format_double(trace.v[s]) << ',' << format_double(trace.v_dot_analytic[s]) << ','
        << format_double(trace.diameter[s]) << ',' << format_double(trace.dist_w[s]) << '\n';
  }
}

namespace {

ojson vector_json(const Vector& v) {
  ojson arr = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(v(i));
  }
  return arr;
}

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows.push_back(vector_json(m.row(i).transpose()));
  }
  return rows;
}

ojson config_json(const RunConfig& cfg) {
  ojson j;
  j["name"] = cfg.name;
  j["preset"] = cfg.preset ? ojson(*cfg.preset) : ojson(nullptr);
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  ojson omegas = ojson::array();
  for (const auto& o : cfg.omegas) {
    omegas.push_back(matrix_json(o));
  }
  j["omegas"] = std::move(omegas);
  j["adjacency"] = matrix_json(cfg.adjacency);
  j["k"] = cfg.k;
  j["dt"] = cfg.dt;
  j["t_end"] = cfg.t_end ? ojson(*cfg.t_end) : ojson(nullptr);
  j["stride"] = cfg.stride;
  j["seed"] = cfg.seed;
  j["margin"] = cfg.margin;
  j["p"] = cfg.p ? vector_json(*cfg.p) : ojson(nullptr);
  return j;
}

}  // namespace

std::string report_json(const RunReport& report) {
  ojson j;
  j["status"] = std::string(to_string(report.status));

  const auto& h = report.hypotheses;
  j["hypotheses"] = {{"strongly_connected", h.strongly_connected},
                     {"component_count", h.component_count},
                     {"skew_symmetric", h.skew_symmetric},
                     {"max_skew_residual", h.max_skew_residual}};

  const auto& v = report.verdict;
  ojson verdict;
  verdict["synchronizable"] = v.synchronizable;
  verdict["dim_w"] = v.dim_w;
  verdict["shortcut"] = std::string(to_string(v.shortcut_used));
  ojson basis = ojson::array();
  for (Eigen::Index c = 0; c < v.w.dim(); ++c) {
    basis.push_back(vector_json(v.w.basis().col(c)));
  }
  verdict["w_basis"] = std::move(basis);
  verdict["p"] = v.p ? vector_json(*v.p) : ojson(nullptr);
  verdict["rank_witness"] = v.rank_witness;
  verdict["cross_check_distance"] = v.cross_check_distance;
  if (report.quick_reject) {
    const auto& w = *report.quick_reject;
    verdict["quick_reject"] = {{"i", w.i + 1}, {"j", w.j + 1}, {"det", w.det},
                               {"planar", w.planar}};
  } else {
    verdict["quick_reject"] = nullptr;
  }
  j["verdict"] = std::move(verdict);

  if (report.outcome) {
    const auto& o = *report.outcome;
    ojson out;
    out["t_end"] = o.t_end;
    out["initial_condition"] = o.initial_condition;
    out["p"] = o.p ? vector_json(*o.p) : ojson(nullptr);
    out["beta"] = vector_json(o.beta);
    out["final_diameter"] = o.summary.final_diameter;
    out["final_dist_w"] = o.summary.final_dist_w;
    out["sync_detected"] = o.summary.sync_detected;
    out["settle_time"] = o.summary.settle_time >= 0.0 ? ojson(o.summary.settle_time)
                                                      : ojson(nullptr);
    out["min_diameter_tail"] = o.summary.min_diameter;
    out["mean_diameter_tail"] = o.summary.mean_diameter;
    // Sphere-sampled runs carry no eta, hence no certificate.
    const bool certified = o.p.has_value();
    auto cert = [&](auto value) { return certified ? ojson(value) : ojson(nullptr); };
    out["h_violations"] = cert(o.certificates.h_violations);
    out["v_violations"] = cert(o.certificates.v_violations);
    out["worst_h_drop"] = cert(o.certificates.worst_h_drop);
    out["worst_v_rise"] = cert(o.certificates.worst_v_rise);
    out["max_v_dot"] = cert(o.certificates.max_v_dot);
    out["max_fd_error"] = cert(o.certificates.max_fd_error);
    out["monotonicity_slack"] = o.monotonicity_slack;
    out["max_norm_correction"] = o.max_norm_correction;
    j["outcome"] = std::move(out);
  } else {
    j["outcome"] = nullptr;
  }

  j["flags"] = report.flags;
  j["provenance"] = {{"tool", kToolName},
                     {"version", kVersion},
                     {"seed", report.config.seed},
                     {"config", config_json(report.config)}};
  return j.dump(2);
}

void write_sweep_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << "k,seed,status,sync_detected,final_diameter,final_dist_w,settle_time,"
         "mean_diameter_tail,h_violations,v_violations,flags\n";
  for (const auto& r : reports) {
    out << format_double(r.config.k) << ',' << r.config.seed << ',' << to_string(r.status);
    if (r.outcome) {
      const auto& o = *r.outcome;
      out << ',' << (o.summary.sync_detected ? "true" : "false") << ','
          << format_double(o.summary.final_diameter) << ','
          << format_double(o.summary.final_dist_w) << ','
          << format_double(o.summary.settle_time) << ','
          << format_double(o.summary.mean_diameter) << ',';
      if (o.p) {
        out << o.certificates.h_violations << ',' << o.certificates.v_violations;
      } else {
        out << ',';
      }
    } else {
      out << ",,,,,,,";
    }
    out << ',';
    for (std::size_t f = 0; f < r.flags.size(); ++f) {
      out << (f ? ";" : "") << r.flags[f];
    }
    out << '\n';
  }
}

}  // namespace lohe
