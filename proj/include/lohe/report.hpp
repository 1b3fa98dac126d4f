#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lohe/dynamics.hpp"
#include "lohe/observables.hpp"
#include "lohe/runner.hpp"

namespace lohe {

/// %.17g: round-trips exactly and keeps output byte-stable.
std::string format_double(double v);

/// Header `t,r1_1,...,r1_n,...,rm_1,...,rm_n`, one row per recorded instant.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Header `t,h_min,V,Vdot,diameter,dist_w`.
void write_certificates_csv(std::ostream& out, const CertificateTrace& trace);

/// Report as JSON with a fixed field order.
std::string report_json(const RunReport& report);

/// One row per sweep run: k, seed, status, final diameter, ...
void write_sweep_csv(std::ostream& out, const std::vector<RunReport>& reports);

}  // namespace lohe
