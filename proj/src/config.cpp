#include "lohe/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "lohe/error.hpp"
#include "lohe/presets.hpp"

namespace lohe {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ValidationError, field + ": " + what);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) {
    invalid(field, "expected a number");
  }
  return j.get<double>();
}

std::int64_t integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    invalid(field, "expected an integer");
  }
  return j.get<std::int64_t>();
}

// Accepts a nested row-major array of `rows` arrays, or a flat row-major array
// of rows * cols numbers when both sizes are known.
Matrix read_matrix(const json& j, const std::string& field, Eigen::Index rows,
                   Eigen::Index cols) {
  if (!j.is_array() || j.empty()) {
    invalid(field, "expected a nonempty array");
  }
  if (j.front().is_array()) {
    const auto r = static_cast<Eigen::Index>(j.size());
    const auto c = static_cast<Eigen::Index>(j.front().size());
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      const json& row = j[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
        invalid(field, "row " + std::to_string(i) + " has the wrong length");
      }
      for (Eigen::Index k = 0; k < c; ++k) {
        m(i, k) = number(row[static_cast<std::size_t>(k)],
                         field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
    }
    return m;
  }
  if (rows <= 0 || cols <= 0) {
    invalid(field, "a flat matrix needs n and m to be given");
  }
  if (static_cast<Eigen::Index>(j.size()) != rows * cols) {
    invalid(field, "flat matrix needs " + std::to_string(rows * cols) + " entries, got " +
                       std::to_string(j.size()));
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto idx = static_cast<std::size_t>(i * cols + k);
      m(i, k) = number(j[idx], field + "[" + std::to_string(idx) + "]");
    }
  }
  return m;
}

const std::set<std::string> kKnownFields = {"name", "preset", "n",      "m",    "omegas",
                                            "adjacency", "k", "dt",     "t_end", "stride",
                                            "seed",      "margin", "p"};

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "config must be a JSON object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (!kKnownFields.contains(key)) {
      invalid(key, "unknown field");
    }
  }

  RunConfig cfg;
  if (doc.contains("preset")) {
    if (!doc["preset"].is_string()) {
      invalid("preset", "expected a string");
    }
    const auto preset_name = doc["preset"].get<std::string>();
    const Preset* preset = find_preset(preset_name);
    if (preset == nullptr) {
      invalid("preset", "unknown preset '" + preset_name + "'");
    }
    cfg = preset_config(*preset);
  } else {
    cfg.name = name;
    if (doc.contains("n")) {
      cfg.n = integer(doc["n"], "n");
    }
    if (doc.contains("m")) {
      cfg.m = integer(doc["m"], "m");
    }
    if (!doc.contains("omegas") || !doc["omegas"].is_array()) {
      invalid("omegas", "required array of frequency matrices");
    }
    const json& omegas = doc["omegas"];
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      cfg.omegas.push_back(
          read_matrix(omegas[i], "omegas[" + std::to_string(i) + "]", cfg.n, cfg.n));
    }
    if (cfg.m == 0) {
      cfg.m = static_cast<Eigen::Index>(cfg.omegas.size());
    }
    if (cfg.n == 0 && !cfg.omegas.empty()) {
      cfg.n = cfg.omegas.front().rows();
    }
    if (!doc.contains("adjacency")) {
      invalid("adjacency", "required m x m matrix");
    }
    cfg.adjacency = read_matrix(doc["adjacency"], "adjacency", cfg.m, cfg.m);
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      invalid("name", "expected a string");
    }
    cfg.name = doc["name"].get<std::string>();
  }
  if (doc.contains("k")) cfg.k = number(doc["k"], "k");
  if (doc.contains("dt")) cfg.dt = number(doc["dt"], "dt");
  if (doc.contains("t_end")) cfg.t_end = number(doc["t_end"], "t_end");
  if (doc.contains("stride")) cfg.stride = integer(doc["stride"], "stride");
  if (doc.contains("seed")) {
    const auto seed = integer(doc["seed"], "seed");
    if (seed < 0) {
      invalid("seed", "must be nonnegative");
    }
    cfg.seed = static_cast<std::uint64_t>(seed);
  }
  if (doc.contains("margin")) cfg.margin = number(doc["margin"], "margin");
  if (doc.contains("p")) {
    const json& p = doc["p"];
    if (!p.is_array()) {
      invalid("p", "expected an array");
    }
    Vector v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = number(p[i], "p[" + std::to_string(i) + "]");
    }
    cfg.p = v;
  }

  validate(cfg);
  if (cfg.p) {
    cfg.p->normalize();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.stem().string());
}

void validate(const RunConfig& cfg) {
  if (cfg.m < 2) {
    invalid("m", "an ensemble needs m >= 2 oscillators, got " + std::to_string(cfg.m));
  }
  if (cfg.n < 1) {
    invalid("n", "dimension must be positive");
  }
  if (cfg.n > kMaxDimension) {
    invalid("n", "dimension " + std::to_string(cfg.n) + " exceeds the supported limit of " +
                     std::to_string(kMaxDimension));
  }
  if (static_cast<Eigen::Index>(cfg.omegas.size()) != cfg.m) {
    invalid("omegas", "expected " + std::to_string(cfg.m) + " matrices, got " +
                          std::to_string(cfg.omegas.size()));
  }
  for (std::size_t i = 0; i < cfg.omegas.size(); ++i) {
    const std::string field = "omegas[" + std::to_string(i) + "]";
    const Matrix& o = cfg.omegas[i];
    if (o.rows() != cfg.n || o.cols() != cfg.n) {
      invalid(field, "expected " + std::to_string(cfg.n) + "x" + std::to_string(cfg.n) +
                         ", got " + std::to_string(o.rows()) + "x" + std::to_string(o.cols()));
    }
    if (!o.allFinite()) {
      invalid(field, "entries must be finite");
    }
    const double residual = skew_residual(o);
    if (residual > 1e-12 * o.cwiseAbs().maxCoeff()) {
      std::ostringstream msg;
      msg << "not skew-symmetric, max symmetric residual |M_ij + M_ji| = " << residual;
      invalid(field, msg.str());
    }
  }
  if (cfg.adjacency.rows() != cfg.m || cfg.adjacency.cols() != cfg.m) {
    invalid("adjacency", "expected " + std::to_string(cfg.m) + "x" + std::to_string(cfg.m));
  }
  for (Eigen::Index i = 0; i < cfg.m; ++i) {
    if (cfg.adjacency(i, i) != 0.0) {
      invalid("adjacency", "diagonal entry " + std::to_string(i) + " must be zero");
    }
    for (Eigen::Index j = 0; j < cfg.m; ++j) {
      if (!(cfg.adjacency(i, j) >= 0.0) || !std::isfinite(cfg.adjacency(i, j))) {
        invalid("adjacency", "weights must be finite and nonnegative");
      }
    }
  }
  if (!(cfg.k >= 0.0) || !std::isfinite(cfg.k)) {
    invalid("k", "coupling gain must be finite and >= 0");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    invalid("dt", "step must be positive");
  }
  if (cfg.t_end && (!(*cfg.t_end >= 0.0) || !std::isfinite(*cfg.t_end))) {
    invalid("t_end", "horizon must be finite and >= 0");
  }
  if (cfg.stride < 1) {
    invalid("stride", "must be at least 1");
  }
  if (!(cfg.margin > 0.0 && cfg.margin < 1.0)) {
    invalid("margin", "must lie strictly between 0 and 1");
  }
  if (cfg.p) {
    if (cfg.p->size() != cfg.n) {
      invalid("p", "expected " + std::to_string(cfg.n) + " entries");
    }
    if (!(cfg.p->norm() > 0.0) || !cfg.p->allFinite()) {
      invalid("p", "must be a finite nonzero vector");
    }
  }
}

FrequencyEnsemble make_ensemble(const RunConfig& cfg) {
  std::vector<SkewMatrix> ms;
  for (const auto& o : cfg.omegas) {
    ms.emplace_back(o);
  }
  return FrequencyEnsemble(std::move(ms));
}

Digraph make_graph(const RunConfig& cfg) { return Digraph(cfg.adjacency); }

double effective_t_end(const RunConfig& cfg, bool synchronizable) {
  if (cfg.t_end) {
    return *cfg.t_end;
  }
  return synchronizable ? 100.0 : 50.0;
}

}  // namespace lohe
