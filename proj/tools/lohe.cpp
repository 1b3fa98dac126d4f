// Command line front end: analyze, run, sweep and preset listing.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lohe/config.hpp"
#include "lohe/error.hpp"
#include "lohe/presets.hpp"
#include "lohe/report.hpp"
#include "lohe/runner.hpp"
#include "lohe/version.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitError = 2;
constexpr int kExitInconsistent = 3;
constexpr const char* kOutputDirEnv = "LOHE_OUTPUT_DIR";

// A config argument is a file path, or a bare preset name when no such file
// exists.
lohe::RunConfig resolve_config(const std::string& arg) {
  if (!fs::exists(arg)) {
    if (const auto* preset = lohe::find_preset(arg)) {
      return lohe::preset_config(*preset);
    }
  }
  return lohe::load_config(arg);
}

fs::path output_dir(const std::string& flag, const lohe::RunConfig& cfg) {
  if (!flag.empty()) {
    return flag;
  }
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return fs::path("lohe-out") / cfg.name;
}

void print_summary(const lohe::RunReport& r, const fs::path& dir) {
  std::cout << r.config.name << ": " << lohe::to_string(r.status) << ", dim W = " << r.verdict.dim_w
            << " (" << lohe::to_string(r.verdict.shortcut_used) << ")\n";
  if (r.outcome) {
    const auto& o = *r.outcome;
    std::cout << "  k = " << r.config.k << ", t_end = " << o.t_end
              << ", final diameter = " << lohe::format_double(o.summary.final_diameter)
              << ", final dist_w = " << lohe::format_double(o.summary.final_dist_w)
              << ", sync detected = " << (o.summary.sync_detected ? "yes" : "no") << '\n';
  }
  for (const auto& f : r.flags) {
    std::cout << "  flag: " << f << '\n';
  }
  if (!dir.empty()) {
    std::cout << "  wrote " << dir.string() << '\n';
  }
}

bool inconsistent(const lohe::RunReport& r) {
  for (const auto& f : r.flags) {
    if (f == "INCONSISTENT") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronizability analysis and simulation of high-dimensional Kuramoto networks"};
  app.set_version_flag("--version", std::string(lohe::kToolName) + " " + lohe::kVersion);
  app.require_subcommand(1);

  std::string config_arg;
  std::string out_flag;

  auto* analyze_cmd = app.add_subcommand("analyze", "Verdict only; exit 0 SYNC, 1 NO-SYNC, 2 error");
  analyze_cmd->add_option("config", config_arg, "Config file or preset name")->required();
  analyze_cmd->add_option("--output-dir", out_flag, "Also write report.json here");

  std::optional<double> k_override;
  std::optional<std::uint64_t> seed_override;
  auto* run_cmd = app.add_subcommand("run", "Analyze, simulate and write CSV artifacts");
  run_cmd->add_option("config", config_arg, "Config file or preset name")->required();
  run_cmd->add_option("--output-dir", out_flag, "Output directory (default $LOHE_OUTPUT_DIR)");
  run_cmd->add_option("--k", k_override, "Override the coupling gain");
  run_cmd->add_option("--seed", seed_override, "Override the initial-condition seed");

  std::vector<double> ks;
  std::vector<std::uint64_t> seeds;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Independent runs over a k x seed grid");
  sweep_cmd->add_option("config", config_arg, "Config file or preset name")->required();
  sweep_cmd->add_option("--k", ks, "Coupling gains")->required()->delimiter(',');
  sweep_cmd->add_option("--seeds", seeds, "Seeds")->required()->delimiter(',');
  sweep_cmd->add_option("--threads", threads, "Worker threads (default: hardware)");
  sweep_cmd->add_option("--output-dir", out_flag, "Output directory (default $LOHE_OUTPUT_DIR)");

  auto* preset_cmd = app.add_subcommand("preset", "Built-in experiments");
  preset_cmd->require_subcommand(1);
  auto* preset_list = preset_cmd->add_subcommand("list", "List preset names");
  std::string preset_name;
  auto* preset_show = preset_cmd->add_subcommand("show", "Print the analysis report for a preset");
  preset_show->add_option("name", preset_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*analyze_cmd) {
      const auto cfg = resolve_config(config_arg);
      const auto report = lohe::analyze(cfg);
      const std::string text = lohe::report_json(report);
      std::cout << text << '\n';
      if (!out_flag.empty()) {
        fs::create_directories(out_flag);
        std::ofstream(fs::path(out_flag) / "report.json") << text << '\n';
      }
      return lohe::exit_code(report.status);
    }
    if (*run_cmd) {
      auto cfg = resolve_config(config_arg);
      if (k_override) cfg.k = *k_override;
      if (seed_override) cfg.seed = *seed_override;
      lohe::validate(cfg);
      const auto artifacts = lohe::run(cfg);
      const fs::path dir = output_dir(out_flag, cfg);
      lohe::write_artifacts(artifacts, dir);
      print_summary(artifacts.report, dir);
      return inconsistent(artifacts.report) ? kExitInconsistent : 0;
    }
    if (*sweep_cmd) {
      const auto cfg = resolve_config(config_arg);
      std::vector<lohe::SweepPoint> points;
      for (double k : ks) {
        for (auto s : seeds) {
          points.push_back({k, s});
        }
      }
      const fs::path dir = output_dir(out_flag, cfg);
      const auto reports = lohe::sweep(cfg, points, dir, threads);
      fs::create_directories(dir);
      std::ofstream summary(dir / "sweep.csv", std::ios::binary);
      lohe::write_sweep_csv(summary, reports);
      lohe::write_sweep_csv(std::cout, reports);
      for (const auto& r : reports) {
        if (inconsistent(r)) return kExitInconsistent;
      }
      return 0;
    }
    if (*preset_list) {
      for (const auto& p : lohe::presets()) {
        std::cout << p.name << "\t" << p.description << '\n';
      }
      return 0;
    }
    if (*preset_show) {
      const auto* p = lohe::find_preset(preset_name);
      if (p == nullptr) {
        std::cerr << "unknown preset '" << preset_name << "'\n";
        return kExitError;
      }
      std::cout << lohe::report_json(lohe::analyze(lohe::preset_config(*p))) << '\n';
      return 0;
    }
  } catch (const lohe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
