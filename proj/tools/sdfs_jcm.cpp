// sdfs_jcm: run configurations, reproduce the figure presets, check
// invariants and evaluate SDFS overlaps.
//
// Exit status: 0 success, 1 invariant failure, 2 usage/config error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdfs/checks.hpp"
#include "sdfs/config.hpp"
#include "sdfs/error.hpp"
#include "sdfs/runner.hpp"
#include "sdfs/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

// "re,im,r,phi,m"
sdfs::SdfsParams parse_state(const std::string& spec, const char* flag) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw sdfs::ConfigError(std::string(flag) + ": '" + item + "' is not a number", flag);
    }
  }
  if (parts.size() != 5)
    throw sdfs::ConfigError(std::string(flag) + " expects re,im,r,phi,m", flag);
  const double m = parts[4];
  if (m < 0 || m != std::floor(m))
    throw sdfs::ConfigError(std::string(flag) + ": m must be a nonnegative integer", flag);
  if (parts[2] < 0) throw sdfs::ConfigError(std::string(flag) + ": r must be >= 0", flag);
  return sdfs::SdfsParams({parts[0], parts[1]}, parts[2], parts[3], static_cast<int>(m));
}

int report(const sdfs::RunSummary& s) {
  std::cout << s.to_json();
  if (!s.ok()) {
    for (const auto& r : s.residuals)
      if (!r.ok())
        std::cerr << "invariant violated: " << r.name << " = " << r.value << " > " << r.tolerance
                  << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level atom in a squeezed displaced Fock state: exact JCM dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run a key = value configuration file");
  run_cmd->add_option("config", config_path, "Configuration file")->required();

  std::string preset_name, preset_out;
  bool print_config = false;
  auto* preset_cmd = app.add_subcommand("preset", "Run one figure preset (fig1a..fig5c)");
  preset_cmd->add_option("name", preset_name, "Preset name")->required();
  preset_cmd->add_option("--out", preset_out, "Output directory (default: the preset name)");
  preset_cmd->add_flag("--print-config", print_config,
                       "Print the preset as a configuration file instead of running it");

  auto* check_cmd = app.add_subcommand("check", "Run the invariant suite");

  std::string p1_spec, p2_spec;
  auto* overlap_cmd = app.add_subcommand("overlap", "Print <p1|p2> for two SDFS states");
  overlap_cmd->add_option("--p1", p1_spec, "re,im,r,phi,m of the bra")->required();
  overlap_cmd->add_option("--p2", p2_spec, "re,im,r,phi,m of the ket")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) return report(sdfs::run(sdfs::load_config(config_path)));

    if (*preset_cmd) {
      sdfs::RunConfig cfg = sdfs::figure_preset(preset_name);
      if (!preset_out.empty()) cfg.output_dir = preset_out;
      if (print_config) {
        std::cout << sdfs::serialize_config(cfg);
        return kExitOk;
      }
      return report(sdfs::run(cfg));
    }

    if (*check_cmd) {
      bool all = true;
      for (const auto& c : sdfs::run_invariant_checks()) {
        std::printf("%-26s %s  %.3e (tol %.1e)\n", c.name.c_str(), c.passed ? "PASS" : "FAIL",
                    c.value, c.tolerance);
        all = all && c.passed;
      }
      return all ? kExitOk : kExitInvariant;
    }

    if (*overlap_cmd) {
      const auto p1 = parse_state(p1_spec, "--p1");
      const auto p2 = parse_state(p2_spec, "--p2");
      const auto v = sdfs::sdfs_overlap(p1, p2);
      std::printf("re=%.17g im=%.17g abs=%.17g arg=%.17g\n", v.real(), v.imag(), std::abs(v),
                  std::arg(v));
      return kExitOk;
    }
  } catch (const sdfs::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const sdfs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sdfs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
