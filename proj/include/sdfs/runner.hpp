#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sdfs/config.hpp"

namespace sdfs {

/// One monitored residual of a run and the tolerance it must stay within.
struct Residual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;

  bool ok() const { return value <= tolerance; }
};

struct RunSummary {
  std::size_t n_max = 0;
  double worst_conservation_residual = 0.0;
  double worst_normalization_residual = 0.0;
  double wall_seconds = 0.0;
  std::string kernel_backend;
  std::vector<Residual> residuals;
  std::vector<std::filesystem::path> files;

  bool ok() const;
  std::string to_json() const;
};

/// Runs the selected observables and writes one CSV per observable plus
/// summary.json into cfg.output_dir. Headers:
///   inversion.csv    lambda_t,W
///   entropy.csv      lambda_t,S_f,lambda_plus,lambda_minus
///   photon_dist.csv  lambda_t,n,P
///   phase_dist.csv   lambda_t,eta,P
///   qfunc.csv        x,y,Q
/// Numbers are written with 17 significant digits; output is byte-identical
/// for identical configs.
RunSummary run(const RunConfig& cfg);

}  // namespace sdfs
