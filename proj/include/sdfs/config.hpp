#pragma once

// Run configuration: a flat `key = value` document, one pair per line, `#`
// starts a comment. Unknown and duplicate keys are rejected.
//
//   alpha0_re = 3          alpha0_im = 0       r = 1       phi = 0     m = 0
//   detuning_ratio = 0     t_max_scaled = 25   t_points = 2000
//   tail_tol = 1e-12       eta_points = 512
//   q_x_min = -8  q_x_max = 8  q_y_min = -8  q_y_max = 8  q_nx = 201  q_ny = 201
//   q_time = 0             observables = inversion, entropy
//   output_dir = out

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdfs/observables.hpp"
#include "sdfs/params.hpp"

namespace sdfs {

enum class Observable { inversion, entropy, photon_dist, phase_dist, qfunc };

std::string_view observable_name(Observable o) noexcept;

struct RunConfig {
  SdfsParams state;
  double detuning_ratio = 0.0;
  double t_max_scaled = 25.0;
  std::size_t t_points = 2000;
  double tail_tol = 1e-12;
  std::size_t eta_points = 512;
  QGridSpec q_grid;
  double q_time = 0.0;  // scaled time of the Q snapshot
  std::vector<Observable> observables{Observable::inversion, Observable::entropy};
  std::string output_dir = "out";

  bool wants(Observable o) const;
  /// Time samples t_k = t_max k / (t_points - 1).
  std::vector<double> time_grid() const;
  /// Throws ConfigError naming the offending key.
  void validate() const;

  bool operator==(const RunConfig&) const;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
/// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

/// Names fig1a..fig5c.
std::vector<std::string> preset_names();
/// Parameter sets of the five figure families. Throws ConfigError listing
/// the valid names for an unknown one.
RunConfig figure_preset(std::string_view name);

}  // namespace sdfs
