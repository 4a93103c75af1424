#include "sdfs/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sdfs/error.hpp"

namespace sdfs {
namespace {

constexpr Observable kAllObservables[] = {Observable::inversion, Observable::entropy,
                                          Observable::photon_dist, Observable::phase_dist,
                                          Observable::qfunc};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line;
};

double to_double(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* end = e.value.data() + e.value.size();
  auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw ConfigError("line " + std::to_string(e.line) + ": key '" + key +
                          "' expects a finite number, got '" + e.value + "'",
                      key, e.line);
  return v;
}

long long to_integer(const std::string& key, const Entry& e) {
  long long v = 0;
  const char* end = e.value.data() + e.value.size();
  auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("line " + std::to_string(e.line) + ": key '" + key +
                          "' expects an integer, got '" + e.value + "'",
                      key, e.line);
  return v;
}

std::size_t to_count(const std::string& key, const Entry& e) {
  const long long v = to_integer(key, e);
  if (v < 0)
    throw ConfigError("line " + std::to_string(e.line) + ": key '" + key + "' must be >= 0",
                      key, e.line);
  return static_cast<std::size_t>(v);
}

std::vector<Observable> to_observables(const Entry& e) {
  std::vector<Observable> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string_view name = trim(item);
    if (name.empty()) continue;
    const auto* it = std::find_if(std::begin(kAllObservables), std::end(kAllObservables),
                                  [&](Observable o) { return observable_name(o) == name; });
    if (it == std::end(kAllObservables))
      throw ConfigError("line " + std::to_string(e.line) + ": unknown observable '" +
                            std::string(name) +
                            "' (valid: inversion, entropy, photon_dist, phase_dist, qfunc)",
                        "observables", e.line);
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (out.empty()) throw ConfigError("observables list is empty", "observables", e.line);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view observable_name(Observable o) noexcept {
  switch (o) {
    case Observable::inversion: return "inversion";
    case Observable::entropy: return "entropy";
    case Observable::photon_dist: return "photon_dist";
    case Observable::phase_dist: return "phase_dist";
    case Observable::qfunc: return "qfunc";
  }
  return "?";
}

bool RunConfig::wants(Observable o) const {
  return std::find(observables.begin(), observables.end(), o) != observables.end();
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> t(t_points);
  for (std::size_t k = 0; k < t_points; ++k)
    t[k] = t_max_scaled * static_cast<double>(k) / static_cast<double>(t_points - 1);
  return t;
}

void RunConfig::validate() const {
  if (!(t_max_scaled > 0.0)) throw ConfigError("t_max_scaled must be > 0", "t_max_scaled");
  if (t_points < 2) throw ConfigError("t_points must be >= 2", "t_points");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw ConfigError("tail_tol must lie in (0, 1)", "tail_tol");
  if (eta_points < 2) throw ConfigError("eta_points must be >= 2", "eta_points");
  if (!std::isfinite(detuning_ratio)) throw ConfigError("detuning_ratio must be finite", "detuning_ratio");
  if (!std::isfinite(q_time) || q_time < 0.0) throw ConfigError("q_time must be >= 0", "q_time");
  if (observables.empty()) throw ConfigError("observables list is empty", "observables");
  if (output_dir.empty()) throw ConfigError("output_dir is empty", "output_dir");
  if (wants(Observable::qfunc)) {
    try {
      q_grid.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what(), "q_nx");
    }
    const double need = std::abs(state.alpha0()) + 4.0;
    const double reach = std::min({-q_grid.x_min, q_grid.x_max, -q_grid.y_min, q_grid.y_max});
    if (reach < need)
      throw ConfigError("Q grid must cover radius |alpha0| + 4 = " + format_double(need) +
                            " around the origin",
                        "q_x_min");
  }
}

bool RunConfig::operator==(const RunConfig& o) const {
  return state == o.state && detuning_ratio == o.detuning_ratio &&
         t_max_scaled == o.t_max_scaled && t_points == o.t_points && tail_tol == o.tail_tol &&
         eta_points == o.eta_points && q_grid.x_min == o.q_grid.x_min &&
         q_grid.x_max == o.q_grid.x_max && q_grid.y_min == o.q_grid.y_min &&
         q_grid.y_max == o.q_grid.y_max && q_grid.nx == o.q_grid.nx &&
         q_grid.ny == o.q_grid.ny && q_time == o.q_time && observables == o.observables &&
         output_dir == o.output_dir;
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {},
                        line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": missing key", {}, line_no);
    if (entries.contains(key))
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                        key, line_no);
    entries.emplace(key, Entry{value, line_no});
  }

  RunConfig cfg;
  double alpha_re = 0.0, alpha_im = 0.0, r = 0.0, phi = 0.0;
  long long m = 0;
  for (const auto& [key, e] : entries) {
    if (key == "alpha0_re") alpha_re = to_double(key, e);
    else if (key == "alpha0_im") alpha_im = to_double(key, e);
    else if (key == "r") r = to_double(key, e);
    else if (key == "phi") phi = to_double(key, e);
    else if (key == "m") m = to_integer(key, e);
    else if (key == "detuning_ratio") cfg.detuning_ratio = to_double(key, e);
    else if (key == "t_max_scaled") cfg.t_max_scaled = to_double(key, e);
    else if (key == "t_points") cfg.t_points = to_count(key, e);
    else if (key == "tail_tol") cfg.tail_tol = to_double(key, e);
    else if (key == "eta_points") cfg.eta_points = to_count(key, e);
    else if (key == "q_x_min") cfg.q_grid.x_min = to_double(key, e);
    else if (key == "q_x_max") cfg.q_grid.x_max = to_double(key, e);
    else if (key == "q_y_min") cfg.q_grid.y_min = to_double(key, e);
    else if (key == "q_y_max") cfg.q_grid.y_max = to_double(key, e);
    else if (key == "q_nx") cfg.q_grid.nx = to_count(key, e);
    else if (key == "q_ny") cfg.q_grid.ny = to_count(key, e);
    else if (key == "q_time") cfg.q_time = to_double(key, e);
    else if (key == "observables") cfg.observables = to_observables(e);
    else if (key == "output_dir") cfg.output_dir = e.value;
    else
      throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + key + "'", key,
                        e.line);
  }

  auto line_of = [&](const char* key) {
    const auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second.line;
  };
  if (r < 0.0) throw ConfigError("key 'r' must be >= 0 (squeeze magnitude)", "r", line_of("r"));
  if (m < 0) throw ConfigError("key 'm' must be >= 0 (seed Fock number)", "m", line_of("m"));
  if (m > 512) throw ConfigError("key 'm' exceeds the Fock cap 512", "m", line_of("m"));
  cfg.state = SdfsParams({alpha_re, alpha_im}, r, phi, static_cast<int>(m));
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::string out;
  auto put = [&](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  put("alpha0_re", format_double(cfg.state.alpha0().real()));
  put("alpha0_im", format_double(cfg.state.alpha0().imag()));
  put("r", format_double(cfg.state.r()));
  put("phi", format_double(cfg.state.phi()));
  put("m", std::to_string(cfg.state.m()));
  put("detuning_ratio", format_double(cfg.detuning_ratio));
  put("t_max_scaled", format_double(cfg.t_max_scaled));
  put("t_points", std::to_string(cfg.t_points));
  put("tail_tol", format_double(cfg.tail_tol));
  put("eta_points", std::to_string(cfg.eta_points));
  put("q_x_min", format_double(cfg.q_grid.x_min));
  put("q_x_max", format_double(cfg.q_grid.x_max));
  put("q_y_min", format_double(cfg.q_grid.y_min));
  put("q_y_max", format_double(cfg.q_grid.y_max));
  put("q_nx", std::to_string(cfg.q_grid.nx));
  put("q_ny", std::to_string(cfg.q_grid.ny));
  put("q_time", format_double(cfg.q_time));
  std::string obs;
  for (std::size_t i = 0; i < cfg.observables.size(); ++i) {
    if (i) obs += ", ";
    obs += observable_name(cfg.observables[i]);
  }
  put("observables", obs);
  put("output_dir", cfg.output_dir);
  return out;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (char fig = '1'; fig <= '5'; ++fig)
    for (char panel = 'a'; panel <= 'c'; ++panel) names.push_back(std::string("fig") + fig + panel);
  return names;
}

RunConfig figure_preset(std::string_view name) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string valid;
    for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + std::string(name) + "'; valid presets: " + valid,
                      "preset");
  }
  const int fig = name[3] - '0';
  const int panel = name[4] - 'a';

  RunConfig cfg;
  cfg.output_dir = std::string(name);
  // Keeps n_max <= 128 for m = 2 while the tail stays far below the 1e-10
  // conservation tolerance.
  cfg.tail_tol = 1e-11;
  // Figs. 1, 2, 4: alpha0 = 3, r = 1, phi = 0, Delta = 0, m = 0, 1, 2.
  // Fig. 3 moves the displacement to 0.5; Fig. 5 fixes m = 1 and varies time.
  const double alpha = fig == 3 ? 0.5 : 3.0;
  const int m = fig == 5 ? 1 : panel;
  cfg.state = SdfsParams({alpha, 0.0}, 1.0, 0.0, m);
  switch (fig) {
    case 1: cfg.observables = {Observable::inversion}; break;
    case 2: cfg.observables = {Observable::entropy}; break;
    case 3: cfg.observables = {Observable::photon_dist}; break;
    case 4: cfg.observables = {Observable::phase_dist}; break;
    default: {
      cfg.observables = {Observable::qfunc};
      const double t_revival = revival_time(cfg.state);
      cfg.q_time = 0.5 * panel * t_revival;
      break;
    }
  }
  return cfg;
}

}  // namespace sdfs
