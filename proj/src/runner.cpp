#include "sdfs/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "sdfs/error.hpp"
#include "sdfs/jcm.hpp"
#include "sdfs/kernels.hpp"
#include "sdfs/observables.hpp"
#include "sdfs/states.hpp"

namespace sdfs {
namespace {

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::string_view header) : path_(path) {
    buf_.reserve(1 << 20);
    buf_ += header;
    buf_ += '\n';
  }

  CsvWriter& num(double v) {
    sep();
    char tmp[40];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof tmp, v, std::chars_format::general, 17);
    buf_.append(tmp, ptr);
    return *this;
  }

  CsvWriter& num(std::size_t v) {
    sep();
    buf_ += std::to_string(v);
    return *this;
  }

  void end_row() {
    buf_ += '\n';
    first_ = true;
  }

  void close() {
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path_.string() + "'");
    out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    if (!out) throw Error("write failed for '" + path_.string() + "'");
  }

 private:
  void sep() {
    if (!first_) buf_ += ',';
    first_ = false;
  }

  std::filesystem::path path_;
  std::string buf_;
  bool first_ = true;
};

double conservation_residual(const EvolvedState& st) {
  double total = 0.0;
  for (std::size_t n = 0; n < st.a_coeffs.size(); ++n)
    total += std::norm(st.a_coeffs[n]) + std::norm(st.b_coeffs[n]);
  return std::abs(total - 1.0);
}

}  // namespace

bool RunSummary::ok() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.ok(); });
}

std::string RunSummary::to_json() const {
  nlohmann::ordered_json j;
  j["n_max"] = n_max;
  j["worst_conservation_residual"] = worst_conservation_residual;
  j["worst_normalization_residual"] = worst_normalization_residual;
  j["wall_seconds"] = wall_seconds;
  j["kernel_backend"] = kernel_backend;
  j["ok"] = ok();
  auto& res = j["residuals"] = nlohmann::ordered_json::array();
  for (const auto& r : residuals)
    res.push_back({{"name", r.name}, {"value", r.value}, {"tolerance", r.tolerance}, {"ok", r.ok()}});
  auto& files_j = j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : files) files_j.push_back(f.filename().string());
  return j.dump(2) + "\n";
}

RunSummary run(const RunConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());

  RunSummary summary;
  summary.kernel_backend = std::string(kernels::backend_name(kernels::active_backend()));
  summary.n_max = choose_truncation(cfg.state, cfg.tail_tol);
  const FockVector q = sdfs_state(cfg.state, summary.n_max);
  JcmConfig jcm;
  jcm.detuning_ratio = cfg.detuning_ratio;
  jcm.n_max = summary.n_max;

  double norm_residual = std::abs(q.norm2() - 1.0);
  summary.residuals.push_back({"initial_normalization", norm_residual, 1e-10});

  const std::vector<double> times = cfg.time_grid();
  const bool sweep = cfg.wants(Observable::inversion) || cfg.wants(Observable::entropy) ||
                     cfg.wants(Observable::photon_dist) || cfg.wants(Observable::phase_dist);

  if (sweep) {
    std::optional<CsvWriter> inv, ent, pho, pha;
    if (cfg.wants(Observable::inversion)) inv.emplace(dir / "inversion.csv", "lambda_t,W");
    if (cfg.wants(Observable::entropy))
      ent.emplace(dir / "entropy.csv", "lambda_t,S_f,lambda_plus,lambda_minus");
    if (cfg.wants(Observable::photon_dist)) pho.emplace(dir / "photon_dist.csv", "lambda_t,n,P");
    if (cfg.wants(Observable::phase_dist)) pha.emplace(dir / "phase_dist.csv", "lambda_t,eta,P");
    const std::vector<double> etas = uniform_etas(cfg.eta_points);

    double worst_conservation = 0.0, worst_trace = 0.0, worst_eigsum = 0.0;
    double worst_phase = 0.0, worst_photon = 0.0;
    for (double t : times) {
      const EvolvedState st = evolve(q, t, jcm);
      worst_conservation = std::max(worst_conservation, conservation_residual(st));
      if (inv) {
        inv->num(t).num(atomic_inversion(st));
        inv->end_row();
      }
      if (ent || pho) {
        const FieldDensity fd = field_density(st);
        if (ent) {
          const GramData g = gram(fd);
          worst_trace = std::max(worst_trace, std::abs(g.cc + g.ss - 1.0));
          EntropyPoint e;
          try {
            e = field_entropy(g);
          } catch (const DomainError& err) {
            throw InvariantError(std::string("entropy at lambda_t = ") + std::to_string(t) +
                                 ": " + err.what());
          }
          worst_eigsum = std::max(worst_eigsum, std::abs(e.lambda_plus + e.lambda_minus - 1.0));
          ent->num(t).num(e.entropy).num(e.lambda_plus).num(e.lambda_minus);
          ent->end_row();
        }
        if (pho) {
          const std::vector<double> probs = photon_number_dist_t(fd);
          double total = 0.0;
          for (std::size_t n = 0; n < probs.size(); ++n) {
            total += probs[n];
            pho->num(t).num(n).num(probs[n]);
            pho->end_row();
          }
          worst_photon = std::max(worst_photon, std::abs(total - 1.0));
        }
      }
      if (pha) {
        const PhaseDistribution pd = phase_distribution(st, etas);
        worst_phase = std::max(worst_phase, std::abs(pd.integral() - 1.0));
        for (std::size_t k = 0; k < etas.size(); ++k) {
          pha->num(t).num(pd.etas[k]).num(pd.values[k]);
          pha->end_row();
        }
      }
    }
    summary.worst_conservation_residual = worst_conservation;
    summary.residuals.push_back({"probability_conservation", worst_conservation, 1e-10});
    if (ent) {
      summary.residuals.push_back({"field_trace", worst_trace, 1e-10});
      summary.residuals.push_back({"eigenvalue_sum", worst_eigsum, 1e-10});
      norm_residual = std::max(norm_residual, worst_trace);
    }
    if (pho) {
      summary.residuals.push_back({"photon_dist_trace", worst_photon, 1e-10});
      norm_residual = std::max(norm_residual, worst_photon);
    }
    if (pha) {
      summary.residuals.push_back({"phase_normalization", worst_phase, 1e-6});
      norm_residual = std::max(norm_residual, worst_phase);
    }
    for (auto* w : {&inv, &ent, &pho, &pha}) {
      if (!*w) continue;
      (*w)->close();
    }
    if (inv) summary.files.push_back(dir / "inversion.csv");
    if (ent) summary.files.push_back(dir / "entropy.csv");
    if (pho) summary.files.push_back(dir / "photon_dist.csv");
    if (pha) summary.files.push_back(dir / "phase_dist.csv");
  }

  if (cfg.wants(Observable::qfunc)) {
    const EvolvedState st = evolve(q, cfg.q_time, jcm);
    summary.worst_conservation_residual =
        std::max(summary.worst_conservation_residual, conservation_residual(st));
    const QGrid grid = q_grid(st, cfg.q_grid);
    CsvWriter out(dir / "qfunc.csv", "x,y,Q");
    double min_q = 0.0;
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy)
      for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
        min_q = std::min(min_q, grid.at(ix, iy));
        out.num(grid.x_axis[ix]).num(grid.y_axis[iy]).num(grid.at(ix, iy));
        out.end_row();
      }
    out.close();
    summary.files.push_back(dir / "qfunc.csv");
    const double q_norm = std::abs(grid.integral() - 1.0);
    summary.residuals.push_back({"q_normalization", q_norm, 1e-3});
    summary.residuals.push_back({"q_negativity", -min_q, 1e-12});
    norm_residual = std::max(norm_residual, q_norm);
    if (!sweep) summary.residuals.push_back({"probability_conservation",
                                             summary.worst_conservation_residual, 1e-10});
  }

  summary.worst_normalization_residual = norm_residual;
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const auto summary_path = dir / "summary.json";
  std::ofstream js(summary_path, std::ios::binary | std::ios::trunc);
  if (!js) throw Error("cannot write '" + summary_path.string() + "'");
  js << summary.to_json();
  summary.files.push_back(summary_path);
  return summary;
}

}  // namespace sdfs
