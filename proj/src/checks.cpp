#include "sdfs/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sdfs/fock.hpp"
#include "sdfs/jcm.hpp"
#include "sdfs/kernels.hpp"
#include "sdfs/observables.hpp"
#include "sdfs/states.hpp"

namespace sdfs {
namespace {

CheckResult make(std::string name, double value, double tol) {
  return {std::move(name), value, tol, value <= tol};
}

double oracle_grid_deviation() {
  const cplx alphas[] = {{0.0, 0.0}, {0.5, 0.0}, {3.0, 0.0}, {1.0, 1.0}};
  const double rs[] = {0.0, 0.3, 1.0};
  const double phis[] = {0.0, std::numbers::pi / 2};
  double worst = 0.0;
  for (cplx a : alphas)
    for (double r : rs)
      for (double phi : phis)
        for (int m = 0; m <= 2; ++m) {
          const SdfsParams p(a, r, phi, m);
          const std::size_t n_max = choose_truncation(p);
          const FockVector oracle = build_sdfs_oracle(p, oracle_dim_for(p));
          const FockVector analytic = sdfs_state(p, n_max);
          for (std::size_t n = 0; n <= n_max; ++n)
            worst = std::max(worst, std::abs(analytic[n] - oracle[n]));
        }
  return worst;
}

double overlap_deviation() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    SdfsParams ps[2];
    for (auto& p : ps)
      p = SdfsParams(std::polar(3.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng)),
                     1.2 * unit(rng), 2.0 * std::numbers::pi * unit(rng),
                     static_cast<int>(4.0 * unit(rng)));
    const std::size_t dim = std::max(oracle_dim_for(ps[0]), oracle_dim_for(ps[1]));
    const cplx expect = inner_product(build_sdfs_oracle(ps[0], dim), build_sdfs_oracle(ps[1], dim));
    worst = std::max(worst, std::abs(sdfs_overlap(ps[0], ps[1]) - expect));
  }
  return worst;
}

struct DynamicsResiduals {
  double conservation = 0.0;
  double trace = 0.0;
  double entropy_excess = 0.0;
  double initial_entropy = 0.0;
  double phase_norm = 0.0;
  double inversion_excess = 0.0;
};

DynamicsResiduals dynamics_residuals() {
  DynamicsResiduals out;
  const auto etas = uniform_etas(512);
  for (int m = 0; m <= 2; ++m) {
    const SdfsParams p({3.0, 0.0}, 1.0, 0.0, m);
    JcmConfig cfg;
    cfg.n_max = choose_truncation(p);
    const FockVector q = sdfs_state(p, cfg.n_max);
    for (int k = 0; k <= 100; ++k) {
      const double t = 0.25 * k;
      const EvolvedState st = evolve(q, t, cfg);
      for (std::size_t n = 0; n <= cfg.n_max; ++n)
        out.conservation = std::max(
            out.conservation, std::abs(std::norm(st.a_coeffs[n]) + std::norm(st.b_coeffs[n]) -
                                       std::norm(q[n])));
      const GramData g = gram(field_density(st));
      out.trace = std::max(out.trace, std::abs(g.cc + g.ss - 1.0));
      const EntropyPoint e = field_entropy(g);
      out.entropy_excess = std::max(out.entropy_excess, e.entropy - std::log(2.0));
      if (k == 0) out.initial_entropy = std::max(out.initial_entropy, e.entropy);
      out.inversion_excess = std::max(out.inversion_excess, std::abs(atomic_inversion(st)) - 1.0);
      if (k % 10 == 0)
        out.phase_norm =
            std::max(out.phase_norm, std::abs(phase_distribution(st, etas).integral() - 1.0));
    }
  }
  return out;
}

double q_normalization() {
  const SdfsParams p({3.0, 0.0}, 1.0, 0.0, 1);
  JcmConfig cfg;
  cfg.n_max = choose_truncation(p);
  const FockVector q = sdfs_state(p, cfg.n_max);
  double worst = 0.0;
  for (double t : {0.0, 0.5 * revival_time(p), revival_time(p)})
    worst = std::max(worst, std::abs(q_grid(evolve(q, t, cfg)).integral() - 1.0));
  return worst;
}

double kernel_disagreement() {
  if (!kernels::backend_available(kernels::Backend::avx2)) return 0.0;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  std::vector<cplx> x(257), y(257), alphas(37);
  for (auto& z : x) z = {g(rng), g(rng)};
  for (auto& z : y) z = {g(rng), g(rng)};
  for (auto& z : alphas) z = {3.0 * g(rng), 3.0 * g(rng)};
  double worst = std::abs(kernels::scalar::dotc(x, y) - kernels::avx2::dotc(x, y));
  worst = std::max(worst, std::abs(kernels::scalar::dotu(x, y) - kernels::avx2::dotu(x, y)));
  worst = std::max(worst, std::abs(kernels::scalar::sum_abs2(x) - kernels::avx2::sum_abs2(x)));
  const auto etas = uniform_etas(61);
  std::vector<double> p1(etas.size()), p2(etas.size());
  kernels::scalar::phase_series(x, etas, p1);
  kernels::avx2::phase_series(x, etas, p2);
  for (std::size_t i = 0; i < p1.size(); ++i) worst = std::max(worst, std::abs(p1[i] - p2[i]));
  std::vector<cplx> c1(alphas.size()), c2(alphas.size());
  kernels::scalar::coherent_overlap(x, alphas, c1);
  kernels::avx2::coherent_overlap(x, alphas, c2);
  for (std::size_t i = 0; i < c1.size(); ++i) worst = std::max(worst, std::abs(c1[i] - c2[i]));
  return worst;
}

}  // namespace

std::vector<CheckResult> run_invariant_checks() {
  std::vector<CheckResult> out;
  out.push_back(make("amplitudes_vs_oracle", oracle_grid_deviation(), 1e-8));
  out.push_back(make("overlap_vs_oracle", overlap_deviation(), 1e-7));
  const DynamicsResiduals d = dynamics_residuals();
  out.push_back(make("pointwise_conservation", d.conservation, 1e-12));
  out.push_back(make("field_trace", d.trace, 1e-10));
  out.push_back(make("entropy_upper_bound", std::max(0.0, d.entropy_excess), 1e-12));
  out.push_back(make("initial_entropy", d.initial_entropy, 1e-10));
  out.push_back(make("inversion_bound", std::max(0.0, d.inversion_excess), 1e-12));
  out.push_back(make("phase_normalization", d.phase_norm, 1e-6));
  out.push_back(make("q_normalization", q_normalization(), 1e-3));
  out.push_back(make("kernel_backends_agree", kernel_disagreement(), 1e-10));
  return out;
}

}  // namespace sdfs
