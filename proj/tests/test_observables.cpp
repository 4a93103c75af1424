#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdfs/error.hpp"
#include "sdfs/jcm.hpp"
#include "sdfs/observables.hpp"
#include "sdfs/states.hpp"

using sdfs::cplx;
using sdfs::FockVector;
using sdfs::GramData;
using sdfs::JcmConfig;
using sdfs::SdfsParams;

namespace {

constexpr double kPi = std::numbers::pi;

struct Prepared {
  FockVector q;
  JcmConfig cfg;
};

Prepared prepare(const SdfsParams& p, double detuning = 0.0) {
  JcmConfig cfg;
  cfg.n_max = sdfs::choose_truncation(p);
  cfg.detuning_ratio = detuning;
  return {sdfs::sdfs_state(p, cfg.n_max), cfg};
}

// Eigenvalues of the 2x2 Gram matrix by the quadratic formula.
std::pair<double, double> gram_eigen(const GramData& g) {
  const double tr = g.cc + g.ss;
  const double disc = std::hypot(g.cc - g.ss, 2.0 * std::abs(g.cs));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

cplx coherent_amp(cplx alpha, std::size_t n) {
  cplx a = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t k = 1; k <= n; ++k) a *= alpha / std::sqrt(double(k));
  return a;
}

}  // namespace

TEST_CASE("atomic inversion") {
  const JcmConfig c1{1.0, 0.0, 1};
  const JcmConfig c2{1.0, 0.0, 2};
  for (double t : {0.0, 0.4, 1.3, 7.7}) {
    CHECK(std::abs(sdfs::atomic_inversion(sdfs::evolve(FockVector::basis(2, 0), t, c1)) - std::cos(2 * t)) < 1e-14);
    CHECK(std::abs(sdfs::atomic_inversion(sdfs::evolve(FockVector::basis(3, 1), t, c2)) -
                   std::cos(2 * std::sqrt(2.0) * t)) < 1e-14);
  }
  const Prepared pr = prepare(SdfsParams({3, 0}, 1.0, 0.0, 2));
  CHECK(std::abs(sdfs::atomic_inversion(sdfs::evolve(pr.q, 0.0, pr.cfg)) - 1.0) < 1e-10);
}

TEST_CASE("Gram data") {
  const JcmConfig c1{1.0, 0.0, 1};
  const GramData g0 = sdfs::gram(sdfs::field_density(sdfs::evolve(FockVector::basis(2, 0), 0.0, c1)));
  CHECK(g0.cc == 1.0);
  CHECK(g0.ss == 0.0);
  CHECK(g0.cs == cplx{});
  const GramData g1 = sdfs::gram(sdfs::field_density(sdfs::evolve(FockVector::basis(2, 0), kPi / 4, c1)));
  CHECK(std::abs(g1.cc - 0.5) < 1e-15);
  CHECK(std::abs(g1.ss - 0.5) < 1e-15);
  CHECK(std::abs(g1.cs) < 1e-15);
}

TEST_CASE("field entropy") {
  const auto pure = sdfs::field_entropy({1.0, 0.0, {}});
  CHECK(pure.entropy == 0.0);
  CHECK(pure.lambda_plus == 1.0);
  CHECK(std::abs(sdfs::field_entropy({0.5, 0.5, {}}).entropy - std::log(2.0)) < 1e-15);

  const GramData g{0.7, 0.3, {0.2, 0.1}};
  const auto e = sdfs::field_entropy(g);
  const auto [lp, lm] = gram_eigen(g);
  CHECK(std::abs(e.lambda_plus - lp) < 1e-12);
  CHECK(std::abs(e.lambda_minus - lm) < 1e-12);
  CHECK(std::abs(e.entropy + xlogx(lp) + xlogx(lm)) < 1e-12);

  const auto swapped = sdfs::field_entropy({0.3, 0.7, {0.2, -0.1}});
  CHECK(std::abs(swapped.entropy - e.entropy) < 1e-14);

  CHECK_THROWS_AS(sdfs::field_entropy({0.7, 0.4, {}}), sdfs::DomainError);
  CHECK_THROWS_AS(sdfs::field_entropy({0.5, 0.5, {0.6, 0.0}}), sdfs::DomainError);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const double cc = u(rng);
    const double ss = 1.0 - cc;
    const GramData r{cc, ss, std::polar(std::sqrt(cc * ss) * u(rng), 2 * kPi * u(rng))};
    const auto ep = sdfs::field_entropy(r);
    const auto [a, b] = gram_eigen(r);
    worst = std::max({worst, std::abs(ep.lambda_plus - a), std::abs(ep.lambda_minus - b),
                      std::abs(ep.entropy + xlogx(a) + xlogx(b))});
    CHECK(ep.entropy >= 0.0);
    CHECK(ep.entropy <= std::log(2.0) + 1e-12);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("photon number distribution in time") {
  const JcmConfig c1{1.0, 0.0, 1};
  const auto fd = sdfs::field_density(sdfs::evolve(FockVector::basis(2, 0), kPi / 2, c1));
  CHECK(std::abs(sdfs::photon_number_dist_t(fd, 1) - 1.0) < 1e-15);
  CHECK_THROWS_AS(sdfs::photon_number_dist_t(fd, 3), sdfs::DomainError);

  const SdfsParams p({3, 0}, 1.0, 0.0, 1);
  const Prepared pr = prepare(p);
  const auto p0 = sdfs::photon_number_dist_t(sdfs::field_density(sdfs::evolve(pr.q, 0.0, pr.cfg)));
  const auto ref = sdfs::photon_distribution(p, pr.cfg.n_max);
  for (std::size_t n = 0; n <= pr.cfg.n_max; ++n) CHECK(std::abs(p0[n] - ref.probs[n]) < 1e-15);
  const auto pt = sdfs::photon_number_dist_t(sdfs::field_density(sdfs::evolve(pr.q, 11.0, pr.cfg)));
  double total = 0.0;
  for (double x : pt) {
    CHECK(x >= 0.0);
    total += x;
  }
  CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("phase distribution") {
  const auto etas = sdfs::uniform_etas(64);
  CHECK(etas.front() == -kPi);
  CHECK(etas.back() < kPi);

  const JcmConfig c1{1.0, 0.0, 1};
  const auto vac = sdfs::phase_distribution(sdfs::evolve(FockVector::basis(2, 0), 0.0, c1), etas);
  for (double v : vac.values) CHECK(std::abs(v - 0.5 / kPi) < 1e-15);

  const Prepared pr = prepare(SdfsParams({3, 0}, 1.0, 0.0, 1));
  const auto st = sdfs::evolve(pr.q, 4.2, pr.cfg);
  const auto pd = sdfs::phase_distribution(st, sdfs::uniform_etas(512));
  CHECK(std::abs(pd.integral() - 1.0) < 1e-6);

  // Full Hermitian double sum: its imaginary part must cancel.
  const std::size_t dim = pr.cfg.n_max + 2;
  for (double eta : {-2.9, -0.3, 0.0, 1.1, 3.0}) {
    cplx s{};
    for (std::size_t l = 0; l < dim; ++l)
      for (std::size_t j = 0; j < dim; ++j)
        s += sdfs::density_element(st, l, j) * std::polar(1.0, (double(j) - double(l)) * eta);
    s /= 2 * kPi;
    CHECK(std::abs(s.imag()) < 1e-10);
    const std::vector<double> one{eta};
    CHECK(std::abs(sdfs::phase_distribution(st, one).values[0] - s.real()) < 1e-10);
  }
  const std::vector<double> bad{kPi};
  CHECK_THROWS_AS(sdfs::phase_distribution(st, bad), sdfs::DomainError);
}

TEST_CASE("Husimi Q function") {
  const JcmConfig c1{1.0, 0.0, 1};
  const auto vac = sdfs::evolve(FockVector::basis(2, 0), 0.0, c1);
  CHECK(std::abs(sdfs::q_function(vac, {1.0, 0.0}) - std::exp(-1.0) / kPi) < 1e-15);

  const Prepared coh = prepare(SdfsParams({3, 0}, 0.0, 0.0, 0));
  const auto sc = sdfs::evolve(coh.q, 0.0, coh.cfg);
  CHECK(std::abs(sdfs::q_function(sc, {2.5, 0.0}) - std::exp(-0.25) / kPi) < 1e-12);

  const Prepared pr = prepare(SdfsParams({3, 0}, 1.0, 0.0, 1));
  const auto st = sdfs::evolve(pr.q, 6.0, pr.cfg);
  const std::size_t dim = pr.cfg.n_max + 2;
  for (cplx alpha : {cplx{0.0, 0.0}, cplx{2.0, -1.0}, cplx{-3.0, 4.0}}) {
    cplx s{};
    for (std::size_t l = 0; l < dim; ++l)
      for (std::size_t j = 0; j < dim; ++j)
        s += std::conj(coherent_amp(alpha, l)) * sdfs::density_element(st, l, j) * coherent_amp(alpha, j);
    CHECK(std::abs(sdfs::q_function(st, alpha) - s.real() / kPi) < 1e-12);
  }

  const auto grid = sdfs::q_grid(sdfs::evolve(pr.q, 0.0, pr.cfg));
  CHECK(grid.x_axis.size() == 201);
  CHECK(std::abs(grid.integral() - 1.0) < 1e-3);
  double mn = 1.0;
  for (double v : grid.values) mn = std::min(mn, v);
  CHECK(mn >= -1e-12);
  CHECK(std::abs(grid.cell_area() - 0.08 * 0.08) < 1e-15);

  sdfs::QGridSpec bad;
  bad.nx = 1;
  CHECK_THROWS_AS(bad.validate(), sdfs::DomainError);
}

TEST_CASE("revival time") {
  CHECK(std::abs(sdfs::revival_time(SdfsParams({3, 0}, 0, 0, 0)) - 6 * kPi) < 1e-12);
  CHECK(std::abs(sdfs::revival_time(SdfsParams({3, 0}, 1, 0, 2)) - 20.244) < 1e-3);
  CHECK_THROWS_AS(sdfs::revival_time(SdfsParams({0, 0}, 0, 0, 1)), sdfs::DomainError);
}
