#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdfs/error.hpp"
#include "sdfs/states.hpp"

using sdfs::cplx;
using sdfs::SdfsParams;

namespace {

double poisson(double mean, std::size_t n) {
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

double oracle_mean(const sdfs::FockVector& v) {
  double s = 0.0;
  for (std::size_t n = 0; n < v.dim(); ++n) s += n * std::norm(v[n]);
  return s;
}

SdfsParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> mi(0, 3);
  const double a = 3.0 * std::sqrt(u(rng));
  return SdfsParams(std::polar(a, 2.0 * std::numbers::pi * u(rng)), 1.2 * u(rng),
                    2.0 * std::numbers::pi * u(rng), mi(rng));
}

}  // namespace

TEST_CASE("parameter validation") {
  const SdfsParams p({1.0, 2.0}, 0.7, 7.0, 2);
  CHECK(p.phi() == doctest::Approx(7.0 - 2.0 * std::numbers::pi));
  CHECK(std::abs(p.mu() * p.mu() - std::norm(p.nu()) - 1.0) < 1e-14);
  CHECK_THROWS_AS(SdfsParams({0, 0}, -0.1, 0.0, 0), sdfs::DomainError);
  CHECK_THROWS_AS(SdfsParams({0, 0}, 0.1, 0.0, -1), sdfs::DomainError);
  CHECK_THROWS_AS(SdfsParams({std::nan(""), 0}, 0.1, 0.0, 0), sdfs::DomainError);
}

TEST_CASE("amplitude examples") {
  CHECK(std::abs(sdfs::sdfs_amplitude(SdfsParams({2, 0}, 0, 0, 0), 3) -
                 std::exp(-2.0) * 8.0 / std::sqrt(6.0)) < 1e-14);
  CHECK(std::abs(sdfs::sdfs_amplitude(SdfsParams({0, 0}, 0.5, 0, 0), 1)) == 0.0);
  CHECK(sdfs::sdfs_amplitude(SdfsParams({0, 0}, 0, 0, 4), 4) == cplx{1.0});

  const SdfsParams p({3, 0}, 1.0, 0.0, 1);
  const sdfs::FockVector oracle = sdfs::build_sdfs_oracle(p, 128);
  CHECK(std::abs(sdfs::sdfs_amplitude(p, 5) - oracle[5]) < 1e-8);
}

TEST_CASE("amplitudes match the oracle on the parameter grid") {
  double worst = 0.0;
  for (double a : {0.0, 0.5, 2.0})
    for (double r : {0.0, 0.3, 1.0})
      for (double phi : {0.0, std::numbers::pi / 2})
        for (int m : {0, 1, 3, 5}) {
          const SdfsParams p({a, 0.0}, r, phi, m);
          const sdfs::FockVector oracle = sdfs::build_sdfs_oracle(p, sdfs::oracle_dim_for(p));
          const std::size_t n_max = sdfs::choose_truncation(p);
          for (std::size_t n = 0; n <= n_max; ++n)
            worst = std::max(worst, std::abs(sdfs::sdfs_amplitude(p, n) - oracle[n]));
        }
  CHECK(worst < 1e-8);
}

TEST_CASE("parity of undisplaced states") {
  for (double r : {0.2, 0.9})
    for (int m : {0, 1, 2, 3}) {
      const SdfsParams p({0, 0}, r, 1.1, m);
      for (std::size_t n = 0; n < 60; ++n)
        if ((n + m) % 2 == 1) CHECK(std::abs(sdfs::sdfs_amplitude(p, n)) < 1e-14);
    }
}

TEST_CASE("truncation selection") {
  CHECK(sdfs::choose_truncation(SdfsParams({0, 0}, 0, 0, 2)) == 2);
  CHECK(sdfs::choose_truncation(SdfsParams({0, 0}, 0, 0, 0)) == 1);

  const std::size_t n = sdfs::choose_truncation(SdfsParams({3, 0}, 0, 0, 0));
  CHECK(n >= 40);
  double tail = 0.0;
  for (std::size_t k = n + 1; k < 400; ++k) tail += poisson(9.0, k);
  CHECK(tail < 1e-12);

  const SdfsParams sq({3, 0}, 1.0, 0.0, 2);
  const std::size_t ns = sdfs::choose_truncation(sq);
  const sdfs::FockVector oracle = sdfs::build_sdfs_oracle(sq, sdfs::oracle_dim_for(sq));
  double otail = 0.0;
  for (std::size_t k = ns + 1; k < oracle.dim(); ++k) otail += std::norm(oracle[k]);
  CHECK(otail < 1e-12);

  CHECK_THROWS_AS(sdfs::choose_truncation(SdfsParams({30, 0}, 0, 0, 0)), sdfs::TruncationError);
  CHECK_THROWS_AS(sdfs::choose_truncation(SdfsParams({1, 0}, 0, 0, 0), 0.0), sdfs::DomainError);
}

TEST_CASE("states, normalization and photon statistics") {
  SUBCASE("coherent state is Poissonian") {
    const sdfs::PhotonDistribution d = sdfs::photon_distribution(SdfsParams({3, 0}, 0, 0, 0), 60);
    CHECK(std::abs(d.probs[9] - std::exp(-9.0) * std::pow(9.0, 9) / 362880.0) < 1e-14);
    for (std::size_t n = 0; n < d.probs.size(); ++n) CHECK(std::abs(d.probs[n] - poisson(9.0, n)) < 1e-12);
  }
  SUBCASE("large photon numbers stay normalized") {
    const SdfsParams p({10, 0}, 0.5, 0.3, 2);
    const sdfs::FockVector v = sdfs::sdfs_state(p, sdfs::choose_truncation(p));
    CHECK(std::abs(v.norm2() - 1.0) < 1e-10);
    CHECK(v.is_normalized());
  }
  SUBCASE("under-truncation is rejected") {
    CHECK_THROWS_AS(sdfs::sdfs_state(SdfsParams({3, 0}, 0, 0, 0), 5), sdfs::TruncationError);
  }
  SUBCASE("photon distribution matches the oracle") {
    const SdfsParams p({0.5, 0}, 1.0, 0.0, 2);
    const std::size_t n_max = sdfs::choose_truncation(p);
    const sdfs::PhotonDistribution d = sdfs::photon_distribution(p, n_max);
    const sdfs::FockVector oracle = sdfs::build_sdfs_oracle(p, sdfs::oracle_dim_for(p));
    for (std::size_t n = 0; n <= n_max; ++n) CHECK(std::abs(d.probs[n] - std::norm(oracle[n])) < 1e-12);
    CHECK(d.tail_mass < 1e-12);
  }
}

TEST_CASE("mean photon number") {
  CHECK(sdfs::mean_photon_number(SdfsParams({2, 0}, 0, 0, 0)) == doctest::Approx(4.0).epsilon(1e-14));
  const SdfsParams sq({3, 0}, 1.0, 0.0, 0);
  CHECK(std::abs(sdfs::mean_photon_number(sq) - 10.381097845541) < 1e-9);
  CHECK(std::abs(sdfs::mean_photon_number(SdfsParams({3, 0}, 1.0, 0.0, 2)) - 17.905489227709079) < 1e-12);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const SdfsParams p = random_params(rng);
    const sdfs::FockVector v = sdfs::sdfs_state(p, sdfs::choose_truncation(p));
    CHECK(std::abs(oracle_mean(v) - sdfs::mean_photon_number(p)) < 1e-6);
  }
  const sdfs::FockVector oracle = sdfs::build_sdfs_oracle(sq, sdfs::oracle_dim_for(sq));
  CHECK(std::abs(oracle_mean(oracle) - sdfs::mean_photon_number(sq)) < 1e-6);
}

TEST_CASE("overlaps") {
  const SdfsParams p({1.0, 0.5}, 0.4, 0.3, 2);
  CHECK(std::abs(sdfs::sdfs_overlap(p, p) - 1.0) < 1e-12);
  CHECK(std::abs(sdfs::sdfs_overlap(SdfsParams({1, 0}, 0.5, 0, 0), SdfsParams({1, 0}, 0.5, 0, 2))) < 1e-13);

  const SdfsParams d1({1, 0}, 0, 0, 1), d2({2, 0}, 0, 0, 1);
  const sdfs::FockVector o1 = sdfs::build_sdfs_oracle(d1, 96), o2 = sdfs::build_sdfs_oracle(d2, 96);
  CHECK(std::abs(sdfs::sdfs_overlap(d1, d2) - sdfs::inner_product(o1, o2)) < 1e-12);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SdfsParams a = random_params(rng), b = random_params(rng);
    const cplx ab = sdfs::sdfs_overlap(a, b), ba = sdfs::sdfs_overlap(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-10);
    CHECK(std::abs(ab) <= 1.0 + 1e-10);
  }
}
