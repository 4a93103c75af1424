#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sdfs/error.hpp"
#include "sdfs/kernels.hpp"

namespace k = sdfs::kernels;
using k::cplx;

namespace {

std::vector<cplx> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

// Straightforward std::complex references, independent of both backends.
cplx ref_dotc(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double ref_phase(const std::vector<cplx>& c, double eta) {
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    s += (c[j] * std::exp(cplx{0.0, (j + 1.0) * eta})).real();
  return s;
}

cplx ref_coherent(const std::vector<cplx>& v, cplx alpha) {
  cplx s{};
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * std::norm(alpha) + (n ? nd * std::log(std::abs(alpha)) : 0.0) -
                           0.5 * std::lgamma(nd + 1.0);
    s += std::polar(std::exp(log_mag), -nd * std::arg(alpha)) * v[n];
  }
  return s;
}

double scale_of(const std::vector<cplx>& x) {
  double s = 0.0;
  for (const auto& z : x) s += std::abs(z);
  return std::max(1.0, s);
}

}  // namespace

TEST_CASE("scalar kernels match direct complex arithmetic") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 64u, 129u}) {
    const auto x = random_vector(rng, n), y = random_vector(rng, n);
    CHECK(std::abs(k::scalar::dotc(x, y) - ref_dotc(x, y)) < 1e-12 * scale_of(x) * scale_of(y));
    double s2 = 0.0;
    for (const auto& z : x) s2 += std::norm(z);
    CHECK(std::abs(k::scalar::sum_abs2(x) - s2) < 1e-12 * std::max(1.0, s2));
  }

  const auto c = random_vector(rng, 40, 0.1);
  std::vector<double> etas;
  for (int i = 0; i < 17; ++i) etas.push_back(-std::numbers::pi + 0.37 * i);
  std::vector<double> out(etas.size());
  k::scalar::phase_series(c, etas, out);
  for (std::size_t i = 0; i < etas.size(); ++i) CHECK(std::abs(out[i] - ref_phase(c, etas[i])) < 1e-12);

  const auto v = random_vector(rng, 90, 0.1);
  const std::vector<cplx> alphas{{0.0, 0.0}, {0.3, -0.2}, {3.0, 1.0}, {-5.0, 6.0}, {30.0, 25.0}};
  std::vector<cplx> co(alphas.size());
  k::scalar::coherent_overlap(v, alphas, co);
  for (std::size_t i = 0; i < alphas.size(); ++i)
    CHECK(std::abs(co[i] - ref_coherent(v, alphas[i])) < 1e-12);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!k::backend_available(k::Backend::avx2)) {
    MESSAGE("avx2 backend unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> len(0, 300);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng);
    const auto x = random_vector(rng, n), y = random_vector(rng, n);
    const double tol = 1e-13 * scale_of(x) * scale_of(y);
    CHECK(std::abs(k::scalar::dotc(x, y) - k::avx2::dotc(x, y)) < tol);
    CHECK(std::abs(k::scalar::dotu(x, y) - k::avx2::dotu(x, y)) < tol);
    CHECK(std::abs(k::scalar::sum_abs2(x) - k::avx2::sum_abs2(x)) < 1e-13 * scale_of(x) * scale_of(x));

    std::vector<double> etas(len(rng) % 23);
    for (auto& e : etas) e = ang(rng);
    std::vector<double> p1(etas.size()), p2(etas.size());
    k::scalar::phase_series(x, etas, p1);
    k::avx2::phase_series(x, etas, p2);
    for (std::size_t i = 0; i < etas.size(); ++i) CHECK(std::abs(p1[i] - p2[i]) < 1e-12 * scale_of(x));

    std::vector<cplx> alphas = random_vector(rng, len(rng) % 13, 4.0);
    if (trial % 10 == 0 && !alphas.empty()) alphas[0] = {40.0, -5.0};  // log-domain path
    std::vector<cplx> c1(alphas.size()), c2(alphas.size());
    k::scalar::coherent_overlap(x, alphas, c1);
    k::avx2::coherent_overlap(x, alphas, c2);
    for (std::size_t i = 0; i < alphas.size(); ++i)
      CHECK(std::abs(c1[i] - c2[i]) < 1e-12 * scale_of(x));
  }
}

TEST_CASE("backend selection and dispatch checks") {
  const k::Backend before = k::active_backend();
  k::select_backend(k::Backend::scalar);
  CHECK(k::active_backend() == k::Backend::scalar);
  CHECK(k::backend_name(k::Backend::scalar) == "scalar");
  if (k::backend_available(k::Backend::avx2)) {
    k::select_backend(k::Backend::avx2);
    CHECK(k::active_backend() == k::Backend::avx2);
  } else {
    CHECK_THROWS_AS(k::select_backend(k::Backend::avx2), sdfs::DomainError);
  }
  k::select_backend(before);

  const std::vector<cplx> a(3), b(4);
  CHECK_THROWS_AS(k::dotc(a, b), sdfs::DomainError);
  std::vector<double> etas(2), out(3);
  CHECK_THROWS_AS(k::phase_series(a, etas, out), sdfs::DomainError);
}
