#include "sdfs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hermite.hpp"
#include "sdfs/error.hpp"

namespace sdfs {
namespace {

using detail::log_factorial;

cplx ipow(cplx base, std::size_t e) {
  cplx r{1.0, 0.0};
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// exp(log_mag + i phase) * unit, with unit a complex of modest magnitude.
cplx from_log(cplx log_value, cplx unit) {
  if (unit == cplx{}) return {};
  const cplx total = log_value + std::log(unit);
  if (total.real() < -745.0) return {};
  return std::exp(total);
}

// log of the Gaussian prefactor exp(-|a|^2/2 - nu conj(a)^2 / (2 mu)) / sqrt(mu).
cplx log_prefactor(const SdfsParams& p) {
  const cplx a = p.alpha0();
  const double mu = p.mu();
  return -0.5 * std::norm(a) - p.nu() * std::conj(a) * std::conj(a) / (2.0 * mu) -
         0.5 * std::log(mu);
}

// <n | D(alpha) | m> for n = 0..n_max: the unsqueezed branch, where the
// general formula's nu-dependent factors degenerate.
std::vector<cplx> displaced_fock_amplitudes(const SdfsParams& p, std::size_t n_max) {
  const auto m = static_cast<std::size_t>(p.m());
  std::vector<cplx> out(n_max + 1);
  const cplx alpha = p.alpha0();
  if (alpha == cplx{}) {
    if (m <= n_max) out[m] = 1.0;
    return out;
  }
  const double x = std::norm(alpha);
  const double log_mod = 0.5 * std::log(x);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t lo = std::min(n, m);
    const std::size_t hi = std::max(n, m);
    const double k = static_cast<double>(hi - lo);
    // n >= m: sqrt(m!/n!) alpha^(n-m) L_m^(n-m); n < m: sqrt(n!/m!) (-conj alpha)^(m-n) L_n^(m-n)
    const cplx base = n >= m ? alpha : -std::conj(alpha);
    const double lag = detail::generalized_laguerre(lo, k, x);
    const double log_mag =
        0.5 * (log_factorial(lo) - log_factorial(hi)) + k * log_mod - 0.5 * x;
    out[n] = from_log(cplx{log_mag, k * std::arg(base)}, cplx{lag, 0.0});
  }
  return out;
}

// Fock amplitudes of D(alpha) S(z)|m> with r > 0:
//   q_n = pref * Sum_{i<=min(n,m)} sqrt(n! m!) / (i! (n-i)! (m-i)!) mu^-i
//                 h_{n-i}(abar/2mu; nu/2mu) h_{m-i}(-conj(alpha)/2mu; -conj(nu)/2mu)
std::vector<cplx> squeezed_amplitudes(const SdfsParams& p, std::size_t n_max) {
  const auto m = static_cast<std::size_t>(p.m());
  const double mu = p.mu();
  const cplx nu = p.nu();
  const detail::ScaledHermiteTable hn(p.alpha_bar() / (2.0 * mu), nu / (2.0 * mu), n_max);
  const detail::ScaledHermiteTable hm(-std::conj(p.alpha0()) / (2.0 * mu),
                                      -std::conj(nu) / (2.0 * mu), m);
  const cplx log_pref = log_prefactor(p);
  const double log_mu = std::log(mu);

  std::vector<cplx> out(n_max + 1);
  std::vector<double> logs;
  std::vector<cplx> mants;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t top = std::min(n, m);
    logs.clear();
    mants.clear();
    double log_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= top; ++i) {
      const cplx mant = hn.mantissa[n - i] * hm.mantissa[m - i];
      if (mant == cplx{}) continue;
      const double lc = 0.5 * (log_factorial(n) - log_factorial(n - i) + log_factorial(m) -
                               log_factorial(m - i)) -
                        log_factorial(i) - static_cast<double>(i) * log_mu +
                        hn.log_scale[n - i] + hm.log_scale[m - i];
      logs.push_back(lc);
      mants.push_back(mant);
      log_max = std::max(log_max, lc);
    }
    if (mants.empty()) continue;
    cplx sum{};
    for (std::size_t j = 0; j < mants.size(); ++j) sum += std::exp(logs[j] - log_max) * mants[j];
    out[n] = from_log(log_pref + log_max, sum);
  }
  return out;
}

std::vector<cplx> amplitudes(const SdfsParams& p, std::size_t n_max) {
  return p.is_squeezed() ? squeezed_amplitudes(p, n_max) : displaced_fock_amplitudes(p, n_max);
}

void check_n_max(std::size_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (n_max > kMaxNmax)
    throw TruncationError("n_max " + std::to_string(n_max) + " exceeds cap " +
                          std::to_string(kMaxNmax));
}

}  // namespace

std::size_t choose_truncation(const SdfsParams& p, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("tail_tol must lie in (0, 1)");
  if (!p.is_squeezed() && p.alpha0() == cplx{}) {
    const auto m = static_cast<std::size_t>(p.m());
    if (m > kMaxNmax) throw TruncationError("Fock number exceeds the truncation cap");
    return std::max<std::size_t>(m, 1);
  }

  const std::vector<cplx> amps = amplitudes(p, kMaxNmax);
  std::vector<double> suffix(amps.size() + 1, 0.0);
  for (std::size_t n = amps.size(); n-- > 0;) suffix[n] = suffix[n + 1] + std::norm(amps[n]);
  const double beyond_cap = 1.0 - suffix[0];
  if (beyond_cap > tail_tol)
    throw TruncationError("state needs more than " + std::to_string(kMaxNmax) +
                          " Fock levels for tail tolerance " + std::to_string(tail_tol));

  std::size_t n_max = 0;
  while (n_max < kMaxNmax && suffix[n_max + 1] >= tail_tol) ++n_max;

  const double mean = mean_photon_number(p);
  const auto floor = static_cast<std::size_t>(std::ceil(mean + 10.0 * std::sqrt(mean + 1.0)));
  n_max = std::max({n_max, floor, std::size_t{1}});
  if (n_max > kMaxNmax)
    throw TruncationError("required n_max " + std::to_string(n_max) + " exceeds cap " +
                          std::to_string(kMaxNmax));
  return n_max;
}

std::size_t oracle_dim_for(const SdfsParams& p) {
  return std::min(2 * (choose_truncation(p) + 1), kMaxDenseDim);
}

cplx sdfs_amplitude(const SdfsParams& p, std::size_t n) {
  if (!p.is_squeezed()) return displaced_fock_amplitudes(p, n)[n];
  return squeezed_amplitudes(p, n)[n];
}

FockVector sdfs_state(const SdfsParams& p, std::size_t n_max) {
  check_n_max(n_max);
  std::vector<cplx> amps = amplitudes(p, n_max);
  FockVector v(amps);
  const double deficit = 1.0 - v.norm2();
  if (deficit > 1e-8)
    throw TruncationError("n_max " + std::to_string(n_max) +
                          " under-truncates the state: normalization deficit " +
                          std::to_string(deficit));
  if (std::abs(deficit) <= 1e-10) return FockVector::normalized(std::move(amps));
  return v;
}

PhotonDistribution photon_distribution(const SdfsParams& p, std::size_t n_max) {
  const FockVector v = sdfs_state(p, n_max);
  PhotonDistribution d;
  d.probs.reserve(v.dim());
  double total = 0.0;
  for (const auto& a : v.amps()) {
    d.probs.push_back(std::norm(a));
    total += d.probs.back();
  }
  d.tail_mass = 1.0 - total;
  return d;
}

double mean_photon_number(const SdfsParams& p) {
  const double mu2 = p.mu() * p.mu();
  const double nu2 = std::norm(p.nu());
  return (mu2 + nu2) * p.m() + nu2 + std::norm(p.alpha0());
}

cplx sdfs_overlap(const SdfsParams& p1, const SdfsParams& p2) {
  const auto m1 = static_cast<std::size_t>(p1.m());
  const auto m2 = static_cast<std::size_t>(p2.m());
  const cplx a1 = p1.alpha0();
  const cplx a2 = p2.alpha0();

  // Displaced Fock states:
  //   <a1|a2>/sqrt(m1! m2!) Sum_r m1! m2! / (r! (m2-r)! (m1-r)!) (a1* - a2*)^(m2-r) (a2 - a1)^(m1-r)
  if (!p1.is_squeezed() && !p2.is_squeezed()) {
    const cplx log_coh = -0.5 * std::norm(a1) - 0.5 * std::norm(a2) + std::conj(a1) * a2;
    const cplx u = std::conj(a1) - std::conj(a2);
    const cplx w = a2 - a1;
    cplx sum{};
    for (std::size_t r = 0; r <= std::min(m1, m2); ++r) {
      const double lc = 0.5 * (log_factorial(m1) + log_factorial(m2)) - log_factorial(r) -
                        log_factorial(m2 - r) - log_factorial(m1 - r);
      sum += std::exp(lc) * ipow(u, m2 - r) * ipow(w, m1 - r);
    }
    return from_log(log_coh, sum);
  }

  // Gaussian part: with F_i(w) the Bargmann function of state i, the overlap
  // is (1/pi) Int exp(-|w|^2) conj(F_1(w)) F_2(w) d^2w, and the exponential
  // factors integrate to I = exp((AB - aB^2 - bA^2)/D) / sqrt(D).
  const double mu1 = p1.mu(), mu2 = p2.mu();
  const cplx s1 = p1.nu() / (2.0 * mu1), s2 = p2.nu() / (2.0 * mu2);
  const cplx A = p2.alpha_bar() / mu2;
  const cplx B = std::conj(p1.alpha_bar() / mu1);
  const cplx a = s2;
  const cplx b = std::conj(s1);
  const cplx D = 1.0 - 4.0 * a * b;
  const cplx log_gauss = (A * B - a * B * B - b * A * A) / D - 0.5 * std::log(D);
  const cplx log_pre = std::conj(log_prefactor(p1)) + log_prefactor(p2) + log_gauss;

  // Squeezed coherent states: nothing but the Gaussian.
  if (m1 == 0 && m2 == 0) return std::exp(log_pre);

  // The Fock seeds contribute h_m(y' + w/2mu; s'), expanded in powers of w
  // (and conj w for state 1); the moments <w^j conj(w)^k> of the Gaussian are
  // Sum_p j! k! / (p! (j-p)! (k-p)!) D^-p h_{j-p}(u/2; b/D) h_{k-p}(v/2; a/D).
  const cplx u = (B - 2.0 * b * A) / D;
  const cplx v = (A - 2.0 * a * B) / D;
  const cplx y1 = -std::conj(a1) / (2.0 * mu1), sp1 = -std::conj(p1.nu()) / (2.0 * mu1);
  const cplx y2 = -std::conj(a2) / (2.0 * mu2), sp2 = -std::conj(p2.nu()) / (2.0 * mu2);

  cplx sum{};
  for (std::size_t j = 0; j <= m2; ++j) {
    const cplx seed2 = detail::scaled_hermite(m2 - j, y2, sp2);
    for (std::size_t k = 0; k <= m1; ++k) {
      const cplx seed1 = std::conj(detail::scaled_hermite(m1 - k, y1, sp1));
      cplx moment{};
      for (std::size_t q = 0; q <= std::min(j, k); ++q) {
        const double lc = log_factorial(j) + log_factorial(k) - log_factorial(q) -
                          log_factorial(j - q) - log_factorial(k - q);
        moment += std::exp(lc) * ipow(1.0 / D, q) *
                  detail::scaled_hermite(j - q, u / 2.0, b / D) *
                  detail::scaled_hermite(k - q, v / 2.0, a / D);
      }
      const double lb = log_factorial(m2) - log_factorial(j) - log_factorial(m2 - j) +
                        log_factorial(m1) - log_factorial(k) - log_factorial(m1 - k) -
                        static_cast<double>(j) * std::log(mu2) -
                        static_cast<double>(k) * std::log(mu1);
      sum += std::exp(lb) * seed2 * seed1 * moment;
    }
  }
  const double log_norm = -0.5 * (log_factorial(m1) + log_factorial(m2));
  return from_log(log_pre + log_norm, sum);
}

}  // namespace sdfs
