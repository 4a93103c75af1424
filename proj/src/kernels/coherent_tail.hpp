#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace sdfs::kernels::detail {

// Beyond this |alpha|^2 the seed exp(-|alpha|^2/2) of the term recurrence
// underflows; both backends switch to per-term log-domain evaluation.
inline constexpr double kCoherentRecurrenceLimit = 1200.0;

inline std::complex<double> coherent_overlap_logdomain(
    std::span<const std::complex<double>> v, std::complex<double> alpha) {
  const double mod2 = std::norm(alpha);
  const double log_mod = 0.5 * std::log(mod2);
  const double arg = std::arg(alpha);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * mod2 + nd * log_mod - 0.5 * std::lgamma(nd + 1.0);
    acc += std::polar(std::exp(log_mag), -nd * arg) * v[n];
  }
  return acc;
}

}  // namespace sdfs::kernels::detail
