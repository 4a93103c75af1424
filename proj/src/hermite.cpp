#include "hermite.hpp"

#include <algorithm>
#include <cmath>

namespace sdfs::detail {

ScaledHermiteTable::ScaledHermiteTable(std::complex<double> y, std::complex<double> s,
                                       std::size_t max_order) {
  mantissa.resize(max_order + 1);
  log_scale.resize(max_order + 1);
  // Working pair (prev, cur) shares one running scale.
  std::complex<double> prev{0.0, 0.0};
  std::complex<double> cur{1.0, 0.0};
  double scale = 0.0;
  mantissa[0] = cur;
  log_scale[0] = 0.0;
  for (std::size_t k = 0; k < max_order; ++k) {
    const double kd = static_cast<double>(k);
    // hhat_{k+1} = (2y hhat_k - 2 s sqrt(k) hhat_{k-1}) / sqrt(k+1)
    std::complex<double> next = (2.0 * y * cur - 2.0 * s * std::sqrt(kd) * prev) / std::sqrt(kd + 1.0);
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 1e64 || (mag > 0.0 && mag < 1e-64)) {
      prev /= mag;
      cur /= mag;
      scale += std::log(mag);
    }
    mantissa[k + 1] = cur;
    log_scale[k + 1] = scale;
  }
}

std::complex<double> scaled_hermite(std::size_t k, std::complex<double> y,
                                    std::complex<double> s) {
  std::complex<double> h0{1.0, 0.0};
  if (k == 0) return h0;
  std::complex<double> h1 = 2.0 * y;
  for (std::size_t j = 1; j < k; ++j) {
    const std::complex<double> h2 = 2.0 * y * h1 - 2.0 * static_cast<double>(j) * s * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double generalized_laguerre(std::size_t n, double a, double x) {
  double l0 = 1.0;
  if (n == 0) return l0;
  double l1 = 1.0 + a - x;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double l2 = ((2.0 * jd + 1.0 + a - x) * l1 - (jd + a) * l0) / (jd + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace sdfs::detail
