#pragma once

// Scaled Hermite polynomials h_k(y; s) = s^{k/2} H_k(y / sqrt(s)).
//
// They satisfy h_{k+1} = 2y h_k - 2k s h_{k-1} with h_0 = 1, h_1 = 2y, are
// polynomial in s (no branch choice for sqrt(s)) and reduce to (2y)^k at
// s = 0. The table stores h_k / sqrt(k!) as mantissa * exp(log_scale) so that
// orders up to the Fock cap neither overflow nor underflow.

#include <complex>
#include <cstddef>
#include <vector>

namespace sdfs::detail {

struct ScaledHermiteTable {
  std::vector<std::complex<double>> mantissa;
  std::vector<double> log_scale;

  ScaledHermiteTable(std::complex<double> y, std::complex<double> s, std::size_t max_order);

  std::size_t size() const noexcept { return mantissa.size(); }
};

/// Plain h_k(y; s), no normalization. Only for small orders.
std::complex<double> scaled_hermite(std::size_t k, std::complex<double> y,
                                    std::complex<double> s);

/// Generalized Laguerre L_n^{(a)}(x) by the three-term recurrence in n.
double generalized_laguerre(std::size_t n, double a, double x);

/// log(n!)
double log_factorial(std::size_t n);

}  // namespace sdfs::detail
