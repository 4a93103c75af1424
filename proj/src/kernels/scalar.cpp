#include <cmath>

#include "kernels/coherent_tail.hpp"
#include "sdfs/kernels.hpp"

namespace sdfs::kernels::scalar {

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

double sum_abs2(std::span<const cplx> x) {
  double acc = 0.0;
  for (const auto& z : x) acc += z.real() * z.real() + z.imag() * z.imag();
  return acc;
}

void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out) {
  for (std::size_t e = 0; e < etas.size(); ++e) {
    const double c1 = std::cos(etas[e]);
    const double s1 = std::sin(etas[e]);
    double zr = c1, zi = s1;
    double acc = 0.0;
    for (const auto& c : coeffs) {
      acc += c.real() * zr - c.imag() * zi;
      const double nr = zr * c1 - zi * s1;
      zi = zr * s1 + zi * c1;
      zr = nr;
    }
    out[e] = acc;
  }
}

void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out) {
  for (std::size_t p = 0; p < alphas.size(); ++p) {
    const cplx alpha = alphas[p];
    const double mod2 = std::norm(alpha);
    if (mod2 > detail::kCoherentRecurrenceLimit) {
      out[p] = detail::coherent_overlap_logdomain(v, alpha);
      continue;
    }
    // term_n = exp(-|a|^2/2) conj(a)^n / sqrt(n!), bounded by 1 for all n.
    const double ar = alpha.real(), ai = -alpha.imag();
    double tr = std::exp(-0.5 * mod2), ti = 0.0;
    double accr = 0.0, acci = 0.0;
    for (std::size_t n = 0; n < v.size(); ++n) {
      if (n > 0) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        const double nr = (tr * ar - ti * ai) * scale;
        ti = (tr * ai + ti * ar) * scale;
        tr = nr;
      }
      accr += tr * v[n].real() - ti * v[n].imag();
      acci += tr * v[n].imag() + ti * v[n].real();
    }
    out[p] = {accr, acci};
  }
}

}  // namespace sdfs::kernels::scalar
