// Compiled with -mavx2 -mfma; only reached after the dispatcher has checked
// the CPU flags.

#include <immintrin.h>

#include <cmath>

#include "kernels/coherent_tail.hpp"
#include "sdfs/kernels.hpp"

namespace sdfs::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Interleaved (re, im) products: prod = x*y lanewise, cross = x*swap(y).
inline void complex_products(std::span<const cplx> x, std::span<const cplx> y,
                             double& prod_even, double& prod_odd,
                             double& cross_even, double& cross_odd) {
  const auto* xp = reinterpret_cast<const double*>(x.data());
  const auto* yp = reinterpret_cast<const double*>(y.data());
  const std::size_t n = x.size();
  __m256d prod = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    const __m256d ys = _mm256_permute_pd(yv, 0b0101);
    prod = _mm256_fmadd_pd(xv, yv, prod);
    cross = _mm256_fmadd_pd(xv, ys, cross);
  }
  alignas(32) double pb[4], cb[4];
  _mm256_store_pd(pb, prod);
  _mm256_store_pd(cb, cross);
  prod_even = pb[0] + pb[2];
  prod_odd = pb[1] + pb[3];
  cross_even = cb[0] + cb[2];
  cross_odd = cb[1] + cb[3];
  for (; i < n; ++i) {
    prod_even += x[i].real() * y[i].real();
    prod_odd += x[i].imag() * y[i].imag();
    cross_even += x[i].real() * y[i].imag();
    cross_odd += x[i].imag() * y[i].real();
  }
}

}  // namespace

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  double pe, po, ce, co;
  complex_products(x, y, pe, po, ce, co);
  return {pe + po, ce - co};
}

cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  double pe, po, ce, co;
  complex_products(x, y, pe, po, ce, co);
  return {pe - po, ce + co};
}

double sum_abs2(std::span<const cplx> x) {
  const auto* xp = reinterpret_cast<const double*>(x.data());
  const std::size_t len = 2 * x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    const __m256d b = _mm256_loadu_pd(xp + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) acc += xp[i] * xp[i];
  return acc;
}

void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out) {
  const std::size_t ne = etas.size();
  std::size_t e = 0;
  for (; e + 4 <= ne; e += 4) {
    alignas(32) double cb[4], sb[4];
    for (int l = 0; l < 4; ++l) {
      cb[l] = std::cos(etas[e + l]);
      sb[l] = std::sin(etas[e + l]);
    }
    const __m256d c1 = _mm256_load_pd(cb);
    const __m256d s1 = _mm256_load_pd(sb);
    __m256d zr = c1, zi = s1;
    __m256d acc = _mm256_setzero_pd();
    for (const auto& c : coeffs) {
      const __m256d cr = _mm256_set1_pd(c.real());
      const __m256d ci = _mm256_set1_pd(c.imag());
      acc = _mm256_fmadd_pd(cr, zr, acc);
      acc = _mm256_fnmadd_pd(ci, zi, acc);
      const __m256d nr = _mm256_fmsub_pd(zr, c1, _mm256_mul_pd(zi, s1));
      zi = _mm256_fmadd_pd(zr, s1, _mm256_mul_pd(zi, c1));
      zr = nr;
    }
    _mm256_storeu_pd(out.data() + e, acc);
  }
  if (e < ne) scalar::phase_series(coeffs, etas.subspan(e), out.subspan(e));
}

void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out) {
  const std::size_t np = alphas.size();
  std::size_t p = 0;
  for (; p + 4 <= np; p += 4) {
    bool far = false;
    for (int l = 0; l < 4; ++l)
      far = far || std::norm(alphas[p + l]) > detail::kCoherentRecurrenceLimit;
    if (far) {
      scalar::coherent_overlap(v, alphas.subspan(p, 4), out.subspan(p, 4));
      continue;
    }
    alignas(32) double arb[4], aib[4], seed[4];
    for (int l = 0; l < 4; ++l) {
      arb[l] = alphas[p + l].real();
      aib[l] = -alphas[p + l].imag();
      seed[l] = std::exp(-0.5 * std::norm(alphas[p + l]));
    }
    const __m256d ar = _mm256_load_pd(arb);
    const __m256d ai = _mm256_load_pd(aib);
    __m256d tr = _mm256_load_pd(seed);
    __m256d ti = _mm256_setzero_pd();
    __m256d accr = _mm256_setzero_pd();
    __m256d acci = _mm256_setzero_pd();
    for (std::size_t n = 0; n < v.size(); ++n) {
      if (n > 0) {
        const __m256d scale = _mm256_set1_pd(1.0 / std::sqrt(static_cast<double>(n)));
        const __m256d nr = _mm256_mul_pd(_mm256_fmsub_pd(tr, ar, _mm256_mul_pd(ti, ai)), scale);
        ti = _mm256_mul_pd(_mm256_fmadd_pd(tr, ai, _mm256_mul_pd(ti, ar)), scale);
        tr = nr;
      }
      const __m256d vr = _mm256_set1_pd(v[n].real());
      const __m256d vi = _mm256_set1_pd(v[n].imag());
      accr = _mm256_fmadd_pd(tr, vr, accr);
      accr = _mm256_fnmadd_pd(ti, vi, accr);
      acci = _mm256_fmadd_pd(tr, vi, acci);
      acci = _mm256_fmadd_pd(ti, vr, acci);
    }
    alignas(32) double rb[4], ib[4];
    _mm256_store_pd(rb, accr);
    _mm256_store_pd(ib, acci);
    for (int l = 0; l < 4; ++l) out[p + l] = {rb[l], ib[l]};
  }
  if (p < np) scalar::coherent_overlap(v, alphas.subspan(p), out.subspan(p));
}

}  // namespace sdfs::kernels::avx2
