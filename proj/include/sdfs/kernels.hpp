#pragma once

// Data-parallel inner loops shared by the oracle and the observables.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The public entry points dispatch through a table chosen
// once at startup from the CPU features (override with SDFS_KERNELS=scalar or
// select_backend()). The per-backend namespaces are exposed so the
// equivalence tests can call both sides directly.

#include <complex>
#include <span>
#include <string_view>

namespace sdfs::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
Backend active_backend() noexcept;
/// Throws DomainError if `b` is not available on this CPU/build.
void select_backend(Backend b);

/// Sum_i conj(x_i) * y_i. Sizes must match (checked by the dispatcher).
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
/// Sum_i x_i * y_i.
cplx dotu(std::span<const cplx> x, std::span<const cplx> y);
/// Sum_i |x_i|^2.
double sum_abs2(std::span<const cplx> x);

/// out[e] = Sum_{k=1..K} Re(coeffs[k-1] * exp(i k etas[e])).
void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out);

/// out[p] = <alpha_p | v> = exp(-|alpha_p|^2/2) Sum_n v_n conj(alpha_p)^n / sqrt(n!)
/// for the coherent state |alpha_p>. Falls back to log-domain terms when
/// exp(-|alpha|^2/2) would underflow.
void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out);

namespace scalar {
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
cplx dotu(std::span<const cplx> x, std::span<const cplx> y);
double sum_abs2(std::span<const cplx> x);
void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out);
void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out);
}  // namespace scalar

namespace avx2 {
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
cplx dotu(std::span<const cplx> x, std::span<const cplx> y);
double sum_abs2(std::span<const cplx> x);
void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out);
void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out);
}  // namespace avx2

}  // namespace sdfs::kernels
