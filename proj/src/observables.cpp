#include "sdfs/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sdfs/error.hpp"
#include "sdfs/kernels.hpp"

namespace sdfs {
namespace {

constexpr double kPi = std::numbers::pi;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double clamp_eigenvalue(double lambda) {
  if (lambda < 0.0 && lambda >= -1e-12) return 0.0;
  if (lambda > 1.0 && lambda <= 1.0 + 1e-12) return 1.0;
  return lambda;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  return out;
}

}  // namespace

double PhaseDistribution::integral() const {
  const std::size_t n = etas.size();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double width = j == 0 ? etas[0] + 2.0 * kPi - etas[i] : etas[j] - etas[i];
    total += 0.5 * (values[i] + values[j]) * width;
  }
  return total;
}

void QGridSpec::validate() const {
  if (nx < 2 || ny < 2) throw DomainError("Q grid needs at least 2 points per axis");
  if (!(x_max > x_min) || !(y_max > y_min)) throw DomainError("Q grid bounds are empty");
}

double QGrid::cell_area() const {
  const double dx = (x_axis.back() - x_axis.front()) / static_cast<double>(x_axis.size() - 1);
  const double dy = (y_axis.back() - y_axis.front()) / static_cast<double>(y_axis.size() - 1);
  return dx * dy;
}

double QGrid::integral() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * cell_area();
}

double atomic_inversion(const EvolvedState& st) {
  return kernels::sum_abs2(st.a_coeffs) - kernels::sum_abs2(st.b_coeffs);
}

GramData gram(const FieldDensity& fd) {
  return {inner_product(fd.c_vec, fd.c_vec).real(), inner_product(fd.s_vec, fd.s_vec).real(),
          inner_product(fd.c_vec, fd.s_vec)};
}

EntropyPoint field_entropy(const GramData& g) {
  const double cs_abs = std::abs(g.cs);
  const bool in_range = g.cc >= -1e-12 && g.cc <= 1.0 + 1e-12 && g.ss >= -1e-12 &&
                        g.ss <= 1.0 + 1e-12;
  if (!in_range || std::abs(g.cc + g.ss - 1.0) > 1e-10 ||
      cs_abs * cs_abs > g.cc * g.ss + 1e-12)
    throw DomainError("Gram data violates <C|C> + <S|S> = 1 or Cauchy-Schwarz");

  EntropyPoint e;
  if (cs_abs > 1e-14) {
    e.theta = std::asinh((g.cc - g.ss) / (2.0 * cs_abs));
    e.lambda_plus = g.cc + std::exp(-e.theta) * cs_abs;
    e.lambda_minus = g.cc - std::exp(e.theta) * cs_abs;
  } else {
    e.theta = std::copysign(std::numeric_limits<double>::infinity(), g.cc - g.ss);
    e.lambda_plus = std::max(g.cc, g.ss);
    e.lambda_minus = std::min(g.cc, g.ss);
  }
  e.lambda_plus = clamp_eigenvalue(e.lambda_plus);
  e.lambda_minus = clamp_eigenvalue(e.lambda_minus);
  e.entropy = -(xlogx(e.lambda_plus) + xlogx(e.lambda_minus));
  return e;
}

double photon_number_dist_t(const FieldDensity& fd, std::size_t n) {
  if (n >= fd.c_vec.dim()) throw DomainError("photon number index out of range");
  return std::norm(fd.c_vec[n]) + std::norm(fd.s_vec[n]);
}

std::vector<double> photon_number_dist_t(const FieldDensity& fd) {
  std::vector<double> out(fd.c_vec.dim());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = photon_number_dist_t(fd, n);
  return out;
}

std::vector<double> uniform_etas(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k)
    out[k] = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
  return out;
}

PhaseDistribution phase_distribution(const EvolvedState& st, std::span<const double> etas) {
  for (double eta : etas)
    if (!(eta >= -kPi && eta < kPi)) throw DomainError("phase angle outside [-pi, pi)");

  const std::span<const cplx> a = st.a_coeffs;
  const std::span<const cplx> b = st.b_coeffs;
  const std::size_t n = a.size();
  // rho lives on 0..n (n_max + 2 levels); its k-th superdiagonal sum is
  // c_k = Sum_l A_l conj(A_{l+k}) + B_l conj(B_{l+k}).
  std::vector<cplx> diag_sums(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx c{};
    if (k < n) {
      c += std::conj(kernels::dotc(a.first(n - k), a.subspan(k)));
      c += std::conj(kernels::dotc(b.first(n - k), b.subspan(k)));
    }
    diag_sums[k - 1] = c;
  }
  const double trace = kernels::sum_abs2(a) + kernels::sum_abs2(b);

  PhaseDistribution pd;
  pd.etas.assign(etas.begin(), etas.end());
  pd.values.resize(etas.size());
  kernels::phase_series(diag_sums, pd.etas, pd.values);
  for (double& v : pd.values) v = (trace + 2.0 * v) / (2.0 * kPi);
  return pd;
}

double q_function(const FieldDensity& fd, cplx alpha) {
  const cplx alphas[1] = {alpha};
  cplx c[1], s[1];
  kernels::coherent_overlap(fd.c_vec.amps(), alphas, c);
  kernels::coherent_overlap(fd.s_vec.amps(), alphas, s);
  return (std::norm(c[0]) + std::norm(s[0])) / kPi;
}

double q_function(const EvolvedState& st, cplx alpha) {
  return q_function(field_density(st), alpha);
}

QGrid q_grid(const EvolvedState& st, const QGridSpec& spec) {
  spec.validate();
  const FieldDensity fd = field_density(st);
  QGrid g;
  g.x_axis = linspace(spec.x_min, spec.x_max, spec.nx);
  g.y_axis = linspace(spec.y_min, spec.y_max, spec.ny);
  g.values.resize(spec.nx * spec.ny);
  std::vector<cplx> alphas(spec.nx), c(spec.nx), s(spec.nx);
  for (std::size_t iy = 0; iy < spec.ny; ++iy) {
    for (std::size_t ix = 0; ix < spec.nx; ++ix) alphas[ix] = {g.x_axis[ix], g.y_axis[iy]};
    kernels::coherent_overlap(fd.c_vec.amps(), alphas, c);
    kernels::coherent_overlap(fd.s_vec.amps(), alphas, s);
    for (std::size_t ix = 0; ix < spec.nx; ++ix)
      g.values[iy * spec.nx + ix] = (std::norm(c[ix]) + std::norm(s[ix])) / kPi;
  }
  return g;
}

double revival_time(const SdfsParams& p) {
  if (p.alpha0() == cplx{} && !p.is_squeezed())
    throw DomainError("revival time is undefined for the vacuum/Fock input (alpha0 = 0, r = 0)");
  const double sh = std::sinh(p.r());
  return 2.0 * kPi * std::sqrt(std::norm(p.alpha0()) + sh * sh);
}

}  // namespace sdfs
