#include "sdfs/jcm.hpp"

#include <cmath>
#include <string>

#include "sdfs/error.hpp"

namespace sdfs {

void JcmConfig::validate() const {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw DomainError("coupling must be > 0");
  if (!std::isfinite(detuning_ratio)) throw DomainError("detuning_ratio must be finite");
  if (n_max < 1) throw DomainError("n_max must be >= 1");
}

double rabi_freq(std::size_t n, const JcmConfig& cfg) {
  const double d = cfg.detuning_ratio;
  return std::sqrt(0.25 * d * d + static_cast<double>(n) + 1.0);
}

EvolvedState evolve(const FockVector& q, double t_scaled, const JcmConfig& cfg) {
  cfg.validate();
  if (q.dim() != cfg.n_max + 1)
    throw DomainError("initial field has dimension " + std::to_string(q.dim()) +
                      ", expected n_max + 1 = " + std::to_string(cfg.n_max + 1));
  if (std::abs(q.norm2() - 1.0) > 1e-8)
    throw DomainError("initial field amplitudes are not normalized");
  if (!std::isfinite(t_scaled)) throw DomainError("time must be finite");

  EvolvedState st;
  st.t_scaled = t_scaled;
  st.a_coeffs.resize(q.dim());
  st.b_coeffs.resize(q.dim());
  const double d = cfg.detuning_ratio;
  for (std::size_t n = 0; n < q.dim(); ++n) {
    const double rabi = rabi_freq(n, cfg);
    const double c = std::cos(t_scaled * rabi);
    const double s = std::sin(t_scaled * rabi);
    st.a_coeffs[n] = q[n] * cplx{c, -0.5 * d * s / rabi};
    st.b_coeffs[n] = q[n] * cplx{0.0, -std::sqrt(static_cast<double>(n) + 1.0) * s / rabi};
  }
  return st;
}

FieldDensity field_density(const EvolvedState& st) {
  const std::size_t dim = st.a_coeffs.size() + 1;
  std::vector<cplx> c(dim), s(dim);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    c[n] = st.a_coeffs[n];
    s[n + 1] = st.b_coeffs[n];
  }
  return {FockVector(std::move(c)), FockVector(std::move(s))};
}

cplx density_element(const EvolvedState& st, std::size_t l, std::size_t j) {
  const std::size_t n = st.a_coeffs.size();
  if (l > n || j > n) throw DomainError("density_element: index out of range");
  cplx rho{};
  if (l < n && j < n) rho += st.a_coeffs[l] * std::conj(st.a_coeffs[j]);
  if (l > 0 && j > 0) rho += st.b_coeffs[l - 1] * std::conj(st.b_coeffs[j - 1]);
  return rho;
}

}  // namespace sdfs
