#pragma once

// Closed-form Jaynes-Cummings evolution in the interaction picture for an
// atom starting in |e> and a field with Fock amplitudes q_n:
//
//   |psi(t)> = Sum_n A_n(t) |n, e> + B_n(t) |n+1, g>
//
// Time is always the scaled variable lambda*t.

#include <complex>
#include <cstddef>
#include <vector>

#include "sdfs/fock.hpp"

namespace sdfs {

struct JcmConfig {
  double coupling = 1.0;        // lambda; only the ratio below enters the solution
  double detuning_ratio = 0.0;  // Delta / lambda, Delta = omega - omega_0
  std::size_t n_max = 1;

  /// Throws DomainError unless coupling > 0, n_max >= 1 and the ratio is finite.
  void validate() const;
};

struct EvolvedState {
  double t_scaled = 0.0;
  std::vector<cplx> a_coeffs;  // A_n, n = 0..n_max
  std::vector<cplx> b_coeffs;  // B_n, n = 0..n_max

  std::size_t n_max() const noexcept { return a_coeffs.size() - 1; }
};

/// Reduced field state rho_f = |C><C| + |S><S|, both of dimension n_max + 2.
struct FieldDensity {
  FockVector c_vec;
  FockVector s_vec;
};

/// sqrt(Delta^2 / (4 lambda^2) + n + 1)
double rabi_freq(std::size_t n, const JcmConfig& cfg);

/// A_n and B_n at scaled time t_scaled. q must have dimension cfg.n_max + 1
/// and be normalized to within 1e-8.
EvolvedState evolve(const FockVector& q, double t_scaled, const JcmConfig& cfg);

FieldDensity field_density(const EvolvedState& st);

/// rho_lj = A_l conj(A_j) + B_{l-1} conj(B_{j-1}), 0 <= l, j <= n_max + 1.
cplx density_element(const EvolvedState& st, std::size_t l, std::size_t j);

}  // namespace sdfs
