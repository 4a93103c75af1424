#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sdfs/jcm.hpp"
#include "sdfs/params.hpp"

namespace sdfs {

/// <C|C>, <S|S>, <C|S> of the reduced field state.
struct GramData {
  double cc = 0.0;
  double ss = 0.0;
  cplx cs{};
};

struct EntropyPoint {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double entropy = 0.0;  // nats
  double theta = 0.0;    // +-inf when <C|S> vanishes
};

struct PhaseDistribution {
  std::vector<double> etas;    // in [-pi, pi), ascending
  std::vector<double> values;  // density per radian
  double eta0 = 0.0;

  /// Periodic trapezoid rule over the sampled circle.
  double integral() const;
};

struct QGridSpec {
  double x_min = -8.0, x_max = 8.0;
  double y_min = -8.0, y_max = 8.0;
  std::size_t nx = 201, ny = 201;

  void validate() const;
};

struct QGrid {
  std::vector<double> x_axis;  // Re(alpha)
  std::vector<double> y_axis;  // Im(alpha)
  std::vector<double> values;  // values[iy * nx + ix]

  double at(std::size_t ix, std::size_t iy) const { return values[iy * x_axis.size() + ix]; }
  double cell_area() const;
  /// Grid sum times cell area.
  double integral() const;
};

/// Sum_n |A_n|^2 - |B_n|^2
double atomic_inversion(const EvolvedState& st);

GramData gram(const FieldDensity& fd);

/// Eigenvalues of rho_f = |C><C| + |S><S| via the theta parametrization and
/// the von Neumann entropy -Sum lambda ln lambda. Throws DomainError if g
/// violates the Gram invariants.
EntropyPoint field_entropy(const GramData& g);

/// <n|rho_f|n> = |C_n|^2 + |S_n|^2
double photon_number_dist_t(const FieldDensity& fd, std::size_t n);
std::vector<double> photon_number_dist_t(const FieldDensity& fd);

/// count points -pi + 2pi k / count, k = 0..count-1.
std::vector<double> uniform_etas(std::size_t count);

/// Pegg-Barnett phase density with reference angle 0, summed exactly over the
/// truncated space.
PhaseDistribution phase_distribution(const EvolvedState& st, std::span<const double> etas);

/// (1/pi) <alpha|rho_f|alpha> = (|<alpha|C>|^2 + |<alpha|S>|^2) / pi
double q_function(const FieldDensity& fd, cplx alpha);
double q_function(const EvolvedState& st, cplx alpha);

QGrid q_grid(const EvolvedState& st, const QGridSpec& spec = {});

/// 2 pi sqrt(|alpha0|^2 + sinh^2 r) in scaled time. Ignores m. Throws
/// DomainError for the vacuum, which has no collapse-revival structure.
double revival_time(const SdfsParams& p);

}  // namespace sdfs
