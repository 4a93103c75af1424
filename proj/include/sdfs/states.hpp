#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sdfs/fock.hpp"
#include "sdfs/params.hpp"

namespace sdfs {

/// Photon-number probabilities of a truncated state and the mass beyond it.
struct PhotonDistribution {
  std::vector<double> probs;
  double tail_mass = 0.0;
};

/// Largest n_max any state may use.
inline constexpr std::size_t kMaxNmax = 512;

/// Default tail tolerance for truncation selection.
inline constexpr double kDefaultTailTol = 1e-12;

/// Smallest n_max with Sum_{n > n_max} P_n < tail_tol. States with infinite
/// support are additionally padded to at least <n> + 10 sqrt(<n> + 1); a pure
/// Fock state returns max(m, 1). Throws TruncationError past kMaxNmax.
std::size_t choose_truncation(const SdfsParams& p, double tail_tol = kDefaultTailTol);

/// Dimension for build_sdfs_oracle: twice (choose_truncation + 1), capped.
std::size_t oracle_dim_for(const SdfsParams& p);

/// <n | alpha0, z, m>, phase pinned to D(alpha0) S(z) |m>.
std::complex<double> sdfs_amplitude(const SdfsParams& p, std::size_t n);

/// Amplitudes for n = 0..n_max. Tagged normalized when |norm^2 - 1| <= 1e-10;
/// throws TruncationError if the normalization deficit exceeds 1e-8.
FockVector sdfs_state(const SdfsParams& p, std::size_t n_max);

PhotonDistribution photon_distribution(const SdfsParams& p, std::size_t n_max);

/// (|mu|^2 + |nu|^2) m + |nu|^2 + |alpha0|^2
double mean_photon_number(const SdfsParams& p);

/// <alpha1, z1, m1 | alpha2, z2, m2>, same phase convention as sdfs_amplitude.
std::complex<double> sdfs_overlap(const SdfsParams& p1, const SdfsParams& p2);

}  // namespace sdfs
