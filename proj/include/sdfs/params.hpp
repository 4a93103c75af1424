#pragma once

#include <complex>

namespace sdfs {

/// Parameters of the squeezed displaced Fock state D(alpha0) S(z) |m>,
/// z = r exp(i phi). Validated on construction; phi is reduced to [0, 2pi).
class SdfsParams {
 public:
  SdfsParams() = default;
  SdfsParams(std::complex<double> alpha0, double r, double phi, int m);

  std::complex<double> alpha0() const noexcept { return alpha0_; }
  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  int m() const noexcept { return m_; }

  /// cosh r
  double mu() const noexcept;
  /// exp(i phi) sinh r
  std::complex<double> nu() const noexcept;
  /// mu alpha0 + nu conj(alpha0); the displacement seen after commuting D past S.
  std::complex<double> alpha_bar() const noexcept;

  bool is_squeezed() const noexcept { return r_ > 0.0; }

  bool operator==(const SdfsParams&) const = default;

 private:
  std::complex<double> alpha0_{0.0, 0.0};
  double r_ = 0.0;
  double phi_ = 0.0;
  int m_ = 0;
};

}  // namespace sdfs
