#include "sdfs/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sdfs/error.hpp"

namespace sdfs {

SdfsParams::SdfsParams(std::complex<double> alpha0, double r, double phi, int m)
    : alpha0_(alpha0), r_(r), m_(m) {
  if (!std::isfinite(alpha0.real()) || !std::isfinite(alpha0.imag()))
    throw DomainError("alpha0 must be finite");
  if (!std::isfinite(r) || r < 0.0) throw DomainError("r must be finite and >= 0, got " + std::to_string(r));
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  if (m < 0) throw DomainError("m must be >= 0, got " + std::to_string(m));
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phi_ = std::fmod(phi, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

double SdfsParams::mu() const noexcept { return std::cosh(r_); }

std::complex<double> SdfsParams::nu() const noexcept {
  return std::polar(std::sinh(r_), phi_);
}

std::complex<double> SdfsParams::alpha_bar() const noexcept {
  return mu() * alpha0_ + nu() * std::conj(alpha0_);
}

}  // namespace sdfs
