#pragma once

// Truncated Fock-space linear algebra. Dense and deliberately simple: the
// matrices here only back the brute-force oracle, never the production path.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sdfs/params.hpp"

namespace sdfs {

using cplx = std::complex<double>;

/// Hard cap on dense matrix dimension.
inline constexpr std::size_t kMaxDenseDim = 512;

/// Complex amplitudes over |0>, ..., |dim-1>.
class FockVector {
 public:
  /// Untagged vector; dim must be >= 1.
  explicit FockVector(std::vector<cplx> amps);
  /// Tagged as normalized; throws InvariantError if |norm^2 - 1| > 1e-10.
  static FockVector normalized(std::vector<cplx> amps);
  static FockVector zeros(std::size_t dim);
  static FockVector basis(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const cplx> amps() const noexcept { return amps_; }
  const cplx& operator[](std::size_t n) const { return amps_[n]; }
  bool is_normalized() const noexcept { return normalized_; }
  double norm2() const;

  /// Copy zero-padded (or truncated) to `dim`; the tag is dropped.
  FockVector resized(std::size_t dim) const;

 private:
  std::vector<cplx> amps_;
  bool normalized_ = false;
};

class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

  ComplexMatrix adjoint() const;
  /// Max column sum of |entries|.
  double norm1() const;
  bool all_finite() const;

  FockVector apply(const FockVector& v) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

 private:
  std::size_t dim_;
  std::vector<cplx> data_;
};

/// a with entries (n-1, n) = sqrt(n). Creation is annihilation_matrix(d).adjoint().
ComplexMatrix annihilation_matrix(std::size_t dim);

/// exp(M) v by scaling the generator to unit 1-norm and summing the Taylor
/// series of each substep on the vector (relative accuracy ~1e-13 here).
FockVector matrix_exp_apply(const ComplexMatrix& m, const FockVector& v);

/// Sum_n conj(u_n) v_n.
cplx inner_product(const FockVector& u, const FockVector& v);

/// D(alpha0) S(z) |m> built directly from the operator exponentials in a
/// dim-dimensional truncation. This is the ground truth the analytic Fock
/// amplitudes are checked against; choose dim well beyond the state's support.
FockVector build_sdfs_oracle(const SdfsParams& p, std::size_t dim);

}  // namespace sdfs
