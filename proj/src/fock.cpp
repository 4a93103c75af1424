#include "sdfs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdfs/error.hpp"
#include "sdfs/kernels.hpp"

namespace sdfs {
namespace {

void check_dense_dim(std::size_t dim) {
  if (dim == 0) throw DomainError("matrix dimension must be >= 1");
  if (dim > kMaxDenseDim)
    throw TruncationError("matrix dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(kMaxDenseDim));
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

FockVector::FockVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw DomainError("FockVector dimension must be >= 1");
}

FockVector FockVector::normalized(std::vector<cplx> amps) {
  FockVector v(std::move(amps));
  const double n2 = v.norm2();
  if (std::abs(n2 - 1.0) > 1e-10)
    throw InvariantError("vector is not normalized: |norm^2 - 1| = " +
                         std::to_string(std::abs(n2 - 1.0)));
  v.normalized_ = true;
  return v;
}

FockVector FockVector::zeros(std::size_t dim) { return FockVector(std::vector<cplx>(dim)); }

FockVector FockVector::basis(std::size_t dim, std::size_t n) {
  if (n >= dim) throw DomainError("basis index out of range");
  std::vector<cplx> a(dim);
  a[n] = 1.0;
  return normalized(std::move(a));
}

double FockVector::norm2() const { return kernels::sum_abs2(amps_); }

FockVector FockVector::resized(std::size_t dim) const {
  std::vector<cplx> a(amps_.begin(), amps_.begin() + std::min(dim, amps_.size()));
  a.resize(dim);
  return FockVector(std::move(a));
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  check_dense_dim(dim);
  data_.assign(dim * dim, cplx{});
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double ComplexMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

FockVector ComplexMatrix::apply(const FockVector& v) const {
  if (v.dim() != dim_) throw DomainError("matrix/vector dimension mismatch");
  std::vector<cplx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = kernels::dotu(row(i), v.amps());
  return FockVector(std::move(out));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a + cplx{-1.0} * b;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& z : c.data_) z *= s;
  return c;
}

ComplexMatrix annihilation_matrix(std::size_t dim) {
  ComplexMatrix a(dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockVector matrix_exp_apply(const ComplexMatrix& m, const FockVector& v) {
  if (m.dim() != v.dim()) throw DomainError("matrix_exp_apply: dimension mismatch");
  if (!m.all_finite()) throw DomainError("matrix_exp_apply: non-finite matrix entries");

  const double norm = m.norm1();
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(norm)));
  const cplx inv_steps{1.0 / static_cast<double>(steps), 0.0};
  const ComplexMatrix scaled = inv_steps * m;

  constexpr int kMaxTerms = 60;
  std::vector<cplx> w(v.amps().begin(), v.amps().end());
  std::vector<cplx> term(w.size()), next(w.size());
  for (std::size_t s = 0; s < steps; ++s) {
    term = w;
    for (int k = 1; k <= kMaxTerms; ++k) {
      const double inv_k = 1.0 / k;
      for (std::size_t i = 0; i < term.size(); ++i)
        next[i] = kernels::dotu(scaled.row(i), term) * inv_k;
      term.swap(next);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += term[i];
      if (max_abs(term) <= 1e-18 * max_abs(w)) break;
    }
  }
  return FockVector(std::move(w));
}

cplx inner_product(const FockVector& u, const FockVector& v) {
  if (u.dim() != v.dim()) throw DomainError("inner_product: dimension mismatch");
  return kernels::dotc(u.amps(), v.amps());
}

FockVector build_sdfs_oracle(const SdfsParams& p, std::size_t dim) {
  if (static_cast<std::size_t>(p.m()) >= dim)
    throw DomainError("oracle dimension must exceed the seed Fock number m");
  const ComplexMatrix a = annihilation_matrix(dim);
  const ComplexMatrix ad = a.adjoint();
  const cplx z = std::polar(p.r(), p.phi());
  const cplx alpha = p.alpha0();

  FockVector v = FockVector::basis(dim, static_cast<std::size_t>(p.m()));
  if (p.r() > 0.0) {
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix ad2 = ad * ad;
    const ComplexMatrix squeeze = 0.5 * std::conj(z) * a2 - 0.5 * z * ad2;
    v = matrix_exp_apply(squeeze, v);
  }
  if (alpha != cplx{}) {
    const ComplexMatrix displace = alpha * ad - std::conj(alpha) * a;
    v = matrix_exp_apply(displace, v);
  }
  std::vector<cplx> amps(v.amps().begin(), v.amps().end());
  if (std::abs(v.norm2() - 1.0) <= 1e-10) return FockVector::normalized(std::move(amps));
  return FockVector(std::move(amps));
}

}  // namespace sdfs
