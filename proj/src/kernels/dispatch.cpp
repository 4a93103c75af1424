#include <atomic>
#include <cstdlib>
#include <string>

#include "sdfs/error.hpp"
#include "sdfs/kernels.hpp"

namespace sdfs::kernels {
namespace {

struct Table {
  cplx (*dotc)(std::span<const cplx>, std::span<const cplx>);
  cplx (*dotu)(std::span<const cplx>, std::span<const cplx>);
  double (*sum_abs2)(std::span<const cplx>);
  void (*phase_series)(std::span<const cplx>, std::span<const double>, std::span<double>);
  void (*coherent_overlap)(std::span<const cplx>, std::span<const cplx>, std::span<cplx>);
};

constexpr Table kScalar{scalar::dotc, scalar::dotu, scalar::sum_abs2,
                        scalar::phase_series, scalar::coherent_overlap};
constexpr Table kAvx2{avx2::dotc, avx2::dotu, avx2::sum_abs2, avx2::phase_series,
                      avx2::coherent_overlap};

bool cpu_has_avx2() noexcept {
#if defined(SDFS_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  if (const char* env = std::getenv("SDFS_KERNELS"); env && std::string(env) == "scalar")
    return Backend::scalar;
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

const Table& table() {
  return current().load(std::memory_order_relaxed) == Backend::avx2 ? kAvx2 : kScalar;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DomainError(std::string(what) + ": size mismatch");
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) noexcept {
  return b == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void select_backend(Backend b) {
  if (!backend_available(b))
    throw DomainError("kernel backend '" + std::string(backend_name(b)) +
                      "' is not available on this machine");
  current().store(b, std::memory_order_relaxed);
}

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  require_same_size(x.size(), y.size(), "dotc");
  return table().dotc(x, y);
}

cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  require_same_size(x.size(), y.size(), "dotu");
  return table().dotu(x, y);
}

double sum_abs2(std::span<const cplx> x) { return table().sum_abs2(x); }

void phase_series(std::span<const cplx> coeffs, std::span<const double> etas,
                  std::span<double> out) {
  require_same_size(etas.size(), out.size(), "phase_series");
  table().phase_series(coeffs, etas, out);
}

void coherent_overlap(std::span<const cplx> v, std::span<const cplx> alphas,
                      std::span<cplx> out) {
  require_same_size(alphas.size(), out.size(), "coherent_overlap");
  table().coherent_overlap(v, alphas, out);
}

#ifndef SDFS_HAVE_AVX2_TU
// Non-x86 builds: the avx2 symbols exist so callers link, but never dispatch.
namespace avx2 {
cplx dotc(std::span<const cplx> x, std::span<const cplx> y) { return scalar::dotc(x, y); }
cplx dotu(std::span<const cplx> x, std::span<const cplx> y) { return scalar::dotu(x, y); }
double sum_abs2(std::span<const cplx> x) { return scalar::sum_abs2(x); }
void phase_series(std::span<const cplx> c, std::span<const double> e, std::span<double> o) {
  scalar::phase_series(c, e, o);
}
void coherent_overlap(std::span<const cplx> v, std::span<const cplx> a, std::span<cplx> o) {
  scalar::coherent_overlap(v, a, o);
}
}  // namespace avx2
#endif

}  // namespace sdfs::kernels
