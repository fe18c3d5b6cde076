#include "lapbound/kernels.hpp"

#include <cassert>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapbound::kernels {

namespace {

inline void multiply_row(const double* a, const double* b, std::size_t n, std::size_t i,
                         double* out) {
  double* row = out + i * n;
  for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
  // i-k-j order; row[j] still sums over k ascending.
  for (std::size_t k = 0; k < n; ++k) {
    const double aik = a[i * n + k];
    const double* bk = b + k * n;
    for (std::size_t j = 0; j < n; ++j) row[j] += aik * bk[j];
  }
}

inline double trace_row(const double* a, const double* b, std::size_t n, std::size_t i) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + i];
  return acc;
}

} // namespace

namespace serial {

void multiply(std::span<const double> a, std::span<const double> b, std::size_t n,
              std::span<double> out) {
  assert(a.size() == n * n && b.size() == n * n && out.size() == n * n);
  for (std::size_t i = 0; i < n; ++i) multiply_row(a.data(), b.data(), n, i, out.data());
}

double trace_of_product(std::span<const double> a, std::span<const double> b, std::size_t n) {
  assert(a.size() == n * n && b.size() == n * n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += trace_row(a.data(), b.data(), n, i);
  return total;
}

} // namespace serial

namespace omp {

void multiply(std::span<const double> a, std::span<const double> b, std::size_t n,
              std::span<double> out) {
  assert(a.size() == n * n && b.size() == n * n && out.size() == n * n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= 32)
  for (long i = 0; i < rows; ++i) multiply_row(pa, pb, n, static_cast<std::size_t>(i), po);
}

double trace_of_product(std::span<const double> a, std::span<const double> b, std::size_t n) {
  assert(a.size() == n * n && b.size() == n * n);
  std::vector<double> partial(n);
  const double* pa = a.data();
  const double* pb = b.data();
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= 64)
  for (long i = 0; i < rows; ++i)
    partial[static_cast<std::size_t>(i)] = trace_row(pa, pb, n, static_cast<std::size_t>(i));
  // ordered reduction keeps the result independent of the thread count
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

} // namespace omp

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace lapbound::kernels
