#pragma once

// Dense row-major kernels. Each kernel exists twice: `serial` is the
// reference used by tests, `omp` parallelises the outer loop with OpenMP.
// Both accumulate every output element (and every per-row partial) in the
// same index order, so their results are bit-identical for any thread count.

#include <cstddef>
#include <span>

namespace lapbound::kernels {

namespace serial {
/// out = a * b for n x n matrices.
void multiply(std::span<const double> a, std::span<const double> b, std::size_t n,
              std::span<double> out);
/// tr(a * b) without forming the product.
double trace_of_product(std::span<const double> a, std::span<const double> b, std::size_t n);
} // namespace serial

namespace omp {
void multiply(std::span<const double> a, std::span<const double> b, std::size_t n,
              std::span<double> out);
double trace_of_product(std::span<const double> a, std::span<const double> b, std::size_t n);
} // namespace omp

/// True when the library was compiled with OpenMP.
bool openmp_enabled();
/// Threads an OpenMP parallel region would use (1 without OpenMP).
int max_threads();

} // namespace lapbound::kernels
