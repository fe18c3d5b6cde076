#include "lapbound/graph.hpp"
#include "lapbound/kernels.hpp"

#include <doctest.h>

#include <vector>

using namespace lapbound;

namespace {

std::vector<double> random_matrix(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> a(n * n);
  for (auto& x : a) x = 2.0 * rng.uniform() - 1.0;
  return a;
}

// Textbook i-j-k product; the test oracle for both kernels.
std::vector<double> naive_multiply(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      c[i * n + j] = s;
    }
  return c;
}

} // namespace

TEST_CASE("serial and OpenMP multiply are bit-identical and match the naive product") {
  for (std::size_t n : {1u, 3u, 17u, 64u, 130u}) {
    const auto a = random_matrix(n, n);
    const auto b = random_matrix(n, n + 1000);
    std::vector<double> s(n * n), p(n * n);
    kernels::serial::multiply(a, b, n, s);
    kernels::omp::multiply(a, b, n, p);
    CHECK(s == p);
    const auto ref = naive_multiply(a, b, n);
    // same summation order over k, so the naive product agrees exactly
    CHECK(s == ref);
  }
}

TEST_CASE("trace_of_product agrees across kernels and with the full product") {
  for (std::size_t n : {2u, 9u, 64u, 200u}) {
    const auto a = random_matrix(n, 7 * n);
    const auto b = random_matrix(n, 7 * n + 1);
    const double ts = kernels::serial::trace_of_product(a, b, n);
    const double tp = kernels::omp::trace_of_product(a, b, n);
    CHECK(ts == tp);
    const auto c = naive_multiply(a, b, n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += c[i * n + i];
    CHECK(ts == doctest::Approx(tr).epsilon(1e-12));
  }
}

TEST_CASE("thread query is sane") {
  CHECK(kernels::max_threads() >= 1);
  if (!kernels::openmp_enabled()) CHECK(kernels::max_threads() == 1);
}
