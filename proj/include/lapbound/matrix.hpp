#pragma once

#include "lapbound/graph.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace lapbound {

enum class MatrixKind { adjacency, laplacian, normalized, signless, general };

std::string_view to_string(MatrixKind kind);

/// Dense real symmetric matrix, row-major. Entries (i,j) and (j,i) are
/// written from a single value so symmetry is exact.
class SymMatrix {
public:
  SymMatrix() = default;

  /// Fills the upper triangle (i <= j) from `entry` and mirrors it.
  static SymMatrix build(std::size_t n, MatrixKind kind,
                         const std::function<double(std::size_t, std::size_t)>& entry);

  /// Wraps a row-major buffer; throws std::invalid_argument unless it is
  /// square, finite, and exactly symmetric.
  static SymMatrix from_dense(std::size_t n, std::vector<double> values,
                              MatrixKind kind = MatrixKind::general);

  std::size_t order() const { return n_; }
  MatrixKind kind() const { return kind_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const double> data() const { return a_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(a_).subspan(i * n_, n_);
  }

  double trace() const;
  double frobenius_norm() const;

private:
  std::size_t n_ = 0;
  MatrixKind kind_ = MatrixKind::general;
  std::vector<double> a_;
};

/// |a - b| / max(|a|, |b|), zero when both are zero.
double relative_difference(double a, double b);

SymMatrix adjacency(const Graph& g);
SymMatrix laplacian(const Graph& g);
/// Throws DomainError naming the first isolated vertex (1-based).
SymMatrix normalized_laplacian(const Graph& g);
SymMatrix signless_laplacian(const Graph& g);

/// M * M via the OpenMP kernel.
SymMatrix square(const SymMatrix& m);

/// tr(M^p) by explicit matrix products, p in {1, 2, 4}.
double trace_power(const SymMatrix& m, int p);

/// D^{1/2} M D^{1/2}; turns the normalized Laplacian back into L.
SymMatrix sqrt_degree_conjugate(const SymMatrix& m, const Graph& g);

// Closed forms built from degrees and common neighborhoods. All sums are
// accumulated in ascending vertex order.
double tr2_normalized_closed(const Graph& g);
double tr4_normalized_closed(const Graph& g);
/// sum_i d_i^2 + d_i
double tr2_signless_closed(const Graph& g);
/// sum_i (d_i^2 + d_i)^2 + 2 sum_{i<j} ([i~j](d_i + d_j) + |N_i ∩ N_j|)^2
double tr4_signless_closed(const Graph& g);

} // namespace lapbound
