#pragma once

#include "lapbound/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace lapbound {

/// Iterative solver failed to converge.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues sorted non-increasing: values[0] = lambda_1, values.back() = lambda_n.
struct Spectrum {
  std::vector<double> values;
  MatrixKind origin = MatrixKind::general;

  std::size_t size() const { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-12;

/// Cyclic Jacobi (fixed row-cyclic rotation order). Converged once the
/// off-diagonal Frobenius norm is below 1e-12 * (1 + ||M||_F); throws
/// NumericalError with the residual after 100 sweeps.
Spectrum eigenvalues_symmetric(const SymMatrix& m);

/// lambda_k in descending order, 1 <= k <= n.
double kth_eigenvalue(const Spectrum& s, std::size_t k);

} // namespace lapbound
