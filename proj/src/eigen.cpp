#include "lapbound/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lapbound {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a[r * n + p] = a[p * n + r] = new_rp;
    a[r * n + q] = a[q * n + r] = new_rq;
  }
}

} // namespace

Spectrum eigenvalues_symmetric(const SymMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("eigenvalues_symmetric: empty matrix");
  std::vector<double> a(m.data().begin(), m.data().end());
  const double threshold = kJacobiRelTol * (1.0 + m.frobenius_norm());

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, n, p, q);
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi did not converge in " << kJacobiMaxSweeps
        << " sweeps; off-diagonal norm " << off_diagonal_norm(a, n) << " vs threshold "
        << threshold;
    throw NumericalError(msg.str());
  }

  Spectrum s;
  s.origin = m.kind();
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.values[i] = a[i * n + i];
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

double kth_eigenvalue(const Spectrum& s, std::size_t k) {
  if (k < 1 || k > s.size())
    throw std::out_of_range("kth_eigenvalue: k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(s.size()) + "]");
  return s.values[k - 1];
}

} // namespace lapbound
