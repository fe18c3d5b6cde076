#pragma once

#include "lapbound/bounds.hpp"
#include "lapbound/graph.hpp"

#include <stdexcept>
#include <vector>

namespace lapbound {

/// Eigenvalue mean and spread of B: m = tr(B)/n, s = sqrt(tr(B^2)/n - m^2).
struct TraceStats {
  std::size_t n = 0;
  double m = 0.0;
  double s = 0.0;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x, double slack = 0.0) const {
    return x >= lower - slack && x <= upper + slack;
  }
};

struct ExtremeIntervals {
  Interval largest;  ///< lambda_1(B)
  Interval smallest; ///< lambda_n(B)
};

/// Raised when t4 * n < t2^2 beyond round-off, i.e. no real spectrum has
/// these traces.
class InconsistentTraces : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Statistics of B = M^2 for symmetric PSD M, given t2 = tr(M^2) and
/// t4 = tr(M^4). Requires n >= 2. A variance down to -1e-12 (relative to
/// max(1, m^2)) is treated as round-off and clamped to zero.
TraceStats trace_stats_psd(double t2, double t4, std::size_t n);

/// Wolkowicz-Styan intervals for the extreme eigenvalues of a PSD B:
/// lambda_1 in [m + s/sqrt(n-1), m + s sqrt(n-1)],
/// lambda_n in [max(0, m - s sqrt(n-1)), m - s/sqrt(n-1)].
ExtremeIntervals ws_extreme_intervals(const TraceStats& st);

/// Interval for lambda_k(B), 1 <= k <= n:
///   m - s sqrt((k-1)/(n-k+1)) <= lambda_k <= m + s sqrt((n-k)/k),
/// with the sharper extreme endpoints substituted at k = 1 and k = n and the
/// lower end clamped at zero. Upper ends are non-increasing in k.
Interval ws_kth_interval(const TraceStats& st, std::size_t k);

/// Stats of the squared normalized Laplacian (kind = normalized) or squared
/// signless Laplacian (kind = signless), from the closed-form traces.
TraceStats graph_trace_stats(const Graph& g, MatrixKind kind);

/// {E5 (upper on lambda_n), E6 (lower on lambda_1), E7 (upper on lambda_1)}.
std::vector<BoundValue> normalized_bounds(const Graph& g, Variant variant);
/// {E8 (upper on lambda_n), E9 (lower on lambda_1), E10 (upper on lambda_1)}.
std::vector<BoundValue> signless_bounds(const Graph& g, Variant variant);
std::vector<BoundValue> extreme_bounds(const Graph& g, MatrixKind kind, Variant variant);

struct KthBounds {
  BoundValue lower;
  BoundValue upper;
};

/// Square-root lift of ws_kth_interval for the squared matrix.
KthBounds kth_graph_bounds(const Graph& g, MatrixKind kind, std::size_t k);

} // namespace lapbound
