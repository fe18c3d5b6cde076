#include "lapbound/trace_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lapbound {

TraceStats trace_stats_psd(double t2, double t4, std::size_t n) {
  if (n < 2) throw std::invalid_argument("trace statistics need n >= 2");
  if (t2 < 0.0) throw InconsistentTraces("tr(M^2) must be non-negative");
  const double nn = static_cast<double>(n);
  const double m = t2 / nn;
  double variance = t4 / nn - m * m;
  if (variance < 0.0) {
    if (variance < -1e-12 * std::max(1.0, m * m))
      throw InconsistentTraces("traces imply negative variance " + std::to_string(variance));
    variance = 0.0;
  }
  return {n, m, std::sqrt(variance)};
}

ExtremeIntervals ws_extreme_intervals(const TraceStats& st) {
  if (st.n < 2) throw std::invalid_argument("ws_extreme_intervals: n must be >= 2");
  const double r = std::sqrt(static_cast<double>(st.n - 1));
  ExtremeIntervals out;
  out.largest = {st.m + st.s / r, st.m + st.s * r};
  out.smallest = {std::max(0.0, st.m - st.s * r), st.m - st.s / r};
  return out;
}

Interval ws_kth_interval(const TraceStats& st, std::size_t k) {
  if (st.n < 2) throw std::invalid_argument("ws_kth_interval: n must be >= 2");
  if (k < 1 || k > st.n)
    throw std::out_of_range("ws_kth_interval: k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(st.n) + "]");
  const auto ext = ws_extreme_intervals(st);
  if (k == 1) return ext.largest;
  if (k == st.n) return ext.smallest;
  const double n = static_cast<double>(st.n);
  const double kk = static_cast<double>(k);
  const double upper = st.m + st.s * std::sqrt((n - kk) / kk);
  const double lower = st.m - st.s * std::sqrt((kk - 1.0) / (n - kk + 1.0));
  return {std::max(0.0, lower), upper};
}

TraceStats graph_trace_stats(const Graph& g, MatrixKind kind) {
  switch (kind) {
  case MatrixKind::normalized:
    return trace_stats_psd(tr2_normalized_closed(g), tr4_normalized_closed(g), g.order());
  case MatrixKind::signless:
    return trace_stats_psd(tr2_signless_closed(g), tr4_signless_closed(g), g.order());
  default:
    throw std::invalid_argument("trace bounds cover the normalized and signless Laplacians only");
  }
}

namespace {

// Eigenvalues of a PSD M are square roots of those of M^2, order preserved.
double lift(double squared) { return std::sqrt(std::max(0.0, squared)); }

// Lower ends are differences of O(m + s sqrt(n-1)) terms; a result within a
// few ulps of that scale is round-off around zero, and its square root
// (~1e-8) would otherwise sit above a true eigenvalue of 0.
double lift_lower(double squared, const TraceStats& st) {
  const double scale = st.m + st.s * std::sqrt(static_cast<double>(st.n - 1));
  if (squared <= 16.0 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
  return std::sqrt(squared);
}

std::vector<BoundValue> trace_extreme(const Graph& g, MatrixKind kind, Variant variant,
                                      EquationId smallest_upper, EquationId largest_lower,
                                      EquationId largest_upper) {
  if (g.order() < 2) throw std::invalid_argument("trace bounds need n >= 2");
  const TraceStats st = graph_trace_stats(g, kind);
  const auto ext = ws_extreme_intervals(st);
  const double r = std::sqrt(static_cast<double>(st.n - 1));
  const double printed_smallest = st.m + st.s / r;

  BoundValue e_small{smallest_upper, BoundKind::upper, Target::lambda_n, g.order(), kind, variant,
                     variant == Variant::as_printed ? lift(printed_smallest)
                                                    : lift(ext.smallest.upper)};
  BoundValue e_lower{largest_lower, BoundKind::lower, Target::lambda_1, 1, kind, std::nullopt,
                     lift_lower(ext.largest.lower, st)};
  BoundValue e_upper{largest_upper, BoundKind::upper, Target::lambda_1, 1, kind, std::nullopt,
                     lift(ext.largest.upper)};
  return {e_small, e_lower, e_upper};
}

} // namespace

std::vector<BoundValue> normalized_bounds(const Graph& g, Variant variant) {
  return trace_extreme(g, MatrixKind::normalized, variant, EquationId::E5, EquationId::E6,
                       EquationId::E7);
}

std::vector<BoundValue> signless_bounds(const Graph& g, Variant variant) {
  return trace_extreme(g, MatrixKind::signless, variant, EquationId::E8, EquationId::E9,
                       EquationId::E10);
}

std::vector<BoundValue> extreme_bounds(const Graph& g, MatrixKind kind, Variant variant) {
  if (kind == MatrixKind::normalized) return normalized_bounds(g, variant);
  if (kind == MatrixKind::signless) return signless_bounds(g, variant);
  throw std::invalid_argument("trace bounds cover the normalized and signless Laplacians only");
}

KthBounds kth_graph_bounds(const Graph& g, MatrixKind kind, std::size_t k) {
  if (g.order() < 2) throw std::invalid_argument("trace bounds need n >= 2");
  const TraceStats st = graph_trace_stats(g, kind);
  const Interval iv = ws_kth_interval(st, k);
  const Target target =
      k == 1 ? Target::lambda_1 : (k == g.order() ? Target::lambda_n : Target::lambda_k);
  KthBounds out;
  out.lower = {EquationId::WS_K, BoundKind::lower, target, k, kind, std::nullopt, lift_lower(iv.lower, st)};
  out.upper = {EquationId::WS_K, BoundKind::upper, target, k, kind, std::nullopt, lift(iv.upper)};
  return out;
}

} // namespace lapbound
