#include "lapbound/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace lapbound {

namespace {

double max_over_vertices(const Graph& g, const char* name, std::vector<std::string>* warnings,
                         const std::function<double(double, double)>& term) {
  const DegreeSummary ds = degree_summary(g);
  if (warnings && !g.connected())
    warnings->push_back(std::string(name) + ": graph is disconnected; bound stated for connected graphs");
  bool any = false;
  double best = -std::numeric_limits<double>::infinity();
  for (Vertex i = 0; i < g.order(); ++i) {
    if (!ds.has_avg[i]) {
      if (warnings)
        warnings->push_back(std::string(name) + ": skipped isolated vertex " + std::to_string(i + 1));
      continue;
    }
    any = true;
    best = std::max(best, term(static_cast<double>(g.degree(i)), ds.avg_neighbor_degree[i]));
  }
  if (!any) throw DomainError(std::string(name) + ": every vertex has degree 0");
  return best;
}

} // namespace

BoundValue oliveira_quadratic(const Graph& g, std::vector<std::string>* warnings) {
  const double v = max_over_vertices(g, "E1", warnings, [](double d, double mi) {
    return (d + std::sqrt(d * d + 8.0 * d * mi)) / 2.0;
  });
  return {EquationId::E1, BoundKind::upper, Target::lambda_1, 1, MatrixKind::signless, std::nullopt, v};
}

BoundValue oliveira_sqrt(const Graph& g, std::vector<std::string>* warnings) {
  const double v = max_over_vertices(g, "E2", warnings,
                                     [](double d, double mi) { return d + std::sqrt(d * mi); });
  return {EquationId::E2, BoundKind::upper, Target::lambda_1, 1, MatrixKind::signless, std::nullopt, v};
}

BoundValue li_liu(const Graph& g, std::vector<std::string>* warnings) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("E3: requires n >= 2");
  if (warnings && !g.connected())
    warnings->push_back("E3: graph is disconnected; bound stated for connected graphs");
  const DegreeSummary ds = degree_summary(g);
  const double shift = static_cast<double>(ds.max_degree) + static_cast<double>(ds.min_degree) - 1.0;
  const double excess = 2.0 * static_cast<double>(ds.edge_count) -
                        static_cast<double>(n - 1) * static_cast<double>(ds.min_degree);
  const double v = (shift + std::sqrt(shift * shift + 8.0 * excess)) / 2.0;
  return {EquationId::E3, BoundKind::upper, Target::lambda_1, 1, MatrixKind::signless, std::nullopt, v};
}

BoundValue rojo_soto(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("E4: requires n >= 2");
  if (g.has_isolated_vertex())
    throw DomainError("E4: vertex " + std::to_string(g.first_isolated() + 1) + " is isolated");
  double min_ratio = std::numeric_limits<double>::infinity();
  const long rows = static_cast<long>(n);
  // min is exact, so the reduction order does not matter
#pragma omp parallel for reduction(min : min_ratio) schedule(dynamic, 8) if (n >= 128)
  for (long i = 0; i < rows; ++i) {
    const auto vi = static_cast<Vertex>(i);
    for (Vertex j = vi + 1; j < n; ++j) {
      const double c = static_cast<double>(common_neighbors(g, vi, j));
      const double ratio = c / static_cast<double>(std::max(g.degree(vi), g.degree(j)));
      min_ratio = std::min(min_ratio, ratio);
    }
  }
  return {EquationId::E4, BoundKind::upper, Target::lambda_1, 1, MatrixKind::normalized,
          std::nullopt, 2.0 - min_ratio};
}

} // namespace lapbound
