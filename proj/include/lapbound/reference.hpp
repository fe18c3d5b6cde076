#pragma once

#include "lapbound/bounds.hpp"
#include "lapbound/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lapbound {

/// Values are tabulated to two decimals.
inline constexpr double kReferenceTolerance = 0.005;

struct ReferenceEntry {
  /// nullopt: the exact lambda_1 of the matrix.
  std::optional<EquationId> equation;
  double value = 0.0;
  /// False for E3 on example-2: the tabulated value does not follow from
  /// the corrected formula and is flagged instead of asserted.
  bool reproducible = true;
};

struct ReferenceGraph {
  std::string name;
  std::size_t n = 0;
  std::vector<Edge> edges; ///< 1-based, as tabulated
  MatrixKind kind = MatrixKind::signless;
  std::vector<ReferenceEntry> entries;

  Graph graph() const;
  std::optional<ReferenceEntry> find(std::optional<EquationId> eq) const;
};

/// example-1 (normalized, 6 vertices) and example-2 (signless, 7 vertices).
const std::vector<ReferenceGraph>& reference_graphs();
const ReferenceGraph& reference_graph(const std::string& name);
/// Reference graph with the same vertex count and edge set, if any.
const ReferenceGraph* match_reference(const Graph& g);

} // namespace lapbound
