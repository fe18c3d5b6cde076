#include "lapbound/reference.hpp"

#include <stdexcept>

namespace lapbound {

Graph ReferenceGraph::graph() const {
  std::vector<Edge> zero_based;
  zero_based.reserve(edges.size());
  for (const auto& [u, v] : edges) zero_based.emplace_back(u - 1, v - 1);
  return Graph::from_edges(n, std::move(zero_based));
}

std::optional<ReferenceEntry> ReferenceGraph::find(std::optional<EquationId> eq) const {
  for (const auto& e : entries)
    if (e.equation == eq) return e;
  return std::nullopt;
}

const std::vector<ReferenceGraph>& reference_graphs() {
  static const std::vector<ReferenceGraph> graphs = {
      {"example-1",
       6,
       {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {5, 6}},
       MatrixKind::normalized,
       {{std::nullopt, 1.86, true},
        {EquationId::E4, 2.00, true},
        {EquationId::E6, 1.34, true},
        {EquationId::E7, 1.93, true}}},
      {"example-2",
       7,
       {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {3, 5}, {4, 5}, {4, 6}},
       MatrixKind::signless,
       {{std::nullopt, 7.67, true},
        {EquationId::E1, 9.08, true},
        {EquationId::E2, 9.74, true},
        {EquationId::E3, 9.34, false},
        {EquationId::E9, 4.58, true},
        {EquationId::E10, 7.76, true}}},
  };
  return graphs;
}

const ReferenceGraph& reference_graph(const std::string& name) {
  for (const auto& r : reference_graphs())
    if (r.name == name) return r;
  throw std::out_of_range("unknown reference graph '" + name + "'");
}

const ReferenceGraph* match_reference(const Graph& g) {
  for (const auto& r : reference_graphs())
    if (r.graph() == g) return &r;
  return nullptr;
}

} // namespace lapbound
