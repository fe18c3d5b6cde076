#pragma once

#include "lapbound/bounds.hpp"
#include "lapbound/graph.hpp"

#include <string>
#include <vector>

namespace lapbound {

// Upper bounds on lambda_1(Q) (E1..E3) and lambda_1 of the normalized
// Laplacian (E4). Hypothesis violations that still allow evaluation are
// appended to `warnings` when it is non-null.

/// max_i (d_i + sqrt(d_i^2 + 8 d_i m_i)) / 2 over vertices with d_i > 0.
BoundValue oliveira_quadratic(const Graph& g, std::vector<std::string>* warnings = nullptr);

/// max_i (d_i + sqrt(d_i m_i)) over vertices with d_i > 0.
BoundValue oliveira_sqrt(const Graph& g, std::vector<std::string>* warnings = nullptr);

/// (D + d - 1 + sqrt((D + d - 1)^2 + 8 (2|E| - (n - 1) d))) / 2 with D, d the
/// max and min degree. The '+' before the radical is restored.
BoundValue li_liu(const Graph& g, std::vector<std::string>* warnings = nullptr);

/// 2 - min_{i<j} |N_i ∩ N_j| / max(d_i, d_j), over all pairs.
BoundValue rojo_soto(const Graph& g);

} // namespace lapbound
