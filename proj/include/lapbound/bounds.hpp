#pragma once

#include "lapbound/matrix.hpp"

#include <optional>
#include <string_view>

namespace lapbound {

/// Bound identifiers. E1..E4 are the classical comparison bounds, E5..E10
/// the trace bounds on extreme eigenvalues, WS_K the k-th eigenvalue
/// interval from the Wolkowicz-Styan generalization.
enum class EquationId { E1, E2, E3, E4, E5, E6, E7, E8, E9, E10, WS_K };
enum class BoundKind { upper, lower };
enum class Target { lambda_1, lambda_k, lambda_n };
/// E5/E8 only: `as_printed` keeps "+ s/sqrt(n-1)", `sharp` uses "- s/sqrt(n-1)".
enum class Variant { as_printed, sharp };

std::string_view to_string(EquationId id);
std::string_view to_string(BoundKind kind);
std::string_view to_string(Target t);
std::string_view to_string(Variant v);
/// Short human name, e.g. "oliveira-quadratic" or "trace-upper".
std::string_view describe(EquationId id);

struct BoundValue {
  EquationId equation = EquationId::E1;
  BoundKind kind = BoundKind::upper;
  Target target = Target::lambda_1;
  /// 1-based eigenvalue index the bound applies to (1 for lambda_1, n for lambda_n).
  std::size_t k = 1;
  MatrixKind matrix = MatrixKind::signless;
  std::optional<Variant> variant;
  double value = 0.0;
};

} // namespace lapbound
