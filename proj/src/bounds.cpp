#include "lapbound/bounds.hpp"

namespace lapbound {

std::string_view to_string(EquationId id) {
  switch (id) {
  case EquationId::E1: return "E1";
  case EquationId::E2: return "E2";
  case EquationId::E3: return "E3";
  case EquationId::E4: return "E4";
  case EquationId::E5: return "E5";
  case EquationId::E6: return "E6";
  case EquationId::E7: return "E7";
  case EquationId::E8: return "E8";
  case EquationId::E9: return "E9";
  case EquationId::E10: return "E10";
  case EquationId::WS_K: return "WS-K";
  }
  return "?";
}

std::string_view describe(EquationId id) {
  switch (id) {
  case EquationId::E1: return "oliveira-quadratic";
  case EquationId::E2: return "oliveira-sqrt";
  case EquationId::E3: return "li-liu";
  case EquationId::E4: return "rojo-soto";
  case EquationId::E5:
  case EquationId::E8: return "trace-smallest-upper";
  case EquationId::E6:
  case EquationId::E9: return "trace-largest-lower";
  case EquationId::E7:
  case EquationId::E10: return "trace-largest-upper";
  case EquationId::WS_K: return "wolkowicz-styan-kth";
  }
  return "?";
}

std::string_view to_string(BoundKind kind) { return kind == BoundKind::upper ? "upper" : "lower"; }

std::string_view to_string(Target t) {
  switch (t) {
  case Target::lambda_1: return "lambda_1";
  case Target::lambda_k: return "lambda_k";
  case Target::lambda_n: return "lambda_n";
  }
  return "?";
}

std::string_view to_string(Variant v) { return v == Variant::as_printed ? "as_printed" : "sharp"; }

} // namespace lapbound
