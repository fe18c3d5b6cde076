#pragma once

#include "lapbound/bounds.hpp"
#include "lapbound/eigen.hpp"
#include "lapbound/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lapbound {

enum class MatrixSelection { normalized, signless, both };
enum class Format { table, csv, json };

MatrixSelection parse_matrix_selection(const std::string& s);
Format parse_format(const std::string& s);

/// Bounds are checked against the exact spectrum with this slack.
inline constexpr double kBoundSlack = 1e-9;

/// "%.12g"; every output format prints numbers through this.
std::string format_number(double x);
/// x rounded to 12 significant digits (what format_number prints).
double round12(double x);

struct BoundEntry {
  BoundValue bound;
  /// Exact eigenvalue the bound targets.
  double eigenvalue = 0.0;
  /// bound - eigenvalue for upper bounds, eigenvalue - bound for lower; >= 0 holds.
  double slack = 0.0;
  std::optional<double> reference;
  bool reference_reproducible = true;
};

struct MatrixReport {
  MatrixKind kind = MatrixKind::normalized;
  Spectrum spectrum;
  std::vector<BoundEntry> bounds;
  std::optional<double> reference_largest; ///< tabulated lambda_1, reference graphs only
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::string reference_name; ///< empty unless the graph is a reference graph
  std::vector<MatrixReport> matrices;
  std::vector<std::string> warnings;

  /// Every bound holds within kBoundSlack.
  bool consistent() const;
};

/// Throws InputError for n < 2 or k out of range, DomainError when the
/// normalized Laplacian is requested for a graph with an isolated vertex.
BoundReport build_report(const Graph& g, MatrixSelection selection,
                         const std::vector<std::size_t>& ks = {});

std::string render_report(const BoundReport& r, Format f);

struct TraceRow {
  std::string quantity;
  double closed_form = 0.0;
  double matrix_power = 0.0;
  double rel_diff = 0.0;
};

/// tr(NL^2), tr(NL^4), tr(Q^2), tr(Q^4) by both routes.
std::vector<TraceRow> build_traces(const Graph& g);
std::string render_traces(const std::vector<TraceRow>& rows, Format f);

} // namespace lapbound
