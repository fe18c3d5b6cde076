#include "lapbound/report.hpp"

#include "lapbound/classical.hpp"
#include "lapbound/reference.hpp"
#include "lapbound/trace_bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lapbound {

MatrixSelection parse_matrix_selection(const std::string& s) {
  if (s == "normalized") return MatrixSelection::normalized;
  if (s == "signless") return MatrixSelection::signless;
  if (s == "both") return MatrixSelection::both;
  throw InputError("unknown matrix kind '" + s + "' (normalized|signless|both)");
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "' (table|csv|json)");
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0; // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::stod(format_number(x)); }

bool BoundReport::consistent() const {
  for (const auto& m : matrices)
    for (const auto& b : m.bounds)
      if (!(b.slack >= -kBoundSlack)) return false;
  return true;
}

namespace {

BoundEntry make_entry(const BoundValue& b, const Spectrum& sp, const ReferenceGraph* ref) {
  BoundEntry e;
  e.bound = b;
  e.eigenvalue = kth_eigenvalue(sp, b.k);
  e.slack = b.kind == BoundKind::upper ? b.value - e.eigenvalue : e.eigenvalue - b.value;
  if (ref && ref->kind == b.matrix && b.equation != EquationId::WS_K) {
    if (auto r = ref->find(b.equation)) {
      e.reference = r->value;
      e.reference_reproducible = r->reproducible;
    }
  }
  return e;
}

std::string reference_status(const BoundEntry& e) {
  if (!e.reference) return "";
  if (!e.reference_reproducible) return "not-reproduced";
  return std::abs(e.bound.value - *e.reference) <= kReferenceTolerance ? "match" : "mismatch";
}

MatrixReport matrix_report(const Graph& g, MatrixKind kind, const std::vector<std::size_t>& ks,
                           const ReferenceGraph* ref, std::vector<std::string>& warnings) {
  MatrixReport mr;
  mr.kind = kind;
  const SymMatrix m = kind == MatrixKind::normalized ? normalized_laplacian(g) : signless_laplacian(g);
  mr.spectrum = eigenvalues_symmetric(m);
  if (mr.spectrum.smallest() < -kBoundSlack)
    warnings.push_back(std::string(to_string(kind)) + ": smallest eigenvalue " +
                       format_number(mr.spectrum.smallest()) + " is negative; matrix not PSD");

  std::vector<BoundValue> bounds;
  if (kind == MatrixKind::normalized) {
    bounds.push_back(rojo_soto(g));
  } else {
    bounds.push_back(oliveira_quadratic(g, &warnings));
    bounds.push_back(oliveira_sqrt(g, &warnings));
    bounds.push_back(li_liu(g, &warnings));
  }
  const auto printed = extreme_bounds(g, kind, Variant::as_printed);
  const auto sharp = extreme_bounds(g, kind, Variant::sharp);
  bounds.push_back(printed[0]);
  bounds.push_back(sharp[0]);
  bounds.push_back(printed[1]);
  bounds.push_back(printed[2]);
  for (std::size_t k : ks) {
    const KthBounds kb = kth_graph_bounds(g, kind, k);
    bounds.push_back(kb.lower);
    bounds.push_back(kb.upper);
  }
  for (const auto& b : bounds) mr.bounds.push_back(make_entry(b, mr.spectrum, ref));

  if (ref && ref->kind == kind) {
    if (auto r = ref->find(std::nullopt)) {
      mr.reference_largest = r->value;
      if (std::abs(mr.spectrum.largest() - r->value) > kReferenceTolerance)
        warnings.push_back(std::string(to_string(kind)) + ": lambda_1 = " +
                           format_number(mr.spectrum.largest()) + " differs from reference " +
                           format_number(r->value) + " by more than 0.005");
    }
  }
  for (const auto& e : mr.bounds) {
    const std::string status = reference_status(e);
    const std::string id(to_string(e.bound.equation));
    if (status == "not-reproduced")
      warnings.push_back(id + ": computed " + format_number(e.bound.value) + " (corrected formula) but reference lists " +
                         format_number(*e.reference) + "; reference value not reproduced");
    else if (status == "mismatch")
      warnings.push_back(id + ": computed " + format_number(e.bound.value) + " differs from reference " +
                         format_number(*e.reference) + " by more than 0.005");
    if (e.slack < -kBoundSlack)
      warnings.push_back(id + ": bound violated by " + format_number(-e.slack));
  }
  return mr;
}

} // namespace

BoundReport build_report(const Graph& g, MatrixSelection selection, const std::vector<std::size_t>& ks) {
  if (g.order() < 2) throw InputError("bounds need a graph with at least 2 vertices");
  for (std::size_t k : ks)
    if (k < 1 || k > g.order())
      throw InputError("k=" + std::to_string(k) + " outside [1, " + std::to_string(g.order()) + "]");
  BoundReport r;
  const DegreeSummary ds = degree_summary(g);
  r.n = g.order();
  r.edge_count = ds.edge_count;
  r.max_degree = ds.max_degree;
  r.min_degree = ds.min_degree;
  const ReferenceGraph* ref = match_reference(g);
  if (ref) r.reference_name = ref->name;

  if (selection != MatrixSelection::signless)
    r.matrices.push_back(matrix_report(g, MatrixKind::normalized, ks, ref, r.warnings));
  if (selection != MatrixSelection::normalized)
    r.matrices.push_back(matrix_report(g, MatrixKind::signless, ks, ref, r.warnings));
  return r;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Row {
  std::string matrix, equation, name, kind, target, k, variant, value, eigenvalue, slack, reference, status;
};

Row to_row(MatrixKind kind, const BoundEntry& e) {
  const auto& b = e.bound;
  return {std::string(to_string(kind)),
          std::string(to_string(b.equation)),
          std::string(describe(b.equation)),
          std::string(to_string(b.kind)),
          std::string(to_string(b.target)),
          std::to_string(b.k),
          b.variant ? std::string(to_string(*b.variant)) : "",
          format_number(b.value),
          format_number(e.eigenvalue),
          format_number(e.slack),
          e.reference ? format_number(*e.reference) : "",
          reference_status(e)};
}

std::optional<double> value_of(const MatrixReport& m, EquationId id) {
  for (const auto& e : m.bounds)
    if (e.bound.equation == id && (!e.bound.variant || *e.bound.variant == Variant::as_printed))
      return e.bound.value;
  return std::nullopt;
}

std::string render_table(const BoundReport& r) {
  std::ostringstream out;
  out << "graph: n=" << r.n << " edges=" << r.edge_count << " max_degree=" << r.max_degree
      << " min_degree=" << r.min_degree;
  if (!r.reference_name.empty()) out << " reference=" << r.reference_name;
  out << "\n";
  const std::size_t widths[] = {4, 21, 6, 9, 4, 11, 16, 16, 18, 10};
  for (const auto& m : r.matrices) {
    out << "\n[" << to_string(m.kind) << "]\n";
    out << "spectrum:";
    for (double v : m.spectrum.values) out << " " << format_number(v);
    out << "\n";
    const char* heads[] = {"eq", "name", "kind", "target", "k", "variant", "value", "eigenvalue", "slack", "reference"};
    std::string line;
    for (std::size_t i = 0; i < 10; ++i) line += pad(heads[i], widths[i]) + " ";
    out << line << "\n";
    for (const auto& e : m.bounds) {
      Row row = to_row(m.kind, e);
      std::string ref = row.reference.empty() ? "-" : row.reference + " (" + row.status + ")";
      const std::string cells[] = {row.equation, row.name, row.kind, row.target, row.k,
                                   row.variant.empty() ? "-" : row.variant, row.value, row.eigenvalue,
                                   row.slack, ref};
      line.clear();
      for (std::size_t i = 0; i < 10; ++i) line += pad(cells[i], widths[i]) + " ";
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
    // one-line digest in the column order of the reference tables
    out << "summary: lambda_1=" << format_number(m.spectrum.largest());
    const std::vector<EquationId> order =
        m.kind == MatrixKind::normalized
            ? std::vector<EquationId>{EquationId::E4, EquationId::E6, EquationId::E7}
            : std::vector<EquationId>{EquationId::E1, EquationId::E2, EquationId::E3,
                                      EquationId::E9, EquationId::E10};
    for (EquationId id : order)
      if (auto v = value_of(m, id)) out << " " << to_string(id) << "=" << format_number(*v);
    out << "\n";
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : r.warnings) out << "  - " << w << "\n";
  }
  out << "\nstatus: " << (r.consistent() ? "consistent" : "VIOLATION") << "\n";
  return out.str();
}

std::string render_csv(const BoundReport& r) {
  std::ostringstream out;
  out << "matrix,equation,name,kind,target,k,variant,value,eigenvalue,slack,reference,reference_status\n";
  for (const auto& m : r.matrices) {
    for (const auto& e : m.bounds) {
      Row row = to_row(m.kind, e);
      out << row.matrix << ',' << row.equation << ',' << row.name << ',' << row.kind << ','
          << row.target << ',' << row.k << ',' << row.variant << ',' << row.value << ','
          << row.eigenvalue << ',' << row.slack << ',' << row.reference << ',' << csv_field(row.status)
          << '\n';
    }
  }
  return out.str();
}

nlohmann::json json_number(double x) { return round12(x); }

std::string render_json(const BoundReport& r) {
  nlohmann::json j;
  j["graph"] = {{"n", r.n},
                {"edges", r.edge_count},
                {"max_degree", r.max_degree},
                {"min_degree", r.min_degree},
                {"reference", r.reference_name.empty() ? nlohmann::json() : nlohmann::json(r.reference_name)}};
  nlohmann::json spectrum = nlohmann::json::object();
  nlohmann::json reference_largest = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& m : r.matrices) {
    nlohmann::json vals = nlohmann::json::array();
    for (double v : m.spectrum.values) vals.push_back(json_number(v));
    spectrum[std::string(to_string(m.kind))] = vals;
    if (m.reference_largest)
      reference_largest[std::string(to_string(m.kind))] = json_number(*m.reference_largest);
    for (const auto& e : m.bounds) {
      const auto& b = e.bound;
      bounds.push_back({
          {"matrix", to_string(m.kind)},
          {"equation", to_string(b.equation)},
          {"name", describe(b.equation)},
          {"kind", to_string(b.kind)},
          {"target", to_string(b.target)},
          {"k", b.k},
          {"variant", b.variant ? nlohmann::json(to_string(*b.variant)) : nlohmann::json()},
          {"value", json_number(b.value)},
          {"eigenvalue", json_number(e.eigenvalue)},
          {"slack", json_number(e.slack)},
          {"reference", e.reference ? json_number(*e.reference) : nlohmann::json()},
          {"reference_status", reference_status(e)},
      });
    }
  }
  j["spectrum"] = spectrum;
  if (!reference_largest.empty()) j["reference_lambda_1"] = reference_largest;
  j["bounds"] = bounds;
  j["warnings"] = r.warnings;
  j["consistent"] = r.consistent();
  return j.dump(2) + "\n";
}

} // namespace

std::string render_report(const BoundReport& r, Format f) {
  switch (f) {
  case Format::table: return render_table(r);
  case Format::csv: return render_csv(r);
  case Format::json: return render_json(r);
  }
  return {};
}

std::vector<TraceRow> build_traces(const Graph& g) {
  const SymMatrix nl = normalized_laplacian(g);
  const SymMatrix q = signless_laplacian(g);
  std::vector<TraceRow> rows = {
      {"tr(NL^2)", tr2_normalized_closed(g), trace_power(nl, 2), 0.0},
      {"tr(NL^4)", tr4_normalized_closed(g), trace_power(nl, 4), 0.0},
      {"tr(Q^2)", tr2_signless_closed(g), trace_power(q, 2), 0.0},
      {"tr(Q^4)", tr4_signless_closed(g), trace_power(q, 4), 0.0},
  };
  for (auto& row : rows) row.rel_diff = relative_difference(row.closed_form, row.matrix_power);
  return rows;
}

std::string render_traces(const std::vector<TraceRow>& rows, Format f) {
  std::ostringstream out;
  switch (f) {
  case Format::table:
    out << pad("quantity", 10) << " " << pad("closed_form", 20) << " " << pad("matrix_power", 20) << " rel_diff\n";
    for (const auto& r : rows)
      out << pad(r.quantity, 10) << " " << pad(format_number(r.closed_form), 20) << " "
          << pad(format_number(r.matrix_power), 20) << " " << format_number(r.rel_diff) << "\n";
    break;
  case Format::csv:
    out << "quantity,closed_form,matrix_power,rel_diff\n";
    for (const auto& r : rows)
      out << r.quantity << ',' << format_number(r.closed_form) << ',' << format_number(r.matrix_power) << ','
          << format_number(r.rel_diff) << '\n';
    break;
  case Format::json: {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"quantity", r.quantity},
                     {"closed_form", json_number(r.closed_form)},
                     {"matrix_power", json_number(r.matrix_power)},
                     {"rel_diff", json_number(r.rel_diff)}});
    out << nlohmann::json{{"traces", arr}}.dump(2) << "\n";
    break;
  }
  }
  return out.str();
}

} // namespace lapbound
