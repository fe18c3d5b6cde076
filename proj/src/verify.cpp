#include "lapbound/verify.hpp"

#include "lapbound/classical.hpp"
#include "lapbound/eigen.hpp"
#include "lapbound/matrix.hpp"
#include "lapbound/trace_bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lapbound {

namespace {

enum Inv : std::size_t {
  kHandshake,
  kCommonSymmetric,
  kAvgDegreeRange,
  kRoundTrip,
  kTr2Normalized,
  kTr4Normalized,
  kTr2Signless,
  kTr4Signless,
  kConjugate,
  kRowSums,
  kFirstTraces,
  kSorted,
  kTraceSums,
  kNormalizedRange,
  kSignlessRange,
  kPsd,
  kBipartite,
  kVarianceIdentities,
  kMeanSpreadSandwich,
  kLargestLower,
  kLargestUpper,
  kSmallestPrinted,
  kSmallestSharp,
  kKthInterval,
  kVariantDominance,
  kKthMonotone,
  kE1,
  kE2,
  kE3,
  kE4,
  kE4AtMostTwo,
  kE4Equality,
  kRegular,
  kInvariantCount
};

struct Spec {
  const char* name;
  double tol;
};

constexpr Spec kSpecs[kInvariantCount] = {
    {"graph.handshake", 0.0},
    {"graph.common_neighbors_symmetric", 0.0},
    {"graph.avg_neighbor_degree_in_range", 1e-12},
    {"graph.edge_list_round_trip", 0.0},
    {"matrix.tr2_normalized_closed", 1e-9},
    {"matrix.tr4_normalized_closed", 1e-9},
    {"matrix.tr2_signless_closed", 1e-9},
    {"matrix.tr4_signless_closed", 1e-9},
    {"matrix.sqrt_degree_conjugate_is_L", 1e-12},
    {"matrix.laplacian_row_sums", 1e-12},
    {"matrix.first_traces", 1e-12},
    {"eig.sorted_descending", 0.0},
    {"eig.power_sums_match_traces", 1e-8},
    {"eig.normalized_in_0_2", 1e-9},
    {"eig.signless_in_0_2maxdeg", 1e-9},
    {"eig.psd", 1e-9},
    {"eig.bipartite_q_equals_l", 1e-8},
    {"trace.variance_identities", 1e-8},
    {"trace.mean_spread_sandwich", 1e-9},
    {"trace.largest_lower_E6_E9", 1e-9},
    {"trace.largest_upper_E7_E10", 1e-9},
    {"trace.smallest_upper_E5_E8_as_printed", 1e-9},
    {"trace.smallest_upper_E5_E8_sharp", 1e-9},
    {"trace.kth_interval_contains", 1e-9},
    {"trace.sharp_le_as_printed", 1e-12},
    {"trace.kth_upper_non_increasing", 1e-12},
    {"classical.E1_upper", 1e-9},
    {"classical.E2_upper", 1e-9},
    {"classical.E3_upper", 1e-9},
    {"classical.E4_upper", 1e-9},
    {"classical.E4_at_most_2", 0.0},
    {"classical.E4_two_iff_disjoint_pair", 0.0},
    {"classical.regular_E1_E2_equal_2d", 1e-12},
};

class Recorder {
public:
  Recorder() {
    for (std::size_t i = 0; i < kInvariantCount; ++i)
      results_[i] = {kSpecs[i].name, kSpecs[i].tol, 0, 0, std::numeric_limits<double>::infinity()};
  }
  void margin(Inv id, double value) {
    auto& r = results_[id];
    ++r.checked;
    if (!(value >= -r.tolerance)) ++r.failed;
    r.worst_margin = std::min(r.worst_margin, std::isnan(value) ? -std::numeric_limits<double>::infinity() : value);
  }
  void equal(Inv id, double a, double b) { margin(id, -std::abs(a - b)); }
  void equal_rel(Inv id, double a, double b) { margin(id, -relative_difference(a, b)); }
  std::vector<InvariantResult> take() { return {results_, results_ + kInvariantCount}; }

private:
  InvariantResult results_[kInvariantCount];
};

void check_variance_identities(Recorder& rec, const Spectrum& sp) {
  const auto& v = sp.values;
  const double n = static_cast<double>(v.size());
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double var = 0.0;
  for (double x : v) var += (x - m) * (x - m);
  var /= n;
  const double s = std::sqrt(var);
  const double l1 = sp.largest();
  const double ln = sp.smallest();
  double from_smallest = 0.0;
  double from_largest = 0.0;
  for (double x : v) {
    from_smallest += (x - ln) * (x - ln);
    from_largest += (l1 - x) * (l1 - x);
  }
  rec.equal_rel(kVarianceIdentities, from_smallest, n * (var + (m - ln) * (m - ln)));
  rec.equal_rel(kVarianceIdentities, from_largest, n * (var + (l1 - m) * (l1 - m)));
  const double r = std::sqrt(n - 1.0);
  rec.margin(kMeanSpreadSandwich, std::min((m - s / r) - ln, l1 - (m + s / r)));
}

void check_trace_bounds(Recorder& rec, const Graph& g, MatrixKind kind, const Spectrum& sp) {
  const auto printed = extreme_bounds(g, kind, Variant::as_printed);
  const auto sharp = extreme_bounds(g, kind, Variant::sharp);
  const double l1 = sp.largest();
  const double ln = sp.smallest();
  rec.margin(kSmallestPrinted, printed[0].value - ln);
  rec.margin(kSmallestSharp, sharp[0].value - ln);
  rec.margin(kLargestLower, l1 - printed[1].value);
  rec.margin(kLargestUpper, printed[2].value - l1);
  rec.margin(kVariantDominance, printed[0].value - sharp[0].value);

  double prev_upper = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= g.order(); ++k) {
    const KthBounds kb = kth_graph_bounds(g, kind, k);
    const double lk = kth_eigenvalue(sp, k);
    rec.margin(kKthInterval, std::min(lk - kb.lower.value, kb.upper.value - lk));
    if (k > 1) rec.margin(kKthMonotone, prev_upper - kb.upper.value);
    prev_upper = kb.upper.value;
  }
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

} // namespace

std::vector<InvariantResult> check_graph(const Graph& g) {
  Recorder rec;
  const std::size_t n = g.order();
  const auto deg = g.degrees();
  const double degree_sum = static_cast<double>(std::accumulate(deg.begin(), deg.end(), std::size_t{0}));

  // graph
  rec.equal(kHandshake, degree_sum, 2.0 * static_cast<double>(g.edge_count()));
  {
    double worst = 0.0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        worst = std::max(worst, std::abs(static_cast<double>(common_neighbors(g, i, j)) -
                                         static_cast<double>(common_neighbors(g, j, i))));
    rec.margin(kCommonSymmetric, -worst);
  }
  const DegreeSummary ds = degree_summary(g);
  for (Vertex i = 0; i < n; ++i) {
    if (!ds.has_avg[i]) continue;
    const double mi = ds.avg_neighbor_degree[i];
    rec.margin(kAvgDegreeRange, std::min(mi - static_cast<double>(ds.min_degree),
                                         static_cast<double>(ds.max_degree) - mi));
  }
  rec.margin(kRoundTrip, parse_edge_list(to_edge_list(g)) == g ? 0.0 : -1.0);

  // matrices and traces
  const SymMatrix a = adjacency(g);
  const SymMatrix l = laplacian(g);
  const SymMatrix nl = normalized_laplacian(g);
  const SymMatrix q = signless_laplacian(g);
  rec.equal_rel(kTr2Normalized, tr2_normalized_closed(g), trace_power(nl, 2));
  rec.equal_rel(kTr4Normalized, tr4_normalized_closed(g), trace_power(nl, 4));
  rec.equal_rel(kTr2Signless, tr2_signless_closed(g), trace_power(q, 2));
  rec.equal_rel(kTr4Signless, tr4_signless_closed(g), trace_power(q, 4));
  rec.margin(kConjugate, -max_abs_diff(sqrt_degree_conjugate(nl, g), l));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = l.row(i);
    rec.margin(kRowSums, -std::abs(std::accumulate(row.begin(), row.end(), 0.0)));
  }
  rec.equal(kFirstTraces, a.trace(), 0.0);
  rec.equal_rel(kFirstTraces, q.trace(), degree_sum);
  rec.equal_rel(kFirstTraces, nl.trace(), static_cast<double>(n));

  // spectra
  const Spectrum sl = eigenvalues_symmetric(l);
  const Spectrum snl = eigenvalues_symmetric(nl);
  const Spectrum sq = eigenvalues_symmetric(q);
  for (const auto* pair : {&sl, &snl, &sq}) {
    bool sorted = std::is_sorted(pair->values.begin(), pair->values.end(), std::greater<>());
    rec.margin(kSorted, sorted && pair->size() == n ? 0.0 : -1.0);
  }
  const std::pair<const SymMatrix*, const Spectrum*> with_spectra[] = {{&l, &sl}, {&nl, &snl}, {&q, &sq}};
  for (const auto& [mat, sp] : with_spectra) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (double x : sp->values) {
      s1 += x;
      s2 += x * x;
    }
    rec.equal_rel(kTraceSums, s1, mat->trace());
    rec.equal_rel(kTraceSums, s2, trace_power(*mat, 2));
    rec.margin(kPsd, sp->smallest());
  }
  rec.margin(kNormalizedRange, std::min(snl.smallest(), 2.0 - snl.largest()));
  rec.margin(kSignlessRange, std::min(sq.smallest(), 2.0 * static_cast<double>(ds.max_degree) - sq.largest()));
  if (g.bipartite()) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(sq.values[i] - sl.values[i]));
    rec.margin(kBipartite, -worst);
  }

  // trace bounds
  check_variance_identities(rec, snl);
  check_variance_identities(rec, sq);
  check_trace_bounds(rec, g, MatrixKind::normalized, snl);
  check_trace_bounds(rec, g, MatrixKind::signless, sq);

  // classical
  rec.margin(kE1, oliveira_quadratic(g).value - sq.largest());
  rec.margin(kE2, oliveira_sqrt(g).value - sq.largest());
  rec.margin(kE3, li_liu(g).value - sq.largest());
  const double e4 = rojo_soto(g).value;
  rec.margin(kE4, e4 - snl.largest());
  rec.margin(kE4AtMostTwo, 2.0 - e4);
  bool disjoint_pair = false;
  for (Vertex i = 0; i < n && !disjoint_pair; ++i)
    for (Vertex j = i + 1; j < n && !disjoint_pair; ++j)
      disjoint_pair = common_neighbors(g, i, j) == 0;
  rec.margin(kE4Equality, (e4 == 2.0) == disjoint_pair ? 0.0 : -1.0);
  if (ds.max_degree == ds.min_degree) {
    const double two_d = 2.0 * static_cast<double>(ds.max_degree);
    rec.equal(kRegular, oliveira_quadratic(g).value, two_d);
    rec.equal(kRegular, oliveira_sqrt(g).value, two_d);
  }
  return rec.take();
}

bool VerifySummary::passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& r) { return r.failed == 0; });
}

const InvariantResult& VerifySummary::find(const std::string& name) const {
  for (const auto& r : invariants)
    if (r.name == name) return r;
  throw std::out_of_range("unknown invariant '" + name + "'");
}

VerifySummary run_verify(const VerifyConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_min > cfg.n_max || cfg.n_max > 64)
    throw InputError("verify: need 2 <= n-min <= n-max <= 64");
  if (cfg.trials < 1) throw InputError("verify: trials must be >= 1");
  if (!(cfg.p > 0.0 && cfg.p <= 1.0)) throw InputError("verify: p must be in (0, 1]");

  SplitMix64 seeder(cfg.seed);
  std::vector<std::uint64_t> seeds(cfg.trials);
  for (auto& s : seeds) s = seeder.next();

  std::vector<std::vector<InvariantResult>> per_trial(cfg.trials);
  std::vector<std::string> errors(cfg.trials);
  const long trials = static_cast<long>(cfg.trials);
  const std::uint64_t span = cfg.n_max - cfg.n_min + 1;
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < trials; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    try {
      SplitMix64 rng(seeds[idx]);
      const std::size_t n = cfg.n_min + static_cast<std::size_t>(rng.next() % span);
      const Graph g = generate_connected_gnp(n, cfg.p, rng);
      per_trial[idx] = check_graph(g);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t t = 0; t < cfg.trials; ++t)
    if (!errors[t].empty()) throw InputError("verify: trial " + std::to_string(t) + ": " + errors[t]);

  VerifySummary summary;
  summary.config = cfg;
  summary.graphs = cfg.trials;
  summary.invariants = per_trial.front();
  for (std::size_t t = 1; t < cfg.trials; ++t) {
    for (std::size_t i = 0; i < summary.invariants.size(); ++i) {
      auto& acc = summary.invariants[i];
      const auto& r = per_trial[t][i];
      acc.checked += r.checked;
      acc.failed += r.failed;
      acc.worst_margin = std::min(acc.worst_margin, r.worst_margin);
    }
  }
  return summary;
}

std::string render_verify(const VerifySummary& s, Format f) {
  std::ostringstream out;
  const auto worst = [](const InvariantResult& r) {
    return r.checked == 0 ? std::string("n/a") : format_number(r.worst_margin);
  };
  const auto& c = s.config;
  std::size_t failures = 0;
  for (const auto& r : s.invariants) failures += r.failed;
  switch (f) {
  case Format::table: {
    out << "verify: trials=" << c.trials << " n=[" << c.n_min << "," << c.n_max
        << "] p=" << format_number(c.p) << " seed=" << c.seed << "\n";
    const auto pad = [](std::string x, std::size_t w) {
      if (x.size() < w) x.append(w - x.size(), ' ');
      return x;
    };
    out << pad("invariant", 40) << pad("checked", 9) << pad("failed", 8) << pad("worst_margin", 20) << "tolerance\n";
    for (const auto& r : s.invariants)
      out << pad(r.name, 40) << pad(std::to_string(r.checked), 9) << pad(std::to_string(r.failed), 8)
          << pad(worst(r), 20) << format_number(r.tolerance) << "\n";
    out << "result: " << (s.passed() ? "PASS" : "FAIL") << " (" << s.invariants.size() << " invariants, "
        << failures << " failures)\n";
    break;
  }
  case Format::csv:
    out << "invariant,checked,failed,worst_margin,tolerance\n";
    for (const auto& r : s.invariants)
      out << r.name << ',' << r.checked << ',' << r.failed << ',' << worst(r) << ',' << format_number(r.tolerance)
          << '\n';
    break;
  case Format::json: {
    nlohmann::json j;
    j["config"] = {{"n_min", c.n_min}, {"n_max", c.n_max}, {"trials", c.trials},
                   {"p", round12(c.p)},  {"seed", c.seed}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : s.invariants)
      arr.push_back({{"name", r.name},
                     {"checked", r.checked},
                     {"failed", r.failed},
                     {"worst_margin", r.checked == 0 ? nlohmann::json() : nlohmann::json(round12(r.worst_margin))},
                     {"tolerance", round12(r.tolerance)}});
    j["invariants"] = arr;
    j["passed"] = s.passed();
    j["failures"] = failures;
    out << j.dump(2) << "\n";
    break;
  }
  }
  return out.str();
}

} // namespace lapbound
