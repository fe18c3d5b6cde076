#pragma once

#include "lapbound/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lapbound {

struct VerifyConfig {
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::size_t trials = 200;
  double p = 0.5;
  std::uint64_t seed = 42;
};

/// One invariant aggregated over all trials. A check passes when its margin
/// is >= -tolerance; equality checks record minus the error, inequalities
/// the signed slack.
struct InvariantResult {
  std::string name;
  double tolerance = 0.0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  double worst_margin = 0.0; ///< +inf when never checked
};

struct VerifySummary {
  VerifyConfig config;
  std::size_t graphs = 0;
  std::vector<InvariantResult> invariants;

  bool passed() const;
  const InvariantResult& find(const std::string& name) const;
};

/// Throws InputError on invalid ranges or when a trial cannot generate a
/// connected graph. Trials may run concurrently; aggregation is in trial
/// order so the summary does not depend on the thread count.
VerifySummary run_verify(const VerifyConfig& cfg);

/// Every invariant evaluated on one graph (n >= 2, connected).
std::vector<InvariantResult> check_graph(const Graph& g);

std::string render_verify(const VerifySummary& s, Format f);

} // namespace lapbound
