#include "lapbound/verify.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace lapbound;

TEST_CASE("small verify run passes every invariant") {
  const VerifySummary s = run_verify({4, 9, 30, 0.5, 1});
  CHECK(s.graphs == 30);
  CHECK(s.passed());
  for (const auto& r : s.invariants) {
    if (r.name == "eig.bipartite_q_equals_l" || r.name == "classical.regular_E1_E2_equal_2d") continue;
    CHECK_MESSAGE(r.checked > 0, r.name);
  }
  CHECK(s.find("trace.kth_interval_contains").checked > 30);
  CHECK_THROWS_AS(s.find("no.such.invariant"), std::out_of_range);
}

TEST_CASE("n = 2 collapses to exact bounds") {
  const VerifySummary s = run_verify({2, 2, 5, 1.0, 7});
  CHECK(s.passed());
  // K2 is bipartite and regular, so the conditional checks run
  CHECK(s.find("eig.bipartite_q_equals_l").checked == 5);
  CHECK(s.find("classical.regular_E1_E2_equal_2d").checked == 10);
  const auto j = nlohmann::json::parse(render_verify(s, Format::json));
  CHECK(j["passed"] == true);
  CHECK(j["config"]["seed"] == 7);
}

TEST_CASE("generation failure and argument errors") {
  CHECK_THROWS_AS(run_verify({8, 8, 1, 0.0001, 1}), InputError);
  CHECK_THROWS_AS(run_verify({1, 4, 1, 0.5, 1}), InputError);
  CHECK_THROWS_AS(run_verify({5, 4, 1, 0.5, 1}), InputError);
  CHECK_THROWS_AS(run_verify({4, 65, 1, 0.5, 1}), InputError);
  CHECK_THROWS_AS(run_verify({4, 5, 0, 0.5, 1}), InputError);
}

TEST_CASE("output is deterministic for a fixed seed") {
  const VerifyConfig cfg{4, 12, 40, 0.5, 42};
  for (Format f : {Format::table, Format::csv, Format::json})
    CHECK(render_verify(run_verify(cfg), f) == render_verify(run_verify(cfg), f));
  CHECK(render_verify(run_verify(cfg), Format::table) !=
        render_verify(run_verify({4, 12, 40, 0.5, 43}), Format::table));
}

TEST_CASE("check_graph on a single graph") {
  const auto results = check_graph(generate_connected_gnp(7, 0.6, 5));
  for (const auto& r : results) CHECK_MESSAGE(r.failed == 0, r.name);
}
