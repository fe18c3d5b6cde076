#include "lapbound/classical.hpp"
#include "lapbound/eigen.hpp"
#include "lapbound/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace lapbound;

TEST_CASE("oliveira bounds") {
  const Graph e2 = reference_graph("example-2").graph();
  CHECK(std::abs(oliveira_quadratic(e2).value - 9.08) <= 0.005);
  CHECK(std::abs(oliveira_sqrt(e2).value - 9.74) <= 0.005);
  CHECK(oliveira_quadratic(e2).value == doctest::Approx(9.082762530298218).epsilon(1e-13));
  CHECK(oliveira_sqrt(e2).value == doctest::Approx(9.74165738677394).epsilon(1e-13));

  CHECK(oliveira_quadratic(complete_graph(3)).value == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(oliveira_sqrt(complete_graph(3)).value == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(oliveira_quadratic(complete_graph(2)).value == 2.0);
  CHECK(oliveira_sqrt(complete_graph(2)).value == 2.0);

  const BoundValue b = oliveira_quadratic(e2);
  CHECK(b.equation == EquationId::E1);
  CHECK(b.kind == BoundKind::upper);
  CHECK(b.matrix == MatrixKind::signless);
}

TEST_CASE("oliveira on disconnected input warns and skips isolated vertices") {
  const Graph g = parse_edge_list("n=5\n1 2\n3 4");
  std::vector<std::string> warnings;
  const double v = oliveira_quadratic(g, &warnings).value;
  CHECK(v == 2.0);
  CHECK(warnings.size() == 2); // disconnected + isolated vertex 5
  CHECK(warnings[1].find("vertex 5") != std::string::npos);
  CHECK_THROWS_AS(oliveira_sqrt(Graph::from_edges(3, {})), DomainError);
}

TEST_CASE("li-liu with the restored '+'") {
  CHECK(li_liu(complete_graph(3)).value == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(li_liu(complete_graph(2)).value == doctest::Approx(2.0).epsilon(1e-15));
  const Graph e2 = reference_graph("example-2").graph();
  const double v = li_liu(e2).value;
  // (6 + sqrt(36 + 8 * (20 - 6))) / 2
  CHECK(v == doctest::Approx((6.0 + std::sqrt(148.0)) / 2.0).epsilon(1e-15));
  const double lambda1 = eigenvalues_symmetric(signless_laplacian(e2)).largest();
  CHECK(v >= lambda1 - 1e-9);
  CHECK(std::abs(v - 9.34) > 0.005);
  CHECK_THROWS_AS(li_liu(Graph::from_edges(1, {})), std::invalid_argument);
}

TEST_CASE("rojo-soto") {
  const Graph e1 = reference_graph("example-1").graph();
  CHECK(rojo_soto(e1).value == 2.0);
  CHECK(rojo_soto(complete_graph(3)).value == 1.5);
  CHECK(rojo_soto(complete_graph(2)).value == 2.0);
  const double l1 = eigenvalues_symmetric(normalized_laplacian(complete_graph(3))).largest();
  CHECK(std::abs(rojo_soto(complete_graph(3)).value - l1) <= 1e-9);
  CHECK(rojo_soto(e1).matrix == MatrixKind::normalized);
  CHECK_THROWS_AS(rojo_soto(parse_edge_list("n=3\n1 2")), DomainError);
}

TEST_CASE("regular graphs: E1 = E2 = 2d") {
  std::vector<Graph> graphs;
  for (std::size_t n = 4; n <= 8; ++n) graphs.push_back(cycle_graph(n));
  for (std::size_t n = 2; n <= 8; ++n) graphs.push_back(complete_graph(n));
  for (const auto& g : graphs) {
    const double two_d = 2.0 * static_cast<double>(g.degree(0));
    CHECK(std::abs(oliveira_quadratic(g).value - two_d) <= 1e-12);
    CHECK(std::abs(oliveira_sqrt(g).value - two_d) <= 1e-12);
  }
}

TEST_CASE("property: classical bounds hold on random connected graphs") {
  SplitMix64 seeds(8);
  for (int trial = 0; trial < 100; ++trial) {
    SplitMix64 rng(seeds.next());
    const std::size_t n = 2 + rng.next() % 13;
    const Graph g = generate_connected_gnp(n, 0.2 + 0.8 * rng.uniform(), rng);
    const double q1 = eigenvalues_symmetric(signless_laplacian(g)).largest();
    const double l1 = eigenvalues_symmetric(normalized_laplacian(g)).largest();
    CHECK(oliveira_quadratic(g).value >= q1 - 1e-9);
    CHECK(oliveira_sqrt(g).value >= q1 - 1e-9);
    CHECK(li_liu(g).value >= q1 - 1e-9);
    const double e4 = rojo_soto(g).value;
    CHECK(e4 >= l1 - 1e-9);
    CHECK(e4 <= 2.0);
    bool disjoint = false;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) disjoint = disjoint || common_neighbors(g, i, j) == 0;
    CHECK((e4 == 2.0) == disjoint);
  }
}
