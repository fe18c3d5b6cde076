#include "lapbound/matrix.hpp"
#include "lapbound/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace lapbound;

namespace {

// Independent trace oracle: repeated naive products on a plain buffer.
double naive_trace_power(const SymMatrix& m, int p) {
  const std::size_t n = m.order();
  std::vector<double> acc(n * n, 0.0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1.0;
  for (int step = 0; step < p; ++step) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long double s = 0.0L;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<long double>(acc[i * n + k]) * m(k, j);
        next[i * n + j] = static_cast<double>(s);
      }
    acc.swap(next);
  }
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += acc[i * n + i];
  return t;
}

Graph example1() { return reference_graph("example-1").graph(); }
Graph example2() { return reference_graph("example-2").graph(); }

} // namespace

TEST_CASE("adjacency") {
  const SymMatrix a2 = adjacency(complete_graph(2));
  CHECK(a2(0, 0) == 0.0);
  CHECK(a2(0, 1) == 1.0);
  CHECK(a2(1, 0) == 1.0);
  const SymMatrix a3 = adjacency(complete_graph(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a3(i, j) == (i == j ? 0.0 : 1.0));
  const SymMatrix a = adjacency(example1());
  double ones = 0.0;
  for (double v : a.data()) ones += v;
  CHECK(ones == 18.0);
  CHECK(a.trace() == 0.0);
}

TEST_CASE("laplacian") {
  const SymMatrix l2 = laplacian(complete_graph(2));
  CHECK(std::vector<double>(l2.data().begin(), l2.data().end()) == std::vector<double>{1, -1, -1, 1});
  const SymMatrix p3 = laplacian(path_graph(3));
  CHECK(std::vector<double>(p3.data().begin(), p3.data().end()) ==
        std::vector<double>{1, -1, 0, -1, 2, -1, 0, -1, 1});
  const SymMatrix l = laplacian(example2());
  for (std::size_t i = 0; i < l.order(); ++i) {
    double s = 0.0;
    for (double v : l.row(i)) s += v;
    CHECK(s == 0.0);
  }
}

TEST_CASE("normalized laplacian") {
  const SymMatrix k2 = normalized_laplacian(complete_graph(2));
  CHECK(std::vector<double>(k2.data().begin(), k2.data().end()) == std::vector<double>{1, -1, -1, 1});
  const SymMatrix k3 = normalized_laplacian(complete_graph(3));
  CHECK(k3(0, 0) == 1.0);
  CHECK(k3(0, 1) == -0.5);
  CHECK(k3(2, 1) == -0.5);
  const SymMatrix e1 = normalized_laplacian(example1());
  CHECK(e1(0, 1) == doctest::Approx(-1.0 / std::sqrt(8.0)).epsilon(1e-15));
  CHECK(e1.trace() == 6.0);

  try {
    normalized_laplacian(parse_edge_list("n=4\n1 2\n2 3"));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("vertex 4") != std::string::npos);
  }
}

TEST_CASE("signless laplacian") {
  const SymMatrix k3 = signless_laplacian(complete_graph(3));
  CHECK(std::vector<double>(k3.data().begin(), k3.data().end()) ==
        std::vector<double>{2, 1, 1, 1, 2, 1, 1, 1, 2});
  const SymMatrix k2 = signless_laplacian(complete_graph(2));
  CHECK(std::vector<double>(k2.data().begin(), k2.data().end()) == std::vector<double>{1, 1, 1, 1});
  const SymMatrix e2 = signless_laplacian(example2());
  const std::vector<double> diag{6, 2, 3, 3, 3, 2, 1};
  for (std::size_t i = 0; i < 7; ++i) CHECK(e2(i, i) == diag[i]);
  CHECK(e2.trace() == 20.0);
}

TEST_CASE("SymMatrix rejects asymmetric or non-finite buffers") {
  CHECK_THROWS_AS(SymMatrix::from_dense(2, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_dense(2, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_dense(1, {NAN}), std::invalid_argument);
  CHECK_NOTHROW(SymMatrix::from_dense(2, {1, 2, 2, 4}));
}

TEST_CASE("trace_power") {
  CHECK(trace_power(normalized_laplacian(complete_graph(2)), 2) == 4.0);
  CHECK(trace_power(signless_laplacian(complete_graph(3)), 2) == 18.0);
  CHECK(trace_power(signless_laplacian(complete_graph(3)), 4) == 258.0);
  CHECK(trace_power(signless_laplacian(complete_graph(3)), 1) == 6.0);
  CHECK_THROWS_AS(trace_power(signless_laplacian(complete_graph(3)), 3), std::invalid_argument);
  // tr(M^2) is the squared Frobenius norm for symmetric M
  const SymMatrix e1 = normalized_laplacian(example1());
  CHECK(trace_power(e1, 2) == doctest::Approx(e1.frobenius_norm() * e1.frobenius_norm()).epsilon(1e-14));
}

TEST_CASE("normalized closed-form traces") {
  CHECK(tr2_normalized_closed(complete_graph(2)) == 4.0);
  CHECK(tr2_normalized_closed(complete_graph(3)) == 4.5);
  CHECK(tr2_normalized_closed(example1()) == doctest::Approx(71.0 / 9.0).epsilon(1e-15));
  CHECK(tr4_normalized_closed(complete_graph(2)) == 16.0);

  const SymMatrix k3 = normalized_laplacian(complete_graph(3));
  CHECK(std::abs(tr4_normalized_closed(complete_graph(3)) - naive_trace_power(k3, 4)) <= 1e-12);
  CHECK(tr4_normalized_closed(complete_graph(3)) == doctest::Approx(10.125).epsilon(1e-14));

  const SymMatrix e1 = normalized_laplacian(example1());
  CHECK(relative_difference(tr4_normalized_closed(example1()), naive_trace_power(e1, 4)) <= 1e-9);
  CHECK(relative_difference(tr2_normalized_closed(example1()), naive_trace_power(e1, 2)) <= 1e-12);

  CHECK_THROWS_AS(tr2_normalized_closed(parse_edge_list("n=3\n1 2")), DomainError);
  CHECK_THROWS_AS(tr4_normalized_closed(parse_edge_list("n=3\n1 2")), DomainError);
}

TEST_CASE("signless closed-form traces") {
  CHECK(tr2_signless_closed(complete_graph(3)) == 18.0);
  CHECK(tr2_signless_closed(complete_graph(2)) == 4.0);
  CHECK(tr2_signless_closed(example2()) == 92.0);
  CHECK(tr4_signless_closed(complete_graph(3)) == 258.0);
  CHECK(tr4_signless_closed(complete_graph(2)) == 16.0);
  const SymMatrix q = signless_laplacian(example2());
  CHECK(tr4_signless_closed(example2()) == naive_trace_power(q, 4));
  CHECK(tr4_signless_closed(example2()) == 3800.0);
  // isolated vertices are fine for Q
  CHECK(tr2_signless_closed(parse_edge_list("n=3\n1 2")) == 4.0);
}

TEST_CASE("property: closed forms equal matrix powers on random graphs") {
  SplitMix64 seeds(77);
  for (int trial = 0; trial < 100; ++trial) {
    SplitMix64 rng(seeds.next());
    const std::size_t n = 2 + rng.next() % 11;
    const Graph g = generate_connected_gnp(n, 0.5, rng);
    const SymMatrix nl = normalized_laplacian(g);
    const SymMatrix q = signless_laplacian(g);
    CHECK(relative_difference(tr2_normalized_closed(g), trace_power(nl, 2)) <= 1e-9);
    CHECK(relative_difference(tr4_normalized_closed(g), trace_power(nl, 4)) <= 1e-9);
    CHECK(relative_difference(tr2_signless_closed(g), trace_power(q, 2)) <= 1e-9);
    CHECK(relative_difference(tr4_signless_closed(g), trace_power(q, 4)) <= 1e-9);
    CHECK(relative_difference(trace_power(q, 4), naive_trace_power(q, 4)) <= 1e-12);

    const SymMatrix back = sqrt_degree_conjugate(nl, g);
    const SymMatrix l = laplacian(g);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(back(i, j) - l(i, j)) <= 1e-12);
        row += l(i, j);
      }
      CHECK(std::abs(row) <= 1e-12);
    }
    CHECK(adjacency(g).trace() == 0.0);
    CHECK(nl.trace() == static_cast<double>(n));
    CHECK(q.trace() == 2.0 * static_cast<double>(g.edge_count()));
  }
}
