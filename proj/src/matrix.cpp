#include "lapbound/matrix.hpp"

#include "lapbound/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapbound {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
  case MatrixKind::adjacency: return "adjacency";
  case MatrixKind::laplacian: return "laplacian";
  case MatrixKind::normalized: return "normalized";
  case MatrixKind::signless: return "signless";
  case MatrixKind::general: return "general";
  }
  return "general";
}

SymMatrix SymMatrix::build(std::size_t n, MatrixKind kind,
                           const std::function<double(std::size_t, std::size_t)>& entry) {
  SymMatrix m;
  m.n_ = n;
  m.kind_ = kind;
  m.a_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = entry(i, j);
      if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix: non-finite entry");
      m.a_[i * n + j] = v;
      m.a_[j * n + i] = v;
    }
  }
  return m;
}

SymMatrix SymMatrix::from_dense(std::size_t n, std::vector<double> values, MatrixKind kind) {
  if (values.size() != n * n) throw std::invalid_argument("SymMatrix: buffer is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values[i * n + j];
      if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix: non-finite entry");
      if (v != values[j * n + i]) throw std::invalid_argument("SymMatrix: buffer is not symmetric");
    }
  }
  SymMatrix m;
  m.n_ = n;
  m.kind_ = kind;
  m.a_ = std::move(values);
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

SymMatrix adjacency(const Graph& g) {
  return SymMatrix::build(g.order(), MatrixKind::adjacency, [&](std::size_t i, std::size_t j) {
    return i != j && g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1.0 : 0.0;
  });
}

SymMatrix laplacian(const Graph& g) {
  return SymMatrix::build(g.order(), MatrixKind::laplacian, [&](std::size_t i, std::size_t j) {
    if (i == j) return static_cast<double>(g.degree(static_cast<Vertex>(i)));
    return g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? -1.0 : 0.0;
  });
}

namespace {

void require_no_isolated(const Graph& g, const char* what) {
  if (g.has_isolated_vertex())
    throw DomainError(std::string(what) + ": vertex " + std::to_string(g.first_isolated() + 1) +
                      " is isolated (degree 0)");
}

} // namespace

SymMatrix normalized_laplacian(const Graph& g) {
  require_no_isolated(g, "normalized Laplacian");
  const auto d = g.degrees();
  return SymMatrix::build(g.order(), MatrixKind::normalized, [&](std::size_t i, std::size_t j) {
    if (i == j) return 1.0;
    if (!g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) return 0.0;
    return -1.0 / std::sqrt(static_cast<double>(d[i]) * static_cast<double>(d[j]));
  });
}

SymMatrix signless_laplacian(const Graph& g) {
  return SymMatrix::build(g.order(), MatrixKind::signless, [&](std::size_t i, std::size_t j) {
    if (i == j) return static_cast<double>(g.degree(static_cast<Vertex>(i)));
    return g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1.0 : 0.0;
  });
}

SymMatrix square(const SymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> out(n * n);
  kernels::omp::multiply(m.data(), m.data(), n, out);
  // The product of a symmetric matrix with itself is symmetric in exact
  // arithmetic; round-off can differ between (i,j) and (j,i), so mirror the
  // upper triangle.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out[j * n + i] = out[i * n + j];
  return SymMatrix::from_dense(n, std::move(out));
}

double trace_power(const SymMatrix& m, int p) {
  switch (p) {
  case 1: return m.trace();
  case 2: return square(m).trace();
  case 4: {
    const SymMatrix sq = square(m);
    std::vector<double> fourth(m.order() * m.order());
    kernels::omp::multiply(sq.data(), sq.data(), m.order(), fourth);
    double t = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) t += fourth[i * m.order() + i];
    return t;
  }
  default: throw std::invalid_argument("trace_power: p must be 1, 2 or 4");
  }
}

SymMatrix sqrt_degree_conjugate(const SymMatrix& m, const Graph& g) {
  if (m.order() != g.order()) throw std::invalid_argument("sqrt_degree_conjugate: order mismatch");
  const auto d = g.degrees();
  return SymMatrix::build(m.order(), MatrixKind::general, [&](std::size_t i, std::size_t j) {
    return std::sqrt(static_cast<double>(d[i])) * m(i, j) * std::sqrt(static_cast<double>(d[j]));
  });
}

namespace {

// Vertices j > i within distance two of i, ascending.
std::vector<Vertex> two_hop_above(const Graph& g, Vertex i) {
  std::vector<Vertex> out;
  for (Vertex k : g.neighbors(i)) {
    if (k > i) out.push_back(k);
    for (Vertex j : g.neighbors(k))
      if (j > i) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

double tr2_normalized_closed(const Graph& g) {
  require_no_isolated(g, "tr2_normalized_closed");
  const auto d = g.degrees();
  double edge_sum = 0.0;
  for (const auto& [u, v] : g.edges())
    edge_sum += 1.0 / (static_cast<double>(d[u]) * static_cast<double>(d[v]));
  return static_cast<double>(g.order()) + 2.0 * edge_sum;
}

double tr4_normalized_closed(const Graph& g) {
  require_no_isolated(g, "tr4_normalized_closed");
  const auto d = g.degrees();
  const std::size_t n = g.order();

  double diag = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    double inner = 0.0;
    for (Vertex j : g.neighbors(i))
      inner += 1.0 / (static_cast<double>(d[i]) * static_cast<double>(d[j]));
    const double entry = 1.0 + inner;
    diag += entry * entry;
  }

  double off = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : two_hop_above(g, i)) {
      const double root = std::sqrt(static_cast<double>(d[i]) * static_cast<double>(d[j]));
      double paths = 0.0;
      const auto& a = g.neighbors(i);
      const auto& b = g.neighbors(j);
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          paths += 1.0 / (static_cast<double>(d[*ia]) * root);
          ++ia;
          ++ib;
        }
      }
      const double entry = paths - (g.adjacent(i, j) ? 2.0 / root : 0.0);
      off += entry * entry;
    }
  }
  return diag + 2.0 * off;
}

double tr2_signless_closed(const Graph& g) {
  double t = 0.0;
  for (Vertex i = 0; i < g.order(); ++i) {
    const double di = static_cast<double>(g.degree(i));
    t += di * di + di;
  }
  return t;
}

double tr4_signless_closed(const Graph& g) {
  const std::size_t n = g.order();
  double diag = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    const double di = static_cast<double>(g.degree(i));
    const double entry = di * di + di;
    diag += entry * entry;
  }
  double off = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : two_hop_above(g, i)) {
      double entry = static_cast<double>(common_neighbors(g, i, j));
      if (g.adjacent(i, j)) entry += static_cast<double>(g.degree(i) + g.degree(j));
      off += entry * entry;
    }
  }
  return diag + 2.0 * off;
}

} // namespace lapbound
