#include "lapbound/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace lapbound {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  Graph g;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  g.neighbors_.assign(n, {});
  for (const auto& [u, v] : edges) {
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(edges);
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (std::size_t i = 0; i < order(); ++i) d[i] = neighbors_[i].size();
  return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::first_isolated() const {
  for (std::size_t i = 0; i < order(); ++i)
    if (neighbors_[i].empty()) return static_cast<Vertex>(i);
  return static_cast<Vertex>(order());
}

bool Graph::has_isolated_vertex() const { return first_isolated() != order(); }

bool Graph::connected() const {
  if (order() == 0) return true;
  std::vector<bool> seen(order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

bool Graph::bipartite() const {
  std::vector<int> color(order(), -1);
  for (std::size_t s = 0; s < order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : neighbors_[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::size_t parse_positive(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
    throw InputError("line " + std::to_string(line_no) + ": invalid integer token '" +
                     std::string(tok) + "'");
  if (value == 0)
    throw InputError("line " + std::to_string(line_no) + ": vertex labels are 1-based");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  bool have_directive = false;
  bool seen_content = false;
  std::size_t max_label = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (seen_content)
        throw InputError("line " + std::to_string(line_no) +
                         ": 'n=' directive must precede all edges");
      declared_n = parse_positive(trim(line.substr(2)), line_no);
      have_directive = true;
      seen_content = true;
      continue;
    }
    seen_content = true;

    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v', got '" +
                       std::string(line) + "'");
    std::size_t u = parse_positive(toks[0], line_no);
    std::size_t v = parse_positive(toks[1], line_no);
    if (u == v)
      throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }

  std::size_t n = max_label;
  if (have_directive) {
    if (declared_n < max_label)
      throw InputError("n=" + std::to_string(declared_n) + " is smaller than the largest label " +
                       std::to_string(max_label));
    n = declared_n;
  }
  if (n == 0) throw InputError("graph has no vertices");
  return Graph::from_edges(n, std::move(edges));
}

Graph parse_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::size_t common_neighbors(const Graph& g, Vertex i, Vertex j) {
  if (i >= g.order() || j >= g.order())
    throw std::invalid_argument("common_neighbors: vertex out of range");
  if (i == j) throw std::invalid_argument("common_neighbors: requires two distinct vertices");
  const auto& a = g.neighbors(i);
  const auto& b = g.neighbors(j);
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  const auto d = g.degrees();
  s.edge_count = g.edge_count();
  if (!d.empty()) {
    s.max_degree = *std::max_element(d.begin(), d.end());
    s.min_degree = *std::min_element(d.begin(), d.end());
  }
  s.avg_neighbor_degree.assign(d.size(), 0.0);
  s.has_avg.assign(d.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    std::size_t sum = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(i))) sum += d[w];
    s.avg_neighbor_degree[i] = static_cast<double>(sum) / static_cast<double>(d[i]);
    s.has_avg[i] = true;
  }
  return s;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph generate_connected_gnp(std::size_t n, double p, SplitMix64& rng) {
  if (n < 2 || n > 64) throw InputError("generate_connected_gnp: n must be in [2, 64]");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("generate_connected_gnp: p must be in (0, 1]");
  for (int draw = 0; draw < kGnpRejectionBudget; ++draw) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.uniform() < p) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, std::move(edges));
    if (g.connected()) return g;
  }
  throw InputError("no connected G(" + std::to_string(n) + ", p) sample within " +
                   std::to_string(kGnpRejectionBudget) + " draws; try a larger p");
}

Graph generate_connected_gnp(std::size_t n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return generate_connected_gnp(n, p, rng);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, std::move(e));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, std::move(e));
}

} // namespace lapbound
