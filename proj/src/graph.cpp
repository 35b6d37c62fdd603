#include "coprime/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

Graph::Graph(int n) {
  if (n < 0) throw ParameterError("graph order must be non-negative");
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (!has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return Graph(order(), out);
}

bool Graph::is_spanning_subgraph_of(const Graph& super) const {
  if (order() != super.order()) return false;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (!super.has_edge(u, v)) return false;
    }
  }
  return true;
}

std::string validate(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end()) || std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      return "neighbor list of " + std::to_string(u) + " is not a sorted set";
    }
    for (Vertex v : nb) {
      if (v == u) return "self-loop at " + std::to_string(u);
      if (v < 0 || v >= g.order()) return "neighbor out of range at " + std::to_string(u);
      if (!g.has_edge(v, u)) return "asymmetric edge " + std::to_string(u) + "->" + std::to_string(v);
    }
    degree_sum += nb.size();
  }
  if (degree_sum != 2 * g.size()) return "edge count does not match degree sum";
  return {};
}

Graph path(int n) {
  if (n < 1) throw ParameterError("P(n) requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw ParameterError("C(n) requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph complete(int n) {
  if (n < 1) throw ParameterError("K(n) requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty(int n) {
  if (n < 1) throw ParameterError("E(n) requires n >= 1");
  return Graph(n);
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("Kbip(m,n) requires m, n >= 1");
  return join(empty(m), empty(n));
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + a, v + a);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

Graph corona(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  std::vector<Edge> e = g.edges();
  const auto he = h.edges();
  for (int i = 0; i < a; ++i) {
    const int base = a + i * b;
    for (auto [u, v] : he) e.emplace_back(base + u, base + v);
    for (int v = 0; v < b; ++v) e.emplace_back(i, base + v);
  }
  return Graph(a * (1 + b), e);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("GNP requires n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("GNP requires 0 < p < 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  if (!(in >> n) || n < 0) throw ParameterError("edge list: expected vertex count");
  std::vector<Edge> e;
  long long u, v;
  while (in >> u) {
    if (!(in >> v)) throw ParameterError("edge list: dangling endpoint");
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) throw ParameterError("edge list: non-integer token");
  return Graph(static_cast<int>(n), e);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace coprime
