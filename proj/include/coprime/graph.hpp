#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace coprime {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted and
// symmetric; no self-loops. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws ParameterError on out-of-range endpoints or self-loops. Duplicate
  // edges collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v, lexicographic.
  std::vector<Edge> edges() const;

  Graph complement() const;
  // Same vertex set and every edge of *this is an edge of `super`.
  bool is_spanning_subgraph_of(const Graph& super) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Empty string when the graph is simple and symmetric, else a description of
// the first problem found.
std::string validate(const Graph& g);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph complete_bipartite(int m, int n);

// G + H: G keeps 0..|G|-1, H is shifted by |G|, all cross pairs added.
Graph join(const Graph& g, const Graph& h);
// G (.) H: G keeps 0..|G|-1; copy i of H occupies |G| + i*|H| .. |G| + (i+1)*|H| - 1
// and every vertex of copy i is joined to vertex i of G.
Graph corona(const Graph& g, const Graph& h);

// G(n, p) drawn with std::mt19937_64 seeded by `seed`. Pairs (i, j), i < j,
// are visited in lexicographic order; each consumes one 64-bit draw u and the
// edge is present iff (u >> 11) * 2^-53 < p.
Graph gnp(int n, double p, std::uint64_t seed);

// Plain-text edge list: first token n, then pairs "u v" (0-based).
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace coprime
