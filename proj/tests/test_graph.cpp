#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "coprime/errors.hpp"
#include "coprime/family.hpp"
#include "coprime/graph.hpp"

using namespace coprime;

TEST_CASE("family constructors") {
  CHECK(path(5).size() == 4);
  CHECK(cycle(5).size() == 5);
  CHECK(complete(6).size() == 15);
  CHECK(empty(4).size() == 0);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(complete_bipartite(2, 2).size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(complete_bipartite(2, 2).degree(v) == 2);
  auto star = complete_bipartite(1, 5);
  CHECK(star.degree(0) == 5);
  CHECK_THROWS_AS(cycle(2), ParameterError);
  CHECK_THROWS_AS(path(0), ParameterError);
  CHECK(validate(cycle(7)).empty());
}

TEST_CASE("join and corona counts follow the closed forms") {
  std::vector<Graph> gs{path(3), cycle(5), complete(4), empty(3), gnp(6, 0.4, 3)};
  for (const auto& g : gs) {
    for (const auto& h : gs) {
      auto j = join(g, h);
      CHECK(j.order() == g.order() + h.order());
      CHECK(j.size() == g.size() + h.size() + static_cast<std::size_t>(g.order() * h.order()));
      auto c = corona(g, h);
      CHECK(c.order() == g.order() * (1 + h.order()));
      CHECK(c.size() == g.size() + static_cast<std::size_t>(g.order()) * (h.size() + h.order()));
      CHECK(validate(j).empty());
      CHECK(validate(c).empty());
    }
  }
  auto c3 = corona(cycle(3), empty(1));
  CHECK(c3.order() == 6);
  CHECK(c3.size() == 6);
  auto star = corona(complete(1), empty(4));
  CHECK(star.degree(0) == 4);
  CHECK(corona(complete(20), empty(4)).order() == 100);
}

TEST_CASE("indexing conventions") {
  auto j = join(path(3), path(2));
  CHECK(j.has_edge(0, 1));
  CHECK(j.has_edge(3, 4));
  CHECK(j.has_edge(2, 3));
  CHECK(!j.has_edge(0, 2));
  auto c = corona(complete(3), empty(2));
  // copy i of E(2) sits at 3 + 2i
  CHECK(c.has_edge(0, 3));
  CHECK(c.has_edge(0, 4));
  CHECK(c.has_edge(1, 5));
  CHECK(c.has_edge(2, 8));
  CHECK(!c.has_edge(0, 5));
  CHECK(join(empty(2), empty(3)) == complete_bipartite(2, 3));
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
}

TEST_CASE("complement and spanning subgraphs") {
  auto g = gnp(9, 0.5, 11);
  auto c = g.complement();
  CHECK(g.size() + c.size() == 36);
  CHECK(c.complement() == g);
  CHECK(g.is_spanning_subgraph_of(complete(9)));
  CHECK(!complete(9).is_spanning_subgraph_of(g));
  CHECK(!path(4).is_spanning_subgraph_of(complete(5)));
}

TEST_CASE("gnp is seeded and has binomial edge counts") {
  CHECK(gnp(30, 0.3, 5) == gnp(30, 0.3, 5));
  CHECK(!(gnp(30, 0.3, 5) == gnp(30, 0.3, 6)));
  const int n = 60;
  const double p = 0.3;
  const double pairs = n * (n - 1) / 2.0;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  double total = 0;
  const int samples = 40;
  for (int s = 0; s < samples; ++s) {
    double e = static_cast<double>(gnp(n, p, 1000 + s).size());
    CHECK(std::abs(e - mean) < 5 * sd);
    total += e;
  }
  CHECK(std::abs(total / samples - mean) < 3 * sd / std::sqrt(samples));
  CHECK(gnp(10, 1e-9, 1).size() == 0);
}

TEST_CASE("gnp matches the documented sampling rule") {
  std::mt19937_64 rng(42);
  std::vector<Edge> edges;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.35) edges.emplace_back(i, j);
  CHECK(gnp(12, 0.35, 42) == Graph(12, edges));
}

TEST_CASE("edge list round trip") {
  auto g = gnp(15, 0.3, 9);
  std::istringstream in(write_edge_list(g));
  CHECK(read_edge_list(in) == g);
  std::istringstream small("3\n0 1\n1 2\n");
  CHECK(read_edge_list(small) == path(3));
}

TEST_CASE("family expressions") {
  CHECK(build(parse_family("corona(K(8),E(1))")).order() == 16);
  CHECK(build(parse_family(" join ( P(3) , C(4) ) ")).order() == 7);
  CHECK(build(parse_family("Kbip(2,3)")) == complete_bipartite(2, 3));
  CHECK(build(parse_family("GNP(10,0.5,3)")) == gnp(10, 0.5, 3));

  try {
    parse_family("join(P(10),P(6)");
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 16);
    REQUIRE(e.expected().size() == 1);
    CHECK(e.expected()[0] == ")");
  }
  CHECK_THROWS_AS(parse_family("Q(3)"), ParseError);
  CHECK_THROWS_AS(parse_family("P(3) x"), ParseError);
  CHECK_THROWS_AS(parse_family("C(2)"), ParameterError);
  CHECK_THROWS_AS(parse_family("GNP(5,1.5,1)"), ParameterError);
}

TEST_CASE("printing and parsing round trip") {
  std::mt19937 rng(3);
  auto random_expr = [&](auto&& self, int depth) -> FamilyExpr {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 7 : 5);
    std::uniform_int_distribution<int> size(3, 40);
    switch (kind(rng)) {
      case 0: return path_expr(size(rng));
      case 1: return cycle_expr(size(rng));
      case 2: return complete_expr(size(rng));
      case 3: return empty_expr(size(rng));
      case 4: return bipartite_expr(size(rng), size(rng));
      case 5: {
        FamilyExpr e;
        e.kind = FamilyExpr::Kind::Gnp;
        e.a = size(rng);
        e.p = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
        e.seed = rng();
        return e;
      }
      case 6: return join_expr(self(self, depth - 1), self(self, depth - 1));
      default: return corona_expr(self(self, depth - 1), self(self, depth - 1));
    }
  };
  for (int i = 0; i < 300; ++i) {
    FamilyExpr e = random_expr(random_expr, 3);
    REQUIRE(parse_family(to_string(e)) == e);
  }
}
