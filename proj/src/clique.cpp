// Maximum clique in the style of Tomita's MCQ: candidates are greedily colored
// and a branch is cut when the current size plus the number of colors cannot
// beat the incumbent.

#include <algorithm>
#include <bit>

#include "coprime/solver.hpp"

namespace coprime {

namespace {

using Words = std::vector<std::uint64_t>;

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::optional<std::uint64_t> node_limit)
      : n_(g.order()), words_((n_ + 63) / 64), adj_(n_, Words(words_, 0)), limit_(node_limit) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) adj_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  }

  bool run() {
    Words all(words_, 0);
    for (int v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<Vertex> current;
    expand(current, all);
    return !aborted_;
  }

  const std::vector<Vertex>& best() const { return best_; }

 private:
  static bool any(const Words& w) {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
  }

  // Greedy sequential coloring of `p`; returns vertices in color order with
  // their color numbers.
  void color_sort(const Words& p, std::vector<Vertex>& order, std::vector<int>& colors) const {
    Words uncolored = p;
    int color = 0;
    while (any(uncolored)) {
      ++color;
      Words q = uncolored;
      while (any(q)) {
        int wi = 0;
        while (q[wi] == 0) ++wi;
        int v = wi * 64 + std::countr_zero(q[wi]);
        q[wi] &= q[wi] - 1;
        uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (int i = 0; i < words_; ++i) q[i] &= ~adj_[v][i];
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(std::vector<Vertex>& current, Words p) {
    if (aborted_) return;
    if (limit_ && ++nodes_ > *limit_) {
      aborted_ = true;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> colors;
    color_sort(p, order, colors);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + colors[i] <= best_.size()) return;
      Vertex v = order[i];
      current.push_back(v);
      Words next(words_);
      for (int w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (!any(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (aborted_) return;
    }
  }

  int n_;
  int words_;
  std::vector<Words> adj_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Vertex> best_;
};

}  // namespace

std::optional<std::vector<Vertex>> maximum_clique(const Graph& g, std::optional<std::uint64_t> node_limit) {
  CliqueSearch search(g, node_limit);
  if (!search.run()) return std::nullopt;
  auto best = search.best();
  std::sort(best.begin(), best.end());
  return best;
}

std::optional<int> clique_number(const Graph& g, std::optional<std::uint64_t> node_limit) {
  auto c = maximum_clique(g, node_limit);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size());
}

std::optional<int> independence_number(const Graph& g, std::optional<std::uint64_t> node_limit) {
  return clique_number(g.complement(), node_limit);
}

}  // namespace coprime
