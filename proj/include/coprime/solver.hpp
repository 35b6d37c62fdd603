#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/labeling.hpp"

namespace coprime {

// Individually switchable pruning rules. Every rule is sound: disabling any
// of them changes only the amount of work, never the answer.
struct PruningRules {
  // Labels with the same set of prime factors <= k/2 are interchangeable;
  // branch on one representative per class.
  bool value_symmetry = true;
  // Fail as soon as some unlabeled vertex has no candidate label left.
  bool wipeout = true;
  // The union of candidate sets must be at least as large as the number of
  // unlabeled vertices.
  bool capacity = true;
  // Even labels form an independent set, so at most alpha of them are used.
  // Active only when alpha is known exactly.
  bool parity = true;
  // Branch on the vertex with fewest candidates (ties: higher degree, then
  // lower index). When off, a static descending-degree order is used.
  bool dynamic_ordering = true;
};

struct SearchConfig {
  std::optional<int> max_k;
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;  // seconds
  unsigned parallel_width = 1;
  PruningRules pruning;

  // Throws ParameterError for non-positive limits.
  void validate() const;
};

// Largest label the search supports.
inline constexpr int kMaxSearchLabel = 255;

enum class SearchStatus { Found, Absent, Inconclusive };

struct LabelSearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<Labeling> labeling;
  std::uint64_t nodes = 0;
};

// Coprime labeling of G with distinct labels from {1..k}. Absent means the
// search space was exhausted; Inconclusive means a limit was hit. `alpha`,
// when given, must be the exact independence number.
LabelSearchResult exists_labeling_with_max(const Graph& g, int k, const SearchConfig& cfg = {},
                                           std::optional<int> alpha = std::nullopt);

// How the budget k was ruled out.
struct BudgetCertificate {
  int k;
  enum class Reason { LowerBound, Exhaustive } reason;
  std::uint64_t nodes;
};

struct ExactResult {
  bool certified = false;  // value.kind == Exact
  PrValue value;           // exact, or a lower bound when not certified
  std::optional<int> alpha;
  std::vector<BudgetCertificate> excluded;  // budgets below the answer
  std::uint64_t nodes = 0;
};

// Least k with a coprime labeling, starting from the best available lower
// bound. Exact only when every smaller budget was excluded.
ExactResult min_coprime_number_exact(const Graph& g, const SearchConfig& cfg = {});

// Exact maximum clique / independent set by branch and bound with a greedy
// coloring bound. nullopt when the node limit is hit.
std::optional<int> clique_number(const Graph& g, std::optional<std::uint64_t> node_limit = std::nullopt);
std::optional<int> independence_number(const Graph& g, std::optional<std::uint64_t> node_limit = std::nullopt);
std::optional<std::vector<Vertex>> maximum_clique(const Graph& g,
                                                  std::optional<std::uint64_t> node_limit = std::nullopt);

}  // namespace coprime
