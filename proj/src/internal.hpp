#pragma once

#include <optional>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/labeling.hpp"

namespace coprime::detail {

inline constexpr std::uint64_t kFallbackNodeLimit = 50'000'000;

// Existence search used as the fallback for constructions.
std::optional<Labeling> search_for_witness(const Graph& g, int k);

// Labeling of join(A, B) -> labeling of join(B, A), where |A| = a.
Labeling swap_join_sides(const Labeling& f, int a);

// Throws ConstructionFailure unless f is a coprime labeling of g.
void require_valid(const Graph& g, const Labeling& f, const char* what);

}  // namespace coprime::detail
