#include "coprime/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int l : labels_) {
    if (l < 1) throw ParameterError("labels must be positive integers");
    max_ = std::max(max_, l);
  }
}

Verdict verify_coprime_labeling(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    throw DomainMismatch("labeling has " + std::to_string(f.size()) + " entries but graph has " +
                         std::to_string(g.order()) + " vertices");
  }
  Verdict verdict;
  std::unordered_map<int, Vertex> first_use;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, inserted] = first_use.emplace(f[v], v);
    if (!inserted) verdict.violations.push_back({Violation::Type::DuplicateLabel, it->second, v, f[v]});
  }
  for (auto [u, v] : g.edges()) {
    int d = std::gcd(f[u], f[v]);
    if (d != 1) verdict.violations.push_back({Violation::Type::SharedFactor, u, v, d});
  }
  return verdict;
}

std::string describe(const Violation& v) {
  if (v.type == Violation::Type::DuplicateLabel) {
    return "label " + std::to_string(v.label) + " used on vertices " + std::to_string(v.u) + " and " +
           std::to_string(v.v);
  }
  return "edge (" + std::to_string(v.u) + "," + std::to_string(v.v) + ") has gcd " + std::to_string(v.label);
}

std::string_view to_string(PrKind k) {
  switch (k) {
    case PrKind::Exact: return "exact";
    case PrKind::UpperBound: return "upper-bound";
    case PrKind::LowerBound: return "lower-bound";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::Construction: return "construction";
    case Provenance::ExactSearch: return "exact-search";
    case Provenance::IndependenceBound: return "independence-bound";
    case Provenance::PrimeMultipleBound: return "prime-multiple-bound";
    case Provenance::Monotonicity: return "monotonicity";
  }
  return "?";
}

PrValue PrValue::exact(Labeling witness, Provenance how, std::string note) {
  PrValue v{PrKind::Exact, witness.max_label(), how, std::move(witness), std::move(note)};
  return v;
}

PrValue PrValue::upper(Labeling witness, Provenance how, std::string note) {
  PrValue v{PrKind::UpperBound, witness.max_label(), how, std::move(witness), std::move(note)};
  return v;
}

PrValue PrValue::lower(int value, Provenance how, std::string note) {
  return PrValue{PrKind::LowerBound, value, how, std::nullopt, std::move(note)};
}

PrValue lower_bound_independence(const Graph& g, int alpha) {
  const int n = g.order();
  if (alpha < 1 || alpha > n) throw ParameterError("independence number out of range");
  return PrValue::lower(std::max(n, 2 * (n - alpha) - 1), Provenance::IndependenceBound,
                        "2(|V| - alpha) - 1 with alpha = " + std::to_string(alpha));
}

namespace {

std::uint64_t ceil_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

OptionalBound lower_bound_prime_multiples(const Graph& g, int alpha) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  const std::uint64_t a = static_cast<std::uint64_t>(alpha);
  if (n == 0) return {std::nullopt, "empty graph"};
  if (a * a >= n) return {std::nullopt, "alpha >= sqrt(n)"};

  const std::uint64_t t = ceil_sqrt(n);
  const std::uint64_t pt = nt::nth_prime(t);
  const std::uint64_t pn = nt::nth_prime(n);
  if (pt * pt <= pn) {
    return {std::nullopt, "size hypothesis p_ceil(sqrt n)^2 > p_n fails (" + std::to_string(pt) + "^2 <= " +
                              std::to_string(pn) + ")"};
  }

  // Largest j with j <= n - a*sqrt(n), i.e. a^2 n <= (n - j)^2.
  std::uint64_t j = n - static_cast<std::uint64_t>(std::ceil(static_cast<double>(a) * std::sqrt(static_cast<double>(n))));
  while (j > 0 && a * a * n > (n - j) * (n - j)) --j;
  while (j + 1 <= n && a * a * n <= (n - j - 1) * (n - j - 1)) ++j;
  j = std::max<std::uint64_t>(j, 1);

  auto value = static_cast<int>(nt::nth_prime(j));
  return {PrValue::lower(value, Provenance::PrimeMultipleBound, "p_" + std::to_string(j)), {}};
}

PrValue monotonicity_bound(const Graph& g, const Graph& h, const PrValue& pr_h) {
  if (!g.is_spanning_subgraph_of(h)) throw NotSpanningSubgraph("G is not a spanning subgraph of H");
  if (pr_h.kind == PrKind::LowerBound || !pr_h.witness) {
    throw ParameterError("monotonicity needs an exact or upper-bound value with a witness");
  }
  return PrValue::upper(*pr_h.witness, Provenance::Monotonicity, "witness of a spanning supergraph");
}

void check_bounds_consistent(const std::vector<PrValue>& values) {
  int best_lower = 0;
  int best_upper = std::numeric_limits<int>::max();
  for (const auto& v : values) {
    if (v.kind == PrKind::LowerBound || v.kind == PrKind::Exact) best_lower = std::max(best_lower, v.value);
    if (v.kind == PrKind::UpperBound || v.kind == PrKind::Exact) best_upper = std::min(best_upper, v.value);
  }
  if (best_lower > best_upper) {
    throw CertificationError("lower bound " + std::to_string(best_lower) + " exceeds upper bound " +
                             std::to_string(best_upper));
  }
}

}  // namespace coprime
