#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coprime/graph.hpp"

namespace coprime {

// Vertex -> positive integer label. Entry v is the label of vertex v.
// Injectivity is not enforced here; verify_coprime_labeling reports
// duplicates.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int operator[](Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int max_label() const noexcept { return max_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
  int max_ = 0;
};

struct Violation {
  enum class Type { SharedFactor, DuplicateLabel };
  Type type;
  Vertex u;
  Vertex v;
  int label;  // the gcd for SharedFactor, the repeated label for DuplicateLabel
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Throws DomainMismatch when f does not have exactly |V(G)| entries.
Verdict verify_coprime_labeling(const Graph& g, const Labeling& f);
std::string describe(const Violation& v);

enum class PrKind { Exact, UpperBound, LowerBound };
enum class Provenance {
  Formula,
  Construction,
  ExactSearch,
  IndependenceBound,
  PrimeMultipleBound,
  Monotonicity,
};

std::string_view to_string(PrKind k);
std::string_view to_string(Provenance p);

// pr(G) or a bound on it, with how it was obtained. Exact and upper-bound
// values always carry a witness whose max label equals the value.
struct PrValue {
  PrKind kind = PrKind::LowerBound;
  int value = 0;
  Provenance provenance = Provenance::Formula;
  std::optional<Labeling> witness;
  std::string note;

  static PrValue exact(Labeling witness, Provenance how, std::string note = {});
  static PrValue upper(Labeling witness, Provenance how, std::string note = {});
  static PrValue lower(int value, Provenance how, std::string note = {});
};

// 2(|V| - alpha) - 1, never below |V|.
PrValue lower_bound_independence(const Graph& g, int alpha);

struct OptionalBound {
  std::optional<PrValue> bound;
  std::string reason;  // why the bound is absent
};

// p_j with j = max(1, floor(n - alpha*sqrt(n))), valid when alpha^2 < n and
// p_{ceil(sqrt n)}^2 > p_n.
OptionalBound lower_bound_prime_multiples(const Graph& g, int alpha);

// Reuses H's witness for a spanning subgraph G of H.
PrValue monotonicity_bound(const Graph& g, const Graph& h, const PrValue& pr_h);

// Throws CertificationError when a lower bound exceeds an upper bound.
void check_bounds_consistent(const std::vector<PrValue>& values);

}  // namespace coprime
