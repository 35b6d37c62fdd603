#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coprime/family.hpp"
#include "coprime/labeling.hpp"

namespace coprime {

// ---------------------------------------------------------------------------
// K_n (.) E_m
// ---------------------------------------------------------------------------

// max(mn + n, p_{n-1}), with p_0 read as 1.
int corona_formula(int n, int m);

// Hub vertex u_1 gets 1 and u_{i+1} gets p_i; the leaves of u_{i+1} take the
// first m unused integers <= N coprime to p_i, and u_1's leaves take what is
// left. Falls back to exhaustive search if the greedy step runs dry.
// Indexing follows corona(complete(n), empty(m)).
PrValue corona_labeling(int n, int m);

struct CoronaStage {
  int i;
  std::uint64_t prime;       // p_i
  std::string proof_case;
  std::uint64_t multiples;   // p_i * (mn - mi + 1)
  std::uint64_t vertex_count;  // mn + n
  bool passed;
};

struct CoronaCertificate {
  std::vector<CoronaStage> stages;
  bool all_passed() const;
};

// For n >= 4, m >= 3: checks p_i (mn - mi + 1) > mn + n for every stage and
// records which case of the counting argument applies.
CoronaCertificate corona_counting_certificate(int n, int m);

// n <= pi(n(m+1)) + 1, cross-checked against p_{n-1} <= mn + n. Throws
// FormulaViolation if the two disagree.
bool corona_prime_condition(int n, int m);

// ---------------------------------------------------------------------------
// P_m + P_n
// ---------------------------------------------------------------------------

// m + 2n - 2 for odd m, m + 2n - 1 for even m (m >= n >= 2).
int path_join_formula(int m, int n);
// R_{n-1} - 2n + 1; the construction is guaranteed for m at or above it.
int path_join_threshold(int n);

struct StageRecord {
  int i;                 // stage index; S_{i+1} is built from S_i
  std::string rule;      // which deletion rule applied
  int removed;           // deleted element, 0 if none
  std::size_t size_after;
};

// Snapshot of the path-join pipeline.
struct PathJoinState {
  int target = 0;             // L, the odd target label
  std::vector<int> primes;    // q_1 < ... < q_{n-1}, all in (L/2, L]
  int witness_index = -1;     // 0-based index of a q not congruent to +-1 mod 11
  std::vector<int> sequence;  // final S_n
  std::vector<StageRecord> stages;
};

struct PathJoinTrace {
  std::string route;  // "trivial", "table", "short-circuit", "pipeline", "pipeline+patch", "search"
  std::optional<PathJoinState> state;
  bool flagged = false;  // a fallback replaced the printed construction
};

// Builds S_1 .. S_n for P_m + P_n; throws PreconditionViolation when there
// are not n - 1 primes in (L/2, L] and ConstructionFailure when a stage
// check fails.
PathJoinState path_join_pipeline(int m, int n);

// Exact pr(P_m + P_n) with witness, indexed as join(path(m), path(n)).
PrValue path_join_labeling(int m, int n, PathJoinTrace* trace = nullptr);

// Hardcoded labelings for P_m + P_5, 5 <= m <= 19; m >= 20 delegates.
PrValue path_join_p5_labeling(int m);

// Values known for the small windows n = 5, 6, 7 (including those where the
// closed form fails). nullopt outside that table.
std::optional<PrValue> special_join_values(int m, int n);

// ---------------------------------------------------------------------------
// Cycle joins
// ---------------------------------------------------------------------------

enum class CycleVariant { CC, CP, PC };  // C_m+C_n, C_m+P_n, P_m+C_n

std::string to_string(CycleVariant v);
int cycle_join_formula(int m, int n, CycleVariant v);
Graph cycle_join_graph(int m, int n, CycleVariant v);

// Exact pr with witness, indexed as join(first factor, second factor).
PrValue cycle_join_labeling(int m, int n, CycleVariant v, PathJoinTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// K_{m,n}
// ---------------------------------------------------------------------------

// Upper bound R_{m-1} for m <= n <= R_{m-1} - m: the m-side gets 1 and the
// m - 1 largest primes <= R_{m-1}. Indexed as complete_bipartite(m, n).
PrValue complete_bipartite_labeling(int m, int n);

// ---------------------------------------------------------------------------
// Dispatch on family expressions
// ---------------------------------------------------------------------------

struct FormulaResult {
  std::optional<PrValue> value;
  std::string reason;  // validity condition used, or why absent
};

// Closed-form pr for the covered families (witness attached).
FormulaResult pr_formula(const FamilyExpr& e);

// Constructive labeling for the covered families: exact when the
// construction is known to be optimal, upper bound otherwise.
FormulaResult construct(const FamilyExpr& e);

// True for P_m + P_n with 6 <= n <= m < path_join_threshold(n).
bool in_exceptional_window(int m, int n);

}  // namespace coprime
