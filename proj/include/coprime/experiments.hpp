#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coprime/json_io.hpp"
#include "coprime/solver.hpp"

namespace coprime {

struct ReportRow {
  std::string family;
  int m = 0;
  int n = 0;
  std::optional<int> pr;
  std::string kind;        // exact, upper-bound, lower-bound, or empty
  std::string provenance;
  bool certified = false;
  double seconds = 0.0;
  Json extra = Json::object();
};

struct ExperimentReport {
  std::string command;
  Json parameters = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<ReportRow> rows;
  Json aggregates = Json::object();
};

// Per m <= m_max: the largest n <= n_sweep with n <= pi(n(m+1)) + 1, plus a
// count of n where that test and p_{n-1} <= mn + n disagree.
ExperimentReport conjecture1_table(int m_max, int n_sweep = 200);

// Corona labelings for 1 <= n <= n_max, 1 <= m <= m_max.
ExperimentReport corona_table(int n_max, int m_max);

struct PathJoinSweep {
  int n_lo = 2;
  int n_hi = 7;
  int m_hi = 12;                 // m runs from n to m_hi
  int exact_max_vertices = 18;   // exact search only when m + n is at most this
  SearchConfig search;
};

// Per (m, n): closed form when covered, constructed max, exact value when
// small enough, and whether m+2n-2 / m+2n-1 is exceeded.
ExperimentReport path_join_sweep(const PathJoinSweep& opts);

// Trials use gnp(n, p, seed + i). Throws CertificationError if a bound
// chain is violated.
ExperimentReport random_pr_experiment(int n, double p, int trials, std::uint64_t seed, const SearchConfig& cfg);

ExperimentReport lemma11_report(std::uint64_t x_max);

// JSON omits timings so equal inputs give identical bytes.
std::string report_to_json(const ExperimentReport& r);
// Columns: family,m,n,pr,provenance,certified,seconds
std::string report_to_csv(const ExperimentReport& r);
std::string report_to_text(const ExperimentReport& r);

}  // namespace coprime
