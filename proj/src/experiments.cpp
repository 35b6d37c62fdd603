#include "coprime/experiments.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int prime_or_one(int i) { return i == 0 ? 1 : static_cast<int>(nt::nth_prime(static_cast<std::uint64_t>(i))); }

void fill(ReportRow& row, const PrValue& v, bool certified) {
  row.pr = v.value;
  row.kind = std::string(to_string(v.kind));
  row.provenance = std::string(to_string(v.provenance));
  row.certified = certified;
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

ExperimentReport conjecture1_table(int m_max, int n_sweep) {
  if (m_max < 1 || n_sweep < 1) throw ParameterError("conjecture1_table needs m_max, n_sweep >= 1");
  ExperimentReport r;
  r.command = "table conjecture1";
  r.parameters = {{"m_max", m_max}, {"n_sweep", n_sweep}};
  int total_mismatch = 0;
  for (int m = 1; m <= m_max; ++m) {
    const auto t0 = Clock::now();
    int largest = 0;
    int first_failure = 0;
    int mismatches = 0;
    for (int n = 1; n <= n_sweep; ++n) {
      const auto total = static_cast<std::uint64_t>(n) * (m + 1);
      const bool by_count = static_cast<std::uint64_t>(n) <= nt::prime_count(total) + 1;
      const bool by_prime = static_cast<std::uint64_t>(prime_or_one(n - 1)) <= total;
      if (by_count != by_prime) ++mismatches;
      if (by_count) largest = n;
      else if (!first_failure) first_failure = n;
    }
    total_mismatch += mismatches;
    ReportRow row;
    row.family = "corona(K(n),E(" + std::to_string(m) + "))";
    row.m = m;
    row.n = largest;
    row.pr = largest * (m + 1);
    row.kind = "exact";
    row.provenance = "formula";
    row.certified = mismatches == 0;
    row.seconds = since(t0);
    row.extra = {{"first_failure", first_failure ? Json(first_failure) : Json(nullptr)},
                 {"contiguous", first_failure == 0 || largest < first_failure},
                 {"discrepancies", mismatches}};
    r.rows.push_back(std::move(row));
  }
  r.aggregates = {{"discrepancies", total_mismatch}};
  return r;
}

ExperimentReport corona_table(int n_max, int m_max) {
  if (n_max < 1 || m_max < 1) throw ParameterError("corona_table needs n_max, m_max >= 1");
  ExperimentReport r;
  r.command = "table corona";
  r.parameters = {{"n_max", n_max}, {"m_max", m_max}};
  int mismatches = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      const auto t0 = Clock::now();
      auto v = corona_labeling(n, m);
      ReportRow row;
      row.family = to_string(corona_expr(complete_expr(n), empty_expr(m)));
      row.m = m;
      row.n = n;
      fill(row, v, true);
      row.seconds = since(t0);
      const int formula = corona_formula(n, m);
      if (formula != v.value) ++mismatches;
      row.extra = {{"formula", formula}, {"prime", formula == n * (m + 1)}};
      r.rows.push_back(std::move(row));
    }
  }
  r.aggregates = {{"rows", r.rows.size()}, {"formula_mismatches", mismatches}};
  return r;
}

ExperimentReport path_join_sweep(const PathJoinSweep& o) {
  if (o.n_lo < 1 || o.n_hi < o.n_lo) throw ParameterError("bad n range");
  ExperimentReport r;
  r.command = "table pathjoin";
  r.parameters = {{"n_lo", o.n_lo}, {"n_hi", o.n_hi}, {"m_hi", o.m_hi}, {"exact_max_vertices", o.exact_max_vertices}};
  int flagged = 0;
  for (int n = o.n_lo; n <= o.n_hi; ++n) {
    for (int m = n; m <= o.m_hi; ++m) {
      const auto t0 = Clock::now();
      const FamilyExpr e = join_expr(path_expr(m), path_expr(n));
      ReportRow row;
      row.family = to_string(e);
      row.m = m;
      row.n = n;
      const int naive = path_join_formula(m, n);

      auto formula = pr_formula(e);
      std::optional<PrValue> built;
      std::string build_reason;
      try {
        auto c = construct(e);
        built = c.value;
        build_reason = c.reason;
      } catch (const Error& err) {
        build_reason = err.what();
      }
      std::optional<int> exact;
      if (m + n <= o.exact_max_vertices) {
        auto x = min_coprime_number_exact(build(e), o.search);
        if (x.certified) {
          exact = x.value.value;
          fill(row, x.value, true);
        }
      }
      if (!row.pr && formula.value) fill(row, *formula.value, true);
      if (!row.pr && built) fill(row, *built, built->kind == PrKind::Exact);

      if (exact && formula.value && *exact != formula.value->value) {
        throw CertificationError(row.family + ": closed form " + std::to_string(formula.value->value) +
                                 " disagrees with exact " + std::to_string(*exact));
      }
      if (exact && built && built->value < *exact) {
        throw CertificationError(row.family + ": construction below the exact value");
      }
      const bool not_tight = row.pr && row.certified && *row.pr > naive;
      flagged += not_tight;
      row.seconds = since(t0);
      row.extra = {{"naive", naive},
                   {"formula", formula.value ? Json(formula.value->value) : Json(nullptr)},
                   {"formula_reason", formula.reason},
                   {"constructed", built ? Json(built->value) : Json(nullptr)},
                   {"exact", optional_json(exact)},
                   {"naive_not_tight", not_tight}};
      r.rows.push_back(std::move(row));
    }
  }
  r.aggregates = {{"rows", r.rows.size()}, {"naive_not_tight", flagged}};
  return r;
}

ExperimentReport random_pr_experiment(int n, double p, int trials, std::uint64_t seed, const SearchConfig& cfg) {
  if (n < 1 || trials < 1) throw ParameterError("random experiment needs n, trials >= 1");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in (0, 1)");
  ExperimentReport r;
  r.command = "random";
  r.parameters = {{"n", n}, {"p", p}, {"trials", trials}};
  r.seed = seed;
  const int upper = prime_or_one(n - 1);
  int solved = 0;
  int nonprime = 0;
  double ratio_sum = 0.0;
  for (int i = 0; i < trials; ++i) {
    const auto t0 = Clock::now();
    FamilyExpr e;
    e.kind = FamilyExpr::Kind::Gnp;
    e.a = n;
    e.p = p;
    e.seed = seed + static_cast<std::uint64_t>(i);
    const Graph g = build(e);
    const auto alpha = independence_number(g);
    const auto omega = clique_number(g);
    const int prop8 = lower_bound_independence(g, *alpha).value;
    const auto lemma = lower_bound_prime_multiples(g, *alpha);
    const auto exact = min_coprime_number_exact(g, cfg);

    ReportRow row;
    row.family = to_string(e);
    row.m = i;
    row.n = n;
    fill(row, exact.value, exact.certified);
    row.seconds = since(t0);
    row.extra = {{"seed", e.seed},
                 {"edges", g.size()},
                 {"alpha", *alpha},
                 {"omega", *omega},
                 {"independence_bound", prop8},
                 {"prime_multiple_bound", lemma.bound ? Json(lemma.bound->value) : Json(nullptr)},
                 {"prime_multiple_reason", lemma.bound ? "" : lemma.reason},
                 {"upper_bound", upper}};
    if (exact.certified) {
      const int v = exact.value.value;
      if (v < prop8 || (lemma.bound && v < lemma.bound->value) || v > upper) {
        throw CertificationError(row.family + ": bound chain violated at pr = " + std::to_string(v));
      }
      ++solved;
      nonprime += v > n;
      ratio_sum += v / (n * std::log(static_cast<double>(n)));
    }
    r.rows.push_back(std::move(row));
  }
  r.aggregates = {{"solved", solved},
                  {"nonprime_fraction", solved ? static_cast<double>(nonprime) / solved : 0.0},
                  {"mean_pr_over_n_log_n", solved ? ratio_sum / solved : 0.0}};
  return r;
}

ExperimentReport lemma11_report(std::uint64_t x_max) {
  ExperimentReport r;
  r.command = "lemma11";
  r.parameters = {{"x_max", x_max}};
  const auto failures = nt::verify_lemma11_range(x_max);
  Json xs = Json::array();
  for (const auto& f : failures) xs.push_back(f.x);
  r.aggregates = {{"failures", failures.size()}, {"failing_x", std::move(xs)}};
  return r;
}

// ---------------------------------------------------------------------------

std::string report_to_json(const ExperimentReport& r) {
  Json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["family"] = row.family;
    x["m"] = row.m;
    x["n"] = row.n;
    x["pr"] = optional_json(row.pr);
    x["kind"] = row.kind;
    x["provenance"] = row.provenance;
    x["certified"] = row.certified;
    for (const auto& [k, v] : row.extra.items()) x[k] = v;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  j["aggregates"] = r.aggregates;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "family,m,n,pr,provenance,certified,seconds\n";
  for (const auto& row : r.rows) {
    os << csv_field(row.family) << ',' << row.m << ',' << row.n << ',' << (row.pr ? std::to_string(*row.pr) : "")
       << ',' << row.provenance << ',' << (row.certified ? "true" : "false") << ',' << std::fixed
       << std::setprecision(6) << row.seconds << '\n';
  }
  return os.str();
}

std::string report_to_text(const ExperimentReport& r) {
  std::ostringstream os;
  os << r.command;
  if (r.seed) os << " (seed " << *r.seed << ")";
  os << '\n';
  for (const auto& row : r.rows) {
    os << std::left << std::setw(28) << row.family << " m=" << std::setw(3) << row.m << " n=" << std::setw(4) << row.n
       << " pr=" << std::setw(5) << (row.pr ? std::to_string(*row.pr) : "-") << ' ' << std::setw(12) << row.provenance
       << (row.certified ? " certified" : " uncertified");
    if (!row.extra.empty()) os << "  " << row.extra.dump();
    os << '\n';
  }
  if (!r.aggregates.empty()) os << "aggregates: " << r.aggregates.dump() << '\n';
  return os.str();
}

}  // namespace coprime
