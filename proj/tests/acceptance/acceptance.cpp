// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "coprime/constructions.hpp"
#include "coprime/experiments.hpp"
#include "coprime/numtheory.hpp"
#include "coprime/solver.hpp"

using namespace coprime;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    else if (detail.str().size() < 400) detail << "; " << why;
    pass = false;
  }
};

int prime_or_one(int i) { return i == 0 ? 1 : static_cast<int>(nt::nth_prime(static_cast<std::uint64_t>(i))); }

std::string pm(int m, int n) { return "P" + std::to_string(m) + "+P" + std::to_string(n); }

// Plain injection enumerator, independent of the solver.
bool naive_exists(const Graph& g, int k, std::vector<int>& f, std::vector<char>& used, int v) {
  if (v == g.order()) return true;
  for (int l = 1; l <= k; ++l) {
    if (used[l]) continue;
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (w < v && std::gcd(f[w], l) != 1) ok = false;
    if (!ok) continue;
    used[l] = 1;
    f[v] = l;
    if (naive_exists(g, k, f, used, v + 1)) return true;
    used[l] = 0;
  }
  return false;
}

int naive_pr(const Graph& g) {
  for (int k = g.order();; ++k) {
    std::vector<int> f(g.order());
    std::vector<char> used(k + 1, 0);
    if (naive_exists(g, k, f, used, 0)) return k;
  }
}

// Lower bounds must sit at or below a certified exact value.
void check_bounds(Outcome& o, const std::string& name, const Graph& g, const ExactResult& x) {
  if (!x.certified) {
    o.fail(name + " not certified");
    return;
  }
  const int a = *independence_number(g);
  const int v = x.value.value;
  if (lower_bound_independence(g, a).value > v) o.fail(name + ": independence bound above pr");
  auto lb = lower_bound_prime_multiples(g, a);
  if (lb.bound && lb.bound->value > v) o.fail(name + ": prime-multiple bound above pr");
}

Outcome corona_formula_reproduction() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 40; ++n) {
    for (int m = 1; m <= 8; ++m) {
      auto v = corona_labeling(n, m);
      const int want = std::max(m * n + n, prime_or_one(n - 1));
      if (!v.witness || !verify_coprime_labeling(corona(complete(n), empty(m)), *v.witness).ok()) {
        o.fail("invalid witness at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      } else if (v.value != want) {
        o.fail("n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": " + std::to_string(v.value) +
               " != " + std::to_string(want));
      }
      ++count;
    }
  }
  if (o.pass) o.detail << count << " instances, all verified at max(mn+n, p_{n-1})";
  return o;
}

Outcome corona_oracle() {
  Outcome o;
  std::vector<std::pair<int, int>> cases;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 2; ++m) cases.emplace_back(n, m);
  cases.emplace_back(8, 1);
  for (auto [n, m] : cases) {
    auto x = min_coprime_number_exact(corona(complete(n), empty(m)));
    const int want = std::max(m * n + n, prime_or_one(n - 1));
    if (!x.certified || x.value.value != want) {
      o.fail("K" + std::to_string(n) + "(.)E" + std::to_string(m) + ": exact " + std::to_string(x.value.value) +
             " vs formula " + std::to_string(want));
    }
  }
  if (o.pass) o.detail << cases.size() << " coronas, exact search equals the formula (K8(.)E1 = 17, K4(.)E1 = 8)";
  return o;
}

Outcome path_join_formula_check() {
  Outcome o;
  std::vector<std::pair<int, int>> cases;
  for (int n = 2; n <= 5; ++n)
    for (int m = n; m <= 40; ++m) cases.emplace_back(m, n);
  for (int n = 6; n <= 8; ++n) {
    const int t = path_join_threshold(n);
    for (int m = t; m <= t + 20; ++m) cases.emplace_back(m, n);
  }
  for (auto [m, n] : cases) {
    auto v = path_join_labeling(m, n);
    const int want = m % 2 ? m + 2 * n - 2 : m + 2 * n - 1;
    if (!verify_coprime_labeling(join(path(m), path(n)), *v.witness).ok()) o.fail(pm(m, n) + " invalid witness");
    else if (v.value != want) o.fail(pm(m, n) + ": " + std::to_string(v.value) + " != " + std::to_string(want));
  }
  if (o.pass) o.detail << cases.size() << " joins verified at the closed form";
  return o;
}

Outcome exceptional_window() {
  Outcome o;
  struct Case {
    int m, n, want;
  };
  for (Case c : {Case{7, 7, 19}, Case{9, 7, 22}, Case{10, 6, 23}, Case{11, 6, 23}}) {
    auto x = min_coprime_number_exact(join(path(c.m), path(c.n)));
    if (!x.certified) {
      o.fail(pm(c.m, c.n) + " not certified");
      continue;
    }
    if (x.value.value != c.want) {
      o.fail(pm(c.m, c.n) + ": " + std::to_string(x.value.value) + " != " + std::to_string(c.want));
      continue;
    }
    // every budget below the answer must be excluded, and those at or
    // above the naive bound by exhaustive search
    const int naive = path_join_formula(c.m, c.n);
    for (int k = naive; k < c.want; ++k) {
      bool exhaustive = false;
      for (const auto& e : x.excluded)
        if (e.k == k && e.reason == BudgetCertificate::Reason::Exhaustive) exhaustive = true;
      if (!exhaustive) o.fail(pm(c.m, c.n) + ": budget " + std::to_string(k) + " not searched exhaustively");
    }
    if (x.excluded.empty() || x.excluded.back().k != c.want - 1) o.fail(pm(c.m, c.n) + ": no certificate at pr-1");
    o.detail << (o.detail.tellp() > 0 ? ", " : "") << pm(c.m, c.n) << "=" << c.want;
  }
  if (o.pass) o.detail << " (non-existence below each certified exhaustively)";
  return o;
}

Outcome cycle_joins() {
  Outcome o;
  int count = 0;
  for (int m = 20; m <= 40; ++m) {
    for (auto v : {CycleVariant::CC, CycleVariant::CP, CycleVariant::PC}) {
      const int n = 5;
      int want = m % 2 == 0 ? m + 2 * n - 1 : v == CycleVariant::PC ? m + 2 * n - 2 : m + 2 * n;
      auto r = cycle_join_labeling(m, n, v);
      if (!verify_coprime_labeling(cycle_join_graph(m, n, v), *r.witness).ok()) {
        o.fail(to_string(v) + " m=" + std::to_string(m) + " invalid");
      } else if (r.value != want) {
        o.fail(to_string(v) + " m=" + std::to_string(m) + ": " + std::to_string(r.value) + " != " + std::to_string(want));
      }
      ++count;
    }
  }
  if (o.pass) o.detail << count << " cycle joins verified";
  return o;
}

Outcome lemma11_check() {
  Outcome o;
  auto failures = nt::verify_lemma11_range(1331);
  if (!failures.empty()) o.fail(std::to_string(failures.size()) + " failures, first x=" + std::to_string(failures[0].x));
  else o.detail << "no failures for 1 <= x <= 1331";
  return o;
}

Outcome ramanujan_check() {
  Outcome o;
  // brute scan with trial-division prime counts
  const int limit = 2000;
  std::vector<int> pi(limit + 1, 0);
  for (int x = 2; x <= limit; ++x) {
    bool prime = true;
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) prime = false;
    pi[x] = pi[x - 1] + prime;
  }
  std::ostringstream values;
  for (int k = 1; k <= 10; ++k) {
    int last_bad = 0;
    for (int x = 1; x <= limit; ++x)
      if (pi[x] - pi[x / 2] < k) last_bad = x;
    const auto got = nt::ramanujan_prime(static_cast<std::uint64_t>(k));
    if (got != static_cast<std::uint64_t>(last_bad + 1)) {
      o.fail("R_" + std::to_string(k) + " = " + std::to_string(got) + ", scan gives " + std::to_string(last_bad + 1));
    }
    values << (k > 1 ? "," : "") << got;
  }
  if (nt::ramanujan_prime(4) != 29) o.fail("R_4 != 29");
  if (o.pass) o.detail << "R_1..R_10 = " << values.str();
  return o;
}

Outcome conjecture_check() {
  Outcome o;
  int discrepancies = 0;
  for (int n = 1; n <= 200; ++n) {
    for (int m = 1; m <= 20; ++m) {
      const auto total = static_cast<std::uint64_t>(n) * (m + 1);
      const bool by_count = static_cast<std::uint64_t>(n) <= nt::prime_count(total) + 1;
      const bool by_prime = static_cast<std::uint64_t>(prime_or_one(n - 1)) <= total;
      if (by_count != by_prime) {
        ++discrepancies;
        o.fail("n=" + std::to_string(n) + ", m=" + std::to_string(m));
      }
    }
  }
  if (o.pass) o.detail << "4000 pairs, 0 discrepancies";
  return o;
}

Outcome property_suite() {
  Outcome o;
  // (a) construction witnesses
  int witnesses = 0;
  auto verify = [&](const Graph& g, const PrValue& v, const std::string& name) {
    ++witnesses;
    if (!v.witness || !verify_coprime_labeling(g, *v.witness).ok() || v.witness->max_label() != v.value) {
      o.fail("witness " + name);
    }
  };
  for (int n = 1; n <= 30; ++n)
    for (int m = 1; m <= 5; ++m) verify(corona(complete(n), empty(m)), corona_labeling(n, m), "corona");
  for (int n = 2; n <= 10; ++n) {
    const int t = std::max(n, path_join_threshold(n));
    for (int m = t; m <= t + 15; ++m) {
      verify(join(path(m), path(n)), path_join_labeling(m, n), pm(m, n));
      if (n >= 3) {
        for (auto v : {CycleVariant::CC, CycleVariant::CP, CycleVariant::PC})
          verify(cycle_join_graph(m, n, v), cycle_join_labeling(m, n, v), "cycle " + pm(m, n));
      }
    }
  }
  for (int m = 5; m <= 19; ++m) verify(join(path(m), path(5)), path_join_p5_labeling(m), "P5 table");
  for (int m = 3; m <= 8; ++m) {
    const int r = static_cast<int>(nt::ramanujan_prime(static_cast<std::uint64_t>(m - 1)));
    for (int n = m; n <= r - m; ++n) verify(complete_bipartite(m, n), complete_bipartite_labeling(m, n), "Kbip");
  }

  // (b) solver against naive enumeration, (d) bounds on solved instances
  std::mt19937_64 rng(20240601);
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    Graph g = gnp(n, p, rng());
    auto x = min_coprime_number_exact(g);
    if (!x.certified || x.value.value != naive_pr(g)) o.fail("random graph " + std::to_string(i) + " disagrees");
    check_bounds(o, "random graph " + std::to_string(i), g, x);
    ++solved;
  }

  // (c) spanning subgraph pairs
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    Graph h = gnp(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng());
    std::vector<Edge> kept;
    for (auto e : h.edges())
      if (std::bernoulli_distribution(0.6)(rng)) kept.push_back(e);
    Graph g(n, kept);
    auto xg = min_coprime_number_exact(g);
    auto xh = min_coprime_number_exact(h);
    if (!xg.certified || !xh.certified || xg.value.value > xh.value.value) {
      o.fail("monotonicity pair " + std::to_string(i));
    }
    check_bounds(o, "pair " + std::to_string(i) + " G", g, xg);
    check_bounds(o, "pair " + std::to_string(i) + " H", h, xh);
    solved += 2;
  }
  if (o.pass) o.detail << witnesses << " witnesses verified, 200 solver/naive agreements, 100 monotone pairs, bounds hold on " << solved << " solved graphs";
  return o;
}

Outcome random_study() {
  Outcome o;
  std::ostringstream summary;
  // base seed fixed up front; trial i uses seed + i
  const std::uint64_t seed = 1;
  for (int n : {10, 12}) {
    auto r = random_pr_experiment(n, 0.5, 20, seed, SearchConfig{});
    int above = 0;
    for (const auto& row : r.rows) {
      if (!row.certified || !row.pr) {
        o.fail(row.family + " not certified");
        continue;
      }
      const int v = *row.pr;
      if (v < row.extra["independence_bound"].get<int>()) o.fail(row.family + " below independence bound");
      if (!row.extra["prime_multiple_bound"].is_null() && v < row.extra["prime_multiple_bound"].get<int>()) {
        o.fail(row.family + " below prime-multiple bound");
      }
      if (v > row.extra["upper_bound"].get<int>()) o.fail(row.family + " above p_{n-1}");
      if (v > n) ++above;
      else o.fail(row.family + " is prime (pr = " + std::to_string(v) + ")");
    }
    summary << (n == 10 ? "" : "; ") << "n=" << n << ": " << above << "/20 with pr > n, mean pr/(n ln n) = "
            << r.aggregates["mean_pr_over_n_log_n"].get<double>();
  }
  o.detail << (o.pass ? "" : " | ") << summary.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "corona formula reproduction", corona_formula_reproduction},
      {2, "corona exact-search equivalence", corona_oracle},
      {3, "path-join closed form", path_join_formula_check},
      {4, "small path-join anomalies", exceptional_window},
      {5, "cycle joins", cycle_joins},
      {6, "residue witness range", lemma11_check},
      {7, "Ramanujan primes", ramanujan_check},
      {8, "corona primality equivalence", conjecture_check},
      {9, "property suite", property_suite},
      {10, "random-graph bounds", random_study},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << std::fixed
              << std::setprecision(2) << secs << "s): " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
