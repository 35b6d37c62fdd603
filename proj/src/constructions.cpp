#include <algorithm>
#include <numeric>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"
#include "coprime/solver.hpp"
#include "internal.hpp"

namespace coprime {

namespace detail {

std::optional<Labeling> search_for_witness(const Graph& g, int k) {
  SearchConfig cfg;
  cfg.node_limit = kFallbackNodeLimit;
  auto r = exists_labeling_with_max(g, k, cfg);
  if (r.status == SearchStatus::Inconclusive) throw ResourceLimitError("fallback search hit its node limit");
  if (r.status == SearchStatus::Absent) return std::nullopt;
  return r.labeling;
}

Labeling swap_join_sides(const Labeling& f, int a) {
  std::vector<int> out(f.labels().begin() + a, f.labels().end());
  out.insert(out.end(), f.labels().begin(), f.labels().begin() + a);
  return Labeling(std::move(out));
}

void require_valid(const Graph& g, const Labeling& f, const char* what) {
  auto verdict = verify_coprime_labeling(g, f);
  if (!verdict.ok()) throw ConstructionFailure(std::string(what) + ": " + describe(verdict.violations.front()));
}

}  // namespace detail

namespace {

int prime_or_one(int i) { return i == 0 ? 1 : static_cast<int>(nt::nth_prime(static_cast<std::uint64_t>(i))); }

// 1 followed by p_1 .. p_{n-1}.
std::vector<int> complete_labels(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(prime_or_one(i));
  return out;
}

}  // namespace

int corona_formula(int n, int m) { return std::max(m * n + n, prime_or_one(n - 1)); }

PrValue corona_labeling(int n, int m) {
  if (n < 1 || m < 1) throw ParameterError("corona needs n, m >= 1");
  const int N = corona_formula(n, m);
  const Graph g = corona(complete(n), empty(m));
  std::vector<int> labels(static_cast<std::size_t>(n) * (m + 1), 0);
  std::vector<char> used(N + 1, 0);
  const auto hubs = complete_labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = hubs[i];
    used[hubs[i]] = 1;
  }

  bool greedy_ok = true;
  for (int i = 1; i < n && greedy_ok; ++i) {
    const int p = hubs[i];
    int taken = 0;
    for (int x = 2; x <= N && taken < m; ++x) {
      if (used[x] || x % p == 0) continue;
      used[x] = 1;
      labels[n + i * m + taken++] = x;
    }
    greedy_ok = taken == m;
  }
  if (greedy_ok) {
    int taken = 0;
    for (int x = 2; x <= N && taken < m; ++x) {
      if (!used[x]) {
        used[x] = 1;
        labels[n + taken++] = x;
      }
    }
    greedy_ok = taken == m;
  }

  PrValue out;
  if (greedy_ok) {
    Labeling f(labels);
    detail::require_valid(g, f, "corona greedy");
    out = PrValue::exact(std::move(f), Provenance::Construction, "greedy");
  } else {
    auto w = detail::search_for_witness(g, N);
    if (!w) throw FormulaViolation("corona: no labeling with max " + std::to_string(N));
    out = PrValue::exact(*w, Provenance::ExactSearch, "greedy ran dry; witness by search");
  }
  if (out.value != N) {
    throw FormulaViolation("corona: max label " + std::to_string(out.value) + " != " + std::to_string(N));
  }
  return out;
}

bool CoronaCertificate::all_passed() const {
  return std::all_of(stages.begin(), stages.end(), [](const CoronaStage& s) { return s.passed; });
}

CoronaCertificate corona_counting_certificate(int n, int m) {
  if (n < 4 || m < 3) throw PreconditionViolation("counting certificate needs n >= 4, m >= 3");
  CoronaCertificate cert;
  const std::uint64_t total = static_cast<std::uint64_t>(m) * n + n;
  for (int i = 1; i <= n - 1; ++i) {
    CoronaStage s;
    s.i = i;
    s.prime = nt::nth_prime(static_cast<std::uint64_t>(i));
    if (s.prime > static_cast<std::uint64_t>(n)) s.proof_case = "p_i > n";
    else if (i >= 3) s.proof_case = "p_i <= n, i >= 3";
    else if (i == 2) s.proof_case = "p_i <= n, i = 2";
    else s.proof_case = "i = 1, direct";
    s.multiples = s.prime * (static_cast<std::uint64_t>(m) * n - static_cast<std::uint64_t>(m) * i + 1);
    s.vertex_count = total;
    s.passed = s.multiples > total;
    cert.stages.push_back(std::move(s));
  }
  return cert;
}

bool corona_prime_condition(int n, int m) {
  if (n < 1 || m < 1) throw ParameterError("corona needs n, m >= 1");
  const auto total = static_cast<std::uint64_t>(n) * (m + 1);
  const bool by_count = static_cast<std::uint64_t>(n) <= nt::prime_count(total) + 1;
  const bool by_prime = static_cast<std::uint64_t>(prime_or_one(n - 1)) <= total;
  if (by_count != by_prime) {
    throw FormulaViolation("prime-count and p_{n-1} conditions disagree at n=" + std::to_string(n) +
                           ", m=" + std::to_string(m));
  }
  return by_count;
}

PrValue complete_bipartite_labeling(int m, int n) {
  if (m < 2) throw PreconditionViolation("bipartite construction needs m >= 2");
  const int r = static_cast<int>(nt::ramanujan_prime(static_cast<std::uint64_t>(m - 1)));
  if (n < m || n > r - m) {
    throw PreconditionViolation("bipartite construction needs m <= n <= R_{m-1} - m = " + std::to_string(r - m));
  }
  auto tables = nt::ensure_sieve(static_cast<std::uint64_t>(r));
  std::vector<int> small{1};
  for (int x = r; x >= 2 && static_cast<int>(small.size()) < m; --x)
    if (tables->prime(x)) small.push_back(x);
  std::vector<int> big;
  for (int x = 2; x <= r && static_cast<int>(big.size()) < n; ++x)
    if (std::find(small.begin(), small.end(), x) == small.end()) big.push_back(x);
  small.insert(small.end(), big.begin(), big.end());
  Labeling f(std::move(small));
  detail::require_valid(complete_bipartite(m, n), f, "bipartite construction");
  return PrValue::upper(std::move(f), Provenance::Construction, "R_{m-1} bound");
}

// ---------------------------------------------------------------------------

namespace {

using K = FamilyExpr::Kind;

PrValue relabel(PrValue v, Provenance how, std::string note) {
  v.provenance = how;
  v.note = std::move(note);
  return v;
}

bool is_path_like(const FamilyExpr& e) { return e.kind == K::Path || e.kind == K::Cycle; }

std::optional<CycleVariant> variant_of(const FamilyExpr& l, const FamilyExpr& r) {
  if (l.kind == K::Cycle && r.kind == K::Cycle) return CycleVariant::CC;
  if (l.kind == K::Cycle && r.kind == K::Path) return CycleVariant::CP;
  if (l.kind == K::Path && r.kind == K::Cycle) return CycleVariant::PC;
  return std::nullopt;
}

// Closed-form families. `constructive` widens coverage to the cases where
// only a construction (bound or tabulated search witness) is available.
FormulaResult dispatch(const FamilyExpr& e, bool constructive) {
  const Provenance how = constructive ? Provenance::Construction : Provenance::Formula;
  if (e.kind == K::Path || e.kind == K::Cycle || e.kind == K::Empty) {
    const int n = e.a;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    return {PrValue::exact(Labeling(std::move(labels)), how, "labels 1..n in order"), "prime graph, pr = n"};
  }
  if (e.kind == K::Complete) {
    return {PrValue::exact(Labeling(complete_labels(e.a)), how, "1 and the first n-1 primes"), "pr(K_n) = p_{n-1}"};
  }
  if (e.kind == K::Corona) {
    if (e.left().kind == K::Complete && e.right().kind == K::Empty) {
      auto v = corona_labeling(e.left().a, e.right().a);
      return {relabel(v, constructive ? v.provenance : how, v.note), "max(mn+n, p_{n-1})"};
    }
    return {std::nullopt, "corona outside K_n (.) E_m is not covered"};
  }
  const bool bipartite = e.kind == K::Bipartite ||
                         (e.kind == K::Join && e.left().kind == K::Empty && e.right().kind == K::Empty);
  if (bipartite) {
    const int m = e.kind == K::Bipartite ? e.a : e.left().a;
    const int n = e.kind == K::Bipartite ? e.b : e.right().a;
    const std::string why = "only the upper bound R_{m-1} is known for complete bipartite graphs";
    if (!constructive) return {std::nullopt, why};
    const int lo = std::min(m, n);
    const int hi = std::max(m, n);
    try {
      auto v = complete_bipartite_labeling(lo, hi);
      if (m > n) v.witness = detail::swap_join_sides(*v.witness, lo);
      return {v, "upper bound for m <= n <= R_{m-1} - m"};
    } catch (const PreconditionViolation& err) {
      return {std::nullopt, err.what()};
    }
  }
  if (e.kind != K::Join || !is_path_like(e.left()) || !is_path_like(e.right())) {
    return {std::nullopt, "family not covered by a closed form"};
  }

  const int m = e.left().a;
  const int n = e.right().a;
  const int hi = std::max(m, n);
  const int lo = std::min(m, n);
  if (auto v = variant_of(e.left(), e.right())) {
    if (lo < 2 || hi < path_join_threshold(lo)) {
      return {std::nullopt, "cycle join below the guaranteed range m >= R_{n-1} - 2n + 1"};
    }
    auto r = cycle_join_labeling(m, n, *v);
    return {relabel(r, constructive ? r.provenance : how, r.note), "cycle join, m >= R_{n-1} - 2n + 1"};
  }
  if (lo >= 6 && hi < path_join_threshold(lo)) {
    const std::string why = "inside exceptional window; the closed form can fail for n <= m <= R_{n-1} - 2n";
    if (!constructive) return {std::nullopt, why};
    if (auto s = special_join_values(m, n)) return {s, "tabulated small case"};
    return {std::nullopt, why};
  }
  auto r = path_join_labeling(m, n);
  std::string why = lo <= 4 ? "small n, all m" : lo == 5 && hi <= 19 ? "tabulated n = 5 case" : "m >= R_{n-1} - 2n + 1";
  return {relabel(r, constructive ? r.provenance : how, r.note), why};
}

}  // namespace

FormulaResult pr_formula(const FamilyExpr& e) { return dispatch(e, false); }
FormulaResult construct(const FamilyExpr& e) { return dispatch(e, true); }

}  // namespace coprime
