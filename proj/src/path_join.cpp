#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"
#include "internal.hpp"

namespace coprime {

int path_join_formula(int m, int n) { return m % 2 ? m + 2 * n - 2 : m + 2 * n - 1; }

int path_join_threshold(int n) {
  if (n < 2) return 1;
  return static_cast<int>(nt::ramanujan_prime(n - 1)) - 2 * n + 1;
}

bool in_exceptional_window(int m, int n) {
  if (m < n) std::swap(m, n);
  return n >= 6 && m < path_join_threshold(n);
}

namespace {

using Seq = std::vector<int>;

std::ptrdiff_t index_of(const Seq& s, int x) {
  auto it = std::find(s.begin(), s.end(), x);
  return it == s.end() ? -1 : it - s.begin();
}

bool contains(const Seq& s, int x) { return index_of(s, x) >= 0; }

// True when `window` appears in `s` as consecutive entries.
bool has_run(const Seq& s, std::initializer_list<int> window) {
  auto first = index_of(s, *window.begin());
  if (first < 0 || first + static_cast<std::ptrdiff_t>(window.size()) > static_cast<std::ptrdiff_t>(s.size())) return false;
  std::size_t i = static_cast<std::size_t>(first);
  for (int x : window)
    if (s[i++] != x) return false;
  return true;
}

void erase_value(Seq& s, int x) { s.erase(s.begin() + index_of(s, x)); }

// Adjacent pairs with both entries below `bound` are coprime.
bool coprime_below(const Seq& s, int bound) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] < bound && s[i + 1] < bound && std::gcd(s[i], s[i + 1]) != 1) return false;
  }
  return true;
}

bool all_adjacent_coprime(const Seq& s) { return coprime_below(s, std::numeric_limits<int>::max()); }

bool avoids_pm1_mod11(int q) { return q % 11 != 1 && q % 11 != 10; }

// Removes one element next to q so the run around q becomes coprime. `gap`
// is 1 for the run q-2, q-1, q+1, q+2 (decided mod 3) and 3 for the run
// q-4, q-3, q+1, q+2 (decided mod 5).
int repair_around(Seq& s, int q, int gap, int i, std::vector<StageRecord>& stages, std::size_t expected_size,
                  const char* rule) {
  if (!has_run(s, {q - gap - 1, q - gap, q + 1, q + 2})) {
    throw ConstructionFailure("stage " + std::to_string(i) + ": run around q=" + std::to_string(q) + " not present");
  }
  const int modulus = gap == 1 ? 3 : 5;
  const int removed = (q + 2) % modulus != 0 ? q + 1 : q - gap;
  erase_value(s, removed);
  if (s.size() != expected_size) throw ConstructionFailure("stage size mismatch");
  stages.push_back({i, rule, removed, s.size()});
  return removed;
}

// The `count` largest primes q <= L with 2q > L, ascending.
std::vector<int> largest_primes(int L, int count) {
  auto tables = nt::ensure_sieve(static_cast<std::uint64_t>(L));
  std::vector<int> out;
  for (int x = L; x >= 2 && static_cast<int>(out.size()) < count; --x) {
    if (tables->prime(x) && 2 * x > L) out.push_back(x);
  }
  if (static_cast<int>(out.size()) < count) {
    throw PreconditionViolation("fewer than n-1 primes in (L/2, L] for L=" + std::to_string(L));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

PathJoinState path_join_pipeline(int m, int n) {
  if (n < 2 || m < 1) throw PreconditionViolation("pipeline needs n >= 2");
  PathJoinState st;
  const int L = path_join_formula(m, n);
  st.target = L;

  st.primes = largest_primes(L, n - 1);

  auto it = std::find_if(st.primes.begin(), st.primes.end(), avoids_pm1_mod11);
  if (it == st.primes.end()) {
    // Swap the smallest q for the least prime in ((L-1)/2, L-1] avoiding +-1 mod 11.
    int w = static_cast<int>(nt::lemma11_witness(static_cast<std::uint64_t>((L - 1) / 2)));
    st.primes.front() = w;
    std::sort(st.primes.begin(), st.primes.end());
    it = std::find(st.primes.begin(), st.primes.end(), w);
  }
  st.witness_index = static_cast<int>(it - st.primes.begin());

  const auto& q = st.primes;
  Seq s;
  for (int x = 2; x <= L; ++x)
    if (!std::binary_search(q.begin(), q.end(), x)) s.push_back(x);
  if (static_cast<int>(s.size()) != L - n) throw ConstructionFailure("|S_1| != L - n");
  st.stages.push_back({1, "initial", 0, s.size()});
  if (!coprime_below(s, q[0])) throw ConstructionFailure("S_1 invariant");

  for (int i = 1; i <= n - 2; ++i) {
    const int qi = q[i - 1];
    const int qnext = q[i];
    const std::size_t expected = static_cast<std::size_t>(L - n - i);
    if (qnext == qi + 2) {
      if (!contains(s, qi + 1)) throw ConstructionFailure("twin gap element missing");
      erase_value(s, qi + 1);
      if (s.size() != expected) throw ConstructionFailure("stage size mismatch");
      st.stages.push_back({i, "twin", qi + 1, s.size()});
    } else if (i == 1 || qi > q[i - 2] + 2) {
      repair_around(s, qi, 1, i, st.stages, expected, "isolated (mod 3)");
    } else {
      repair_around(s, qi, 3, i, st.stages, expected, "after twin (mod 5)");
    }
    if (!coprime_below(s, qnext)) {
      throw ConstructionFailure("S_" + std::to_string(i + 1) + " has a non-coprime pair below q_" +
                                std::to_string(i + 1));
    }
  }

  const int last = q.back();
  if (last != L) {
    const int gap = contains(s, last - 1) ? 1 : 3;
    repair_around(s, last, gap, n - 1, st.stages, static_cast<std::size_t>(L - 2 * n + 1),
                  gap == 1 ? "final (mod 3)" : "final after twin (mod 5)");
  }
  if (!all_adjacent_coprime(s)) throw ConstructionFailure("S_n has a non-coprime adjacent pair");
  st.sequence = std::move(s);
  return st;
}

namespace {

Labeling from_sides(const Seq& first, const Seq& second) {
  Seq all = first;
  all.insert(all.end(), second.begin(), second.end());
  return Labeling(std::move(all));
}

// P_m labels from the pipeline; nullopt when the odd-m patch cannot be
// applied in its printed form.
std::optional<Seq> path_side_from_pipeline(int m, const PathJoinState& st, std::string& route) {
  const auto& q = st.primes;
  const auto& s = st.sequence;
  const int L = st.target;
  if (q.front() > m + 1) {
    route = "short-circuit";
    Seq p(m);
    std::iota(p.begin(), p.end(), 2);
    return p;
  }
  route = "pipeline";
  if (q.back() == L || m % 2 == 0) {
    if (static_cast<int>(s.size()) < m) throw ConstructionFailure("S_n shorter than m");
    return Seq(s.begin(), s.begin() + m);
  }

  // Odd m with |S_n| = m - 1: prepend an even x = q_l +- 1 that was deleted.
  route = "pipeline+patch";
  for (int v = 2; v <= 14; ++v)
    if (s[v - 2] != v) return std::nullopt;
  const int ql = q[st.witness_index];
  int x = 0;
  if (!contains(s, ql - 1)) x = ql - 1;
  else if (!contains(s, ql + 1)) x = ql + 1;
  if (x < 15 || x % 11 == 0) return std::nullopt;

  Seq p{x, 11, 12, 5, 4, 3, 8, 7, 6, 13, 10, 9, 14};
  for (int y : s)
    if (y >= 15) p.push_back(y);
  p.push_back(2);
  if (static_cast<int>(p.size()) != m) return std::nullopt;
  return p;
}

PrValue exact_or_fail(const Graph& g, Labeling f, int expected, const char* what, std::string note) {
  detail::require_valid(g, f, what);
  if (f.max_label() != expected) {
    throw FormulaViolation(std::string(what) + ": max label " + std::to_string(f.max_label()) + " != " +
                           std::to_string(expected));
  }
  return PrValue::exact(std::move(f), Provenance::Construction, std::move(note));
}

PrValue by_search(const Graph& g, int k, const char* what, PathJoinTrace* trace) {
  auto w = detail::search_for_witness(g, k);
  if (!w) throw PreconditionViolation(std::string(what) + ": no construction and search did not find a labeling");
  if (trace) {
    trace->route = "search";
    trace->flagged = true;
  }
  return PrValue::exact(*w, Provenance::ExactSearch, "witness by search at the closed-form value");
}

// Simple path through m distinct labels of `pool` with coprime neighbours;
// depth-first, extending towards the label with the fewest free partners.
std::optional<Seq> coprime_path(const Seq& pool, int m, bool closed, std::uint64_t node_cap) {
  const int size = static_cast<int>(pool.size());
  if (size < m) return std::nullopt;
  std::vector<std::vector<int>> adj(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i != j && std::gcd(pool[i], pool[j]) == 1) adj[i].push_back(j);
  std::vector<char> used(size, 0);
  std::vector<int> path;
  std::uint64_t nodes = 0;
  auto free_degree = [&](int v) {
    return std::count_if(adj[v].begin(), adj[v].end(), [&](int w) { return !used[w]; });
  };
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == m) return !closed || std::gcd(pool[path.front()], pool[path.back()]) == 1;
    if (++nodes > node_cap) return false;
    std::vector<int> next;
    for (int w : adj[path.back()])
      if (!used[w]) next.push_back(w);
    std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return free_degree(a) < free_degree(b); });
    for (int w : next) {
      used[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (int start = 0; start < size; ++start) {
    used[start] = 1;
    path = {start};
    if (extend(extend)) {
      Seq out;
      for (int i : path) out.push_back(pool[i]);
      return out;
    }
    used[start] = 0;
  }
  return std::nullopt;
}

// Fallback for small n: P_n keeps 1 and n - 1 primes from (L/2, L], which
// are coprime to every other label, and P_m becomes a path search over the
// remaining labels.
std::optional<Labeling> prime_side_search(int m, int n, int L, bool closed) {
  auto tables = nt::ensure_sieve(static_cast<std::uint64_t>(L));
  Seq cand;
  for (int x = L; 2 * x > L; --x)
    if (tables->prime(x)) cand.push_back(x);
  if (static_cast<int>(cand.size()) < n - 1) return std::nullopt;
  std::vector<char> pick(cand.size(), 0);
  std::fill(pick.begin(), pick.begin() + (n - 1), 1);
  do {
    Seq small{1};
    Seq pool;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (pick[i]) small.push_back(cand[i]);
    for (int x = 2; x <= L; ++x)
      if (std::find(small.begin(), small.end(), x) == small.end()) pool.push_back(x);
    if (auto p = coprime_path(pool, m, closed, 200'000)) return from_sides(*p, small);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

PrValue search_small(const Graph& g, int m, int n, int value, PathJoinTrace* trace, bool closed = false) {
  if (auto f = prime_side_search(m, n, value, closed)) {
    if (trace) {
      trace->route = "prime-side search";
      trace->flagged = true;
    }
    return exact_or_fail(g, *f, value, "join", "witness by path search with prime labels on the short side");
  }
  return by_search(g, value, "join", trace);
}

PrValue path_join_normalized(int m, int n, PathJoinTrace* trace) {
  const Graph g = join(path(m), path(n));
  if (n == 1) {
    Seq p(m);
    std::iota(p.begin(), p.end(), 2);
    if (trace) trace->route = "trivial";
    return exact_or_fail(g, from_sides(p, {1}), m + 1, "P_m + P_1", "prime graph");
  }
  if (n == 5 && m <= 19) {
    if (trace) trace->route = "table";
    return path_join_p5_labeling(m);
  }
  const int threshold = path_join_threshold(n);
  if (n >= 5 && m < threshold) {
    if (auto v = special_join_values(m, n)) {
      if (trace) trace->route = "table";
      return *v;
    }
    throw PreconditionViolation("P_" + std::to_string(m) + " + P_" + std::to_string(n) +
                                " is below the guaranteed range m >= " + std::to_string(threshold));
  }

  const int value = path_join_formula(m, n);
  // When the largest primes all exceed m + 1, P_m takes 2..m+1 directly and
  // the residue condition mod 11 is not needed.
  Seq big;
  try {
    big = largest_primes(value, n - 1);
  } catch (const PreconditionViolation&) {
    if (n >= 5) throw;
    return by_search(g, value, "path join", trace);
  }
  if (big.front() > m + 1) {
    Seq p(m);
    std::iota(p.begin(), p.end(), 2);
    Seq small{1};
    small.insert(small.end(), big.begin(), big.end());
    if (trace) trace->route = "short-circuit";
    return exact_or_fail(g, from_sides(p, small), value, "path join", "short-circuit");
  }
  std::optional<PathJoinState> st;
  try {
    st = path_join_pipeline(m, n);
  } catch (const Error&) {
    if (n >= 5) throw;
    return search_small(g, m, n, value, trace);
  }
  std::string route;
  auto side = path_side_from_pipeline(m, *st, route);
  if (trace) {
    trace->route = route;
    trace->state = st;
  }
  if (!side) return search_small(g, m, n, value, trace);

  Seq small{1};
  small.insert(small.end(), st->primes.begin(), st->primes.end());
  Labeling f = from_sides(*side, small);
  if (!verify_coprime_labeling(g, f).ok() || f.max_label() != value) {
    if (n >= 5 && route != "pipeline+patch") throw ConstructionFailure("path-join pipeline produced an invalid labeling");
    return search_small(g, m, n, value, trace);
  }
  return PrValue::exact(std::move(f), Provenance::Construction, route);
}

}  // namespace

PrValue path_join_labeling(int m, int n, PathJoinTrace* trace) {
  if (m < 1 || n < 1) throw ParameterError("path joins need m, n >= 1");
  if (m >= n) return path_join_normalized(m, n, trace);
  PrValue v = path_join_normalized(n, m, trace);
  v.witness = detail::swap_join_sides(*v.witness, n);
  return v;
}

PrValue path_join_p5_labeling(int m) {
  if (m < 5) throw ParameterError("path_join_p5_labeling needs m >= 5");
  if (m >= 20) return path_join_labeling(m, 5);
  Seq small;
  Seq big;
  if (m == 5) {
    big = {2, 7, 4, 11, 8};
    small = {1, 3, 5, 9, 13};
  } else if (m <= 10) {
    small = {3, 5, 9, 1, 15};
    big = {2, 7, 4, 11, 8, 13, 14, 17, 16, 19};
  } else if (m <= 17) {
    small = {1, 11, 13, 17, 19};
    big = {2, 3, 4, 5, 6, 7, 8, 9, 14, 15, 16, 21, 10, 23, 12, 25, 24};
  } else {
    // The commonly quoted sequence for this case places 26 next to the
    // label 13 on P_5; this order avoids multiples of 13 entirely.
    small = {1, 13, 17, 19, 23};
    big = {12, 5, 6, 7, 18, 11, 24, 25, 2, 3, 4, 9, 8, 15, 16, 21, 10, 27, 14};
  }
  big.resize(m);
  return exact_or_fail(join(path(m), path(5)), from_sides(big, small), path_join_formula(m, 5), "P_m + P_5 table",
                       "table");
}

namespace {

struct SpecialEntry {
  int value;
  Seq big;    // P_m side (first m entries used)
  Seq small;  // P_n side
};

std::optional<SpecialEntry> printed_special(int m, int n) {
  if (n == 6 && m >= 6 && m <= 9) {
    return SpecialEntry{path_join_formula(m, 6), {2, 7, 4, 17, 8, 13, 14, 19, 16}, {3, 5, 9, 1, 15, 11}};
  }
  if (n == 6 && (m == 10 || m == 11)) return SpecialEntry{23, {}, {}};
  if (n == 7 && m == 7) return SpecialEntry{19, {2, 7, 4, 17, 8, 19, 16}, {3, 5, 9, 1, 15, 11, 13}};
  if (n == 7 && (m == 8 || m == 10)) {
    return SpecialEntry{m + 13, {2, 11, 4, 13, 8, 17, 16, 19, 22, 23}, {3, 5, 9, 7, 15, 1, 21}};
  }
  if (n == 7 && m == 9) return SpecialEntry{22, {}, {}};
  return std::nullopt;
}

std::mutex special_mu;
std::map<std::pair<int, int>, Labeling> special_cache;

}  // namespace

std::optional<PrValue> special_join_values(int m, int n) {
  if (m < n) {
    auto v = special_join_values(n, m);
    if (v) v->witness = detail::swap_join_sides(*v->witness, m);
    return v;
  }
  if (n == 5 && m >= 5 && m <= 19) return path_join_p5_labeling(m);
  auto entry = printed_special(m, n);
  if (!entry) return std::nullopt;
  const Graph g = join(path(m), path(n));
  if (!entry->big.empty()) {
    entry->big.resize(m);
    return exact_or_fail(g, from_sides(entry->big, entry->small), entry->value, "special join", "table");
  }

  std::lock_guard lock(special_mu);
  auto it = special_cache.find({m, n});
  if (it == special_cache.end()) {
    auto w = detail::search_for_witness(g, entry->value);
    if (!w) throw ConstructionFailure("no labeling found at the tabulated value");
    it = special_cache.emplace(std::pair{m, n}, *w).first;
  }
  if (it->second.max_label() != entry->value) throw FormulaViolation("search witness below tabulated value");
  return PrValue::exact(it->second, Provenance::ExactSearch,
                        "tabulated value; witness by search, minimality by exhaustive search below it");
}

// ---------------------------------------------------------------------------

std::string to_string(CycleVariant v) {
  switch (v) {
    case CycleVariant::CC: return "CC";
    case CycleVariant::CP: return "CP";
    case CycleVariant::PC: return "PC";
  }
  return "?";
}

int cycle_join_formula(int m, int n, CycleVariant v) {
  if (m % 2 == 0) return m + 2 * n - 1;
  return v == CycleVariant::PC ? m + 2 * n - 2 : m + 2 * n;
}

Graph cycle_join_graph(int m, int n, CycleVariant v) {
  switch (v) {
    case CycleVariant::CC: return join(cycle(m), cycle(n));
    case CycleVariant::CP: return join(cycle(m), path(n));
    case CycleVariant::PC: return join(path(m), cycle(n));
  }
  throw ParameterError("unknown variant");
}

namespace {

CycleVariant swapped(CycleVariant v) {
  if (v == CycleVariant::CP) return CycleVariant::PC;
  if (v == CycleVariant::PC) return CycleVariant::CP;
  return v;
}

// Cycle on the m-side for odd m: the path sequence S_n gains the label
// m + 2n, either appended, swapped for the last entry, or through the seam
// 2, m+2n, 4, 3, 5, 6 when the last odd entry shares a factor with m + 2n.
std::optional<Seq> odd_cycle_side(int m, const PathJoinState& st) {
  const Seq& s = st.sequence;
  const int top = st.target + 2;
  if (st.primes.back() != st.target) {
    if (static_cast<int>(s.size()) != m - 1) return std::nullopt;
    Seq c = s;
    c.push_back(top);
    return c;
  }
  if (static_cast<int>(s.size()) != m) return std::nullopt;
  const int before_last = s[m - 2];
  if (std::gcd(before_last, top) == 1) {
    Seq c = s;
    c.back() = top;
    return c;
  }
  if (m < 7 || !has_run(s, {2, 3, 4, 5, 6})) return std::nullopt;
  Seq c{2, top, 4, 3, 5, 6};
  c.insert(c.end(), s.begin() + 5, s.end() - 1);
  return c;
}

PrValue cycle_join_normalized(int m, int n, CycleVariant v, PathJoinTrace* trace) {
  const Graph g = cycle_join_graph(m, n, v);
  const int value = cycle_join_formula(m, n, v);
  if (n < 2 || m < path_join_threshold(n)) {
    throw PreconditionViolation("cycle join needs n >= 2 and m >= R_{n-1} - 2n + 1");
  }

  const bool odd_cycle = m % 2 == 1 && v != CycleVariant::PC;
  if (!odd_cycle) {
    PrValue path_value = path_join_labeling(m, n, trace);
    Labeling f = *path_value.witness;
    if (verify_coprime_labeling(g, f).ok() && f.max_label() == value) {
      return PrValue::exact(std::move(f), path_value.provenance, "path witness with endpoints joined");
    }
    return search_small(g, m, n, value, trace, v != CycleVariant::PC);
  }

  std::optional<PathJoinState> st;
  try {
    st = path_join_pipeline(m, n);
  } catch (const Error&) {
    if (n >= 5) throw;
    return search_small(g, m, n, value, trace, true);
  }
  if (trace) {
    trace->route = "pipeline+cycle";
    trace->state = st;
  }
  auto side = odd_cycle_side(m, *st);
  if (side) {
    Seq small{1};
    small.insert(small.end(), st->primes.begin(), st->primes.end());
    Labeling f = from_sides(*side, small);
    if (verify_coprime_labeling(g, f).ok() && f.max_label() == value) {
      return PrValue::exact(std::move(f), Provenance::Construction, "pipeline with cycle surgery");
    }
    if (n >= 5) throw ConstructionFailure("cycle surgery produced an invalid labeling");
  }
  return search_small(g, m, n, value, trace, true);
}

}  // namespace

PrValue cycle_join_labeling(int m, int n, CycleVariant v, PathJoinTrace* trace) {
  const bool first_cycle = v != CycleVariant::PC;
  const bool second_cycle = v != CycleVariant::CP;
  if ((first_cycle && m < 3) || (second_cycle && n < 3) || m < 1 || n < 1) {
    throw ParameterError("cycle factors need length >= 3");
  }
  if (m >= n) return cycle_join_normalized(m, n, v, trace);
  PrValue r = cycle_join_normalized(n, m, swapped(v), trace);
  r.witness = detail::swap_join_sides(*r.witness, n);
  return r;
}

}  // namespace coprime
