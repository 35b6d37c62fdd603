#include "coprime/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

#include "coprime/errors.hpp"

namespace coprime {

void SearchConfig::validate() const {
  if (max_k && *max_k < 1) throw ParameterError("max_k must be positive");
  if (node_limit && *node_limit == 0) throw ParameterError("node_limit must be positive");
  if (time_limit && !(*time_limit > 0)) throw ParameterError("time_limit must be positive");
}

namespace {

// Fixed-width set over labels 0..255.
struct LabelSet {
  std::array<std::uint64_t, 4> w{};

  void set(int l) { w[l >> 6] |= std::uint64_t{1} << (l & 63); }
  void reset(int l) { w[l >> 6] &= ~(std::uint64_t{1} << (l & 63)); }
  bool test(int l) const { return (w[l >> 6] >> (l & 63)) & 1; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  LabelSet& operator&=(const LabelSet& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  LabelSet& operator|=(const LabelSet& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend LabelSet operator&(LabelSet a, const LabelSet& b) { return a &= b; }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

// Read-only data shared by all workers of one search.
struct Problem {
  const Graph& g;
  int n;
  int k;
  std::optional<int> alpha;
  PruningRules rules;
  std::vector<LabelSet> coprime;  // coprime[l] = { j <= k : gcd(j, l) = 1 }
  std::vector<int> label_class;   // interchangeable-label class id
  LabelSet odd_labels;
  LabelSet even_labels;
  std::vector<Vertex> static_order;

  Problem(const Graph& graph, int budget, std::optional<int> a, PruningRules r)
      : g(graph), n(graph.order()), k(budget), alpha(a), rules(r), coprime(budget + 1), label_class(budget + 1) {
    for (int l = 1; l <= k; ++l) {
      for (int j = 1; j <= k; ++j)
        if (std::gcd(l, j) == 1) coprime[l].set(j);
      (l % 2 ? odd_labels : even_labels).set(l);
    }
    // Class key: bitmask of primes <= k/2 dividing l. Larger primes divide
    // no other label <= k.
    std::vector<int> small_primes;
    for (int p = 2; p <= k / 2; ++p) {
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime) small_primes.push_back(p);
    }
    std::map<std::uint64_t, int> ids;
    for (int l = 1; l <= k; ++l) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < small_primes.size(); ++i)
        if (l % small_primes[i] == 0) key |= std::uint64_t{1} << i;
      label_class[l] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
    static_order.resize(n);
    std::iota(static_order.begin(), static_order.end(), 0);
    std::stable_sort(static_order.begin(), static_order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }
};

struct State {
  std::vector<int> label;  // 0 = unlabeled
  std::vector<LabelSet> domain;
  int evens_used = 0;
  int unlabeled = 0;
};

struct Shared {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> limit_hit{false};
  std::atomic<std::size_t> found_task{SIZE_MAX};
};

enum class Outcome { Found, Exhausted, Aborted };

class Worker {
 public:
  Worker(const Problem& p, Shared& shared) : p_(p), shared_(shared) {}

  State root() const {
    State s;
    s.label.assign(p_.n, 0);
    LabelSet all;
    for (int l = 1; l <= p_.k; ++l) all.set(l);
    s.domain.assign(p_.n, all);
    s.unlabeled = p_.n;
    return s;
  }

  // Labels v with l and propagates; false when a pruning rule fires.
  bool assign(State& s, Vertex v, int l) const {
    s.label[v] = l;
    --s.unlabeled;
    if (l % 2 == 0) ++s.evens_used;
    for (Vertex w = 0; w < p_.n; ++w)
      if (!s.label[w]) s.domain[w].reset(l);
    for (Vertex w : p_.g.neighbors(v))
      if (!s.label[w]) s.domain[w] &= p_.coprime[l];

    const auto& r = p_.rules;
    if (r.parity && p_.alpha && s.evens_used > *p_.alpha) return false;
    if (!r.wipeout && !r.capacity && !(r.parity && p_.alpha)) return true;

    LabelSet pool;
    for (Vertex w = 0; w < p_.n; ++w) {
      if (s.label[w]) continue;
      if (r.wipeout && s.domain[w].empty()) return false;
      pool |= s.domain[w];
    }
    if (r.capacity && pool.count() < s.unlabeled) return false;
    if (r.parity && p_.alpha) {
      int odd = (pool & p_.odd_labels).count();
      int even = std::min((pool & p_.even_labels).count(), *p_.alpha - s.evens_used);
      if (s.unlabeled > odd + even) return false;
    }
    return true;
  }

  Vertex select(const State& s) const {
    if (!p_.rules.dynamic_ordering) {
      for (Vertex v : p_.static_order)
        if (!s.label[v]) return v;
      return -1;
    }
    Vertex best = -1;
    int best_count = 0;
    for (Vertex v = 0; v < p_.n; ++v) {
      if (s.label[v]) continue;
      int c = s.domain[v].count();
      if (best < 0 || c < best_count || (c == best_count && p_.g.degree(v) > p_.g.degree(best))) {
        best = v;
        best_count = c;
      }
    }
    return best;
  }

  std::vector<int> candidates(const State& s, Vertex v) const {
    std::vector<int> out;
    std::vector<char> seen;
    if (p_.rules.value_symmetry) seen.assign(p_.k + 1, 0);
    s.domain[v].for_each([&](int l) {
      if (p_.rules.value_symmetry) {
        if (seen[p_.label_class[l]]) return;
        seen[p_.label_class[l]] = 1;
      }
      out.push_back(l);
    });
    return out;
  }

  Outcome search(const State& start, std::size_t task) {
    task_ = task;
    stack_.assign(p_.n + 1, State{});
    stack_[0] = start;
    Outcome o = dfs(0);
    flush();
    return o;
  }

  const std::vector<int>& solution() const { return solution_; }

 private:
  bool should_stop() {
    if (++local_nodes_ < 1024) return false;
    flush();
    if (shared_.limit_hit.load(std::memory_order_relaxed)) return true;
    if (shared_.found_task.load(std::memory_order_relaxed) < task_) return true;
    if (shared_.node_limit && shared_.nodes.load() > *shared_.node_limit) {
      shared_.limit_hit = true;
      return true;
    }
    if (shared_.deadline && std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.limit_hit = true;
      return true;
    }
    return false;
  }

  void flush() {
    shared_.nodes += local_nodes_;
    local_nodes_ = 0;
  }

  Outcome dfs(int depth) {
    if (should_stop()) return Outcome::Aborted;
    const State& s = stack_[depth];
    Vertex v = select(s);
    if (v < 0) {
      solution_ = s.label;
      return Outcome::Found;
    }
    for (int l : candidates(s, v)) {
      State& child = stack_[depth + 1];
      child = stack_[depth];
      if (!assign(child, v, l)) continue;
      Outcome o = dfs(depth + 1);
      if (o != Outcome::Exhausted) return o;
    }
    return Outcome::Exhausted;
  }

  const Problem& p_;
  Shared& shared_;
  std::vector<State> stack_;
  std::vector<int> solution_;
  std::size_t task_ = 0;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

LabelSearchResult exists_labeling_with_max(const Graph& g, int k, const SearchConfig& cfg, std::optional<int> alpha) {
  cfg.validate();
  if (k > kMaxSearchLabel) {
    throw ResourceLimitError("label budget " + std::to_string(k) + " exceeds search cap " +
                             std::to_string(kMaxSearchLabel));
  }
  LabelSearchResult result;
  if (g.order() == 0) {
    result.status = SearchStatus::Found;
    result.labeling = Labeling{};
    return result;
  }
  if (k < g.order()) {
    result.status = SearchStatus::Absent;
    return result;
  }

  Problem problem(g, k, alpha, cfg.pruning);
  Shared shared;
  shared.node_limit = cfg.node_limit;
  if (cfg.time_limit) {
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*cfg.time_limit));
  }

  // Root split: each candidate label of the first branching vertex is an
  // independent task. The answer comes from the lowest-index task that finds
  // a labeling, so the witness does not depend on scheduling.
  Worker root_worker(problem, shared);
  State root = root_worker.root();
  Vertex v = root_worker.select(root);
  std::vector<int> labels = root_worker.candidates(root, v);

  std::vector<State> starts;
  std::vector<std::size_t> task_of_start;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    State s = root;
    if (root_worker.assign(s, v, labels[i])) {
      starts.push_back(std::move(s));
      task_of_start.push_back(i);
    }
  }

  std::vector<Outcome> outcomes(starts.size(), Outcome::Exhausted);
  std::vector<std::vector<int>> solutions(starts.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    Worker w(problem, shared);
    for (;;) {
      std::size_t i = next++;
      if (i >= starts.size()) return;
      if (shared.found_task.load() < i || shared.limit_hit.load()) {
        outcomes[i] = Outcome::Aborted;
        continue;
      }
      outcomes[i] = w.search(starts[i], i);
      if (outcomes[i] == Outcome::Found) {
        solutions[i] = w.solution();
        std::size_t cur = shared.found_task.load();
        while (i < cur && !shared.found_task.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  unsigned width = std::max(1u, cfg.parallel_width);
  if (width == 1 || starts.size() <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(width, starts.size()); ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  result.nodes = shared.nodes.load() + 1;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (outcomes[i] == Outcome::Found) {
      result.status = SearchStatus::Found;
      result.labeling = Labeling(solutions[i]);
      if (!verify_coprime_labeling(g, *result.labeling).ok()) {
        throw ConstructionFailure("search produced an invalid labeling");
      }
      return result;
    }
  }
  bool all_exhausted = std::all_of(outcomes.begin(), outcomes.end(), [](Outcome o) { return o == Outcome::Exhausted; });
  result.status = all_exhausted ? SearchStatus::Absent : SearchStatus::Inconclusive;
  return result;
}

ExactResult min_coprime_number_exact(const Graph& g, const SearchConfig& cfg) {
  cfg.validate();
  ExactResult out;
  const int n = g.order();
  if (n == 0) throw ParameterError("pr of the empty graph is undefined");

  out.alpha = independence_number(g, cfg.node_limit);
  std::vector<PrValue> lower{PrValue::lower(n, Provenance::IndependenceBound, "|V(G)|")};
  if (out.alpha) {
    lower.push_back(lower_bound_independence(g, *out.alpha));
    if (auto b = lower_bound_prime_multiples(g, *out.alpha); b.bound) lower.push_back(*b.bound);
  }
  const auto strongest =
      *std::max_element(lower.begin(), lower.end(), [](const PrValue& a, const PrValue& b) { return a.value < b.value; });
  const int start = strongest.value;
  if (start > 1) out.excluded.push_back({start - 1, BudgetCertificate::Reason::LowerBound, 0});

  for (int k = start;; ++k) {
    if ((cfg.max_k && k > *cfg.max_k) || k > kMaxSearchLabel) {
      out.value = PrValue::lower(k, Provenance::ExactSearch, "label cap reached before a labeling was found");
      return out;
    }
    auto r = exists_labeling_with_max(g, k, cfg, out.alpha);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::Found) {
      out.certified = true;
      out.value = PrValue::exact(*r.labeling, Provenance::ExactSearch,
                                 "budgets below " + std::to_string(k) + " excluded");
      if (out.value.value != k) {
        throw CertificationError("witness below an excluded budget for k=" + std::to_string(k));
      }
      return out;
    }
    if (r.status == SearchStatus::Inconclusive) {
      out.value = PrValue::lower(k, Provenance::ExactSearch, "search limit hit at budget " + std::to_string(k));
      return out;
    }
    out.excluded.push_back({k, BudgetCertificate::Reason::Exhaustive, r.nodes});
  }
}

}  // namespace coprime
