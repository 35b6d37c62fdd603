#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"
#include "coprime/solver.hpp"

using namespace coprime;

namespace {

int p(int i) { return i == 0 ? 1 : static_cast<int>(nt::nth_prime(static_cast<std::uint64_t>(i))); }

bool has_run(const std::vector<int>& s, std::vector<int> run) {
  return std::search(s.begin(), s.end(), run.begin(), run.end()) != s.end();
}

}  // namespace

TEST_CASE("corona labelings") {
  CHECK(corona_labeling(8, 1).value == 17);
  CHECK(corona_labeling(16, 2).value == 48);
  CHECK(corona_labeling(17, 2).value == 53);
  for (int m = 1; m <= 6; ++m) CHECK(corona_labeling(1, m).value == m + 1);
  auto v = corona_labeling(6, 3);
  const Graph g = corona(complete(6), empty(3));
  REQUIRE(v.witness);
  CHECK(verify_coprime_labeling(g, *v.witness).ok());
  // hubs carry 1, p_1, ..., p_5
  for (int i = 0; i < 6; ++i) CHECK((*v.witness)[i] == p(i));
}

TEST_CASE("corona counting certificate") {
  CHECK(corona_counting_certificate(10, 3).all_passed());
  auto c = corona_counting_certificate(4, 3);
  REQUIRE(c.stages.size() == 3);
  CHECK(c.stages[1].i == 2);
  CHECK(c.stages[1].proof_case == "p_i <= n, i = 2");
  CHECK(c.stages[1].multiples == 21);
  CHECK(c.stages[1].vertex_count == 16);
  auto big = corona_counting_certificate(100, 3);
  CHECK(big.all_passed());
  CHECK(big.stages[98].proof_case == "p_i > n");
  for (int n = 4; n <= 60; ++n)
    for (int m = 3; m <= 10; ++m) REQUIRE(corona_counting_certificate(n, m).all_passed());
  CHECK_THROWS_AS(corona_counting_certificate(3, 3), PreconditionViolation);
}

TEST_CASE("corona prime condition") {
  CHECK(corona_prime_condition(16, 2));
  CHECK(!corona_prime_condition(17, 2));
  CHECK(corona_prime_condition(7, 1));
  CHECK(!corona_prime_condition(8, 1));
  for (int m = 1; m <= 10; ++m) CHECK(corona_prime_condition(1, m));
}

TEST_CASE("path joins") {
  CHECK(path_join_labeling(21, 2).value == 23);
  CHECK(path_join_labeling(20, 5).value == 29);
  CHECK(path_join_labeling(41, 6).value == 51);
  CHECK(path_join_threshold(6) == 30);
  auto v = path_join_labeling(5, 5);
  CHECK(v.value == 13);
  CHECK(v.witness->labels() == std::vector<int>{2, 7, 4, 11, 8, 1, 3, 5, 9, 13});
  // swapped orientation
  auto s = path_join_labeling(5, 21);
  CHECK(s.value == 29);
  CHECK(verify_coprime_labeling(join(path(5), path(21)), *s.witness).ok());
  CHECK(path_join_labeling(12, 1).value == 13);
  CHECK_THROWS_AS(path_join_labeling(12, 6), PreconditionViolation);
}

TEST_CASE("pipeline stage invariants") {
  for (int n = 5; n <= 14; ++n) {
    const int t = path_join_threshold(n);
    for (int m = std::max(n, t); m <= t + 30; ++m) {
      auto st = path_join_pipeline(m, n);
      const int L = st.target;
      CHECK(L == path_join_formula(m, n));
      REQUIRE(static_cast<int>(st.primes.size()) == n - 1);
      for (int q : st.primes) {
        REQUIRE(nt::is_prime(static_cast<std::uint64_t>(q)));
        REQUIRE(2 * q > L);
        REQUIRE(q <= L);
      }
      REQUIRE(std::is_sorted(st.primes.begin(), st.primes.end()));
      const int ql = st.primes[st.witness_index];
      CHECK(ql % 11 != 1);
      CHECK(ql % 11 != 10);
      for (int j = 0; j < st.witness_index; ++j) CHECK((st.primes[j] % 11 == 1 || st.primes[j] % 11 == 10));
      // |S_i| = L - n - i + 1; stage record i holds S_{i+1}
      for (std::size_t k = 1; k < st.stages.size(); ++k) {
        const auto& r = st.stages[k];
        REQUIRE(static_cast<int>(r.size_after) == L - n - (r.i + 1) + 1);
      }
      for (std::size_t k = 0; k + 1 < st.sequence.size(); ++k)
        REQUIRE(std::gcd(st.sequence[k], st.sequence[k + 1]) == 1);
    }
  }
}

TEST_CASE("tables for P_m + P_5") {
  for (int m = 5; m <= 19; ++m) {
    auto v = path_join_p5_labeling(m);
    CHECK(v.value == (m % 2 ? m + 8 : m + 9));
    CHECK(verify_coprime_labeling(join(path(m), path(5)), *v.witness).ok());
  }
  auto ten = path_join_p5_labeling(10);
  CHECK(std::vector<int>(ten.witness->labels().begin(), ten.witness->labels().begin() + 10) ==
        std::vector<int>{2, 7, 4, 11, 8, 13, 14, 17, 16, 19});
  auto eighteen = path_join_p5_labeling(18);
  CHECK(eighteen.value == 27);
  CHECK(std::vector<int>(eighteen.witness->labels().end() - 5, eighteen.witness->labels().end()) ==
        std::vector<int>{1, 13, 17, 19, 23});
  CHECK(path_join_p5_labeling(25).value == 33);
  CHECK_THROWS_AS(path_join_p5_labeling(4), ParameterError);
}

TEST_CASE("small exceptional cases") {
  auto seven = special_join_values(7, 7);
  REQUIRE(seven);
  CHECK(seven->value == 19);
  CHECK(seven->witness->labels() == std::vector<int>{2, 7, 4, 17, 8, 19, 16, 3, 5, 9, 1, 15, 11, 13});
  for (auto [m, n, want] : std::vector<std::tuple<int, int, int>>{
           {6, 6, 17}, {7, 6, 17}, {8, 6, 19}, {9, 6, 19}, {10, 6, 23}, {11, 6, 23}, {8, 7, 21}, {9, 7, 22}, {10, 7, 23}}) {
    auto v = special_join_values(m, n);
    REQUIRE(v);
    CHECK(v->value == want);
    CHECK(verify_coprime_labeling(join(path(m), path(n)), *v->witness).ok());
  }
  CHECK(!special_join_values(12, 6));
  CHECK(!special_join_values(11, 8));
  CHECK(in_exceptional_window(10, 6));
  CHECK(!in_exceptional_window(30, 6));
  CHECK(!in_exceptional_window(10, 5));
}

TEST_CASE("cycle joins") {
  CHECK(cycle_join_labeling(30, 5, CycleVariant::CC).value == 39);
  CHECK(cycle_join_labeling(29, 5, CycleVariant::CC).value == 39);
  CHECK(cycle_join_labeling(29, 5, CycleVariant::CP).value == 39);
  CHECK(cycle_join_labeling(29, 5, CycleVariant::PC).value == 37);
  for (int m = 20; m <= 40; ++m)
    for (auto v : {CycleVariant::CC, CycleVariant::CP, CycleVariant::PC}) {
      auto r = cycle_join_labeling(m, 5, v);
      REQUIRE(r.value == cycle_join_formula(m, 5, v));
      REQUIRE(verify_coprime_labeling(cycle_join_graph(m, 5, v), *r.witness).ok());
    }
}

TEST_CASE("cycle surgery when 3 divides m + 2n") {
  // m = 23, n = 5: the last prime is L = 31 and the closing label 33
  // needs the seam 2, 33, 4, 3, 5, 6.
  PathJoinTrace t;
  auto r = cycle_join_labeling(23, 5, CycleVariant::CC, &t);
  CHECK(r.value == 33);
  CHECK(has_run(r.witness->labels(), {2, 33, 4, 3, 5, 6}));
  // m = 43, n = 7: the last prime 53 is below L = 55, so 57 is appended
  PathJoinTrace t2;
  auto r2 = cycle_join_labeling(43, 7, CycleVariant::CC, &t2);
  CHECK(r2.value == 57);
  REQUIRE(t2.state);
  CHECK(t2.state->primes.back() == 53);
  CHECK(r2.witness->labels()[42] == 57);
}

TEST_CASE("complete bipartite upper bound") {
  CHECK_THROWS_AS(complete_bipartite_labeling(2, 2), PreconditionViolation);
  auto v = complete_bipartite_labeling(5, 20);
  CHECK(v.kind == PrKind::UpperBound);
  CHECK(v.value == 29);
  std::vector<int> small(v.witness->labels().begin(), v.witness->labels().begin() + 5);
  CHECK(small == std::vector<int>{1, 29, 23, 19, 17});
  CHECK(verify_coprime_labeling(complete_bipartite(5, 20), *v.witness).ok());
  CHECK_THROWS_AS(complete_bipartite_labeling(5, 25), PreconditionViolation);
}

TEST_CASE("closed forms") {
  CHECK(pr_formula(complete_expr(9)).value->value == 19);
  auto window = pr_formula(join_expr(path_expr(10), path_expr(6)));
  CHECK(!window.value);
  CHECK(window.reason.find("exceptional window") != std::string::npos);
  auto c = pr_formula(corona_expr(complete_expr(20), empty_expr(4)));
  CHECK(c.value->value == 100);
  CHECK(c.value->provenance == Provenance::Formula);
  CHECK(pr_formula(corona_expr(complete_expr(17), empty_expr(2))).value->value == 53);
  CHECK(!pr_formula(bipartite_expr(5, 20)).value);
  CHECK(construct(bipartite_expr(5, 20)).value->kind == PrKind::UpperBound);
  CHECK(construct(join_expr(path_expr(10), path_expr(6))).value->value == 23);
}

TEST_CASE("closed forms respect the independence bound") {
  // alpha(P_m + P_n) = ceil(m/2), alpha(C_m + C_n) = floor(m/2) for m >= n
  for (int n = 2; n <= 8; ++n) {
    const int t = std::max(n, path_join_threshold(n));
    for (int m = t; m <= t + 25; ++m) {
      auto v = pr_formula(join_expr(path_expr(m), path_expr(n)));
      REQUIRE(v.value);
      const int a = (m + 1) / 2;
      REQUIRE(v.value->value >= lower_bound_independence(join(path(m), path(n)), a).value);
      REQUIRE(verify_coprime_labeling(join(path(m), path(n)), *v.value->witness).ok());
      if (n >= 3 && m >= 3) {
        auto c = pr_formula(join_expr(cycle_expr(m), cycle_expr(n)));
        REQUIRE(c.value);
        REQUIRE(c.value->value >= lower_bound_independence(join(cycle(m), cycle(n)), m / 2).value);
      }
    }
  }
}

TEST_CASE("constructions match exact search on small instances") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n; m + n <= 14; ++m) {
      auto v = path_join_labeling(m, n);
      auto x = min_coprime_number_exact(join(path(m), path(n)));
      REQUIRE(x.certified);
      REQUIRE(v.value == x.value.value);
    }
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto x = min_coprime_number_exact(corona(complete(n), empty(m)));
      REQUIRE(x.value.value == corona_formula(n, m));
    }
}
