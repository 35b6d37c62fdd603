// pr: command-line front end for the coprime labeling library.
//
// Exit codes: 0 success, 1 verification or certification failure, 2 usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/experiments.hpp"
#include "coprime/json_io.hpp"
#include "coprime/numtheory.hpp"

using namespace coprime;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("PR_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Source {
  Graph graph;
  std::optional<FamilyExpr> expr;
  std::string name;
};

// A graph argument is an edge-list file if such a file exists, otherwise a
// family expression.
Source load_graph(const std::string& arg) {
  Source s;
  s.name = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    s.graph = read_edge_list(in);
    return s;
  }
  s.expr = parse_family(arg);
  s.graph = build(*s.expr);
  return s;
}

bool in_window(const FamilyExpr& e) {
  using K = FamilyExpr::Kind;
  if (e.kind != K::Join || e.left().kind != K::Path || e.right().kind != K::Path) return false;
  return in_exceptional_window(e.left().a, e.right().a);
}

void print_value(const std::string& format, const std::string& name, const std::string& method, const PrValue& v,
                 bool certified, Json extra = Json::object()) {
  if (format == "json") {
    Json j;
    j["graph"] = name;
    j["method"] = method;
    const Json value = pr_value_to_json(v, certified);
    for (const auto& [k, x] : value.items()) j[k] = x;
    for (const auto& [k, x] : extra.items()) j[k] = x;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    ExperimentReport r;
    ReportRow row;
    row.family = name;
    row.pr = v.value;
    row.provenance = std::string(to_string(v.provenance));
    row.certified = certified;
    r.rows.push_back(row);
    std::cout << report_to_csv(r);
  } else {
    std::cout << name << ": pr " << (v.kind == PrKind::Exact ? "= " : v.kind == PrKind::UpperBound ? "<= " : ">= ")
              << v.value << " (" << to_string(v.provenance) << (certified ? ", certified" : ", not certified") << ")";
    if (!v.note.empty()) std::cout << "  " << v.note;
    std::cout << '\n';
    if (v.witness) {
      std::cout << "labels:";
      for (int l : v.witness->labels()) std::cout << ' ' << l;
      std::cout << '\n';
    }
    if (!extra.empty()) std::cout << extra.dump() << '\n';
  }
}

void emit(const std::string& format, const ExperimentReport& r) {
  if (format == "json") std::cout << report_to_json(r);
  else if (format == "csv") std::cout << report_to_csv(r);
  else std::cout << report_to_text(r);
}

void write_witness(const std::string& path, const Source& src, const PrValue& v) {
  if (path.empty() || !v.witness) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << (src.expr ? labeling_to_json(*src.expr, *v.witness) : labeling_to_json(src.graph, *v.witness)).dump(2)
      << '\n';
}

SearchConfig make_config(std::optional<int> max_k, std::optional<std::uint64_t> nodes, std::optional<double> seconds,
                         unsigned threads) {
  SearchConfig cfg;
  cfg.max_k = max_k;
  cfg.node_limit = nodes;
  cfg.time_limit = seconds;
  cfg.parallel_width = threads;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum coprime labelings: constructions, exact search, and tables"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  unsigned threads = default_threads();
  std::optional<int> max_k;
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--max-k", max_k, "Largest label budget to try");
    sub->add_option("--node-limit", node_limit, "Search node cap");
    sub->add_option("--time-limit", time_limit, "Wall-clock cap in seconds");
    sub->add_option("--threads", threads, "Worker threads (default from PR_THREADS)")->check(CLI::PositiveNumber);
  };

  std::string expr_text;
  std::string method = "auto";
  std::string witness_path;
  auto* compute = app.add_subcommand("compute", "pr of a family expression");
  compute->add_option("expr", expr_text, "Family expression, e.g. join(P(7),P(7))")->required();
  compute->add_option("--method", method, "formula, construct, exact or auto")
      ->check(CLI::IsMember({"formula", "construct", "exact", "auto"}));
  compute->add_option("--witness", witness_path, "Write the witness labeling as JSON");
  add_search_flags(compute);

  std::string labeling_path;
  auto* verify = app.add_subcommand("verify", "Check a labeling JSON document");
  verify->add_option("labeling", labeling_path, "Labeling JSON file")->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for a graph");
  bounds->add_option("graph", expr_text, "Family expression or edge-list file")->required();

  auto* exact = app.add_subcommand("exact", "Exact pr by exhaustive search");
  exact->add_option("graph", expr_text, "Family expression or edge-list file")->required();
  exact->add_option("--witness", witness_path, "Write the witness labeling as JSON");
  add_search_flags(exact);

  std::string table_kind;
  int n_max = 40, m_max = 8, n_lo = 2, n_hi = 7, m_hi = 12, exact_max = 18, n_sweep = 200;
  auto* table = app.add_subcommand("table", "Reproduce a table");
  table->add_option("kind", table_kind, "corona, pathjoin or conjecture1")
      ->required()
      ->check(CLI::IsMember({"corona", "pathjoin", "conjecture1"}));
  table->add_option("--n-max", n_max, "corona: largest n");
  table->add_option("--m-max", m_max, "corona, conjecture1: largest m");
  table->add_option("--n-lo", n_lo, "pathjoin: smallest n");
  table->add_option("--n-hi", n_hi, "pathjoin: largest n");
  table->add_option("--m-hi", m_hi, "pathjoin: largest m");
  table->add_option("--exact-max-vertices", exact_max, "pathjoin: exact search up to this many vertices");
  table->add_option("--n-sweep", n_sweep, "conjecture1: n range");
  add_search_flags(table);

  std::uint64_t x_max = 1331;
  auto* lemma = app.add_subcommand("lemma11", "Check the prime-in-(x,2x] avoiding +-1 mod 11 claim");
  lemma->add_option("--x-max", x_max, "Check every integer x in [1, x-max]");

  int rn = 10, trials = 20;
  double rp = 0.5;
  std::uint64_t seed = 1;
  auto* random = app.add_subcommand("random", "Exact pr on seeded G(n,p) samples");
  random->add_option("--n", rn, "Vertices")->check(CLI::PositiveNumber);
  random->add_option("--p", rp, "Edge probability");
  random->add_option("--trials", trials, "Trials")->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "Base seed; trial i uses seed + i");
  add_search_flags(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      Source src = load_graph(expr_text);
      const SearchConfig cfg = make_config(max_k, node_limit, time_limit, threads);
      std::string used = method;
      if (!src.expr) {
        if (method == "formula" || method == "construct") throw UsageError("--method " + method + " needs a family expression");
        used = "exact";
      } else if (method == "auto") {
        used = in_window(*src.expr) ? "exact" : pr_formula(*src.expr).value ? "formula" : "construct";
      }

      if (used == "formula" || used == "construct") {
        FormulaResult r = used == "formula" ? pr_formula(*src.expr) : construct(*src.expr);
        if (r.value && (method != "auto" || r.value->kind == PrKind::Exact)) {
          write_witness(witness_path, src, *r.value);
          print_value(format, src.name, used, *r.value, r.value->kind == PrKind::Exact, {{"reason", r.reason}});
          return kOk;
        }
        if (method != "auto") {
          std::cerr << "not covered: " << r.reason << '\n';
          return kFailed;
        }
        used = "exact";
      }
      ExactResult x = min_coprime_number_exact(src.graph, cfg);
      write_witness(witness_path, src, x.value);
      print_value(format, src.name, used, x.value, x.certified, {{"nodes", x.nodes}});
      return x.certified ? kOk : kFailed;
    }

    if (*verify) {
      std::ifstream in(labeling_path);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::parse_error& err) {
        throw UsageError(std::string("invalid JSON: ") + err.what());
      }
      LabelingDocument d = labeling_from_json(doc);
      Verdict v = verify_coprime_labeling(d.graph, d.labeling);
      const bool max_ok = !d.declared_max || *d.declared_max == d.labeling.max_label();
      if (format == "json") {
        Json j;
        j["ok"] = v.ok() && max_ok;
        j["max"] = d.labeling.max_label();
        Json list = Json::array();
        for (const auto& x : v.violations) list.push_back(describe(x));
        if (!max_ok) list.push_back("declared max " + std::to_string(*d.declared_max) + " differs from actual");
        j["violations"] = std::move(list);
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& x : v.violations) std::cout << describe(x) << '\n';
        if (!max_ok) std::cout << "declared max " << *d.declared_max << " differs from actual " << d.labeling.max_label() << '\n';
        std::cout << (v.ok() && max_ok ? "ok" : "invalid") << ", max " << d.labeling.max_label() << '\n';
      }
      return v.ok() && max_ok ? kOk : kFailed;
    }

    if (*bounds) {
      Source src = load_graph(expr_text);
      const Graph& g = src.graph;
      Json j;
      j["graph"] = src.name;
      j["vertices"] = g.order();
      j["edges"] = g.size();
      auto alpha = independence_number(g);
      j["alpha"] = *alpha;
      j["omega"] = *clique_number(g);
      std::vector<PrValue> all;
      all.push_back(lower_bound_independence(g, *alpha));
      j["independence_bound"] = all.back().value;
      auto lemma13 = lower_bound_prime_multiples(g, *alpha);
      j["prime_multiple_bound"] = lemma13.bound ? Json(lemma13.bound->value) : Json(nullptr);
      if (!lemma13.bound) j["prime_multiple_reason"] = lemma13.reason;
      else all.push_back(*lemma13.bound);
      const int n = g.order();
      auto complete_witness = pr_formula(complete_expr(n)).value;
      all.push_back(monotonicity_bound(g, complete(n), *complete_witness));
      j["complete_graph_upper_bound"] = all.back().value;
      if (src.expr) {
        auto c = construct(*src.expr);
        if (c.value) all.push_back(*c.value);
        j["construction"] = c.value ? pr_value_to_json(*c.value, c.value->kind == PrKind::Exact) : Json(nullptr);
        j["construction_reason"] = c.reason;
      }
      check_bounds_consistent(all);
      if (format == "json") {
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << '\n';
      }
      return kOk;
    }

    if (*exact) {
      Source src = load_graph(expr_text);
      const SearchConfig cfg = make_config(max_k, node_limit, time_limit, threads);
      ExactResult x = min_coprime_number_exact(src.graph, cfg);
      write_witness(witness_path, src, x.value);
      if (format == "json") {
        Json j;
        j["graph"] = src.name;
        const Json result = exact_result_to_json(x);
        for (const auto& [k, v] : result.items()) j[k] = v;
        std::cout << j.dump(2) << '\n';
      } else {
        print_value(format, src.name, "exact", x.value, x.certified, {{"nodes", x.nodes}});
      }
      return x.certified ? kOk : kFailed;
    }

    if (*table) {
      ExperimentReport r;
      if (table_kind == "corona") {
        r = corona_table(n_max, m_max);
      } else if (table_kind == "conjecture1") {
        r = conjecture1_table(m_max, n_sweep);
      } else {
        PathJoinSweep o;
        o.n_lo = n_lo;
        o.n_hi = n_hi;
        o.m_hi = m_hi;
        o.exact_max_vertices = exact_max;
        o.search = make_config(max_k, node_limit, time_limit, threads);
        r = path_join_sweep(o);
      }
      emit(format, r);
      return kOk;
    }

    if (*lemma) {
      ExperimentReport r = lemma11_report(x_max);
      emit(format, r);
      return r.aggregates["failures"].get<std::size_t>() == 0 ? kOk : kFailed;
    }

    if (*random) {
      ExperimentReport r = random_pr_experiment(rn, rp, trials, seed, make_config(max_k, node_limit, time_limit, threads));
      emit(format, r);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "bad parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const DomainMismatch& e) {
    std::cerr << "labeling does not match graph: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
