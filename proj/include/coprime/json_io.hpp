#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coprime/family.hpp"
#include "coprime/labeling.hpp"
#include "coprime/solver.hpp"

namespace coprime {

using Json = nlohmann::ordered_json;

// Labeling document:
//   {"graph": "<family expr>", "labels": [...], "max": k}
//   {"graph": "edges", "n": N, "edges": [[u, v], ...], "labels": [...], "max": k}
struct LabelingDocument {
  Graph graph;
  std::optional<FamilyExpr> expr;
  Labeling labeling;
  std::optional<int> declared_max;
};

Json labeling_to_json(const FamilyExpr& e, const Labeling& f);
Json labeling_to_json(const Graph& g, const Labeling& f);
// Throws ParameterError on a malformed document, ParseError on a bad expr.
LabelingDocument labeling_from_json(const Json& doc);

Json pr_value_to_json(const PrValue& v, bool certified);
Json exact_result_to_json(const ExactResult& r);

}  // namespace coprime
