#include "coprime/json_io.hpp"

#include "coprime/errors.hpp"

namespace coprime {

Json labeling_to_json(const FamilyExpr& e, const Labeling& f) {
  Json j;
  j["graph"] = to_string(e);
  j["labels"] = f.labels();
  j["max"] = f.max_label();
  return j;
}

Json labeling_to_json(const Graph& g, const Labeling& f) {
  Json j;
  j["graph"] = "edges";
  j["n"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["labels"] = f.labels();
  j["max"] = f.max_label();
  return j;
}

LabelingDocument labeling_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParameterError("labeling document must be a JSON object");
  if (!doc.contains("graph") || !doc["graph"].is_string()) throw ParameterError("missing string field \"graph\"");
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw ParameterError("missing array field \"labels\"");

  LabelingDocument out;
  const auto graph = doc["graph"].get<std::string>();
  if (graph == "edges") {
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParameterError("missing integer field \"n\"");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParameterError("missing array field \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParameterError("each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    out.graph = Graph(doc["n"].get<int>(), edges);
  } else {
    out.expr = parse_family(graph);
    out.graph = build(*out.expr);
  }

  std::vector<int> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_number_integer()) throw ParameterError("labels must be integers");
    labels.push_back(l.get<int>());
  }
  out.labeling = Labeling(std::move(labels));
  if (doc.contains("max")) {
    if (!doc["max"].is_number_integer()) throw ParameterError("\"max\" must be an integer");
    out.declared_max = doc["max"].get<int>();
  }
  return out;
}

Json pr_value_to_json(const PrValue& v, bool certified) {
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  j["value"] = v.value;
  j["provenance"] = std::string(to_string(v.provenance));
  j["certified"] = certified;
  j["note"] = v.note;
  j["witness"] = v.witness ? Json(v.witness->labels()) : Json(nullptr);
  return j;
}

Json exact_result_to_json(const ExactResult& r) {
  Json j = pr_value_to_json(r.value, r.certified);
  j["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
  Json excluded = Json::array();
  for (const auto& c : r.excluded) {
    excluded.push_back({{"k", c.k},
                        {"reason", c.reason == BudgetCertificate::Reason::LowerBound ? "lower-bound" : "exhaustive"},
                        {"nodes", c.nodes}});
  }
  j["excluded"] = std::move(excluded);
  j["nodes"] = r.nodes;
  return j;
}

}  // namespace coprime
