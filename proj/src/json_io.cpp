#include "spexlab/json_io.hpp"

#include <numeric>

#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

const char* build_describe() { return SPEXLAB_GIT_DESCRIBE; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RationalPoly& p) {
  Json c = Json::array();
  for (const auto& q : p.coeffs()) c.push_back(to_string(q));
  return c;
}

Json to_json(const Interval& x) { return Json::array({x.lo, x.hi}); }

Json to_json(const SpectralResult& r, bool with_vector) {
  Json j{{"lambda", r.lambda}, {"residual", r.residual}, {"iterations", r.iterations}};
  if (with_vector) j["eigvec"] = r.eigvec;
  return j;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}, {"graph6", encode_graph6(g)}};
}

Json to_json(const PartitionedGraph& pg, const std::vector<std::string>& labels) {
  Json j = to_json(pg.graph);
  j["partition"] = pg.partition.classes();
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

PartitionedGraph partitioned_graph_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    Graph g(n, edges);
    std::vector<std::vector<Vertex>> classes;
    if (j.contains("partition")) {
      classes = j["partition"].get<std::vector<std::vector<Vertex>>>();
    } else {
      classes.emplace_back(n);
      std::iota(classes[0].begin(), classes[0].end(), Vertex{0});
    }
    return {std::move(g), Partition(n, std::move(classes))};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("annotated graph JSON: ") + e.what());
  }
}

Json to_json(const RestrictedSpace& s) {
  return {{"r", s.r},
          {"max_tree_order", s.max_tree_order},
          {"policy", to_string(s.policy)},
          {"part_slack", s.part_slack},
          {"edit_budget", s.edit_budget}};
}

Json to_json(const ExtremalReport& r, const ForbiddenFamily& family, bool timestamps) {
  static const char* kinds[] = {"ex", "spex", "restricted-ex"};
  Json j{{"kind", kinds[static_cast<int>(r.kind)]},
         {"n", r.n},
         {"family", r.family_id},
         {"extremal_set", r.extremal_set},
         {"restricted", r.restricted},
         {"candidates", r.candidates}};
  if (r.kind == ReportKind::Spex) {
    j["spex"] = r.spex_value;
    j["edges"] = r.ex_value;
    if (r.certificate) {
      j["certificate"] = {{"char_poly", to_json(r.certificate->char_poly)},
                          {"lo", to_string(r.certificate->lo)},
                          {"hi", to_string(r.certificate->hi)}};
    }
  } else {
    j["ex"] = r.ex_value;
  }
  if (!r.witnesses.empty()) {
    Json all = Json::array();
    for (const auto& ws : r.witnesses) {
      Json one = Json::array();
      for (const auto& w : ws) {
        const auto& name = w.member < family.names().size() ? family.names()[w.member] : std::string{};
        one.push_back({{"edge", {w.edge.u, w.edge.v}}, {"member", name}});
      }
      all.push_back(std::move(one));
    }
    j["witnesses"] = std::move(all);
  }
  if (r.space) j["space"] = to_json(*r.space);
  if (timestamps) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

Json to_json(const FitResult& f) {
  Json samples = Json::array();
  for (const auto& s : f.samples) samples.push_back({{"n", s.n}, {"delta", s.delta}, {"n_delta", double(s.n) * s.delta}});
  Json j{{"experiment", f.experiment},
         {"params", f.params},
         {"samples", std::move(samples)},
         {"first_order", f.first_order},
         {"error_estimate", f.error_estimate}};
  if (f.predicted) {
    j["predicted"] = *f.predicted;
    j["predicted_formula"] = f.predicted_formula;
  }
  return j;
}

Json to_json(const Thresholds& t) {
  return {{"r", t.r}, {"E", to_json(t.e)}, {"k", t.k}, {"c", to_string(t.c)}, {"c1", to_json(t.c1)}};
}

Json stamped(Json report) {
  report["schema"] = kSchemaVersion;
  report["build"] = build_describe();
  return report;
}

}  // namespace spexlab
