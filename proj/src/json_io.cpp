#include "albertson/json_io.hpp"

namespace albertson {

using nlohmann::json;

json to_json(const Rational &q) { return frac_str(q); }

json to_json(const LinearForm &f) {
  return json{{"slope", frac_str(f.slope)}, {"intercept", frac_str(f.intercept)}};
}

json to_json(const BoundValue &b) {
  return json{{"value", frac_str(b.value)},
              {"rule", rule_name(b.rule)},
              {"assumptions", b.assumptions}};
}

json to_json(const GraphAudit &a, const Graph &g) {
  return json{{"graph6", to_graph6(g)},
              {"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"chi", a.chi},
              {"r", a.r},
              {"critical", a.critical},
              {"excess", a.excess},
              {"witness_coloring", a.witness_coloring}};
}

json to_json(const CaseRecord &c) {
  json j{{"n_condition", c.n_condition.describe()},
         {"edge_bound", to_json(c.edge_bound)},
         {"edge_form", to_json(c.edge_form)},
         {"cr_rule", rule_name(c.cr_rule)},
         {"bound_as_linear", to_json(c.bound_as_linear)},
         {"binding_n", c.binding_n},
         {"min_value_exact", frac_str(c.min_value_exact)},
         {"min_over_case", c.min_over_case}};
  json pe = json::array(), pc = json::array();
  for (Rule r : c.paper_edge_rules) pe.push_back(rule_name(r));
  for (Rule r : c.paper_cr_rules) pc.push_back(rule_name(r));
  j["paper_edge_rules"] = pe;
  j["paper_cr_rules"] = pc;
  if (c.tail) {
    j["tail_certificate"] = json{{"edge_rule", rule_name(c.tail->edge_rule)},
                                 {"cr_rule", rule_name(c.tail->cr_rule)},
                                 {"form", to_json(c.tail->form)},
                                 {"slope", frac_str(c.tail->slope)},
                                 {"start", c.tail->start},
                                 {"value_at_start", frac_str(c.tail->value_at_start)},
                                 {"min_int", c.tail->min_int}};
  }
  return j;
}

json to_json(const AlbertsonReport &r) {
  json cases = json::array();
  for (const auto &c : r.cases) cases.push_back(to_json(c));
  return json{{"r", r.r},
              {"window", r.window},
              {"n_min", r.n_min},
              {"borodin_enabled", r.borodin_enabled},
              {"hypotheses", r.hypotheses},
              {"target", r.target},
              {"cases", cases},
              {"certified_min", r.certified_min},
              {"verdict", r.pass ? "PASS" : "FAIL"},
              {"diagnostics", r.diagnostics}};
}

json to_json(const LargeNReport &r) {
  json chain = json::array();
  for (const auto &[name, value] : r.chain)
    chain.push_back(json{{"name", name}, {"value", frac_str(value)}});
  return json{{"r", r.r},
              {"n_start", r.n_start},
              {"case", to_json(r.tail_case)},
              {"target", r.target},
              {"chain", chain},
              {"verdict", r.pass ? "PASS" : "FAIL"},
              {"diagnostics", r.diagnostics}};
}

json to_json(const CensusReport &r) {
  json found = json::object(), expected = json::object();
  for (std::size_t n = 0; n < r.found.size(); ++n)
    if (!r.found[n].empty()) found[std::to_string(n)] = r.found[n];
  for (std::size_t n = 0; n < r.expected.size(); ++n)
    if (!r.expected[n].empty()) expected[std::to_string(n)] = r.expected[n];
  return json{{"r", r.r},
              {"n_max", r.n_max},
              {"found", found},
              {"expected", expected},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
}

json to_json(const ExcessAuditReport &r) {
  json rows = json::array();
  for (const auto &row : r.rows)
    rows.push_back(json{{"graph6", row.graph6},
                        {"n", row.n},
                        {"m", row.m},
                        {"excess", row.excess},
                        {"complete", row.complete},
                        {"checked", row.checked},
                        {"violations", row.violations}});
  return json{{"r", r.r},
              {"n_max", r.n_max},
              {"rows", rows},
              {"violation_count", r.violation_count},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
}

json to_json(const SubdivisionCertificate &c) {
  json paths = json::array();
  for (const auto &[edge, path] : c.paths)
    paths.push_back(json{{"edge", {edge.first, edge.second}}, {"path", path}});
  return json{{"r", c.r}, {"branch_vertices", c.branch_vertices}, {"paths", paths}};
}

json to_json(const GraphAlbertsonAudit &a, const std::string &graph6) {
  return json{{"graph6", graph6},
              {"n", a.n},
              {"m", a.m},
              {"chi", a.chi},
              {"cr_lower", to_json(a.cr_lower)},
              {"target", a.target},
              {"target_proven", a.target_proven},
              {"contains_k_chi", a.contains_k_chi},
              {"certified", a.certified},
              {"note", a.note}};
}

json to_json(const Point &p) {
  return json{{"x", frac_str(p.x)}, {"y", frac_str(p.y)}};
}

json to_json(const Drawing &d) {
  json points = json::array();
  for (const auto &p : d.points) points.push_back(to_json(p));
  json routes = json::array();
  for (const auto &r : d.routes) {
    json line = json::array();
    for (const auto &p : r.polyline) line.push_back(to_json(p));
    routes.push_back(json{{"u", r.u}, {"v", r.v}, {"polyline", line}});
  }
  return json{{"graph6", to_graph6(d.host)},
              {"n", d.host.vertex_count()},
              {"points", points},
              {"routes", routes}};
}

json to_json(const CrossingCount &c) {
  json pairs = json::array();
  for (const auto &[key, count] : c.per_pair)
    pairs.push_back(json{{"edge_a", {key.first.first, key.first.second}},
                         {"edge_b", {key.second.first, key.second.second}},
                         {"crossings", count}});
  return json{{"total", c.total}, {"per_pair", pairs}};
}

json to_json(const ValidationResult &v) {
  json violations = json::array();
  for (const auto &viol : v.violations)
    violations.push_back(json{{"kind", violation_name(viol.kind)},
                              {"edge_a", {viol.edge_a.first, viol.edge_a.second}},
                              {"edge_b", {viol.edge_b.first, viol.edge_b.second}},
                              {"at", to_json(viol.where)},
                              {"detail", viol.detail}});
  return json{{"ok", v.ok}, {"violations", violations}};
}

Drawing drawing_from_json(const json &j) {
  Drawing d;
  d.host = parse_graph6(j.at("graph6").get<std::string>());
  for (const auto &p : j.at("points"))
    d.points.push_back({parse_frac(p.at("x").get<std::string>()),
                        parse_frac(p.at("y").get<std::string>())});
  for (const auto &r : j.at("routes")) {
    RoutedEdge e;
    e.u = r.at("u").get<int>();
    e.v = r.at("v").get<int>();
    for (const auto &p : r.at("polyline"))
      e.polyline.push_back({parse_frac(p.at("x").get<std::string>()),
                            parse_frac(p.at("y").get<std::string>())});
    d.routes.push_back(std::move(e));
  }
  return d;
}

}  // namespace albertson
