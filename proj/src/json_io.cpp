#include "metrize/json_io.hpp"

#include <cmath>

#include "metrize/error.hpp"

namespace metrize {

Json ext_to_json(ExtReal v) {
  if (!v.finite()) return "inf";
  return v.value();
}

ExtReal ext_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtReal::infinity();
    throw Error("ParseError", "expected a number or \"inf\"");
  }
  if (!j.is_number()) throw Error("ParseError", "expected a number or \"inf\"");
  return ExtReal(j.get<double>());
}

Json space_to_json(const DistanceSpace& x) {
  Json matrix = Json::array();
  for (int i = 0; i < x.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < x.size(); ++j) row.push_back(ext_to_json(x.d(i, j)));
    matrix.push_back(std::move(row));
  }
  return Json{{"labels", x.labels()}, {"matrix", std::move(matrix)}};
}

DistanceSpace space_from_json(const Json& j) {
  if (!j.contains("matrix")) throw Error("ParseError", "missing \"matrix\"");
  DistanceSpace::Matrix matrix;
  for (const auto& row : j.at("matrix")) {
    std::vector<ExtReal> r;
    for (const auto& cell : row) r.push_back(ext_from_json(cell));
    matrix.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return DistanceSpace::validate(std::move(labels), matrix);
}

DistanceSpace points_from_json(const Json& j) {
  auto points = j.at("points").get<std::vector<std::vector<double>>>();
  if (j.contains("dim")) {
    const auto dim = j.at("dim").get<std::size_t>();
    for (const auto& p : points)
      if (p.size() != dim) throw Error("DimensionMismatch", "point does not match \"dim\"");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return euclidean_import(points, std::move(labels));
}

DistanceSpace any_space_from_json(const Json& j) {
  if (j.contains("points")) return points_from_json(j);
  return space_from_json(j);
}

Json element_to_json(const Element& e, const std::string& functor_name) {
  Json out;
  if (!functor_name.empty()) out["functor"] = functor_name;
  switch (e.kind) {
    case ElementKind::Set: out["kind"] = "set"; break;
    case ElementKind::Tuple: out["kind"] = "tuple"; break;
    case ElementKind::Empty: out["kind"] = "empty"; break;
  }
  out["indices"] = e.idx;
  return out;
}

Element element_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<int> idx;
  if (j.contains("indices")) idx = j.at("indices").get<std::vector<int>>();
  if (kind == "set") return Element::set(std::move(idx));
  if (kind == "tuple") return Element::tuple(std::move(idx));
  if (kind == "empty") return Element::empty();
  throw Error("ParseError", "unknown element kind '" + kind + "'");
}

Json chain_to_json(const std::vector<ChainStep>& chain) {
  Json out = Json::array();
  for (const auto& step : chain)
    out.push_back(Json{{"carrier", element_to_json(step.carrier)},
                       {"from", step.from},
                       {"to", step.to}});
  return out;
}

Json group_function_to_json(const DistanceSpace& x, const FinSupportFunction& phi) {
  Json values = Json::object();
  for (int i : phi.support()) values[x.label(i)] = phi.normalized().values[i];
  return Json{{"modulus", phi.modulus}, {"values", std::move(values)}};
}

FinSupportFunction group_function_from_json(const DistanceSpace& x, const Json& j) {
  FinSupportFunction phi = FinSupportFunction::zero(j.at("modulus").get<int>(), x.size());
  if (j.contains("values"))
    for (const auto& [label, residue] : j.at("values").items())
      phi.values[x.index_of(label)] = residue.get<int>();
  return phi.normalized();
}

Json value_table_to_json(const AdmissibleFunction& f) {
  Json out = Json::array();
  for (double v : f.values)
    out.push_back(std::isfinite(v) ? Json(v) : Json("inf"));
  return out;
}

AdmissibleFunction value_table_from_json(const Json& j) {
  AdmissibleFunction f;
  for (const auto& cell : j) f.values.push_back(ext_from_json(cell).value());
  return f;
}

Json graph_to_json(const DistanceSpace& x, const SpanningGraph& g) {
  Json vertices = Json::array();
  for (int v : g.vertices) vertices.push_back(x.label(v));
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({x.label(u), x.label(v)}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json cover_to_json(const DistanceSpace& x, const CoverCertificate& cert) {
  Json blocks = Json::array();
  for (const auto& block : cert.blocks) {
    Json b = Json::array();
    for (int i : block) b.push_back(x.label(i));
    blocks.push_back(std::move(b));
  }
  return Json{{"epsilon", cert.epsilon}, {"blocks", std::move(blocks)}};
}

}  // namespace metrize
