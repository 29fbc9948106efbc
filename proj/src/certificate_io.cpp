#include "hyperclique/certificate_io.hpp"

#include "hyperclique/errors.hpp"

namespace hyperclique {

using nlohmann::json;

json vertex_set_to_json(const VertexSet& s) { return s.to_vector(); }

VertexSet vertex_set_from_json(const json& a) {
  if (!a.is_array()) throw InputError("vertex set must be an array");
  VertexSet s;
  for (const json& v : a) {
    if (!v.is_number_integer()) throw InputError("vertex must be an integer");
    int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw InputError("vertex " + std::to_string(x) + " out of range");
    if (s.contains(x)) throw InputError("vertex " + std::to_string(x) + " repeated");
    s.insert(x);
  }
  return s;
}

namespace {

json sets_to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const VertexSet& s : sets) out.push_back(vertex_set_to_json(s));
  return out;
}

std::vector<VertexSet> sets_from_json(const json& a, const char* field) {
  if (!a.is_array()) throw InputError(std::string("\"") + field + "\" must be an array");
  std::vector<VertexSet> out;
  for (const json& s : a) out.push_back(vertex_set_from_json(s));
  return out;
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw InputError(std::string("certificate lacks \"") + name + "\"");
  return doc.at(name);
}

}  // namespace

json certificate_to_json(const ExtractionResult& res, const CertificateReport& report) {
  json doc;
  doc["schema_version"] = 1;
  doc["k"] = res.k;
  doc["n"] = res.chain.n;
  doc["C"] = res.chain.C;
  doc["cliques"] = sets_to_json(res.chain.cliques);
  doc["parents"] = res.tree.parents();
  doc["A"] = sets_to_json(res.chain.A);
  doc["B"] = sets_to_json(res.chain.B);
  json paths = json::array();
  for (const PathDecomposition& d : res.certificate) {
    json p;
    p["node"] = d.node;
    p["path"] = d.path;
    p["S"] = sets_to_json(d.S);
    p["U"] = vertex_set_to_json(d.U);
    p["W"] = d.W ? vertex_set_to_json(*d.W) : json(nullptr);
    paths.push_back(std::move(p));
  }
  doc["paths"] = std::move(paths);
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"violations", c.violations}});
  doc["checks"] = std::move(checks);
  doc["ok"] = report.ok();
  return doc;
}

ExtractionResult certificate_from_json(const json& doc) {
  try {
    ExtractionResult res;
    res.k = field(doc, "k").get<int>();
    res.chain.n = field(doc, "n").get<int>();
    res.chain.C = field(doc, "C").get<int>();
    res.chain.cliques = sets_from_json(field(doc, "cliques"), "cliques");
    res.chain.A = sets_from_json(field(doc, "A"), "A");
    res.chain.B = sets_from_json(field(doc, "B"), "B");
    res.tree = OrderedTree(field(doc, "parents").get<std::vector<int>>());
    res.params = LayeredParams{res.k - 1, static_cast<std::uint64_t>(res.chain.C < 0 ? 0 : res.chain.C)};
    for (const json& p : field(doc, "paths")) {
      PathDecomposition d;
      d.node = field(p, "node").get<int>();
      d.path = field(p, "path").get<std::vector<int>>();
      d.S = sets_from_json(field(p, "S"), "S");
      d.U = vertex_set_from_json(field(p, "U"));
      const json& w = field(p, "W");
      if (!w.is_null()) d.W = vertex_set_from_json(w);
      res.certificate.push_back(std::move(d));
    }
    return res;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace hyperclique
