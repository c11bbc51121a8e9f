#include "bgk/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace bgk {

namespace {

const json& need(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("/") + key, "missing");
  return doc.at(key);
}

std::string str_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected string");
  return v.get<std::string>();
}

}  // namespace

RawGSet raw_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected object");
  if (doc.contains("schema") && doc.at("schema") != kSchema)
    throw SchemaError("/schema", "unsupported schema, expected \"bgk/1\"");
  RawGSet r;
  const json& he = need(doc, "half_edges");
  if (!he.is_array()) throw SchemaError("/half_edges", "expected array");
  for (size_t i = 0; i < he.size(); ++i) r.half_edges.push_back(str_at(he[i], "/half_edges/" + std::to_string(i)));
  const json& g = need(doc, "g");
  if (!g.is_object()) throw SchemaError("/g", "expected object");
  for (auto& [k, v] : g.items()) r.g[k] = str_at(v, "/g/" + k);
  const json& u = need(doc, "U");
  if (!u.is_array()) throw SchemaError("/U", "expected array");
  for (size_t i = 0; i < u.size(); ++i) r.U.push_back(str_at(u[i], "/U/" + std::to_string(i)));
  const json& t = need(doc, "tau");
  if (!t.is_object()) throw SchemaError("/tau", "expected object");
  for (auto& [k, v] : t.items()) r.tau[k] = str_at(v, "/tau/" + k);
  const json& d = need(doc, "degree");
  if (!d.is_object()) throw SchemaError("/degree", "expected object");
  for (auto& [k, v] : d.items()) {
    if (!v.is_number_integer()) throw SchemaError("/degree/" + k, "expected integer");
    r.degree[k] = v.get<long long>();
  }
  if (doc.contains("name")) r.name = str_at(doc.at("name"), "/name");
  if (doc.contains("comment")) r.comment = str_at(doc.at("comment"), "/comment");
  return r;
}

json to_json(const RawGSet& r) {
  json doc;
  doc["schema"] = kSchema;
  if (!r.name.empty()) doc["name"] = r.name;
  if (!r.comment.empty()) doc["comment"] = r.comment;
  doc["half_edges"] = r.half_edges;
  json g = json::object(), tau = json::object(), deg = json::object();
  for (auto& [k, v] : r.g) g[k] = v;
  for (auto& [k, v] : r.tau) tau[k] = v;
  for (auto& [k, v] : r.degree) deg[k] = v;
  doc["g"] = g;
  doc["U"] = r.U;
  doc["tau"] = tau;
  doc["degree"] = deg;
  return doc;
}

json to_json(const BrauerGSet& E) { return to_json(to_raw(E)); }

BrauerGSet gset_from_json(const json& doc) { return build(raw_from_json(doc)); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

std::string read_source(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

BrauerGSet load_gset(const std::string& path) { return gset_from_json(parse_text(read_source(path))); }

}  // namespace bgk
