#include "ecgraph/io.hpp"

#include <sstream>

namespace ecg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

Graph graph_from_json(const Json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  Graph g;
  const Json& vs = require(doc, "vertices", "$");
  if (!vs.is_array()) fail("$.vertices", "expected an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    std::string where = "$.vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_string()) fail(where, "expected a string");
    try {
      g.add_vertex(vs[i].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  const Json& es = require(doc, "edges", "$");
  if (!es.is_array()) fail("$.edges", "expected an array");
  for (size_t i = 0; i < es.size(); ++i) {
    std::string where = "$.edges[" + std::to_string(i) + "]";
    if (!es[i].is_object()) fail(where, "expected an object");
    std::string id = require_string(es[i], "id", where);
    std::string u = require_string(es[i], "u", where);
    std::string v = require_string(es[i], "v", where);
    std::string col = require_string(es[i], "colour", where);
    auto c = colour_from_name(col);
    if (!c) fail(where + ".colour", "unknown colour token '" + col + "'");
    auto ui = g.find_vertex(u), vi = g.find_vertex(v);
    if (!ui) fail(where + ".u", "undeclared vertex '" + u + "'");
    if (!vi) fail(where + ".v", "undeclared vertex '" + v + "'");
    if (*ui == *vi) fail(where, "self-loop at '" + u + "'");
    try {
      g.add_edge(id, *ui, *vi, *c);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& n : g.names()) doc["vertices"].push_back(n);
  doc["edges"] = Json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back(
        {{"id", e.id}, {"u", g.name(e.u)}, {"v", g.name(e.v)}, {"colour", std::string(colour_name(e.colour))}});
  return doc;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string serialize_graph(const Graph& g, Format format) {
  if (format == Format::Json) return graph_to_json(g).dump(2);
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& n : g.names()) os << "  " << dot_quote(n) << ";\n";
  for (const Edge& e : g.edges())
    os << "  " << dot_quote(g.name(e.u)) << " -- " << dot_quote(g.name(e.v)) << " [id=" << dot_quote(e.id)
       << ", color=" << colour_name(e.colour) << "];\n";
  os << "}\n";
  return os.str();
}

Json trail_to_json(const Graph& g, const Trail& t, bool as_cycle) {
  Json j;
  j["kind"] = as_cycle ? "cycle" : "trail";
  j["start"] = g.name(t.start);
  j["closed"] = t.closed;
  j["edges"] = Json::array();
  for (int e : t.edges) j["edges"].push_back(g.edge(e).id);
  j["vertices"] = Json::array();
  for (int v : trail_vertices(g, t)) j["vertices"].push_back(g.name(v));
  return j;
}

Json factor_to_json(const Graph& g, const EulerianFactor& f) {
  Json j;
  j["kind"] = "eulerian_factor";
  j["parts"] = Json::array();
  for (const auto& p : f.parts) {
    Json part;
    part["vertices"] = Json::array();
    for (int v : p.vertices) part["vertices"].push_back(g.name(v));
    part["trail"] = trail_to_json(g, p.trail);
    j["parts"].push_back(std::move(part));
  }
  return j;
}

Json factor_to_json(const Graph& g, const CycleFactor& f) {
  Json j;
  j["kind"] = "cycle_factor";
  j["cycles"] = Json::array();
  for (const auto& c : f.cycles) j["cycles"].push_back(trail_to_json(g, c, true));
  return j;
}

Trail trail_from_json(const Graph& g, const Json& doc) {
  std::string start = require_string(doc, "start", "$");
  auto s = g.find_vertex(start);
  if (!s) fail("$.start", "dangling vertex id '" + start + "'");
  Trail t;
  t.start = *s;
  t.closed = doc.value("closed", false) || doc.value("kind", std::string()) == "cycle";
  const Json& es = require(doc, "edges", "$");
  if (!es.is_array()) fail("$.edges", "expected an array");
  for (size_t i = 0; i < es.size(); ++i) {
    if (!es[i].is_string()) fail("$.edges[" + std::to_string(i) + "]", "expected a string");
    auto e = g.find_edge(es[i].get<std::string>());
    if (!e) fail("$.edges[" + std::to_string(i) + "]", "dangling edge id '" + es[i].get<std::string>() + "'");
    t.edges.push_back(*e);
  }
  return t;
}

}  // namespace ecg
