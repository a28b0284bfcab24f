#pragma once

#include <string>

#include "ecgraph/core.hpp"
#include "json.hpp"

namespace ecg {

using Json = nlohmann::ordered_json;

enum class Format { Json, Dot };

// Throws ParseError naming the offending location.
Graph parse_graph(const std::string& text);
Graph graph_from_json(const Json& doc);
std::string serialize_graph(const Graph& g, Format format);
Json graph_to_json(const Graph& g);

Json trail_to_json(const Graph& g, const Trail& t, bool as_cycle = false);
Json factor_to_json(const Graph& g, const EulerianFactor& f);
Json factor_to_json(const Graph& g, const CycleFactor& f);

// Reads {"kind":"trail"|"cycle", "start":..., "edges":[...], "closed":...}; throws ParseError on dangling ids.
Trail trail_from_json(const Graph& g, const Json& doc);

}  // namespace ecg
