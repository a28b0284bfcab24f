#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "ecgraph/core.hpp"

namespace ecg {

enum class Exec { Serial, Parallel };

struct PairQuery {
  int u = -1;
  int v = -1;
  Colour start = Colour::Red;
  bool operator==(const PairQuery&) const = default;
};

struct ConnectivityReport {
  bool connected = true;
  std::optional<PairQuery> counterexample;
  // Filled only on request: (u, v, index_of(start)) -> path or trail.
  std::map<std::tuple<int, int, int>, Trail> witnesses;
};

// Simple alternating x-y path with prescribed first and last colours.
std::optional<Trail> alternating_path(const Graph& g, int x, int y, Colour start, Colour end);
std::optional<Trail> alternating_path(const Graph& g, int x, int y, Colour start);
// Alternating x-y trail (edges distinct, vertices may repeat) with prescribed first and last colours.
std::optional<Trail> alternating_trail(const Graph& g, int x, int y, Colour start, Colour end);
std::optional<Trail> alternating_trail(const Graph& g, int x, int y, Colour start);

// reach[y][index_of(end)]: an alternating path (trail) from x starting with `start` reaches y ending with `end`.
std::vector<std::array<bool, 2>> path_reach(const Graph& g, int x, Colour start);
std::vector<std::array<bool, 2>> trail_reach(const Graph& g, int x, Colour start);

ConnectivityReport is_colour_connected(const Graph& g, Exec exec = Exec::Parallel, bool witnesses = false);
ConnectivityReport is_trail_colour_connected(const Graph& g, Exec exec = Exec::Parallel, bool witnesses = false);

// Classes of a complete multipartite graph (at least two), or none.
std::optional<std::vector<std::vector<int>>> multipartite_classes(const Graph& g);
bool is_complete_bipartite(const Graph& g, std::vector<int>* side = nullptr);

// Shortens an open alternating trail of a complete multipartite graph to a path with the same
// endpoints and first colour.
Trail trail_to_path_complete_multipartite(const Graph& g, const Trail& t);

}  // namespace ecg
