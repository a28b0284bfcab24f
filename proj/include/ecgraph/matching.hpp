#pragma once

#include <utility>
#include <vector>

namespace ecg {

// Uncoloured multigraph used as input to the matcher. Edge ids are positions in `edges`.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int add_vertex() { return n++; }
  int add_edge(int u, int v) {
    edges.emplace_back(u, v);
    return static_cast<int>(edges.size()) - 1;
  }
};

struct Matching {
  std::vector<int> edges;  // edge ids, ascending
  std::vector<int> mate;   // mate[v] or -1
  int size() const { return static_cast<int>(edges.size()); }
  bool perfect() const;
};

// Maximum-cardinality matching. Deterministic: vertices and edges are scanned in declaration order.
Matching maximum_matching(const PlainGraph& g);
bool has_perfect_matching(const PlainGraph& g);

// Vertices joined to `root` by an even-length alternating path with respect to `mate`
// (the root itself included). `root` must be exposed and `mate` must admit no augmenting path from it.
std::vector<char> even_reachable(const PlainGraph& g, const std::vector<int>& mate, int root);

}  // namespace ecg
