#include "ecgraph/structure.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace ecg {

MClosedCheck is_m_closed(const Graph& g) {
  ColourMatrix cm(g);
  int n = g.n();
  for (int y = 0; y < n; ++y)
    for (Colour c : {Colour::Red, Colour::Blue})
      for (int x = 0; x < n; ++x) {
        if (x == y || !cm.has(x, y, c)) continue;
        for (int z = x + 1; z < n; ++z)
          if (z != y && cm.has(y, z, c) && !cm.adjacent(x, z)) return {false, std::make_tuple(x, y, z)};
      }
  return {};
}

Graph m_closure(const Graph& g, ClosurePolicy policy, std::uint64_t seed) {
  Graph out = g;
  std::mt19937_64 rng(seed);
  int n = g.n();
  ColourMatrix cm(g);
  std::vector<char> adj(static_cast<size_t>(n) * n, 0);
  std::vector<std::vector<char>> has(2, std::vector<char>(static_cast<size_t>(n) * n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      adj[u * n + v] = cm.adjacent(u, v);
      for (int c = 0; c < 2; ++c) has[c][u * n + v] = cm.has(u, v, colour_at(c));
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (int y = 0; y < n; ++y)
      for (int c = 0; c < 2; ++c)
        for (int x = 0; x < n; ++x) {
          if (x == y || !has[c][x * n + y]) continue;
          for (int z = x + 1; z < n; ++z) {
            if (z == y || !has[c][y * n + z] || adj[x * n + z]) continue;
            Colour col = policy == ClosurePolicy::AlwaysRed    ? Colour::Red
                         : policy == ClosurePolicy::AlwaysBlue ? Colour::Blue
                                                               : colour_at(static_cast<int>(rng() & 1));
            out.add_edge(x, z, col);
            adj[x * n + z] = adj[z * n + x] = 1;
            has[index_of(col)][x * n + z] = has[index_of(col)][z * n + x] = 1;
            changed = true;
          }
        }
  }
  return out;
}

SimilarityPartition similarity_partition(const Graph& g) {
  ColourMatrix cm(g);
  int n = g.n();
  SimilarityPartition sp;
  sp.block_of.assign(n, -1);
  std::map<std::vector<int>, int> by_row;
  for (int v = 0; v < n; ++v) {
    std::vector<int> row(2 * n);
    for (int w = 0; w < n; ++w) {
      row[2 * w] = cm.count(v, w, Colour::Red);
      row[2 * w + 1] = cm.count(v, w, Colour::Blue);
    }
    auto [it, fresh] = by_row.emplace(std::move(row), static_cast<int>(sp.blocks.size()));
    if (fresh) sp.blocks.emplace_back();
    sp.blocks[it->second].push_back(v);
    sp.block_of[v] = it->second;
  }
  for (const auto& b : sp.blocks) {
    sp.quotient.add_vertex(g.name(b.front()));
    sp.multiplicity.push_back(static_cast<int>(b.size()));
  }
  // Edges between representatives carry the common multiset; reuse their ids.
  for (const Edge& e : g.edges()) {
    int bu = sp.block_of[e.u], bv = sp.block_of[e.v];
    if (sp.blocks[bu].front() == e.u && sp.blocks[bv].front() == e.v) sp.quotient.add_edge(e.id, bu, bv, e.colour);
  }
  return sp;
}

BlowUp blow_up(const Graph& g, const std::vector<int>& multiplicities) {
  if (static_cast<int>(multiplicities.size()) != g.n()) throw std::invalid_argument("one multiplicity per vertex");
  BlowUp b;
  std::vector<std::vector<int>> copies(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (multiplicities[v] < 1) throw std::invalid_argument("multiplicities must be positive");
    for (int i = 0; i < multiplicities[v]; ++i) {
      copies[v].push_back(b.graph.add_vertex(g.name(v) + "#" + std::to_string(i + 1)));
      b.origin.emplace_back(v, i);
    }
  }
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    for (size_t i = 0; i < copies[ed.u].size(); ++i)
      for (size_t j = 0; j < copies[ed.v].size(); ++j) {
        b.graph.add_edge(ed.id + "#" + std::to_string(i + 1) + "." + std::to_string(j + 1), copies[ed.u][i],
                         copies[ed.v][j], ed.colour);
        b.edge_origin.push_back(e);
      }
  }
  return b;
}

std::optional<Extension> is_extension_of_m_closed(const Graph& g) {
  auto sp = similarity_partition(g);
  if (!is_m_closed(sp.quotient).closed) return std::nullopt;
  return Extension{std::move(sp.quotient), std::move(sp.multiplicity), std::move(sp.blocks)};
}

}  // namespace ecg
