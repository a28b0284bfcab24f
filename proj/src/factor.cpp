#include "ecgraph/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ecg {

FactorGadget build_factor_gadget(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v, Colour::Red) == 0 || g.degree(v, Colour::Blue) == 0) throw NoFactor(v);
  FactorGadget fg;
  int n = g.n();
  fg.r.resize(n);
  fg.r2.resize(n);
  fg.b.resize(n);
  fg.b2.resize(n);
  auto add = [&](int u, int v, FactorGadget::Kind k, int origin, int owner) {
    fg.h.add_edge(u, v);
    fg.kind.push_back(k);
    fg.origin.push_back(origin);
    fg.owner.push_back(owner);
  };
  for (int x = 0; x < n; ++x) {
    int r = g.degree(x, Colour::Red), b = g.degree(x, Colour::Blue);
    for (int i = 0; i < r; ++i) fg.r[x].push_back(fg.h.add_vertex());
    for (int i = 0; i + 1 < r; ++i) fg.r2[x].push_back(fg.h.add_vertex());
    for (int i = 0; i + 1 < b; ++i) fg.b2[x].push_back(fg.h.add_vertex());
    for (int i = 0; i < b; ++i) fg.b[x].push_back(fg.h.add_vertex());
    for (int a : fg.r[x])
      for (int c : fg.r2[x]) add(a, c, FactorGadget::Kind::RToR2, -1, x);
    for (int a : fg.r2[x])
      for (int c : fg.b2[x]) add(a, c, FactorGadget::Kind::R2ToB2, -1, x);
    for (int a : fg.b2[x])
      for (int c : fg.b[x]) add(a, c, FactorGadget::Kind::B2ToB, -1, x);
  }
  std::vector<int> next_r(n, 0), next_b(n, 0);
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.colour == Colour::Red)
      add(fg.r[ed.u][next_r[ed.u]++], fg.r[ed.v][next_r[ed.v]++], FactorGadget::Kind::External, e, -1);
    else
      add(fg.b[ed.u][next_b[ed.u]++], fg.b[ed.v][next_b[ed.v]++], FactorGadget::Kind::External, e, -1);
  }
  return fg;
}

std::optional<FactorDetail> eulerian_factor_detail(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  FactorGadget fg;
  try {
    fg = build_factor_gadget(g);
  } catch (const NoFactor&) {
    return std::nullopt;
  }
  Matching mm = maximum_matching(fg.h);
  if (!mm.perfect()) return std::nullopt;
  FactorDetail d;
  d.r2b2_edges.assign(g.n(), 0);
  for (int e : mm.edges) {
    if (fg.kind[e] == FactorGadget::Kind::External) d.selected.push_back(fg.origin[e]);
    if (fg.kind[e] == FactorGadget::Kind::R2ToB2) ++d.r2b2_edges[fg.owner[e]];
  }
  std::sort(d.selected.begin(), d.selected.end());
  // Components of the selected sub-multigraph.
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e : d.selected) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  std::map<int, std::vector<int>> verts, edges;
  for (int v = 0; v < g.n(); ++v) verts[find(v)].push_back(v);
  for (int e : d.selected) edges[find(g.edge(e).u)].push_back(e);
  std::vector<std::pair<int, int>> order;
  for (auto& [root, vs] : verts) order.emplace_back(vs.front(), root);
  std::sort(order.begin(), order.end());
  for (auto [first, root] : order) {
    auto tour = alternating_euler_tour(g, edges[root]);
    if (!tour) throw InternalError("selected factor edges are not balanced");
    d.factor.parts.push_back(FactorPart{verts[root], *tour});
  }
  return d;
}

std::optional<EulerianFactor> eulerian_factor(const Graph& g) {
  auto d = eulerian_factor_detail(g);
  if (!d) return std::nullopt;
  return std::move(d->factor);
}

namespace {

std::vector<Trail> cycles_from_selection(const Graph& g, const std::vector<std::array<int, 2>>& pick) {
  std::vector<Trail> out;
  std::vector<char> done(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (done[s]) continue;
    Trail t;
    t.start = s;
    t.closed = true;
    int cur = s;
    Colour c = Colour::Red;
    do {
      done[cur] = 1;
      int e = pick[cur][index_of(c)];
      t.edges.push_back(e);
      cur = g.other_end(e, cur);
      c = other(c);
    } while (cur != s);
    out.push_back(std::move(t));
  }
  return out;
}

bool has_digon(const std::vector<Trail>& cs) {
  return std::any_of(cs.begin(), cs.end(), [](const Trail& t) { return t.edges.size() == 2; });
}

// Exhaustive digon-free cycle factor: a cycle through the lowest uncovered vertex, then recurse.
bool digon_free_search(const Graph& g, std::vector<char>& covered, std::vector<Trail>& acc) {
  int s = 0;
  while (s < g.n() && covered[s]) ++s;
  if (s == g.n()) return true;
  std::vector<int> path_edges;
  std::function<bool(int, Colour)> extend = [&](int cur, Colour want) -> bool {
    for (int e : g.incident(cur)) {
      if (g.edge(e).colour != want) continue;
      int w = g.other_end(e, cur);
      if (w == s && want == Colour::Blue && path_edges.size() >= 3) {
        path_edges.push_back(e);
        acc.push_back(Trail{s, path_edges, true});
        if (digon_free_search(g, covered, acc)) return true;
        acc.pop_back();
        path_edges.pop_back();
        continue;
      }
      if (covered[w] || w < s) continue;
      covered[w] = 1;
      path_edges.push_back(e);
      if (extend(w, other(want))) return true;
      path_edges.pop_back();
      covered[w] = 0;
    }
    return false;
  };
  covered[s] = 1;
  if (extend(s, Colour::Red)) return true;
  covered[s] = 0;
  return false;
}

}  // namespace

std::optional<CycleFactor> alternating_cycle_factor(const Graph& g, bool forbid_digons, int max_n_exhaustive) {
  if (g.n() == 0) return std::nullopt;
  PlainGraph aux;
  aux.n = 2 * g.n();
  for (const Edge& e : g.edges()) {
    int c = index_of(e.colour);
    aux.add_edge(2 * e.u + c, 2 * e.v + c);
  }
  Matching mm = maximum_matching(aux);
  if (!mm.perfect()) return std::nullopt;
  std::vector<std::array<int, 2>> pick(g.n(), {-1, -1});
  for (int k : mm.edges) {
    const Edge& e = g.edge(k);
    pick[e.u][index_of(e.colour)] = k;
    pick[e.v][index_of(e.colour)] = k;
  }
  CycleFactor f{cycles_from_selection(g, pick)};
  if (!forbid_digons || !has_digon(f.cycles)) return f;
  if (g.n() > max_n_exhaustive) throw BudgetExceeded("digon-free cycle factor search exceeds the vertex budget");
  std::vector<char> covered(g.n(), 0);
  std::vector<Trail> acc;
  if (!digon_free_search(g, covered, acc)) return std::nullopt;
  return CycleFactor{acc};
}

std::optional<Trail> alternating_euler_tour(const Graph& g, const std::vector<int>& edge_subset, int* bad_vertex) {
  if (bad_vertex) *bad_vertex = -1;
  if (edge_subset.empty()) return std::nullopt;
  std::vector<int> es = edge_subset;
  std::sort(es.begin(), es.end());
  std::map<int, std::array<std::vector<int>, 2>> at;  // vertex -> red/blue edge lists
  for (int e : es) {
    at[g.edge(e).u][index_of(g.edge(e).colour)].push_back(e);
    at[g.edge(e).v][index_of(g.edge(e).colour)].push_back(e);
  }
  for (auto& [v, lists] : at)
    if (lists[0].size() != lists[1].size()) {
      if (bad_vertex) *bad_vertex = v;
      return std::nullopt;
    }
  // Edge end = 2*pos + side (side 0 at edge.u); next[end] = the paired end at the same vertex.
  int m = static_cast<int>(es.size());
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[es[i]] = i;
  auto end_of = [&](int e, int v) { return 2 * pos[e] + (g.edge(e).u == v ? 0 : 1); };
  std::vector<int> partner(2 * m, -1);
  // Each vertex pairs its i-th red edge with its i-th blue edge.
  std::vector<std::pair<int, int>> pairs_at;  // (red end, blue end)
  std::vector<int> pair_vertex;
  for (auto& [v, lists] : at)
    for (size_t i = 0; i < lists[0].size(); ++i) {
      int a = end_of(lists[0][i], v), b = end_of(lists[1][i], v);
      partner[a] = b;
      partner[b] = a;
      pairs_at.emplace_back(a, b);
      pair_vertex.push_back(v);
    }
  // Label the closed trails of the transition system.
  std::vector<int> circuit(m, -1);
  int ncirc = 0;
  for (int i = 0; i < m; ++i) {
    if (circuit[i] >= 0) continue;
    int end = 2 * i;
    while (circuit[end / 2] < 0) {
      circuit[end / 2] = ncirc;
      int far = end ^ 1;
      end = partner[far];
    }
    ++ncirc;
  }
  std::vector<int> dsu(ncirc);
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };
  // Splice: at a shared vertex swap the blue ends of two pairs from different circuits.
  size_t p = 0;
  while (p < pairs_at.size()) {
    size_t q = p;
    while (q < pairs_at.size() && pair_vertex[q] == pair_vertex[p]) ++q;
    for (size_t i = p + 1; i < q; ++i) {
      int ci = find(circuit[pairs_at[i].first / 2]), c0 = find(circuit[pairs_at[p].first / 2]);
      if (ci == c0) continue;
      auto& A = pairs_at[p];
      auto& B = pairs_at[i];
      std::swap(A.second, B.second);
      partner[A.first] = A.second;
      partner[A.second] = A.first;
      partner[B.first] = B.second;
      partner[B.second] = B.first;
      dsu[ci] = c0;
    }
    p = q;
  }
  int root = find(0);
  for (int c = 0; c < ncirc; ++c)
    if (find(c) != root) return std::nullopt;  // disconnected support
  // Walk from the lowest vertex along its first red edge.
  int s = at.begin()->first;
  int e0 = at.begin()->second[0].front();
  Trail t;
  t.start = s;
  t.closed = true;
  int end = end_of(e0, s);
  do {
    t.edges.push_back(es[end / 2]);
    end = partner[end ^ 1];
  } while (end != end_of(e0, s));
  if (static_cast<int>(t.edges.size()) != m) throw InternalError("euler tour did not use every edge");
  return t;
}

std::optional<Trail> alternating_euler_tour(const Graph& g, int* bad_vertex) {
  std::vector<int> all(g.m());
  std::iota(all.begin(), all.end(), 0);
  return alternating_euler_tour(g, all, bad_vertex);
}

}  // namespace ecg
