#pragma once
// Plain exhaustive reference searches for tests. Deliberately memo-free and written against the
// definitions only, so they share no code paths with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ecgraph/core.hpp"
#include "ecgraph/matching.hpp"

namespace brute {

using ecg::Colour;
using ecg::Graph;

inline int max_matching(const ecg::PlainGraph& g) {
  int best = 0;
  std::vector<char> used(g.n, 0);
  std::function<void(size_t, int)> go = [&](size_t i, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(g.edges.size() - i) <= best) return;
    for (size_t k = i; k < g.edges.size(); ++k) {
      auto [u, v] = g.edges[k];
      if (u == v || used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      go(k + 1, size + 1);
      used[u] = used[v] = 0;
    }
  };
  go(0, 0);
  return best;
}

// ends[y] bit (1 << index_of(c)): some alternating path (or trail) from x with first colour `start`
// reaches y with last colour c.
inline std::vector<int> reach(const Graph& g, int x, Colour start, bool trails) {
  std::vector<int> ends(g.n(), 0);
  std::vector<char> vused(g.n(), 0), eused(g.m(), 0);
  vused[x] = 1;
  std::function<void(int, int)> go = [&](int cur, int last) {
    for (int e : g.incident(cur)) {
      int c = ecg::index_of(g.edge(e).colour);
      if (last < 0 ? g.edge(e).colour != start : c == last) continue;
      int w = g.other_end(e, cur);
      if (trails ? eused[e] : vused[w]) continue;
      eused[e] = 1;
      if (!trails) vused[w] = 1;
      ends[w] |= 1 << c;
      go(w, c);
      eused[e] = 0;
      if (!trails) vused[w] = 0;
    }
  };
  go(x, -1);
  return ends;
}

inline bool connected(const Graph& g, bool trails) {
  for (int x = 0; x < g.n(); ++x)
    for (Colour c : {Colour::Red, Colour::Blue}) {
      auto r = reach(g, x, c, trails);
      for (int y = 0; y < g.n(); ++y)
        if (y != x && !r[y]) return false;
    }
  return true;
}

// Every closed alternating trail through vertex 0, started at each of its edges in both directions.
inline bool supereulerian(const Graph& g) {
  if (g.n() < 2) return false;
  std::vector<char> eused(g.m(), 0);
  std::vector<int> touch(g.n(), 0);
  bool found = false;
  std::function<void(int, int, int)> go = [&](int cur, int first, int last) {
    if (found) return;
    if (cur == 0 && last >= 0 && last != first) {
      bool all = true;
      for (int v = 0; v < g.n(); ++v) all = all && touch[v] > 0;
      if (all) {
        found = true;
        return;
      }
    }
    for (int e : g.incident(cur)) {
      int c = ecg::index_of(g.edge(e).colour);
      if (eused[e] || c == last) continue;
      int w = g.other_end(e, cur);
      eused[e] = 1;
      ++touch[w];
      ++touch[cur];
      go(w, first < 0 ? c : first, c);
      --touch[w];
      --touch[cur];
      eused[e] = 0;
    }
  };
  go(0, -1, -1);
  return found;
}

inline bool hamiltonian(const Graph& g) {
  int n = g.n();
  if (n < 2) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ecg::ColourMatrix cm(g);
  do {
    if (perm[0] != 0) break;
    for (int c0 = 0; c0 < 2; ++c0) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = cm.has(perm[i], perm[(i + 1) % n], ecg::colour_at((c0 + i) % 2));
      // n even makes the closing edge differ from the first.
      if (ok && n % 2 == 0) return true;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Balanced edge subsets with every vertex covered.
inline bool eulerian_factor(const Graph& g) {
  int m = g.m(), n = g.n();
  if (n == 0) return false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> d(2 * n, 0);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        int c = ecg::index_of(g.edge(e).colour);
        ++d[2 * g.edge(e).u + c];
        ++d[2 * g.edge(e).v + c];
      }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = d[2 * v] == d[2 * v + 1] && d[2 * v] > 0;
    if (ok) return true;
  }
  return false;
}

// Edge subsets with exactly one red and one blue edge at every vertex.
inline bool cycle_factor(const Graph& g) {
  int n = g.n();
  if (n == 0) return false;
  std::vector<int> deg(2 * n, 0);
  std::function<bool(int)> go = [&](int e) -> bool {
    if (e == g.m()) return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    if (go(e + 1)) return true;
    int c = ecg::index_of(g.edge(e).colour);
    int a = 2 * g.edge(e).u + c, b = 2 * g.edge(e).v + c;
    if (deg[a] || deg[b]) return false;
    deg[a] = deg[b] = 1;
    bool r = go(e + 1);
    deg[a] = deg[b] = 0;
    return r;
  };
  return go(0);
}

// Coloured multiset signature of g relabelled by `perm` (old -> new).
inline std::multiset<std::tuple<int, int, int>> signature(const Graph& g, const std::vector<int>& perm) {
  std::multiset<std::tuple<int, int, int>> s;
  for (const auto& e : g.edges()) {
    int a = perm[e.u], b = perm[e.v];
    s.insert({std::min(a, b), std::max(a, b), ecg::index_of(e.colour)});
  }
  return s;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> id(a.n()), perm(a.n());
  std::iota(id.begin(), id.end(), 0);
  std::iota(perm.begin(), perm.end(), 0);
  auto target = signature(b, id);
  do {
    if (signature(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace brute
