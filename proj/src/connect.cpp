#include "ecgraph/connect.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecgraph/matching.hpp"

namespace ecg {

namespace {

// Lightweight coloured graph; `origin` links back to an edge of the source graph (-1 if synthetic).
struct CEdge {
  int u, v;
  Colour c;
  int origin;
};

struct CGraph {
  int n = 0;
  std::vector<CEdge> edges;
  std::vector<std::vector<int>> inc;

  void finish() {
    inc.assign(n, {});
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
      inc[edges[k].u].push_back(k);
      inc[edges[k].v].push_back(k);
    }
  }
};

CGraph plain_view(const Graph& g) {
  CGraph c;
  c.n = g.n();
  for (int e = 0; e < g.m(); ++e) c.edges.push_back({g.edge(e).u, g.edge(e).v, g.edge(e).colour, e});
  c.finish();
  return c;
}

// Vertices u_1 = u, u_2 = n+u; per edge k the endpoint gadgets 2n+2k (at u) and 2n+2k+1 (at v).
CGraph trail_view(const Graph& g) {
  CGraph h;
  int n = g.n();
  h.n = 2 * n + 2 * g.m();
  for (int k = 0; k < g.m(); ++k) {
    const Edge& e = g.edge(k);
    int eu = 2 * n + 2 * k, ev = eu + 1;
    h.edges.push_back({e.u, eu, e.colour, -1});
    h.edges.push_back({n + e.u, eu, e.colour, -1});
    h.edges.push_back({e.v, ev, e.colour, -1});
    h.edges.push_back({n + e.v, ev, e.colour, -1});
    h.edges.push_back({eu, ev, other(e.colour), k});
  }
  h.finish();
  return h;
}

int copy_of(int v, Colour c) { return 2 * v + index_of(c); }

// Every vertex v becomes v_red, v_blue joined by an internal edge (ids 0..n-1); a colour-c edge joins
// the colour-c copies. Vertices in `removed` are left isolated.
PlainGraph split(const CGraph& g, const std::vector<int>& removed) {
  PlainGraph p;
  p.n = 2 * g.n;
  std::vector<char> gone(p.n, 0);
  for (int r : removed) gone[r] = 1;
  for (int v = 0; v < g.n; ++v) {
    int a = copy_of(v, Colour::Red), b = copy_of(v, Colour::Blue);
    if (gone[a] || gone[b]) p.edges.emplace_back(a, a);  // placeholder, dropped below
    else p.edges.emplace_back(a, b);
  }
  for (const CEdge& e : g.edges) {
    int a = copy_of(e.u, e.c), b = copy_of(e.v, e.c);
    if (!gone[a] && !gone[b]) p.edges.emplace_back(a, b);
  }
  p.edges.erase(std::remove_if(p.edges.begin(), p.edges.end(), [](auto& pr) { return pr.first == pr.second; }),
                p.edges.end());
  return p;
}

std::vector<std::array<bool, 2>> reach_in(const CGraph& g, int x, Colour start) {
  int drop = copy_of(x, other(start));
  PlainGraph p = split(g, {drop});
  std::vector<int> mate(p.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (v != x) {
      mate[copy_of(v, Colour::Red)] = copy_of(v, Colour::Blue);
      mate[copy_of(v, Colour::Blue)] = copy_of(v, Colour::Red);
    }
  auto even = even_reachable(p, mate, copy_of(x, start));
  std::vector<std::array<bool, 2>> out(g.n, {false, false});
  for (int y = 0; y < g.n; ++y) {
    if (y == x) continue;
    for (int t = 0; t < 2; ++t) out[y][t] = even[copy_of(y, other(colour_at(t)))] != 0;
  }
  return out;
}

// Path search by perfect matching; returns the CGraph edge indices of the x-y path.
std::optional<std::vector<int>> path_in(const CGraph& g, int x, int y, Colour start, Colour end) {
  PlainGraph p = split(g, {copy_of(x, other(start)), copy_of(y, other(end))});
  Matching mm = maximum_matching(p);
  for (int v = 0; v < p.n; ++v) {
    bool removed = v == copy_of(x, other(start)) || v == copy_of(y, other(end));
    if (!removed && mm.mate[v] < 0) return std::nullopt;
  }
  std::vector<int> path;
  int cur = x;
  Colour c = start;
  while (cur != y) {
    int nxt_copy = mm.mate[copy_of(cur, c)];
    int nxt = nxt_copy / 2;
    int pick = -1;
    for (int k : g.inc[cur]) {
      const CEdge& e = g.edges[k];
      if (e.c == c && (e.u == cur ? e.v : e.u) == nxt) {
        pick = k;
        break;
      }
    }
    if (pick < 0 || static_cast<int>(path.size()) > g.n) throw InternalError("path extraction lost its way");
    path.push_back(pick);
    cur = nxt;
    c = other(c);
  }
  return path;
}

void check_pair(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw std::invalid_argument("vertex out of range");
  if (x == y) throw std::invalid_argument("endpoints must be distinct");
}

template <class Reach>
ConnectivityReport sweep(const Graph& g, Exec exec, Reach reach) {
  if (g.n() < 2) throw std::invalid_argument("connectivity needs at least two vertices");
  int n = g.n();
  std::vector<std::array<std::vector<std::array<bool, 2>>, 2>> res(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int u = 0; u < n; ++u)
      for (int c = 0; c < 2; ++c) res[u][c] = reach(g, u, colour_at(c));
  } else {
    for (int u = 0; u < n; ++u)
      for (int c = 0; c < 2; ++c) res[u][c] = reach(g, u, colour_at(c));
  }
  ConnectivityReport rep;
  for (int u = 0; u < n && rep.connected; ++u)
    for (int v = 0; v < n && rep.connected; ++v) {
      if (u == v) continue;
      for (int c = 0; c < 2; ++c)
        if (!res[u][c][v][0] && !res[u][c][v][1]) {
          rep.connected = false;
          rep.counterexample = PairQuery{u, v, colour_at(c)};
          break;
        }
    }
  return rep;
}

}  // namespace

std::optional<Trail> alternating_path(const Graph& g, int x, int y, Colour start, Colour end) {
  check_pair(g, x, y);
  CGraph c = plain_view(g);
  auto p = path_in(c, x, y, start, end);
  if (!p) return std::nullopt;
  Trail t;
  t.start = x;
  for (int k : *p) t.edges.push_back(c.edges[k].origin);
  return t;
}

std::optional<Trail> alternating_path(const Graph& g, int x, int y, Colour start) {
  for (Colour end : {Colour::Red, Colour::Blue})
    if (auto p = alternating_path(g, x, y, start, end)) return p;
  return std::nullopt;
}

std::optional<Trail> alternating_trail(const Graph& g, int x, int y, Colour start, Colour end) {
  check_pair(g, x, y);
  CGraph h = trail_view(g);
  auto p = path_in(h, x, y, start, end);
  if (!p) return std::nullopt;
  Trail t;
  t.start = x;
  for (int k : *p)
    if (h.edges[k].origin >= 0) t.edges.push_back(h.edges[k].origin);
  return t;
}

std::optional<Trail> alternating_trail(const Graph& g, int x, int y, Colour start) {
  for (Colour end : {Colour::Red, Colour::Blue})
    if (auto p = alternating_trail(g, x, y, start, end)) return p;
  return std::nullopt;
}

std::vector<std::array<bool, 2>> path_reach(const Graph& g, int x, Colour start) {
  return reach_in(plain_view(g), x, start);
}

std::vector<std::array<bool, 2>> trail_reach(const Graph& g, int x, Colour start) {
  auto r = reach_in(trail_view(g), x, start);
  r.resize(g.n());
  return r;
}

ConnectivityReport is_colour_connected(const Graph& g, Exec exec, bool witnesses) {
  auto rep = sweep(g, exec, path_reach);
  if (witnesses && rep.connected)
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        for (int c = 0; c < 2 && u != v; ++c)
          rep.witnesses[{u, v, c}] = *alternating_path(g, u, v, colour_at(c));
  return rep;
}

ConnectivityReport is_trail_colour_connected(const Graph& g, Exec exec, bool witnesses) {
  auto rep = sweep(g, exec, trail_reach);
  if (witnesses && rep.connected)
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        for (int c = 0; c < 2 && u != v; ++c)
          rep.witnesses[{u, v, c}] = *alternating_trail(g, u, v, colour_at(c));
  return rep;
}

std::optional<std::vector<std::vector<int>>> multipartite_classes(const Graph& g) {
  if (g.n() < 2) return std::nullopt;
  ColourMatrix cm(g);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v) {
    bool placed = false;
    for (auto& cl : classes)
      if (!cm.adjacent(cl.front(), v)) {
        cl.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({v});
  }
  if (classes.size() < 2) return std::nullopt;
  std::vector<int> cls(g.n());
  for (size_t i = 0; i < classes.size(); ++i)
    for (int v : classes[i]) cls[v] = static_cast<int>(i);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (cm.adjacent(u, v) == (cls[u] == cls[v])) return std::nullopt;
  return classes;
}

bool is_complete_bipartite(const Graph& g, std::vector<int>* side) {
  auto cl = multipartite_classes(g);
  if (!cl || cl->size() != 2) return false;
  if (side) {
    side->assign(g.n(), 0);
    for (int v : (*cl)[1]) (*side)[v] = 1;
  }
  return true;
}

Trail trail_to_path_complete_multipartite(const Graph& g, const Trail& t) {
  auto classes = multipartite_classes(g);
  if (!classes) throw std::invalid_argument("graph is not complete multipartite");
  if (t.closed) throw std::invalid_argument("trail must be open");
  if (auto v = verify_trail(g, t); !v) throw std::invalid_argument("not an alternating trail: " + v.violation);
  if (t.edges.empty()) return t;
  std::vector<int> cls(g.n());
  for (size_t i = 0; i < classes->size(); ++i)
    for (int v : (*classes)[i]) cls[v] = static_cast<int>(i);

  auto first_edge = [&](int a, int b, std::optional<Colour> c) -> int {
    for (int e : g.incident(a))
      if (g.other_end(e, a) == b && (!c || g.edge(e).colour == *c)) return e;
    return -1;
  };

  std::vector<int> es = t.edges;
  for (;;) {
    Trail cur{t.start, es, false};
    auto w = trail_vertices(g, cur);
    int end = w.back();
    auto col = [&](int k) { return g.edge(es[k]).colour; };
    // First vertex met twice: positions i < j.
    std::vector<int> seen(g.n(), -1);
    int i = -1, j = -1;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
      if (seen[w[p]] >= 0) {
        i = seen[w[p]];
        j = p;
        break;
      }
      seen[w[p]] = p;
    }
    if (j < 0) return cur;
    // The end vertex already on the repeat-free prefix: cut there.
    if (seen[end] >= 0) {
      es.resize(seen[end]);
      return Trail{t.start, es, false};
    }
    if ((j - i) % 2 == 0) {
      es.erase(es.begin() + i, es.begin() + j);
      continue;
    }
    // Odd gap: route1 = prefix + edge wx, route2 = prefix + reversed w[j..i+1].
    int x = w[i + 1];
    std::vector<int> route1(es.begin(), es.begin() + i + 1);
    std::vector<int> route2(es.begin(), es.begin() + i);
    for (int k = j - 1; k >= i + 1; --k) route2.push_back(es[k]);
    if (x == end) return Trail{t.start, route1, false};
    if (cls[x] != cls[end]) {
      int exv = first_edge(x, end, std::nullopt);
      Colour c = g.edge(exv).colour;
      std::vector<int> r = (col(i) != c) ? route1 : route2;
      r.push_back(exv);
      return Trail{t.start, r, false};
    }
    int wv = first_edge(w[i], end, col(i));
    if (wv >= 0) {
      std::vector<int> r(es.begin(), es.begin() + i);
      r.push_back(wv);
      return Trail{t.start, r, false};
    }
    int xm = w[i + 2];
    int xv = first_edge(xm, end, col(i));
    if (xv >= 0) {
      std::vector<int> r(es.begin(), es.begin() + i + 2);
      r.push_back(xv);
      return Trail{t.start, r, false};
    }
    xv = first_edge(xm, end, other(col(i)));
    std::vector<int> r(es.begin(), es.begin() + i);
    for (int k = j - 1; k >= i + 2; --k) r.push_back(es[k]);
    r.push_back(xv);
    return Trail{t.start, r, false};
  }
}

}  // namespace ecg
