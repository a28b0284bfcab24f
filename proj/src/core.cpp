#include "ecgraph/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ecg {

std::string_view colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

std::optional<Colour> colour_from_name(std::string_view s) {
  if (s == "red") return Colour::Red;
  if (s == "blue") return Colour::Blue;
  return std::nullopt;
}

int Graph::add_vertex(std::string name) {
  if (vindex_.count(name)) throw std::invalid_argument("duplicate vertex id '" + name + "'");
  int idx = n();
  vindex_.emplace(name, idx);
  names_.push_back(std::move(name));
  inc_.emplace_back();
  deg_.push_back({0, 0});
  return idx;
}

int Graph::add_edge(std::string id, int u, int v, Colour c) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("edge '" + id + "' has an undeclared endpoint");
  if (u == v) throw std::invalid_argument("edge '" + id + "' is a self-loop at '" + names_[u] + "'");
  if (eindex_.count(id)) throw std::invalid_argument("duplicate edge id '" + id + "'");
  int idx = m();
  eindex_.emplace(id, idx);
  edges_.push_back(Edge{std::move(id), u, v, c});
  inc_[u].push_back(idx);
  inc_[v].push_back(idx);
  ++deg_[u][index_of(c)];
  ++deg_[v][index_of(c)];
  return idx;
}

int Graph::add_edge(int u, int v, Colour c) {
  int k = m() + 1;
  std::string id = "e" + std::to_string(k);
  while (eindex_.count(id)) id = "e" + std::to_string(++k);
  return add_edge(std::move(id), u, v, c);
}

int Graph::other_end(int e, int v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

std::optional<int> Graph::find_vertex(std::string_view name) const {
  auto it = vindex_.find(std::string(name));
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::find_edge(std::string_view id) const {
  auto it = eindex_.find(std::string(id));
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

int Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return *v;
}

ColourMatrix::ColourMatrix(const Graph& g) : n_(g.n()) {
  for (auto& c : cnt_) c.assign(static_cast<size_t>(n_) * n_, 0);
  for (const Edge& e : g.edges()) {
    ++cnt_[index_of(e.colour)][e.u * n_ + e.v];
    ++cnt_[index_of(e.colour)][e.v * n_ + e.u];
  }
}

std::optional<Colour> ColourMatrix::mono(int u, int v) const {
  bool r = has(u, v, Colour::Red), b = has(u, v, Colour::Blue);
  if (r == b) return std::nullopt;
  return r ? Colour::Red : Colour::Blue;
}

std::vector<int> trail_vertices(const Graph& g, const Trail& t) {
  std::vector<int> seq{t.start};
  int cur = t.start;
  for (int e : t.edges) {
    cur = g.other_end(e, cur);
    seq.push_back(cur);
  }
  return seq;
}

int trail_end(const Graph& g, const Trail& t) { return trail_vertices(g, t).back(); }

std::vector<int> visit_counts(const Graph& g, const Trail& t) {
  std::vector<int> cnt(g.n(), 0);
  auto seq = trail_vertices(g, t);
  if (t.closed && !seq.empty()) seq.pop_back();
  for (int v : seq) ++cnt[v];
  return cnt;
}

namespace {

std::string vname(const Graph& g, int v) { return "'" + g.name(v) + "'"; }

}  // namespace

Verdict verify_trail(const Graph& g, const Trail& t, TrailShape shape) {
  if (t.start < 0 || t.start >= g.n()) return Verdict::fail("dangling start vertex");
  for (int e : t.edges)
    if (e < 0 || e >= g.m()) return Verdict::fail("dangling edge index " + std::to_string(e));
  bool closed = t.closed || shape == TrailShape::Cycle;
  if (closed && !t.closed) return Verdict::fail("not closed");
  if (t.edges.empty()) {
    if (closed) return Verdict::fail("closed trail needs at least 2 edges");
    return {};
  }
  std::set<int> used;
  int cur = t.start;
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = g.edge(t.edges[i]);
    if (e.u != cur && e.v != cur)
      return Verdict::fail("edge '" + e.id + "' does not continue from " + vname(g, cur));
    if (!used.insert(t.edges[i]).second) return Verdict::fail("edge repeated: '" + e.id + "'");
    if (i > 0 && g.edge(t.edges[i - 1]).colour == e.colour)
      return Verdict::fail("colours do not alternate at edge '" + e.id + "'");
    cur = g.other_end(t.edges[i], cur);
  }
  if (closed) {
    if (cur != t.start) return Verdict::fail("not closed");
    if (t.edges.size() < 2 || t.edges.size() % 2) return Verdict::fail("closed trail length must be even and >= 2");
    if (g.edge(t.edges.front()).colour == g.edge(t.edges.back()).colour)
      return Verdict::fail("first and last edge share a colour");
  }
  if (shape != TrailShape::Trail) {
    auto seq = trail_vertices(g, t);
    if (closed) seq.pop_back();
    std::set<int> seen;
    for (int v : seq)
      if (!seen.insert(v).second) return Verdict::fail("vertex repeated: " + vname(g, v));
  }
  return {};
}

Verdict verify_spanning_closed_trail(const Graph& g, const Trail& t) {
  if (!t.closed) return Verdict::fail("not closed");
  if (auto v = verify_trail(g, t); !v) return v;
  auto cnt = visit_counts(g, t);
  for (int v = 0; v < g.n(); ++v)
    if (!cnt[v]) return Verdict::fail("vertex " + vname(g, v) + " not covered");
  return {};
}

Verdict verify_hamiltonian_cycle(const Graph& g, const Trail& t) {
  if (auto v = verify_trail(g, t, TrailShape::Cycle); !v) return v;
  if (static_cast<int>(t.edges.size()) != g.n()) return Verdict::fail("cycle does not cover every vertex");
  return {};
}

namespace {

Verdict check_partition(const Graph& g, const std::vector<std::vector<int>>& sets) {
  std::vector<int> owner(g.n(), -1);
  for (size_t i = 0; i < sets.size(); ++i)
    for (int v : sets[i]) {
      if (v < 0 || v >= g.n()) return Verdict::fail("dangling vertex index");
      if (owner[v] != -1) return Verdict::fail("vertex " + vname(g, v) + " lies in two parts");
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n(); ++v)
    if (owner[v] == -1) return Verdict::fail("vertex " + vname(g, v) + " not covered");
  return {};
}

Verdict trail_spans(const Graph& g, const Trail& t, const std::vector<int>& verts) {
  std::set<int> want(verts.begin(), verts.end());
  std::set<int> got;
  for (int v : trail_vertices(g, t)) got.insert(v);
  if (want != got) return Verdict::fail("witness does not span its vertex set");
  return {};
}

}  // namespace

Verdict verify_factor(const Graph& g, const EulerianFactor& f) {
  std::vector<std::vector<int>> sets;
  for (const auto& p : f.parts) sets.push_back(p.vertices);
  if (auto v = check_partition(g, sets); !v) return v;
  for (const auto& p : f.parts) {
    if (!p.trail.closed) return Verdict::fail("part witness not closed");
    if (auto v = verify_trail(g, p.trail); !v) return v;
    if (auto v = trail_spans(g, p.trail, p.vertices); !v) return v;
  }
  return {};
}

Verdict verify_factor(const Graph& g, const CycleFactor& f) {
  std::vector<std::vector<int>> sets;
  for (const auto& c : f.cycles) {
    if (auto v = verify_trail(g, c, TrailShape::Cycle); !v) return v;
    auto seq = trail_vertices(g, c);
    seq.pop_back();
    sets.push_back(seq);
  }
  return check_partition(g, sets);
}

namespace {

std::optional<Trail> realize(const Graph& g, const std::vector<int>& verts, const std::vector<Colour>& colours,
                             bool closed) {
  size_t k = colours.size();
  if (verts.empty() || (closed ? verts.size() != k : verts.size() != k + 1)) return std::nullopt;
  // Candidate edges per (min, max, colour), in declaration order.
  std::map<std::tuple<int, int, int>, std::vector<int>> pool;
  std::map<std::tuple<int, int, int>, size_t> next;
  Trail t;
  t.start = verts[0];
  t.closed = closed;
  for (size_t i = 0; i < k; ++i) {
    int a = verts[i], b = verts[(i + 1) % verts.size()];
    auto key = std::make_tuple(std::min(a, b), std::max(a, b), index_of(colours[i]));
    auto it = pool.find(key);
    if (it == pool.end()) {
      std::vector<int> es;
      for (int e : g.incident(a))
        if (g.other_end(e, a) == b && g.edge(e).colour == colours[i]) es.push_back(e);
      it = pool.emplace(key, std::move(es)).first;
    }
    size_t& nx = next[key];
    if (nx >= it->second.size()) return std::nullopt;
    t.edges.push_back(it->second[nx++]);
  }
  return t;
}

}  // namespace

std::optional<Trail> realize_closed_walk(const Graph& g, const std::vector<int>& verts,
                                         const std::vector<Colour>& colours) {
  return realize(g, verts, colours, true);
}

std::optional<Trail> realize_open_walk(const Graph& g, const std::vector<int>& verts,
                                       const std::vector<Colour>& colours) {
  return realize(g, verts, colours, false);
}

Trail reversed(const Graph& g, const Trail& t) {
  Trail r;
  r.closed = t.closed;
  r.start = t.closed ? t.start : trail_end(g, t);
  r.edges.assign(t.edges.rbegin(), t.edges.rend());
  return r;
}

Trail rotated(const Graph& g, const Trail& t, int pos) {
  auto seq = trail_vertices(g, t);
  Trail r;
  r.closed = true;
  r.start = seq.at(pos);
  std::rotate_copy(t.edges.begin(), t.edges.begin() + pos, t.edges.end(), std::back_inserter(r.edges));
  return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts, std::vector<int>* old_of_new) {
  Graph h;
  std::vector<int> nw(g.n(), -1);
  for (int v : verts) nw[v] = h.add_vertex(g.name(v));
  for (const Edge& e : g.edges())
    if (nw[e.u] >= 0 && nw[e.v] >= 0) h.add_edge(e.id, nw[e.u], nw[e.v], e.colour);
  if (old_of_new) *old_of_new = verts;
  return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int e : g.incident(v)) {
        int w = g.other_end(e, v);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

}  // namespace ecg
