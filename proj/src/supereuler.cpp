#include "ecgraph/supereuler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ecgraph/factor.hpp"
#include "ecgraph/oracle.hpp"
#include "ecgraph/structure.hpp"

namespace ecg {

namespace {

std::set<int> vertex_set(const VCycle& c) { return {c.v.begin(), c.v.end()}; }

bool joined(const ColourMatrix& cm, const VCycle& a, const VCycle& b) {
  auto sb = vertex_set(b);
  for (int x : vertex_set(a))
    for (int y : sb)
      if (cm.adjacent(x, y)) return true;
  return false;
}

void require_closed(const Graph& g, const Trail& t) {
  if (!t.closed || t.edges.empty() || !verify_trail(g, t)) throw std::invalid_argument("not a closed alternating trail");
}

void require_disjoint(const std::vector<const VCycle*>& cs) {
  std::set<int> seen;
  for (const VCycle* c : cs)
    for (int v : vertex_set(*c))
      if (!seen.insert(v).second) throw std::invalid_argument("trails share a vertex");
}

Trail realize_or_throw(const Graph& g, const VCycle& c) {
  auto t = realize_closed_walk(g, c.v, c.c);
  if (!t) throw InternalError("merged trail does not map onto distinct edges");
  return *t;
}

// Rotates (and if needed reverses) c so that it starts at an occurrence of v with a `first`-coloured edge.
VCycle oriented(const VCycle& c, int v, Colour first) {
  for (const VCycle& d : {c, reversed(c)})
    for (int i = 0; i < d.size(); ++i)
      if (d.v[i] == v && d.c[i] == first) {
        VCycle r;
        for (int k = 0; k < d.size(); ++k) {
          r.v.push_back(d.v[(i + k) % d.size()]);
          r.c.push_back(d.c[(i + k) % d.size()]);
        }
        return r;
      }
  throw InternalError("vertex is not on the trail");
}

// Vertices of c in name order.
std::vector<int> by_name(const Graph& g, const VCycle& c) {
  auto s = vertex_set(c);
  std::vector<int> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [&](int a, int b) { return g.name(a) < g.name(b); });
  return out;
}

// Common colour of all edges from v to the vertex set s, if there is one and v is adjacent to all of s.
std::optional<Colour> mono_to(const ColourMatrix& cm, int v, const std::set<int>& s) {
  std::optional<Colour> col;
  for (int y : s) {
    auto c = cm.mono(v, y);
    if (!c || (col && *col != *c)) return std::nullopt;
    col = c;
  }
  return col;
}

struct PairOutcome {
  TrailMergeOutcome::Kind kind = TrailMergeOutcome::Kind::NoEdgeBetween;
  std::optional<VCycle> merged;
  std::optional<DominationCertificate> cert;
};

class TrailMerger {
 public:
  TrailMerger(const Graph& g, SupereulerStats* stats)
      : g_(g), cm_(g), block_(similarity_partition(g).block_of), stats_(stats) {}

  const ColourMatrix& cm() const { return cm_; }

  // One visit copy per trail position; copies of a vertex are similar and pairwise non-adjacent.
  std::optional<VCycle> view_merge(const VCycle& a, const VCycle& b, int level) {
    MergeView view;
    view.g = &g_;
    view.cm = &cm_;
    view.block = block_;
    view.contract = true;
    view.base = a.v;
    view.base.insert(view.base.end(), b.v.begin(), b.v.end());
    VCycle va{{}, a.c}, vb{{}, b.c};
    va.v.resize(a.v.size());
    vb.v.resize(b.v.size());
    std::iota(va.v.begin(), va.v.end(), 0);
    std::iota(vb.v.begin(), vb.v.end(), a.size());
    auto m = merge_in_view(view, va, vb, level, stats_ ? &stats_->merge : nullptr);
    if (!m) return std::nullopt;
    for (int& x : m->v) x = view.base[x];
    return m;
  }

  // Spanning closed trail of the union found directly; used when no copy-level merge contracts cleanly.
  std::optional<VCycle> direct(const VCycle& a, const VCycle& b) {
    auto s = vertex_set(a);
    for (int v : b.v) s.insert(v);
    std::vector<int> verts(s.begin(), s.end()), old_of_new;
    Graph h = induced_subgraph(g_, verts, &old_of_new);
    OracleBudget budget = OracleBudget{}.unbounded_size();
    std::optional<Trail> t;
    try {
      t = oracle_supereulerian(h, budget);
    } catch (const BudgetExceeded&) {
      throw InternalError("pair merge fell back to a search that exceeded its budget");
    }
    if (!t) return std::nullopt;
    if (stats_) ++stats_->direct_searches;
    VCycle c = to_vcycle(h, *t);
    for (int& x : c.v) x = old_of_new[x];
    return c;
  }

  PairOutcome merge(const VCycle& a, const VCycle& b) {
    PairOutcome out;
    if (!joined(cm_, a, b)) return out;
    for (int level = 0; level <= 1; ++level)
      if (auto m = view_merge(a, b, level)) return merged(std::move(*m));
    if (auto cert = find_domination(g_, a, b)) {
      out.kind = TrailMergeOutcome::Kind::Dominates;
      out.cert = std::move(cert);
      return out;
    }
    if (auto m = view_merge(a, b, 2)) return merged(std::move(*m));
    if (auto m = direct(a, b)) return merged(std::move(*m));
    throw InternalError("two trails neither merge nor dominate");
  }

 private:
  PairOutcome merged(VCycle m) {
    if (stats_) ++stats_->pair_merges;
    PairOutcome out;
    out.kind = TrailMergeOutcome::Kind::Merged;
    out.merged = std::move(m);
    return out;
  }

  const Graph& g_;
  ColourMatrix cm_;
  std::vector<int> block_;
  SupereulerStats* stats_;
};

Colour label_in(const DominationCertificate& cert, int v) {
  for (size_t i = 0; i < cert.sequence.size(); ++i)
    if (cert.sequence[i] == v) return cert.parity[i];
  throw InternalError("vertex missing from certificate");
}

void check_arc(const Graph& g, const DominationCertificate& cert, const VCycle& from, const VCycle& to) {
  if (!verify_domination(g, cert)) throw InternalError("domination certificate fails verification");
  std::set<int> seq(cert.sequence.begin(), cert.sequence.end());
  auto dom = std::set<int>(cert.dominated.begin(), cert.dominated.end());
  if (seq != vertex_set(from) || dom != vertex_set(to)) throw InternalError("certificate does not match the trails");
}

VCycle three_cycle(const Graph& g, const VCycle& ta, const VCycle& tb, const VCycle& tc,
                   const std::array<DominationCertificate, 3>& certs) {
  check_arc(g, certs[0], ta, tb);
  check_arc(g, certs[1], tb, tc);
  check_arc(g, certs[2], tc, ta);
  int a0 = by_name(g, ta).front();
  Colour alpha = label_in(certs[0], a0);
  auto pick = [&](const VCycle& t, const DominationCertificate& cert, Colour want) {
    for (int v : by_name(g, t))
      if (label_in(cert, v) == want) return v;
    throw InternalError("trail lacks a vertex of the required label");
  };
  int b0 = pick(tb, certs[1], other(alpha));
  int c0 = pick(tc, certs[2], alpha);
  VCycle a = oriented(ta, a0, alpha), b = oriented(tb, b0, other(alpha)), c = oriented(tc, c0, alpha);
  int am = a.v.back(), bm = b.v.back(), cm = c.v.back();
  VCycle out;
  auto add = [&](const VCycle& t, int back_to, Colour jump) {
    out.v.insert(out.v.end(), t.v.begin(), t.v.end());
    out.c.insert(out.c.end(), t.c.begin(), t.c.end());
    out.v.push_back(back_to);
    out.c.push_back(jump);
  };
  add(a, a0, label_in(certs[0], a0));
  add(b, b0, label_in(certs[1], b0));
  add(c, c0, label_in(certs[2], c0));
  out.v.insert(out.v.end(), {am, bm, cm});
  out.c.insert(out.c.end(), {label_in(certs[0], am), label_in(certs[1], bm), label_in(certs[2], cm)});
  return out;
}

std::optional<VCycle> transitive(const Graph& g, const ColourMatrix& cm, const VCycle& t1, const VCycle& t2,
                                 const VCycle& t3, int v) {
  if (!vertex_set(t1).count(v)) return std::nullopt;
  auto c = mono_to(cm, v, vertex_set(t2));
  auto c3 = mono_to(cm, v, vertex_set(t3));
  if (!c || !c3 || *c3 != other(*c)) return std::nullopt;
  VCycle w = oriented(t2, by_name(g, t2).front(), other(*c));
  VCycle u = oriented(t3, by_name(g, t3).front(), *c);
  VCycle t = oriented(t1, v, *c);
  VCycle out;
  out.v.push_back(v);
  out.c.push_back(*c);
  out.v.insert(out.v.end(), w.v.begin(), w.v.end());
  out.c.insert(out.c.end(), w.c.begin(), w.c.end() - 1);
  out.c.push_back(*c);
  out.v.push_back(v);
  out.c.push_back(other(*c));
  out.v.insert(out.v.end(), u.v.begin(), u.v.end());
  out.c.insert(out.c.end(), u.c.begin(), u.c.end() - 1);
  out.c.push_back(other(*c));
  out.v.insert(out.v.end(), t.v.begin(), t.v.end());
  out.c.insert(out.c.end(), t.c.begin(), t.c.end());
  return out;
}

}  // namespace

TrailMergeOutcome merge_trails_pair(const Graph& g, const Trail& t1, const Trail& t2) {
  if (!is_extension_of_m_closed(g)) throw UnsupportedClass("graph is not an extension of an M-closed graph");
  require_closed(g, t1);
  require_closed(g, t2);
  VCycle a = to_vcycle(g, t1), b = to_vcycle(g, t2);
  require_disjoint({&a, &b});
  TrailMerger merger(g, nullptr);
  auto r = merger.merge(a, b);
  TrailMergeOutcome out;
  out.kind = r.kind;
  out.certificate = std::move(r.cert);
  if (r.merged) out.trail = realize_or_throw(g, *r.merged);
  return out;
}

Trail merge_trails_3cycle(const Graph& g, const Trail& ta, const Trail& tb, const Trail& tc,
                          const std::array<DominationCertificate, 3>& certs) {
  for (const Trail* t : {&ta, &tb, &tc}) require_closed(g, *t);
  VCycle a = to_vcycle(g, ta), b = to_vcycle(g, tb), c = to_vcycle(g, tc);
  require_disjoint({&a, &b, &c});
  return realize_or_throw(g, three_cycle(g, a, b, c, certs));
}

std::optional<Trail> merge_trails_transitive(const Graph& g, const Trail& t1, const Trail& t2, const Trail& t3, int v) {
  for (const Trail* t : {&t1, &t2, &t3}) require_closed(g, *t);
  VCycle a = to_vcycle(g, t1), b = to_vcycle(g, t2), c = to_vcycle(g, t3);
  require_disjoint({&a, &b, &c});
  ColourMatrix cm(g);
  auto m = transitive(g, cm, a, b, c, v);
  if (!m) return std::nullopt;
  return realize_or_throw(g, *m);
}

SupereulerResult supereulerian(const Graph& g, Exec exec) {
  if (g.n() < 2) throw std::invalid_argument("graph needs at least two vertices");
  if (!is_extension_of_m_closed(g)) throw UnsupportedClass("graph is not an extension of an M-closed graph");
  SupereulerResult res;
  auto factor = eulerian_factor(g);
  if (!factor) return res;
  auto tcc = is_trail_colour_connected(g, exec);
  if (!tcc.connected) {
    res.kind = SupereulerResult::Kind::NotTrailColourConnected;
    res.counterexample = tcc.counterexample;
    return res;
  }
  std::vector<Trail> parts;
  for (const FactorPart& p : factor->parts) parts.push_back(p.trail);
  res.trail = merge_factor_trails(g, parts, &res.stats);
  res.kind = SupereulerResult::Kind::SpanningTrail;
  return res;
}

Trail merge_factor_trails(const Graph& g, const std::vector<Trail>& parts, SupereulerStats* stats) {
  SupereulerStats local;
  SupereulerStats& st = stats ? *stats : local;
  std::vector<VCycle> trails;
  for (const Trail& t : parts) {
    require_closed(g, t);
    trails.push_back(to_vcycle(g, t));
  }
  {
    std::vector<const VCycle*> ptrs;
    for (const auto& t : trails) ptrs.push_back(&t);
    require_disjoint(ptrs);
  }
  TrailMerger merger(g, &st);
  auto key = [](const VCycle& c) { return std::pair(c.size(), *std::min_element(c.v.begin(), c.v.end())); };

  while (trails.size() > 1) {
    std::sort(trails.begin(), trails.end(), [&](const VCycle& x, const VCycle& y) { return key(x) < key(y); });
    int k = static_cast<int>(trails.size());
    // Domination arcs of this round: arc[i][j] holds the certificate for T_i -> T_j.
    std::vector<std::vector<std::optional<DominationCertificate>>> arc(k, std::vector<std::optional<DominationCertificate>>(k));
    std::optional<std::pair<int, int>> hit;
    std::optional<VCycle> joined_trail;
    for (int i = 0; i < k && !hit; ++i)
      for (int j = i + 1; j < k && !hit; ++j) {
        auto r = merger.merge(trails[i], trails[j]);
        if (r.kind == TrailMergeOutcome::Kind::Merged) {
          hit = std::pair(i, j);
          joined_trail = std::move(r.merged);
        } else if (r.kind == TrailMergeOutcome::Kind::Dominates) {
          int from = r.cert->dominating == 0 ? i : j, to = r.cert->dominating == 0 ? j : i;
          arc[from][to] = std::move(r.cert);
        }
      }
    std::vector<int> used;
    if (hit) {
      used = {hit->first, hit->second};
    } else {
      for (int a = 0; a < k && used.empty(); ++a)
        for (int b = 0; b < k && used.empty(); ++b)
          for (int c = 0; c < k && used.empty(); ++c)
            if (arc[a][b] && arc[b][c] && arc[c][a]) {
              joined_trail = three_cycle(g, trails[a], trails[b], trails[c], {*arc[a][b], *arc[b][c], *arc[c][a]});
              used = {a, b, c};
              ++st.three_cycle_moves;
            }
      // Sources first (no incoming arc), then every trail.
      std::vector<int> order(k);
      std::iota(order.begin(), order.end(), 0);
      auto indeg = [&](int t) {
        int d = 0;
        for (int s = 0; s < k; ++s) d += arc[s][t].has_value();
        return d;
      };
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return (indeg(x) == 0) > (indeg(y) == 0); });
      for (int t1 : order) {
        if (!used.empty()) break;
        for (int v : by_name(g, trails[t1])) {
          if (!used.empty()) break;
          for (int t2 = 0; t2 < k && used.empty(); ++t2)
            for (int t3 = 0; t3 < k && used.empty(); ++t3) {
              if (!arc[t1][t2] || !arc[t1][t3] || t2 == t3) continue;
              if (auto m = transitive(g, merger.cm(), trails[t1], trails[t2], trails[t3], v)) {
                joined_trail = std::move(m);
                used = {t1, t2, t3};
                ++st.transitive_moves;
              }
            }
        }
      }
      if (used.empty()) throw InternalError("trail-colour-connected graph with an eulerian factor but no merge move");
    }
    std::sort(used.rbegin(), used.rend());
    for (int u : used) trails.erase(trails.begin() + u);
    trails.push_back(std::move(*joined_trail));
  }
  Trail t = realize_or_throw(g, trails.front());
  if (auto v = verify_spanning_closed_trail(g, t); !v) throw InternalError("merged trail is not spanning: " + v.violation);
  return t;
}

BipartiteDigraph bb_to_digraph(const Graph& g, const std::vector<int>* side) {
  int n = g.n();
  std::vector<int> s(n, -1);
  if (side) {
    if (static_cast<int>(side->size()) != n) throw std::invalid_argument("side vector has the wrong length");
    s = *side;
  } else {
    for (int r = 0; r < n; ++r) {
      if (s[r] >= 0) continue;
      s[r] = 0;
      std::vector<int> stack{r};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
          int w = g.other_end(e, v);
          if (s[w] < 0) {
            s[w] = 1 - s[v];
            stack.push_back(w);
          }
        }
      }
    }
  }
  BipartiteDigraph d;
  d.names = g.names();
  for (int v = 0; v < n; ++v) d.in_x.push_back(s[v] == 0);
  for (const Edge& e : g.edges()) {
    if (s[e.u] == s[e.v]) throw std::invalid_argument("edge " + e.id + " lies inside one side");
    int x = s[e.u] == 0 ? e.u : e.v, y = x == e.u ? e.v : e.u;
    d.arcs.push_back(e.colour == Colour::Red ? std::pair(x, y) : std::pair(y, x));
    d.arc_ids.push_back(e.id);
  }
  return d;
}

Graph bb_from_digraph(const BipartiteDigraph& d) {
  Graph g;
  for (const auto& nm : d.names) g.add_vertex(nm);
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    auto [a, b] = d.arcs[i];
    if (d.in_x.at(a) == d.in_x.at(b)) throw std::invalid_argument("arc inside one side");
    Colour c = d.in_x[a] ? Colour::Red : Colour::Blue;
    int x = d.in_x[a] ? a : b, y = x == a ? b : a;
    std::string id = i < d.arc_ids.size() ? d.arc_ids[i] : "e" + std::to_string(i);
    g.add_edge(id, x, y, c);
  }
  return g;
}

BipartiteVerdict decide_complete_bipartite(const Graph& g, Exec exec) {
  if (!is_complete_bipartite(g)) throw UnsupportedClass("graph is not complete bipartite");
  BipartiteVerdict v;
  bool cc = is_colour_connected(g, exec).connected;
  bool ef = eulerian_factor(g).has_value();
  bool cf = alternating_cycle_factor(g).has_value();
  v.supereulerian = cc && ef;
  v.hamiltonian = cc && cf;
  v.reasons.push_back(cc ? "colour-connected" : "not colour-connected");
  v.reasons.push_back(ef ? "has an eulerian factor" : "no eulerian factor");
  v.reasons.push_back(cf ? "has an alternating cycle factor" : "no alternating cycle factor");
  return v;
}

}  // namespace ecg
