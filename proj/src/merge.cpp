#include "ecgraph/merge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "ecgraph/factor.hpp"
#include "ecgraph/structure.hpp"

namespace ecg {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

VCycle rotate(const VCycle& c, int k) {
  int n = c.size();
  VCycle r;
  r.v.resize(n);
  r.c.resize(n);
  for (int i = 0; i < n; ++i) {
    r.v[i] = c.v[wrap(k + i, n)];
    r.c[i] = c.c[wrap(k + i, n)];
  }
  return r;
}

VCycle concat(VCycle a, const VCycle& b) {
  a.v.insert(a.v.end(), b.v.begin(), b.v.end());
  a.c.insert(a.c.end(), b.c.begin(), b.c.end());
  return a;
}

// b is oriented with b.c[j] == a.c[i]; y_j similar to x_i.
VCycle splice_similar(const VCycle& a, int i, const VCycle& b, int j) { return concat(rotate(a, i), rotate(b, j)); }

// Chords x_i y_j and x_{i+1} y_{j+1}, all four relevant edges of colour a.c[i].
VCycle splice_chords(const VCycle& a, int i, const VCycle& b, int j) {
  VCycle rb = reversed(b);
  return concat(rotate(a, i + 1), rotate(rb, wrap(-j, b.size())));
}

bool has_cross_edge(const MergeView& view, const VCycle& a, const VCycle& b) {
  for (int x : a.v)
    for (int y : b.v)
      if (view.adjacent(x, y)) return true;
  return false;
}

void bump(MergeStats* s, MergeMove m) {
  if (s) ++s->moves[static_cast<int>(m)];
}

std::optional<VCycle> scan_similar(const MergeView& view, const VCycle& a, const VCycle& b) {
  VCycle rb = reversed(b);
  int la = a.size(), lb = b.size();
  for (int i = 0; i < la; ++i)
    for (int j = 0; j < lb; ++j) {
      if (!view.similar(a.v[i], b.v[j])) continue;
      VCycle out = b.c[j] == a.c[i] ? splice_similar(a, i, b, j) : splice_similar(a, i, rb, wrap(-j, lb));
      if (view.acceptable(out)) return out;
    }
  return std::nullopt;
}

// Every single-edge exchange between the two cycles.
std::optional<VCycle> scan_chords(const MergeView& view, const VCycle& a, const VCycle& b) {
  int la = a.size(), lb = b.size();
  for (const VCycle& bo : {b, reversed(b)})
    for (int i = 0; i < la; ++i)
      for (int j = 0; j < lb; ++j) {
        Colour c = a.c[i];
        if (bo.c[j] != c || !view.has(a.v[i], bo.v[j], c) || !view.has(a.v[(i + 1) % la], bo.v[(j + 1) % lb], c))
          continue;
        VCycle out = splice_chords(a, i, bo, j);
        if (view.acceptable(out)) return out;
      }
  return std::nullopt;
}

// Follows chords x_i y_j -> x_{i+1} y_{j+1} while they alternate in colour.
std::optional<VCycle> chase(const MergeView& view, VCycle a, VCycle b, long* steps_out) {
  int la = a.size(), lb = b.size();
  int i = -1, j = -1;
  Colour c = Colour::Red;
  for (int x = 0; x < la && i < 0; ++x)
    for (int y = 0; y < lb && i < 0; ++y)
      for (Colour k : {Colour::Red, Colour::Blue})
        if (view.has(a.v[x], b.v[y], k)) {
          i = x, j = y, c = k;
          break;
        }
  if (i < 0) return std::nullopt;
  if (a.c[i] != c) {
    a = reversed(a);
    i = wrap(-i, la);
  }
  if (b.c[j] != c) {
    b = reversed(b);
    j = wrap(-j, lb);
  }
  long period = std::lcm(static_cast<long>(la), static_cast<long>(lb));
  long steps = 0;
  std::optional<VCycle> out;
  while (steps < period) {
    int ni = (i + 1) % la, nj = (j + 1) % lb;
    if (view.has(a.v[ni], b.v[nj], c)) {
      VCycle m = splice_chords(a, i, b, j);
      if (view.acceptable(m)) out = m;
      break;
    }
    if (!view.has(a.v[ni], b.v[nj], other(c))) break;
    i = ni, j = nj, c = other(c);
    ++steps;
  }
  if (steps_out) *steps_out = steps;
  if (steps > period) throw InternalError("chord chase exceeded its period");
  return out;
}

// Removes ka edges of a and kb edges of b and reconnects the resulting segments by cross or
// internal chords into one alternating cycle.
class Exchange {
 public:
  Exchange(const MergeView& view, const VCycle& a, const VCycle& b, long budget)
      : view_(view), a_(a), b_(b), budget_(budget) {}

  std::optional<VCycle> run(int ka, int kb) {
    std::vector<int> ra, rb;
    std::optional<VCycle> found;
    std::function<bool(const VCycle&, int, int, std::vector<int>&, const std::function<bool()>&)> choose =
        [&](const VCycle& c, int from, int k, std::vector<int>& r, const std::function<bool()>& next) -> bool {
      if (k == 0) return next();
      for (int e = from; e <= c.size() - k; ++e) {
        r.push_back(e);
        if (choose(c, e + 1, k - 1, r, next)) return true;
        r.pop_back();
        if (budget_ <= 0) return true;
      }
      return false;
    };
    choose(a_, 0, ka, ra, [&] {
      return choose(b_, 0, kb, rb, [&] {
        segments(ra, rb);
        if (auto m = pair_up()) {
          found = m;
          return true;
        }
        return budget_ <= 0;
      });
    });
    return found;
  }

  bool exhausted() const { return budget_ <= 0; }

 private:
  struct Seg {
    std::vector<int> v;
    std::vector<Colour> c;
  };

  void cut(const VCycle& c, const std::vector<int>& r) {
    int n = c.size(), k = static_cast<int>(r.size());
    for (int s = 0; s < k; ++s) {
      int from = r[s] + 1, to = s + 1 < k ? r[s + 1] : r[0] + n;
      Seg seg;
      for (int p = from; p <= to; ++p) {
        seg.v.push_back(c.v[p % n]);
        if (p < to) seg.c.push_back(c.c[p % n]);
      }
      segs_.push_back(std::move(seg));
    }
  }

  void segments(const std::vector<int>& ra, const std::vector<int>& rb) {
    segs_.clear();
    cut(a_, ra);
    cut(b_, rb);
    int ends = 2 * static_cast<int>(segs_.size());
    partner_.assign(ends, -1);
    link_.assign(ends, Colour::Red);
    avoid_.assign(ends, -1);
    for (int s = 0; s < static_cast<int>(segs_.size()); ++s)
      if (!segs_[s].c.empty()) {
        avoid_[2 * s] = index_of(segs_[s].c.front());
        avoid_[2 * s + 1] = index_of(segs_[s].c.back());
      }
  }

  int vert(int e) const {
    const Seg& s = segs_[e / 2];
    return e % 2 ? s.v.back() : s.v.front();
  }
  bool single(int e) const { return segs_[e / 2].v.size() == 1; }

  std::optional<VCycle> pair_up() {
    int ends = static_cast<int>(partner_.size());
    int p = 0;
    while (p < ends && partner_[p] >= 0) ++p;
    if (p == ends) return assemble();
    if (--budget_ < 0) return std::nullopt;
    for (int q = p + 1; q < ends; ++q) {
      if (partner_[q] >= 0 || q / 2 == p / 2) continue;
      for (Colour col : {Colour::Red, Colour::Blue}) {
        int ci = index_of(col);
        if (avoid_[p] == ci || avoid_[q] == ci || !view_.has(vert(p), vert(q), col)) continue;
        partner_[p] = q, partner_[q] = p;
        link_[p] = link_[q] = col;
        // A one-vertex segment needs its two links in different colours.
        int sp = single(p) ? (p ^ 1) : -1, sq = single(q) ? (q ^ 1) : -1;
        int old_p = sp >= 0 ? avoid_[sp] : 0, old_q = sq >= 0 ? avoid_[sq] : 0;
        bool ok = true;
        if (sp >= 0) {
          if (avoid_[sp] >= 0 && avoid_[sp] != ci) ok = false;
          avoid_[sp] = ci;
        }
        if (sq >= 0 && ok) {
          if (avoid_[sq] >= 0 && avoid_[sq] != ci) ok = false;
          avoid_[sq] = ci;
        }
        if (ok)
          if (auto r = pair_up()) return r;
        if (sq >= 0) avoid_[sq] = old_q;
        if (sp >= 0) avoid_[sp] = old_p;
        partner_[p] = partner_[q] = -1;
        if (budget_ < 0) return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::optional<VCycle> assemble() {
    VCycle out;
    int nseg = static_cast<int>(segs_.size());
    int e = 0, visited = 0;
    do {
      const Seg& s = segs_[e / 2];
      bool forward = e % 2 == 0;
      int len = static_cast<int>(s.v.size());
      for (int k = 0; k < len; ++k) {
        out.v.push_back(forward ? s.v[k] : s.v[len - 1 - k]);
        if (k + 1 < len) out.c.push_back(forward ? s.c[k] : s.c[len - 2 - k]);
      }
      int exit = e ^ 1;
      out.c.push_back(link_[exit]);
      e = partner_[exit];
      ++visited;
    } while (e != 0 && visited <= nseg);
    if (e != 0 || visited != nseg) return std::nullopt;
    if (!view_.acceptable(out)) return std::nullopt;
    return out;
  }

  const MergeView& view_;
  const VCycle& a_;
  const VCycle& b_;
  long budget_;
  std::vector<Seg> segs_;
  std::vector<int> partner_, avoid_;
  std::vector<Colour> link_;
};

// Depth-first search for an alternating Hamiltonian cycle of the union, with group capacities
// enforced when contracting.
class UnionSearch {
 public:
  UnionSearch(const MergeView& view, const VCycle& a, const VCycle& b, long budget)
      : view_(view), budget_(budget) {
    verts_ = a.v;
    verts_.insert(verts_.end(), b.v.begin(), b.v.end());
  }

  std::optional<VCycle> run() {
    int n = static_cast<int>(verts_.size());
    if (n % 2) return std::nullopt;
    used_.assign(n, 0);
    used_[0] = 1;
    path_ = {0};
    for (Colour first : {Colour::Red, Colour::Blue}) {
      first_ = first;
      if (go(0, std::nullopt)) {
        VCycle out;
        for (int k : path_) out.v.push_back(verts_[k]);
        out.c = cols_;
        return out;
      }
      if (budget_ < 0) break;
    }
    return std::nullopt;
  }

 private:
  long key(int x, int y, Colour c) const {
    long bx = view_.base[x], by = view_.base[y];
    if (bx > by) std::swap(bx, by);
    return (bx * 1000003L + by) * 2 + index_of(c);
  }
  bool take(int x, int y, Colour c) {
    if (!view_.contract) return true;
    int& u = load_[key(x, y, c)];
    if (u >= view_.count(x, y, c)) return false;
    ++u;
    return true;
  }
  void give(int x, int y, Colour c) {
    if (view_.contract) --load_[key(x, y, c)];
  }

  bool go(int cur, std::optional<Colour> last) {
    if (--budget_ < 0) return false;
    int n = static_cast<int>(verts_.size());
    Colour want = last ? other(*last) : first_;
    if (static_cast<int>(path_.size()) == n) {
      if (want != other(first_) || !view_.has(verts_[cur], verts_[0], want)) return false;
      if (!take(verts_[cur], verts_[0], want)) return false;
      cols_.push_back(want);
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (used_[w] || !view_.has(verts_[cur], verts_[w], want)) continue;
      if (!take(verts_[cur], verts_[w], want)) continue;
      used_[w] = 1;
      path_.push_back(w);
      cols_.push_back(want);
      if (go(w, want)) return true;
      cols_.pop_back();
      path_.pop_back();
      used_[w] = 0;
      give(verts_[cur], verts_[w], want);
      if (budget_ < 0) return false;
    }
    return false;
  }

  const MergeView& view_;
  long budget_;
  std::vector<int> verts_, path_;
  std::vector<char> used_;
  std::vector<Colour> cols_;
  std::unordered_map<long, int> load_;
  Colour first_ = Colour::Red;
};

constexpr long kExchangeBudget = 200000;
constexpr long kUnionBudget = 20000000;

}  // namespace

VCycle to_vcycle(const Graph& g, const Trail& t) {
  VCycle c;
  auto seq = trail_vertices(g, t);
  c.v.assign(seq.begin(), seq.end() - 1);
  for (int e : t.edges) c.c.push_back(g.edge(e).colour);
  return c;
}

VCycle reversed(const VCycle& c) {
  int n = c.size();
  VCycle r;
  r.v.resize(n);
  r.c.resize(n);
  for (int i = 0; i < n; ++i) {
    r.v[i] = c.v[wrap(-i, n)];
    r.c[i] = c.c[wrap(-i - 1, n)];
  }
  return r;
}

bool MergeView::acceptable(const VCycle& c) const {
  if (!contract) return true;
  std::map<std::tuple<int, int, int>, int> load;
  int n = c.size();
  for (int i = 0; i < n; ++i) {
    int x = base[c.v[i]], y = base[c.v[(i + 1) % n]];
    if (x == y) return false;
    auto k = std::make_tuple(std::min(x, y), std::max(x, y), index_of(c.c[i]));
    if (++load[k] > cm->count(x, y, c.c[i])) return false;
  }
  return true;
}

MergeView identity_view(const Graph& g, const ColourMatrix& cm) {
  MergeView v;
  v.g = &g;
  v.cm = &cm;
  v.base.resize(g.n());
  std::iota(v.base.begin(), v.base.end(), 0);
  v.block = similarity_partition(g).block_of;
  return v;
}

std::optional<VCycle> merge_in_view(const MergeView& view, const VCycle& a, const VCycle& b, int level,
                                    MergeStats* stats, long* chase_steps) {
  if (!has_cross_edge(view, a, b)) return std::nullopt;
  if (auto m = scan_similar(view, a, b)) {
    bump(stats, MergeMove::Similar);
    return m;
  }
  long steps = 0;
  if (auto m = chase(view, a, b, &steps)) {
    bump(stats, MergeMove::Chase);
    if (stats) stats->chase_steps_max = std::max(stats->chase_steps_max, steps);
    if (chase_steps) *chase_steps = steps;
    return m;
  }
  if (chase_steps) *chase_steps = steps;
  if (auto m = scan_chords(view, a, b)) {
    bump(stats, MergeMove::ParallelChords);
    return m;
  }
  if (level < 1) return std::nullopt;
  Exchange ex(view, a, b, kExchangeBudget);
  for (auto [ka, kb] : {std::pair{1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}}) {
    if (ka > a.size() || kb > b.size()) continue;
    if (auto m = ex.run(ka, kb)) {
      bump(stats, MergeMove::Exchange);
      return m;
    }
    if (ex.exhausted()) break;
  }
  if (level < 2) return std::nullopt;
  if (auto m = UnionSearch(view, a, b, kUnionBudget).run()) {
    bump(stats, MergeMove::Exhaustive);
    return m;
  }
  return std::nullopt;
}

std::optional<DominationCertificate> find_domination(const Graph& g, const VCycle& a, const VCycle& b) {
  for (int d = 0; d < 2; ++d) {
    const VCycle& dom = d == 0 ? a : b;
    const VCycle& sub = d == 0 ? b : a;
    std::set<int> rest(sub.v.begin(), sub.v.end());
    for (bool outgoing : {true, false}) {
      DominationCertificate cert;
      cert.dominating = d;
      cert.sequence = dom.v;
      for (Colour c : dom.c) cert.parity.push_back(outgoing ? c : other(c));
      cert.colour = cert.parity.front();
      cert.dominated.assign(rest.begin(), rest.end());
      if (verify_domination(g, cert)) return cert;
    }
  }
  return std::nullopt;
}

Verdict verify_domination(const Graph& g, const DominationCertificate& cert) {
  int n = static_cast<int>(cert.sequence.size());
  if (n < 2 || n % 2 || cert.parity.size() != cert.sequence.size()) return Verdict::fail("malformed certificate");
  if (cert.colour != cert.parity[0]) return Verdict::fail("colour differs from first label");
  ColourMatrix cm(g);
  std::map<int, Colour> label;
  for (int i = 0; i < n; ++i) {
    if (cert.parity[(i + 1) % n] != other(cert.parity[i])) return Verdict::fail("labels do not alternate");
    int v = cert.sequence[i];
    auto [it, fresh] = label.emplace(v, cert.parity[i]);
    if (!fresh && it->second != cert.parity[i]) return Verdict::fail("vertex " + g.name(v) + " gets both labels");
  }
  for (int y : cert.dominated)
    if (label.count(y)) return Verdict::fail("objects overlap at " + g.name(y));
  for (auto [x, c] : label) {
    for (int y : cert.dominated) {
      if (!cm.has(x, y, c)) return Verdict::fail(g.name(x) + " lacks a " + std::string(colour_name(c)) + " edge to " + g.name(y));
      if (cm.has(x, y, other(c))) return Verdict::fail(g.name(x) + "-" + g.name(y) + " has the wrong colour");
    }
    for (auto [x2, c2] : label)
      if (x2 > x && c2 == c && cm.has(x, x2, other(c)))
        return Verdict::fail("same-label pair " + g.name(x) + "-" + g.name(x2) + " has the other colour");
  }
  return {};
}

namespace {

Verdict check_cycle(const Graph& g, const Trail& t) {
  if (!t.closed) return Verdict::fail("not closed");
  return verify_trail(g, t, TrailShape::Cycle);
}

VCycle oriented_for_splice(const VCycle& a, int i, const VCycle& b, int& j) {
  if (b.c[j] == a.c[i]) return b;
  j = wrap(-j, b.size());
  return reversed(b);
}

Trail realize_or_throw(const Graph& g, const VCycle& c) {
  auto t = realize_closed_walk(g, c.v, c.c);
  if (!t) throw InternalError("merged cycle does not map onto edges");
  return *t;
}

void require_disjoint(const VCycle& a, const VCycle& b) {
  std::set<int> sa(a.v.begin(), a.v.end());
  for (int y : b.v)
    if (sa.count(y)) throw std::invalid_argument("cycles share a vertex");
}

}  // namespace

Trail merge_similar(const Graph& g, const Trail& c1, const Trail& c2, int i, int j) {
  if (!check_cycle(g, c1) || !check_cycle(g, c2)) throw std::invalid_argument("merge_similar: not alternating cycles");
  VCycle a = to_vcycle(g, c1), b = to_vcycle(g, c2);
  require_disjoint(a, b);
  if (i < 0 || i >= a.size() || j < 0 || j >= b.size()) throw std::out_of_range("merge_similar: position");
  ColourMatrix cm(g);
  MergeView view = identity_view(g, cm);
  if (!view.similar(a.v[i], b.v[j])) throw std::invalid_argument("merge_similar: vertices are not similar");
  VCycle bo = oriented_for_splice(a, i, b, j);
  return realize_or_throw(g, splice_similar(a, i, bo, j));
}

Trail merge_parallel_chords(const Graph& g, const Trail& c1, const Trail& c2, int i, int j) {
  if (!check_cycle(g, c1) || !check_cycle(g, c2)) throw std::invalid_argument("merge_parallel_chords: not alternating cycles");
  VCycle a = to_vcycle(g, c1), b = to_vcycle(g, c2);
  require_disjoint(a, b);
  if (i < 0 || i >= a.size() || j < 0 || j >= b.size()) throw std::out_of_range("merge_parallel_chords: position");
  ColourMatrix cm(g);
  Colour c = a.c[i];
  if (b.c[j] != c || !cm.has(a.v[i], b.v[j], c) || !cm.has(a.v[(i + 1) % a.size()], b.v[(j + 1) % b.size()], c))
    throw std::invalid_argument("merge_parallel_chords: chords and cycle edges do not share a colour");
  return realize_or_throw(g, splice_chords(a, i, b, j));
}

MergeOutcome merge_cycles(const Graph& g, const Trail& c1, const Trail& c2, MergeStats* stats) {
  if (!is_extension_of_m_closed(g)) throw UnsupportedClass("graph is not an extension of an M-closed graph");
  if (!check_cycle(g, c1) || !check_cycle(g, c2)) throw std::invalid_argument("merge_cycles: not alternating cycles");
  VCycle a = to_vcycle(g, c1), b = to_vcycle(g, c2);
  require_disjoint(a, b);
  ColourMatrix cm(g);
  MergeView view = identity_view(g, cm);
  MergeOutcome out;
  if (!has_cross_edge(view, a, b)) return out;
  if (auto m = merge_in_view(view, a, b, 1, stats)) {
    out.kind = MergeOutcome::Kind::Merged;
    out.cycle = realize_or_throw(g, *m);
    return out;
  }
  if (auto cert = find_domination(g, a, b)) {
    if (stats) ++stats->dominations;
    out.kind = MergeOutcome::Kind::Dominates;
    out.certificate = std::move(cert);
    return out;
  }
  if (auto m = merge_in_view(view, a, b, 2, stats)) {
    out.kind = MergeOutcome::Kind::Merged;
    out.cycle = realize_or_throw(g, *m);
    return out;
  }
  throw InternalError("two cycles neither merge nor dominate");
}

HamResult alternating_hamiltonian_cycle(const Graph& g, Exec exec) {
  if (g.n() < 2) throw std::invalid_argument("graph needs at least two vertices");
  if (!is_extension_of_m_closed(g)) throw UnsupportedClass("graph is not an extension of an M-closed graph");
  HamResult res;
  auto factor = alternating_cycle_factor(g);
  if (!factor) return res;
  auto cc = is_colour_connected(g, exec);
  if (!cc.connected) {
    res.kind = HamResult::Kind::NotColourConnected;
    res.counterexample = cc.counterexample;
    return res;
  }
  ColourMatrix cm(g);
  MergeView view = identity_view(g, cm);
  struct Item {
    int id;
    VCycle c;
  };
  std::vector<Item> items;
  int next_id = 0;
  for (const Trail& t : factor->cycles) items.push_back({next_id++, to_vcycle(g, t)});
  std::set<std::pair<int, int>> dead;  // pairs that dominate or share no edge
  while (items.size() > 1) {
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
      int mx = *std::min_element(x.c.v.begin(), x.c.v.end()), my = *std::min_element(y.c.v.begin(), y.c.v.end());
      return std::pair(x.c.size(), mx) < std::pair(y.c.size(), my);
    });
    bool merged = false;
    for (int level = 0; level <= 2 && !merged; ++level) {
      for (size_t p = 0; p < items.size() && !merged; ++p)
        for (size_t q = p + 1; q < items.size() && !merged; ++q) {
          auto key = std::minmax(items[p].id, items[q].id);
          if (dead.count(key)) continue;
          if (!has_cross_edge(view, items[p].c, items[q].c)) {
            dead.insert(key);
            continue;
          }
          if (level == 2 && find_domination(g, items[p].c, items[q].c)) {
            ++res.stats.dominations;
            dead.insert(key);
            continue;
          }
          if (auto m = merge_in_view(view, items[p].c, items[q].c, level, &res.stats)) {
            Item joined{next_id++, std::move(*m)};
            items.erase(items.begin() + static_cast<long>(q));
            items.erase(items.begin() + static_cast<long>(p));
            items.push_back(std::move(joined));
            merged = true;
          }
        }
    }
    if (!merged) throw InternalError("colour-connected graph with a cycle factor but no mergeable pair");
  }
  Trail t = realize_or_throw(g, items.front().c);
  if (auto v = verify_hamiltonian_cycle(g, t); !v) throw InternalError("merged cycle is not Hamiltonian: " + v.violation);
  res.kind = HamResult::Kind::Cycle;
  res.cycle = t;
  return res;
}

}  // namespace ecg
