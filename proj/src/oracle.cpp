#include "ecgraph/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ecg {

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* s = std::getenv("ECGRAPH_BUDGET_SECS")) {
    try {
      b.seconds = std::stod(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("ECGRAPH_BUDGET_SECS is not a number");
    }
  }
  return b;
}

namespace {

class Guard {
 public:
  Guard(const Graph& g, const OracleBudget& b) : deadline_(clock::now() + to_duration(b.seconds)) {
    if (g.n() > b.max_vertices)
      throw BudgetExceeded("oracle refuses " + std::to_string(g.n()) + " vertices (limit " +
                           std::to_string(b.max_vertices) + ")");
    if (g.m() > b.max_edges || g.m() > 64)
      throw BudgetExceeded("oracle refuses " + std::to_string(g.m()) + " edges (limit " +
                           std::to_string(std::min(b.max_edges, 64)) + ")");
  }
  void tick() {
    if ((++ticks_ & 0xfff) == 0 && clock::now() > deadline_) throw BudgetExceeded("oracle time limit reached");
  }

 private:
  using clock = std::chrono::steady_clock;
  static clock::duration to_duration(double s) {
    return std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s));
  }
  clock::time_point deadline_;
  std::uint64_t ticks_ = 0;
};

struct Key {
  std::uint64_t mask;
  std::uint32_t rest;
  bool operator==(const Key&) const = default;
};
struct KeyHash {
  size_t operator()(const Key& k) const { return std::hash<std::uint64_t>()(k.mask * 0x9e3779b97f4a7c15ULL ^ k.rest); }
};
using KeySet = std::unordered_set<Key, KeyHash>;

std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

// Closed alternating trails through `root` within the `allowed` edges, first edge red.
// `done(mask)` decides whether a trail that has just closed is the one wanted.
class ClosedTrailSearch {
 public:
  ClosedTrailSearch(const Graph& g, Guard& guard, std::uint64_t allowed, int root,
                    std::function<bool(std::uint64_t)> done, std::function<bool(int, std::uint64_t)> prune)
      : g_(g), guard_(guard), allowed_(allowed), root_(root), done_(std::move(done)), prune_(std::move(prune)) {}

  std::optional<Trail> run() {
    if (dfs(root_, Colour::Blue, 0)) return Trail{root_, stack_, true};
    return std::nullopt;
  }

 private:
  bool dfs(int cur, Colour last, std::uint64_t used) {
    guard_.tick();
    if (used && cur == root_ && last == Colour::Blue && done_(used)) return true;
    Key k{used, static_cast<std::uint32_t>(cur * 2 + index_of(last))};
    if (failed_.count(k)) return false;
    if (!used || !prune_(cur, used)) {
      for (int e : g_.incident(cur)) {
        if (!(allowed_ & bit(e)) || (used & bit(e)) || g_.edge(e).colour == last) continue;
        stack_.push_back(e);
        if (dfs(g_.other_end(e, cur), g_.edge(e).colour, used | bit(e))) return true;
        stack_.pop_back();
      }
    }
    failed_.insert(k);
    return false;
  }

  const Graph& g_;
  Guard& guard_;
  std::uint64_t allowed_;
  int root_;
  std::function<bool(std::uint64_t)> done_;
  std::function<bool(int, std::uint64_t)> prune_;
  std::vector<int> stack_;
  KeySet failed_;
};

std::vector<char> touched(const Graph& g, std::uint64_t mask) {
  std::vector<char> t(g.n(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (mask & bit(e)) t[g.edge(e).u] = t[g.edge(e).v] = 1;
  return t;
}

}  // namespace

std::optional<Trail> oracle_supereulerian(const Graph& g, const OracleBudget& b) {
  Guard guard(g, b);
  if (g.n() < 2) return std::nullopt;
  std::uint64_t all = g.m() == 64 ? ~std::uint64_t{0} : bit(g.m()) - 1;
  auto done = [&](std::uint64_t used) {
    auto t = touched(g, used);
    for (char c : t)
      if (!c) return false;
    return true;
  };
  // Give up when an untouched vertex or the root is cut off from `cur` by the used edges.
  auto prune = [&](int cur, std::uint64_t used) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{cur};
    seen[cur] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        if (used & bit(e)) continue;
        int y = g.other_end(e, x);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (!seen[0]) return true;
    auto t = touched(g, used);
    for (int v = 0; v < g.n(); ++v)
      if (!t[v] && !seen[v]) return true;
    return false;
  };
  return ClosedTrailSearch(g, guard, all, 0, done, prune).run();
}

std::optional<Trail> oracle_ham_alternating(const Graph& g, const OracleBudget& b) {
  Guard guard(g, b);
  int n = g.n();
  if (n < 2) return std::nullopt;
  std::vector<int> stack;
  KeySet failed;
  std::function<bool(int, Colour, std::uint64_t)> dfs = [&](int cur, Colour last, std::uint64_t visited) -> bool {
    guard.tick();
    if (visited == bit(n) - 1) {
      if (last != Colour::Red) return false;
      for (int e : g.incident(cur))
        if (g.edge(e).colour == Colour::Blue && g.other_end(e, cur) == 0) {
          stack.push_back(e);
          return true;
        }
      return false;
    }
    Key k{visited, static_cast<std::uint32_t>(cur * 2 + index_of(last))};
    if (failed.count(k)) return false;
    for (int e : g.incident(cur)) {
      int w = g.other_end(e, cur);
      if (g.edge(e).colour == last || (visited & bit(w))) continue;
      stack.push_back(e);
      if (dfs(w, g.edge(e).colour, visited | bit(w))) return true;
      stack.pop_back();
    }
    failed.insert(k);
    return false;
  };
  if (!dfs(0, Colour::Blue, 1)) return std::nullopt;
  return Trail{0, stack, true};
}

std::optional<CycleFactor> oracle_cycle_factor(const Graph& g, const OracleBudget& b) {
  Guard guard(g, b);
  int n = g.n();
  if (n == 0) return std::nullopt;
  std::vector<Trail> acc;
  std::unordered_set<std::uint64_t> failed;
  std::function<bool(std::uint64_t)> cover = [&](std::uint64_t covered) -> bool {
    if (covered == bit(n) - 1) return true;
    if (failed.count(covered)) return false;
    int s = 0;
    while (covered & bit(s)) ++s;
    std::vector<int> path;
    std::function<bool(int, Colour, std::uint64_t)> grow = [&](int cur, Colour last, std::uint64_t mask) -> bool {
      guard.tick();
      for (int e : g.incident(cur)) {
        if (g.edge(e).colour == last) continue;
        int w = g.other_end(e, cur);
        if (w == s) {
          if (g.edge(e).colour != Colour::Blue || path.empty()) continue;
          path.push_back(e);
          acc.push_back(Trail{s, path, true});
          if (cover(mask)) return true;
          acc.pop_back();
          path.pop_back();
          continue;
        }
        if (mask & bit(w)) continue;
        path.push_back(e);
        if (grow(w, g.edge(e).colour, mask | bit(w))) return true;
        path.pop_back();
      }
      return false;
    };
    if (grow(s, Colour::Blue, covered | bit(s))) return true;
    failed.insert(covered);
    return false;
  };
  if (!cover(0)) return std::nullopt;
  return CycleFactor{acc};
}

std::optional<EulerianFactor> oracle_eulerian_factor(const Graph& g, const OracleBudget& b) {
  Guard guard(g, b);
  int n = g.n(), m = g.m();
  if (n == 0) return std::nullopt;
  std::vector<int> red(n, 0), blue(n, 0), rem_red(n, 0), rem_blue(n, 0);
  for (const Edge& e : g.edges()) {
    auto& rem = e.colour == Colour::Red ? rem_red : rem_blue;
    ++rem[e.u];
    ++rem[e.v];
  }
  auto feasible = [&](int v) {
    return red[v] <= blue[v] + rem_blue[v] && blue[v] <= red[v] + rem_red[v] && red[v] + rem_red[v] > 0;
  };
  for (int v = 0; v < n; ++v)
    if (!feasible(v)) return std::nullopt;
  std::uint64_t chosen = 0;
  std::function<bool(int)> pick = [&](int e) -> bool {
    guard.tick();
    if (e == m) {
      for (int v = 0; v < n; ++v)
        if (red[v] != blue[v] || red[v] == 0) return false;
      return true;
    }
    const Edge& ed = g.edge(e);
    auto& rem = ed.colour == Colour::Red ? rem_red : rem_blue;
    auto& deg = ed.colour == Colour::Red ? red : blue;
    --rem[ed.u];
    --rem[ed.v];
    for (int take = 1; take >= 0; --take) {
      deg[ed.u] += take;
      deg[ed.v] += take;
      if (take) chosen |= bit(e);
      if (feasible(ed.u) && feasible(ed.v) && pick(e + 1)) return true;
      if (take) chosen &= ~bit(e);
      deg[ed.u] -= take;
      deg[ed.v] -= take;
    }
    ++rem[ed.u];
    ++rem[ed.v];
    return false;
  };
  if (!pick(0)) return std::nullopt;
  // Components of the chosen edges, each toured by its own closed-trail search.
  std::vector<int> comp(n, -1);
  EulerianFactor f;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    FactorPart part;
    std::uint64_t edges = 0;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      part.vertices.push_back(x);
      for (int e : g.incident(x)) {
        if (!(chosen & bit(e))) continue;
        edges |= bit(e);
        int y = g.other_end(e, x);
        if (comp[y] < 0) {
          comp[y] = s;
          stack.push_back(y);
        }
      }
    }
    std::sort(part.vertices.begin(), part.vertices.end());
    auto tour = ClosedTrailSearch(
                    g, guard, edges, s, [&](std::uint64_t used) { return used == edges; },
                    [](int, std::uint64_t) { return false; })
                    .run();
    if (!tour) throw InternalError("balanced component without an alternating euler tour");
    part.trail = *tour;
    f.parts.push_back(std::move(part));
  }
  return f;
}

namespace {

// reach[v]: some alternating path (trail if `trails`) from x starting with `start` ends at v.
std::vector<char> brute_reach(const Graph& g, Guard& guard, int x, Colour start, bool trails) {
  std::vector<char> reach(g.n(), 0);
  KeySet seen;
  std::function<void(int, Colour, std::uint64_t)> go = [&](int cur, Colour last, std::uint64_t mask) {
    guard.tick();
    if (!seen.insert(Key{mask, static_cast<std::uint32_t>(cur * 2 + index_of(last))}).second) return;
    for (int e : g.incident(cur)) {
      if (g.edge(e).colour == last) continue;
      if (mask == 0 && g.edge(e).colour != start) continue;
      int w = g.other_end(e, cur);
      std::uint64_t next;
      if (trails) {
        if (mask & bit(e)) continue;
        next = mask | bit(e);
      } else {
        if (w == x || (mask & bit(w))) continue;
        next = mask | bit(w);
      }
      reach[w] = 1;
      go(w, g.edge(e).colour, next);
    }
  };
  go(x, other(start), 0);
  return reach;
}

bool brute_connected(const Graph& g, const OracleBudget& b, bool trails) {
  Guard guard(g, b);
  if (g.n() < 2) throw std::invalid_argument("colour-connectivity needs at least two vertices");
  for (int x = 0; x < g.n(); ++x)
    for (Colour c : {Colour::Red, Colour::Blue}) {
      auto reach = brute_reach(g, guard, x, c, trails);
      for (int y = 0; y < g.n(); ++y)
        if (y != x && !reach[y]) return false;
    }
  return true;
}

}  // namespace

bool oracle_colour_connected(const Graph& g, const OracleBudget& b) { return brute_connected(g, b, false); }
bool oracle_trail_colour_connected(const Graph& g, const OracleBudget& b) { return brute_connected(g, b, true); }

}  // namespace ecg
