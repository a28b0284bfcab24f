#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "ecgraph/factor.hpp"
#include "ecgraph/matching.hpp"
#include "ecgraph/reductions.hpp"

using namespace ecg;

namespace {

PlainGraph cycle(int n) {
  PlainGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

PlainGraph petersen() {
  PlainGraph g;
  g.n = 10;
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

void check_valid(const PlainGraph& g, const Matching& m) {
  std::vector<int> cover(g.n, 0);
  for (int e : m.edges) {
    auto [u, v] = g.edges[e];
    CHECK(++cover[u] == 1);
    CHECK(++cover[v] == 1);
    CHECK(m.mate[u] == v);
    CHECK(m.mate[v] == u);
  }
  CHECK(std::is_sorted(m.edges.begin(), m.edges.end()));
}

}  // namespace

TEST_CASE("small known optima") {
  CHECK(maximum_matching(cycle(3)).size() == 1);
  CHECK(maximum_matching(cycle(5)).size() == 2);
  auto p = petersen();
  CHECK(brute::max_matching(p) == 5);
  auto m = maximum_matching(p);
  CHECK(m.size() == 5);
  CHECK(m.perfect());
  check_valid(p, m);
}

TEST_CASE("perfect matching edge cases") {
  PlainGraph one;
  one.n = 2;
  one.add_edge(0, 1);
  CHECK(has_perfect_matching(one));
  CHECK(!has_perfect_matching(cycle(5)));
  PlainGraph empty;
  CHECK(has_perfect_matching(empty));
}

TEST_CASE("factor gadget of efig has a perfect matching") {
  CHECK(has_perfect_matching(build_factor_gadget(fixture("efig")).h));
}

TEST_CASE("matches exhaustive optimum on random graphs up to 10 vertices") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    PlainGraph g;
    g.n = 1 + static_cast<int>(rng() % 10);
    int m = static_cast<int>(rng() % 18);
    for (int k = 0; k < m && g.n > 1; ++k) {
      int u = static_cast<int>(rng() % g.n), v = static_cast<int>(rng() % g.n);
      if (u != v) g.add_edge(u, v);
    }
    auto mm = maximum_matching(g);
    check_valid(g, mm);
    REQUIRE_MESSAGE(mm.size() == brute::max_matching(g), "iteration " << iter);
    auto again = maximum_matching(g);
    CHECK(again.edges == mm.edges);
  }
}

TEST_CASE("even_reachable marks the root and vertices at even alternating distance") {
  // Path 0-1-2 with 1-2 matched: from exposed 0, vertex 2 is even.
  PlainGraph g;
  g.n = 3;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  std::vector<int> mate{-1, 2, 1};
  auto even = even_reachable(g, mate, 0);
  CHECK(even[0]);
  CHECK(!even[1]);
  CHECK(even[2]);
}

TEST_CASE("even_reachable equals exhaustive alternating-path reachability") {
  for (int it = 0; it < 20000; ++it) {
    std::mt19937_64 rng(it);
    PlainGraph g;
    g.n = 3 + static_cast<int>(rng() % 8);
    int m = static_cast<int>(rng() % 16);
    for (int k = 0; k < m; ++k) {
      int u = static_cast<int>(rng() % g.n), v = static_cast<int>(rng() % g.n);
      if (u != v) g.add_edge(u, v);
    }
    Matching mm = maximum_matching(g);
    int root = -1;
    for (int v = 0; v < g.n && root < 0; ++v)
      if (mm.mate[v] < 0) root = v;
    if (root < 0) continue;
    std::vector<char> want(g.n, 0), on(g.n, 0);
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    want[root] = on[root] = 1;
    std::function<void(int)> go = [&](int v) {
      for (int w : adj[v]) {
        int x = mm.mate[w];
        if (on[w] || mm.mate[v] == w || x < 0 || on[x]) continue;
        on[w] = on[x] = 1;
        want[x] = 1;
        go(x);
        on[w] = on[x] = 0;
      }
    };
    go(root);
    REQUIRE_MESSAGE(even_reachable(g, mm.mate, root) == want, "iteration " << it);
  }
}
