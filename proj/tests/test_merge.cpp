#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "ecgraph/connect.hpp"
#include "ecgraph/factor.hpp"
#include "ecgraph/merge.hpp"
#include "ecgraph/oracle.hpp"
#include "ecgraph/reductions.hpp"
#include "ecgraph/structure.hpp"
#include "support.hpp"

using namespace ecg;

namespace {

std::vector<int> union_of(const Graph& g, const Trail& a, const Trail& b) {
  auto u = support::sorted_vertices(g, a);
  auto v = support::sorted_vertices(g, b);
  u.insert(u.end(), v.begin(), v.end());
  std::sort(u.begin(), u.end());
  return u;
}

// Complete graph on x1..x4, y1..y4 where the x 4-cycle red-dominates the y 4-cycle.
Graph dominated_pair() {
  Graph g;
  for (auto s : {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"}) g.add_vertex(s);
  auto R = Colour::Red, B = Colour::Blue;
  auto e = [&](const char* a, const char* b, Colour c) { g.add_edge(std::string(a) + "-" + b, g.vertex(a), g.vertex(b), c); };
  e("x1", "x2", R), e("x2", "x3", B), e("x3", "x4", R), e("x4", "x1", B);
  e("y1", "y2", R), e("y2", "y3", B), e("y3", "y4", R), e("y4", "y1", B);
  e("x1", "x3", R), e("x2", "x4", B), e("y1", "y3", R), e("y2", "y4", B);
  for (auto x : {"x1", "x3"})
    for (auto y : {"y1", "y2", "y3", "y4"}) e(x, y, R);
  for (auto x : {"x2", "x4"})
    for (auto y : {"y1", "y2", "y3", "y4"}) e(x, y, B);
  return g;
}

}  // namespace

TEST_CASE("needall_h: Hamiltonian 8-cycle") {
  Graph g = fixture("needall_h");
  // x1x2 and y1y2 are the only blue edges at their ends, so every cycle factor is one 8-cycle.
  auto f = alternating_cycle_factor(g);
  REQUIRE(f);
  CHECK(f->cycles.size() == 1);
  CHECK(!oracle_cycle_factor(induced_subgraph(g, {0, 1, 2, 3})));
  auto ham = alternating_hamiltonian_cycle(g);
  REQUIRE(ham.kind == HamResult::Kind::Cycle);
  CHECK(ham.cycle->edges.size() == 8);
  CHECK(verify_hamiltonian_cycle(g, *ham.cycle));
  Trail ref = support::closed_walk(g, {"y1", "v1", "u1", "x1", "x2", "u2", "v2", "y2"});
  CHECK(verify_hamiltonian_cycle(g, ref));
}

TEST_CASE("halfm is rejected before merging") {
  CHECK_THROWS_AS(alternating_hamiltonian_cycle(fixture("halfm")), UnsupportedClass);
}

TEST_CASE("cycles without a joining edge") {
  Graph g;
  for (auto s : {"a", "b", "c", "d"}) g.add_vertex(s);
  g.add_edge(0, 1, Colour::Red);
  g.add_edge(0, 1, Colour::Blue);
  g.add_edge(2, 3, Colour::Red);
  g.add_edge(2, 3, Colour::Blue);
  Trail c1{0, {0, 1}, true}, c2{2, {2, 3}, true};
  CHECK(merge_cycles(g, c1, c2).kind == MergeOutcome::Kind::NoEdgeBetween);
  auto ham = alternating_hamiltonian_cycle(g);
  CHECK(ham.kind == HamResult::Kind::NotColourConnected);
}

TEST_CASE("engineered domination is certified") {
  Graph g = dominated_pair();
  REQUIRE(is_extension_of_m_closed(g));
  Trail cx = support::closed_walk(g, {"x1", "x2", "x3", "x4"});
  Trail cy = support::closed_walk(g, {"y1", "y2", "y3", "y4"});
  auto out = merge_cycles(g, cx, cy);
  REQUIRE(out.kind == MergeOutcome::Kind::Dominates);
  const auto& cert = *out.certificate;
  CHECK(verify_domination(g, cert));
  CHECK(cert.dominating == 0);
  CHECK(cert.dominated.size() == 4);
  for (size_t i = 0; i < cert.sequence.size(); ++i) {
    std::string nm = g.name(cert.sequence[i]);
    CHECK(cert.parity[i] == (nm == "x1" || nm == "x3" ? Colour::Red : Colour::Blue));
  }
  CHECK(!is_trail_colour_connected(g).connected);
  CHECK(!is_colour_connected(g).connected);
  // Tampered certificates are rejected.
  auto bad = cert;
  bad.parity[0] = other(bad.parity[0]);
  CHECK(!verify_domination(g, bad));
  bad = cert;
  std::swap(bad.sequence[0], bad.sequence[1]);
  CHECK(!verify_domination(g, bad));
}

TEST_CASE("similar and parallel-chord splices on random extensions") {
  int similar = 0, chords = 0;
  for (std::uint64_t seed = 1; seed <= 800; ++seed) {
    Graph g = mclosed_blowup(seed, 4 + static_cast<int>(seed % 5));
    auto f = alternating_cycle_factor(g);
    if (!f || f->cycles.size() < 2) continue;
    ColourMatrix cm(g);
    auto sim = similarity_partition(g).block_of;
    for (size_t p = 0; p < f->cycles.size(); ++p)
      for (size_t q = p + 1; q < f->cycles.size(); ++q) {
        const Trail &c1 = f->cycles[p], &c2 = f->cycles[q];
        auto a = to_vcycle(g, c1), b = to_vcycle(g, c2);
        auto want = union_of(g, c1, c2);
        for (int i = 0; i < a.size(); ++i)
          for (int j = 0; j < b.size(); ++j) {
            if (sim[a.v[i]] == sim[b.v[j]]) {
              Trail t = merge_similar(g, c1, c2, i, j);
              CHECK(verify_trail(g, t, TrailShape::Cycle));
              CHECK(support::sorted_vertices(g, t) == want);
              ++similar;
            } else {
              CHECK_THROWS_AS(merge_similar(g, c1, c2, i, j), std::invalid_argument);
            }
            Colour c = a.c[i];
            if (b.c[j] == c && cm.has(a.v[i], b.v[j], c) && cm.has(a.v[(i + 1) % a.size()], b.v[(j + 1) % b.size()], c)) {
              Trail t = merge_parallel_chords(g, c1, c2, i, j);
              CHECK(verify_trail(g, t, TrailShape::Cycle));
              CHECK(support::sorted_vertices(g, t) == want);
              ++chords;
            }
          }
      }
  }
  CHECK(similar > 5);
  CHECK(chords > 5);
}

namespace {

struct Pair {
  Graph g;
  Trail c1, c2;
};

// Two disjoint alternating cycles plus random edges, then M-closed by random closure.
Pair random_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n1 = 2 + 2 * static_cast<int>(rng() % 3), n2 = 2 + 2 * static_cast<int>(rng() % 2);
  double p = 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
  Graph g;
  for (int i = 0; i < n1 + n2; ++i) g.add_vertex((i < n1 ? "a" : "b") + std::to_string(i < n1 ? i : i - n1));
  std::vector<int> w1, w2;
  std::vector<Colour> k1, k2;
  auto lay = [&](int off, int len, std::vector<int>& w, std::vector<Colour>& k) {
    Colour first = colour_at(static_cast<int>(rng() & 1));
    for (int i = 0; i < len; ++i) {
      w.push_back(off + i);
      k.push_back(i % 2 ? other(first) : first);
      g.add_edge(off + i, off + (i + 1) % len, k.back());
    }
  };
  lay(0, n1, w1, k1);
  lay(n1, n2, w2, k2);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (static_cast<double>(rng() % 1000) / 1000.0 < p) g.add_edge(u, v, colour_at(static_cast<int>(rng() & 1)));
  Pair out{m_closure(g, ClosurePolicy::SeededRandom, seed), {}, {}};
  out.c1 = *realize_closed_walk(out.g, w1, k1);
  out.c2 = *realize_closed_walk(out.g, w2, k2);
  return out;
}

// Complete graph in which a random alternating cycle dominates another one.
Pair random_dominated_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n1 = 2 + 2 * static_cast<int>(rng() % 3), n2 = 2 + 2 * static_cast<int>(rng() % 3);
  Colour c = colour_at(static_cast<int>(rng() & 1));
  auto rnd = [&] { return colour_at(static_cast<int>(rng() & 1)); };
  Graph g;
  for (int i = 0; i < n1 + n2; ++i) g.add_vertex("v" + std::to_string(i));
  auto label = [&](int x) { return x % 2 == 0 ? c : other(c); };
  std::vector<int> w1, w2;
  std::vector<Colour> k1, k2;
  for (int i = 0; i < n1; ++i) w1.push_back(i), k1.push_back(label(i));
  Colour f2 = rnd();
  for (int i = 0; i < n2; ++i) w2.push_back(n1 + i), k2.push_back(i % 2 ? other(f2) : f2);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      Colour col;
      if (u < n1 && v < n1) {
        if (v == u + 1) col = label(u);
        else if (u == 0 && v == n1 - 1) col = label(v);
        else col = label(u) == label(v) ? label(u) : rnd();
      } else if (u < n1) {
        col = label(u);
      } else if (v == u + 1) {
        col = k2[u - n1];
      } else if (u == n1 && v == g.n() - 1) {
        col = k2[v - n1];
      } else {
        col = rnd();
      }
      g.add_edge(u, v, col);
      bool digon = (u == 0 && v == 1 && n1 == 2) || (u == n1 && v == n1 + 1 && n2 == 2);
      if (digon) g.add_edge(u, v, other(col));
    }
  Pair out{g, {}, {}};
  out.c1 = *realize_closed_walk(g, w1, k1);
  out.c2 = *realize_closed_walk(g, w2, k2);
  return out;
}

}  // namespace

TEST_CASE("merge outcome tracks colour-connectivity of the union") {
  int merged = 0, dominated = 0;
  MergeStats stats;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    Pair pr = seed % 3 == 0 ? random_dominated_pair(seed) : random_pair(seed);
    const Graph& g = pr.g;
    REQUIRE(is_extension_of_m_closed(g));
    auto out = merge_cycles(g, pr.c1, pr.c2, &stats);
    bool cc = is_colour_connected(g).connected;
    CHECK_MESSAGE((out.kind == MergeOutcome::Kind::Merged) == cc, "seed " << seed);
    if (seed % 3 == 0) CHECK(out.kind == MergeOutcome::Kind::Dominates);
    if (out.kind == MergeOutcome::Kind::Merged) {
      ++merged;
      CHECK(verify_hamiltonian_cycle(g, *out.cycle));
    } else if (out.kind == MergeOutcome::Kind::Dominates) {
      ++dominated;
      CHECK(verify_domination(g, *out.certificate));
      CHECK(!is_trail_colour_connected(g).connected);
    }
  }
  MESSAGE("merged " << merged << " dominated " << dominated << " chase "
                    << stats.moves[static_cast<int>(MergeMove::Chase)] << " exchange "
                    << stats.moves[static_cast<int>(MergeMove::Exchange)] << " exhaustive "
                    << stats.moves[static_cast<int>(MergeMove::Exhaustive)]);
  CHECK(merged > 500);
  CHECK(dominated > 500);
}

TEST_CASE("Hamiltonian search matches the oracle") {
  int ham = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    Graph g = mclosed_blowup(seed, 2 + static_cast<int>(seed % 8));
    auto r = alternating_hamiltonian_cycle(g, seed % 2 ? Exec::Serial : Exec::Parallel);
    bool oracle = oracle_ham_alternating(g, OracleBudget{}.unbounded_size()).has_value();
    bool predicted = is_colour_connected(g).connected && alternating_cycle_factor(g).has_value();
    CHECK_MESSAGE((r.kind == HamResult::Kind::Cycle) == oracle, "seed " << seed);
    CHECK(predicted == oracle);
    ++total;
    if (r.kind == HamResult::Kind::Cycle) {
      ++ham;
      CHECK(verify_hamiltonian_cycle(g, *r.cycle));
    }
  }
  MESSAGE("hamiltonian " << ham << " of " << total);
  CHECK(ham > 100);
}
