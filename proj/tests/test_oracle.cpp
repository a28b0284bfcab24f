#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "brute.hpp"
#include "ecgraph/oracle.hpp"
#include "ecgraph/reductions.hpp"
#include "support.hpp"

using namespace ecg;

TEST_CASE("fixture answers") {
  Graph e = fixture("efig");
  auto t = oracle_supereulerian(e);
  REQUIRE(t);
  CHECK(verify_spanning_closed_trail(e, *t));
  CHECK(t->edges.size() == 8);
  CHECK(!oracle_supereulerian(fixture("halfm")));
  CHECK(!brute::supereulerian(fixture("halfm")));
  CHECK(!oracle_supereulerian(fixture("cmg_example")));
  CHECK(!brute::supereulerian(fixture("cmg_example")));

  Graph h = fixture("needall_h");
  auto c = oracle_ham_alternating(h);
  REQUIRE(c);
  CHECK(c->edges.size() == 8);
  CHECK(verify_hamiltonian_cycle(h, *c));
  CHECK(!oracle_ham_alternating(fixture("halfm")));
  CHECK(!brute::hamiltonian(fixture("halfm")));

  Graph m = fixture("halfm");
  auto f = oracle_cycle_factor(m);
  REQUIRE(f);
  CHECK(verify_factor(m, *f));
  CHECK(f->cycles.size() == 2);

  Graph tri;
  for (auto s : {"a", "b", "c"}) tri.add_vertex(s);
  for (int i = 0; i < 3; ++i) tri.add_edge(i, (i + 1) % 3, Colour::Red);
  CHECK(!oracle_eulerian_factor(tri));

  CHECK(oracle_colour_connected(fixture("halfm")));
  CHECK(!oracle_trail_colour_connected(fixture("needall_g")));
  CHECK(oracle_trail_colour_connected(fixture("needall_h")));
}

TEST_CASE("budget is enforced") {
  Graph big = cmg_family(3, 1);
  CHECK_THROWS_AS(oracle_supereulerian(big), BudgetExceeded);
  CHECK_NOTHROW(oracle_cycle_factor(big, OracleBudget{}.unbounded_size()));
  CHECK_THROWS_AS(oracle_supereulerian(fixture("efig"), OracleBudget{4, 22, 30}), BudgetExceeded);
  setenv("ECGRAPH_BUDGET_SECS", "2.5", 1);
  CHECK(OracleBudget::from_env().seconds == doctest::Approx(2.5));
  unsetenv("ECGRAPH_BUDGET_SECS");
  CHECK(OracleBudget::from_env().seconds == doctest::Approx(30));
}

TEST_CASE("oracles agree with plain enumeration") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    Graph g = random_2ec(seed, n, 3 + static_cast<int>(seed % 9), true);
    auto se = oracle_supereulerian(g);
    REQUIRE_MESSAGE(se.has_value() == brute::supereulerian(g), "seed " << seed);
    if (se) CHECK(verify_spanning_closed_trail(g, *se));
    auto ham = oracle_ham_alternating(g);
    REQUIRE(ham.has_value() == brute::hamiltonian(g));
    if (ham) CHECK(verify_hamiltonian_cycle(g, *ham));
    auto ef = oracle_eulerian_factor(g);
    REQUIRE(ef.has_value() == brute::eulerian_factor(g));
    if (ef) CHECK(verify_factor(g, *ef));
    auto cf = oracle_cycle_factor(g);
    REQUIRE(cf.has_value() == brute::cycle_factor(g));
    if (cf) CHECK(verify_factor(g, *cf));
    CHECK(oracle_colour_connected(g) == brute::connected(g, false));
    CHECK(oracle_trail_colour_connected(g) == brute::connected(g, true));
  }
}
