#pragma once

#include <optional>

#include "ecgraph/core.hpp"

namespace ecg {

// Inputs above the vertex or edge bound are refused with BudgetExceeded; so is a search that outlives `seconds`.
struct OracleBudget {
  int max_vertices = 10;
  int max_edges = 22;
  double seconds = 30.0;

  // Default bounds, with the time limit taken from ECGRAPH_BUDGET_SECS when set.
  static OracleBudget from_env();
  // Bounds wide enough for any graph the searches can represent (at most 64 edges); time limit kept.
  OracleBudget unbounded_size() const { return {64, 64, seconds}; }
};

std::optional<Trail> oracle_supereulerian(const Graph& g, const OracleBudget& b = {});
std::optional<Trail> oracle_ham_alternating(const Graph& g, const OracleBudget& b = {});
std::optional<EulerianFactor> oracle_eulerian_factor(const Graph& g, const OracleBudget& b = {});
std::optional<CycleFactor> oracle_cycle_factor(const Graph& g, const OracleBudget& b = {});
bool oracle_colour_connected(const Graph& g, const OracleBudget& b = {});
bool oracle_trail_colour_connected(const Graph& g, const OracleBudget& b = {});

}  // namespace ecg
