#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecgraph/core.hpp"
#include "ecgraph/matching.hpp"

namespace ecg {

// A vertex without an incident edge of some colour: no closed alternating trail can visit it.
struct NoFactor : std::runtime_error {
  int vertex;
  explicit NoFactor(int v) : std::runtime_error("vertex lacks an edge of one colour"), vertex(v) {}
};

struct FactorGadget {
  enum class Kind { RToR2, R2ToB2, B2ToB, External };
  PlainGraph h;
  // Per source vertex: R, R' (r-1 vertices), B, B' (b-1 vertices).
  std::vector<std::vector<int>> r, r2, b, b2;
  std::vector<Kind> kind;    // per gadget edge
  std::vector<int> origin;   // per gadget edge: source edge index, -1 for internal
  std::vector<int> owner;    // per gadget edge: source vertex of an internal edge, -1 for external
};

// Throws NoFactor for a colour-deficient vertex.
FactorGadget build_factor_gadget(const Graph& g);

struct FactorDetail {
  EulerianFactor factor;
  std::vector<int> selected;    // chosen source edges, ascending
  std::vector<int> r2b2_edges;  // per vertex: matched R'-B' gadget edges
};

std::optional<FactorDetail> eulerian_factor_detail(const Graph& g);
std::optional<EulerianFactor> eulerian_factor(const Graph& g);

// Digons are allowed unless `forbid_digons`; the restricted variant is solved exhaustively and
// throws BudgetExceeded beyond `max_n_exhaustive` vertices when the matching answer contains a digon.
std::optional<CycleFactor> alternating_cycle_factor(const Graph& g, bool forbid_digons = false,
                                                    int max_n_exhaustive = 12);

// Closed alternating trail through every edge of a connected graph; none if some vertex has
// unequal red and blue degree (reported through `bad_vertex`).
std::optional<Trail> alternating_euler_tour(const Graph& g, int* bad_vertex = nullptr);
// Same on the sub-multigraph formed by `edge_subset` (indices into g).
std::optional<Trail> alternating_euler_tour(const Graph& g, const std::vector<int>& edge_subset,
                                            int* bad_vertex = nullptr);

}  // namespace ecg
