#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecgraph/core.hpp"

namespace ecg {

// Output vertex -> source vertex plus role: "v" (the vertex itself), "r", "b", or "1".."4" for gadget vertices.
struct Provenance {
  int source = -1;
  std::string role;
};

struct ReductionMap {
  Graph graph;
  std::vector<Provenance> provenance;
};

enum class ReductionVariant { Basic, Gadget };

// Output is supereulerian iff g has an alternating hamiltonian cycle.
// Basic: v keeps a blue edge to v_r and a red edge to v_b; red uv -> u_r v_r, blue uv -> u_b v_b.
// Gadget: v is replaced by v_r, v_b, v_1..v_4 with
//   red  v_b v_1, v_2 v_3, v_4 v_1, v_r v_4
//   blue v_1 v_2, v_3 v_4, v_1 v_r, v_2 v_b
// so that v_b v_1 v_2 v_3 v_4 v_1 v_r and its reverse are the only ways through, and
// v_b v_1 v_r v_4 v_3 v_2 v_b is a closed alternating trail on the gadget.
ReductionMap reduce_ham_to_supereulerian(const Graph& g, ReductionVariant variant);

// needall_g, needall_h, efig, halfm, cmg_example. Throws std::invalid_argument on unknown names.
Graph fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

struct GenParams {
  int n = 6;                    // vertices (random_2ec, mclosed_blowup)
  int m = -1;                   // random_2ec edge count; -1 picks one at random
  bool parallel = true;         // random_2ec may repeat a vertex pair
  std::vector<int> parts;       // complete_bipartite / complete_multipartite class sizes
  int r = 2;                    // cmg_family
};

Graph random_2ec(std::uint64_t seed, int n, int m, bool parallel = true);
Graph mclosed_blowup(std::uint64_t seed, int n);
Graph complete_bipartite(std::uint64_t seed, int a, int b);
Graph complete_multipartite(std::uint64_t seed, const std::vector<int>& sizes);
// r >= 2. Z-cycle z1..z4, X = {x1..xr} and Y = {y1..yr}; r = 2 with seed-independent X-Y colours is cmg_example.
Graph cmg_family(int r, std::uint64_t seed = 0);

// model: random_2ec, mclosed_blowup, complete_bipartite, complete_multipartite, cmg_family.
Graph generate(const std::string& model, std::uint64_t seed, const GenParams& p);

}  // namespace ecg
