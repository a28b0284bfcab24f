#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ecgraph/connect.hpp"
#include "ecgraph/core.hpp"
#include "ecgraph/merge.hpp"

namespace ecg {

struct TrailMergeOutcome {
  enum class Kind { Merged, Dominates, NoEdgeBetween };
  Kind kind = Kind::NoEdgeBetween;
  std::optional<Trail> trail;
  std::optional<DominationCertificate> certificate;
};

// Merges two vertex-disjoint closed alternating trails by working on the blow-up in which every
// vertex gets one copy per visit. Throws UnsupportedClass outside extensions of M-closed graphs.
TrailMergeOutcome merge_trails_pair(const Graph& g, const Trail& t1, const Trail& t2);

struct TournamentArc {
  int from = -1;  // index of the dominating trail
  int to = -1;
  Colour colour = Colour::Red;
  DominationCertificate certificate;
};

struct TrailDominationTournament {
  int nodes = 0;
  std::vector<TournamentArc> arcs;
};

// certs[0]: Ta -> Tb, certs[1]: Tb -> Tc, certs[2]: Tc -> Ta. Inconsistent certificates raise InternalError.
Trail merge_trails_3cycle(const Graph& g, const Trail& ta, const Trail& tb, const Trail& tc,
                          const std::array<DominationCertificate, 3>& certs);

// v on T1 sends one colour to all of V(T2) and the other colour to all of V(T3); none otherwise.
std::optional<Trail> merge_trails_transitive(const Graph& g, const Trail& t1, const Trail& t2, const Trail& t3, int v);

struct SupereulerStats {
  MergeStats merge;
  long pair_merges = 0;
  long direct_searches = 0;
  long three_cycle_moves = 0;
  long transitive_moves = 0;
};

struct SupereulerResult {
  enum class Kind { SpanningTrail, NoEulerianFactor, NotTrailColourConnected };
  Kind kind = Kind::NoEulerianFactor;
  std::optional<Trail> trail;
  std::optional<PairQuery> counterexample;
  SupereulerStats stats;
};

SupereulerResult supereulerian(const Graph& g, Exec exec = Exec::Parallel);

// The merge loop on its own, from a given partition into closed trails. Requires a
// trail-colour-connected extension of an M-closed graph; raises InternalError when stuck.
Trail merge_factor_trails(const Graph& g, const std::vector<Trail>& parts, SupereulerStats* stats = nullptr);

// Red xy (x in X) becomes the arc x -> y, blue xy becomes y -> x.
struct BipartiteDigraph {
  std::vector<std::string> names;
  std::vector<char> in_x;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::string> arc_ids;
};

// Without `side`, each component's first vertex goes to X. Throws std::invalid_argument if g is not bipartite.
BipartiteDigraph bb_to_digraph(const Graph& g, const std::vector<int>* side = nullptr);
Graph bb_from_digraph(const BipartiteDigraph& d);

struct BipartiteVerdict {
  bool supereulerian = false;
  bool hamiltonian = false;
  std::vector<std::string> reasons;
};

// Throws UnsupportedClass unless g is complete bipartite.
BipartiteVerdict decide_complete_bipartite(const Graph& g, Exec exec = Exec::Parallel);

}  // namespace ecg
