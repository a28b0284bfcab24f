#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ecgraph/connect.hpp"
#include "ecgraph/core.hpp"

namespace ecg {

// Object 0 c-dominates object 1 (or the reverse): along the dominating closed sequence the vertices
// alternate between c-vertices and c'-vertices; a c-vertex sends only colour-c edges to every vertex of
// the other object, and no c'-edge joins two c-vertices (symmetrically for c'-vertices).
struct DominationCertificate {
  int dominating = 0;
  Colour colour = Colour::Red;   // label of sequence[0]
  std::vector<int> sequence;     // closed vertex sequence of the dominating object, start not repeated
  std::vector<Colour> parity;    // per position of `sequence`
  std::vector<int> dominated;    // vertex set of the other object, ascending
};

Verdict verify_domination(const Graph& g, const DominationCertificate& cert);

// Closed alternating walk as vertices plus edge colours: c[i] joins v[i] and v[i+1 mod L].
struct VCycle {
  std::vector<int> v;
  std::vector<Colour> c;
  int size() const { return static_cast<int>(v.size()); }
};

VCycle to_vcycle(const Graph& g, const Trail& t);
VCycle reversed(const VCycle& c);

std::optional<DominationCertificate> find_domination(const Graph& g, const VCycle& a, const VCycle& b);

// Vertices of a merge view are copies of graph vertices: view vertex x stands for g-vertex base[x]
// (identity for plain cycles, visit copies for trails). Copies of one vertex are non-adjacent and
// similar. With `contract`, a merged cycle is accepted only if it maps back onto distinct edges of g.
struct MergeView {
  const Graph* g = nullptr;
  const ColourMatrix* cm = nullptr;
  std::vector<int> base;
  std::vector<int> block;  // similarity class per g-vertex
  bool contract = false;

  int count(int x, int y, Colour c) const { return base[x] == base[y] ? 0 : cm->count(base[x], base[y], c); }
  bool has(int x, int y, Colour c) const { return count(x, y, c) > 0; }
  bool adjacent(int x, int y) const { return has(x, y, Colour::Red) || has(x, y, Colour::Blue); }
  bool similar(int x, int y) const { return block[base[x]] == block[base[y]]; }
  bool acceptable(const VCycle& c) const;
};

MergeView identity_view(const Graph& g, const ColourMatrix& cm);

enum class MergeMove { Similar, ParallelChords, Chase, Exchange, Exhaustive };
constexpr int kMergeMoves = 5;

struct MergeStats {
  std::array<long, kMergeMoves> moves{};
  long dominations = 0;
  long chase_steps_max = 0;
};

// Search effort for one pair: 0 = similar-vertex and parallel-chord scans, 1 = adds the chord chase
// and bounded edge exchanges, 2 = adds exhaustive search of the union.
std::optional<VCycle> merge_in_view(const MergeView& view, const VCycle& a, const VCycle& b, int level,
                                    MergeStats* stats = nullptr, long* chase_steps = nullptr);

struct MergeOutcome {
  enum class Kind { Merged, Dominates, NoEdgeBetween };
  Kind kind = Kind::NoEdgeBetween;
  std::optional<Trail> cycle;
  std::optional<DominationCertificate> certificate;
};

// i and j index the vertex sequences of C1 and C2. C2 is reversed if its colours do not line up.
Trail merge_similar(const Graph& g, const Trail& c1, const Trail& c2, int i, int j);
// Requires phi(x_i y_j) = phi(x_i x_{i+1}) = phi(x_{i+1} y_{j+1}) = phi(y_j y_{j+1}) in the given orientations.
Trail merge_parallel_chords(const Graph& g, const Trail& c1, const Trail& c2, int i, int j);
// Throws UnsupportedClass unless g is an extension of an M-closed graph; InternalError if neither a
// merge nor a verified certificate is found.
MergeOutcome merge_cycles(const Graph& g, const Trail& c1, const Trail& c2, MergeStats* stats = nullptr);

struct HamResult {
  enum class Kind { Cycle, NotColourConnected, NoCycleFactor };
  Kind kind = Kind::NoCycleFactor;
  std::optional<Trail> cycle;
  std::optional<PairQuery> counterexample;
  MergeStats stats;
};

HamResult alternating_hamiltonian_cycle(const Graph& g, Exec exec = Exec::Parallel);

}  // namespace ecg
