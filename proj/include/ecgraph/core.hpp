#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ecg {

enum class Colour : std::uint8_t { Red = 1, Blue = 2 };

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
constexpr int index_of(Colour c) { return c == Colour::Red ? 0 : 1; }
constexpr Colour colour_at(int i) { return i == 0 ? Colour::Red : Colour::Blue; }
std::string_view colour_name(Colour c);
std::optional<Colour> colour_from_name(std::string_view s);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a step that the theory says cannot fail does fail.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;
  Colour colour = Colour::Red;
};

// 2-edge-coloured multigraph. Vertices and edges are indexed in declaration order.
class Graph {
 public:
  int add_vertex(std::string name);
  int add_edge(std::string id, int u, int v, Colour c);
  // Edge with an auto-generated id "e<k>".
  int add_edge(int u, int v, Colour c);

  int n() const { return static_cast<int>(names_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return inc_.at(v); }
  int other_end(int e, int v) const;
  int degree(int v, Colour c) const { return deg_.at(v)[index_of(c)]; }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_edge(std::string_view id) const;
  int vertex(std::string_view name) const;  // throws std::invalid_argument

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::array<int, 2>> deg_;
  std::unordered_map<std::string, int> vindex_;
  std::unordered_map<std::string, int> eindex_;
};

// Dense per-colour edge multiplicities; cnt(u,v,c) in O(1).
class ColourMatrix {
 public:
  ColourMatrix() = default;
  explicit ColourMatrix(const Graph& g);
  int n() const { return n_; }
  int count(int u, int v, Colour c) const { return cnt_[index_of(c)][u * n_ + v]; }
  bool has(int u, int v, Colour c) const { return count(u, v, c) > 0; }
  bool adjacent(int u, int v) const { return count(u, v, Colour::Red) + count(u, v, Colour::Blue) > 0; }
  // Returns the colour if all edges between u and v share one colour and at least one exists.
  std::optional<Colour> mono(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<int> cnt_[2];
};

// Trail given by edge indices. For open trails `start` is the first vertex; closed trails return to it.
struct Trail {
  int start = -1;
  std::vector<int> edges;
  bool closed = false;
};

struct FactorPart {
  std::vector<int> vertices;
  Trail trail;
};

struct EulerianFactor {
  std::vector<FactorPart> parts;
};

struct CycleFactor {
  std::vector<Trail> cycles;
};

struct Verdict {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

enum class TrailShape { Trail, Path, Cycle };

// Vertex sequence of a trail (edges.size()+1 entries; closed trails repeat the start at the end).
std::vector<int> trail_vertices(const Graph& g, const Trail& t);
int trail_end(const Graph& g, const Trail& t);
// How many times each vertex occurs on a closed trail (start counted once).
std::vector<int> visit_counts(const Graph& g, const Trail& t);

Verdict verify_trail(const Graph& g, const Trail& t, TrailShape shape = TrailShape::Trail);
// Closed trail covering every vertex of g.
Verdict verify_spanning_closed_trail(const Graph& g, const Trail& t);
Verdict verify_hamiltonian_cycle(const Graph& g, const Trail& t);
Verdict verify_factor(const Graph& g, const EulerianFactor& f);
Verdict verify_factor(const Graph& g, const CycleFactor& f);

// Turns a closed vertex walk (v0 v1 ... v_{k-1}, implicitly back to v0) with prescribed edge colours
// into a trail, assigning distinct parallel edges per (pair, colour). None if some group is overused.
std::optional<Trail> realize_closed_walk(const Graph& g, const std::vector<int>& verts,
                                         const std::vector<Colour>& colours);
// Same for an open walk v0..vk with k colours.
std::optional<Trail> realize_open_walk(const Graph& g, const std::vector<int>& verts,
                                       const std::vector<Colour>& colours);

Trail reversed(const Graph& g, const Trail& t);
// Rotates a closed trail so that it starts at position `pos` of its vertex sequence.
Trail rotated(const Graph& g, const Trail& t, int pos);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts, std::vector<int>* old_of_new = nullptr);
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace ecg
