#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ecgraph/core.hpp"

namespace ecg {

struct MClosedCheck {
  bool closed = true;
  std::optional<std::tuple<int, int, int>> violation;  // (x, y, z): xy, yz same colour, x and z non-adjacent
};

MClosedCheck is_m_closed(const Graph& g);

enum class ClosurePolicy { AlwaysRed, AlwaysBlue, SeededRandom };

Graph m_closure(const Graph& g, ClosurePolicy policy, std::uint64_t seed = 0);

// Two vertices are similar iff they have identical rows of coloured edge multiplicities.
// Equal rows force non-adjacency (row_u[v] = row_v[v] = 0), and row equality is an equivalence.
// The partition is also the coarsest legal one: copies of one vertex in an extension have equal
// rows, so grouping any non-similar pair can never produce a valid base.
struct SimilarityPartition {
  std::vector<std::vector<int>> blocks;  // ordered by first member
  std::vector<int> block_of;
  Graph quotient;                        // vertex k = blocks[k], named after its first member
  std::vector<int> multiplicity;
};

SimilarityPartition similarity_partition(const Graph& g);

struct BlowUp {
  Graph graph;
  std::vector<std::pair<int, int>> origin;  // new vertex -> (source vertex, copy index from 0)
  std::vector<int> edge_origin;             // new edge -> source edge
};

// Vertex v becomes copies named "<v>#1".."<v>#p"; throws std::invalid_argument for p < 1.
BlowUp blow_up(const Graph& g, const std::vector<int>& multiplicities);

struct Extension {
  Graph base;
  std::vector<int> multiplicity;
  std::vector<std::vector<int>> blocks;
};

std::optional<Extension> is_extension_of_m_closed(const Graph& g);

}  // namespace ecg
