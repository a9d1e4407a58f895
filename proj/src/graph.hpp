#ifndef RCANON_GRAPH_HPP
#define RCANON_GRAPH_HPP

#include <utility>
#include <vector>

#include "expr.hpp"

namespace rcanon {

// A seat: one of the four index positions of a factor (vertex).
struct Seat {
  int vertex = 0;  // factor position, 0-based
  int slot = 0;    // 0..3
};

inline bool operator==(const Seat& a, const Seat& b) { return a.vertex == b.vertex && a.slot == b.slot; }
inline bool operator<(const Seat& a, const Seat& b) {
  return a.vertex != b.vertex ? a.vertex < b.vertex : a.slot < b.slot;
}

// Seats as vertices, one edge per dummy-name pair; free seats labeled.
struct DetailedGraph {
  int vertex_count = 0;
  std::vector<std::pair<Seat, Seat>> edges;            // each pair ordered, list sorted
  std::vector<std::pair<Seat, Index>> free_labels;     // sorted by seat
};

DetailedGraph detailed_graph_of(const RMonomial& m);

// Factor-level multigraph: factors as vertices, dummy pairs as edges.
struct ConnectionMultigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs (a <= b), loops allowed
  std::vector<int> free_degree;
};

ConnectionMultigraph connection_multigraph_of(const RMonomial& m);

// Partition of the factors by multigraph connectivity. Components keep their
// original index names and are returned monic, in first-factor order; the
// input coefficient is returned separately.
struct ComponentSplit {
  Rational coeff;
  std::vector<RMonomial> components;
};

ComponentSplit connected_components(const RMonomial& m);

bool is_connected(const RMonomial& m);

enum class VertexClass { Free, Ricci, Complete };

// Free iff the factor carries any free index; otherwise Ricci iff it has a
// loop (one of its dummies occurs twice within the factor), else complete.
std::vector<VertexClass> classify_vertices(const RMonomial& m);

// Serial index representation of a detailed graph under a vertex order:
// seats traversed in vertex order then slot order, free seats emit their
// label, each edge's integer is the first-occurrence rank of its seats.
struct SerialToken {
  bool is_free = false;
  Index free_index;  // when is_free
  int dummy = 0;     // when !is_free
};

std::vector<SerialToken> serial_index_representation(const DetailedGraph& d,
                                                     const std::vector<int>& order);

}  // namespace rcanon

#endif
