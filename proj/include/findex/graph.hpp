#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace findex {

using Vertex = std::size_t;

// An edge as supplied at construction; orientation carries no meaning.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Position of an edge in its graph's edge list.
struct EdgeId {
  std::size_t index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Immutable simple undirected graph on vertices 0..vertex_count()-1.
///
/// Edges keep their input order, so EdgeId is stable for the lifetime of the
/// value. Neighbor lists are sorted ascending; incident-edge lists are sorted
/// by EdgeId.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws Error (self_loop, index_out_of_range,
  /// duplicate_edge) naming the first offending edge in input order.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return neighbors_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const EdgeId> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> canonical_edges() const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Two graphs are equal when they have the same vertex count and the same
// edge set, independent of edge-list order.
bool same_edge_set(const Graph& a, const Graph& b);

Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<Vertex, Vertex>> edge_pairs);
Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs);

std::size_t degree(const Graph& g, Vertex v);

enum class Family { path, cycle, complete, star, complete_bipartite };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Standard families with canonical labeling: path and cycle vertices follow
/// traversal order, the star center is 0, complete_bipartite puts the first
/// part at 0..a-1. Throws Error(invalid_family_params).
Graph gen_family(Family family, std::size_t a, std::size_t b = 0);

inline Graph path_graph(std::size_t n) { return gen_family(Family::path, n); }
inline Graph cycle_graph(std::size_t n) { return gen_family(Family::cycle, n); }
inline Graph complete_graph(std::size_t n) { return gen_family(Family::complete, n); }

// True iff the graph has exactly one component. The 0-vertex graph is not
// connected.
bool is_connected(const Graph& g);

}  // namespace findex
