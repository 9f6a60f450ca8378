#pragma once

#include "findex/graph.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace findex {

// The four subdivision-related graphs, ordered S < R < Q < T.
enum class DerivedKind { S, R, Q, T };

inline constexpr std::array<DerivedKind, 4> all_derived_kinds{
    DerivedKind::S, DerivedKind::R, DerivedKind::Q, DerivedKind::T};

std::string_view to_string(DerivedKind kind);
std::optional<DerivedKind> parse_derived_kind(std::string_view name);

// Label of the vertex inserted for edge `e` of `base` in any derived graph.
inline Vertex inserted_vertex(const Graph& base, EdgeId e) {
  return base.vertex_count() + e.index;
}

/// Builds S(G), R(G), Q(G) or T(G) on n + m vertices. Original vertices keep
/// their labels; edge e gets the new vertex n + e.
///
/// Edge order is deterministic: original edges (R, T), then for each edge e
/// the incidence pair {u, x_e}, {x_e, v}, then (Q, T) the edge-adjacency
/// pairs grouped by shared vertex in ascending vertex order.
///
/// Degree contracts are checked on the result; a violation throws
/// std::logic_error.
Graph derive(const Graph& g, DerivedKind kind);

}  // namespace findex
