#include "findex/derived.hpp"

#include <stdexcept>
#include <string>

namespace findex {

std::string_view to_string(DerivedKind kind) {
  switch (kind) {
    case DerivedKind::S: return "S";
    case DerivedKind::R: return "R";
    case DerivedKind::Q: return "Q";
    case DerivedKind::T: return "T";
  }
  return "?";
}

std::optional<DerivedKind> parse_derived_kind(std::string_view name) {
  for (DerivedKind k : all_derived_kinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

bool keeps_original_edges(DerivedKind kind) {
  return kind == DerivedKind::R || kind == DerivedKind::T;
}

bool joins_adjacent_edges(DerivedKind kind) {
  return kind == DerivedKind::Q || kind == DerivedKind::T;
}

void check_degree_contract(const Graph& base, const Graph& derived, DerivedKind kind) {
  const std::size_t n = base.vertex_count();
  const std::size_t factor = keeps_original_edges(kind) ? 2 : 1;
  for (Vertex u = 0; u < n; ++u) {
    if (derived.degree(u) != factor * base.degree(u)) {
      throw std::logic_error("derive " + std::string(to_string(kind)) +
                             ": degree contract broken at original vertex " + std::to_string(u));
    }
  }
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const Edge& e = base.edges()[i];
    const std::size_t expected =
        joins_adjacent_edges(kind) ? base.degree(e.u) + base.degree(e.v) : 2;
    if (derived.degree(n + i) != expected) {
      throw std::logic_error("derive " + std::string(to_string(kind)) +
                             ": degree contract broken at inserted vertex " + std::to_string(n + i));
    }
  }
}

}  // namespace

Graph derive(const Graph& g, DerivedKind kind) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Edge> edges;

  if (keeps_original_edges(kind)) edges = g.edges();

  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    const Vertex x = n + i;
    edges.push_back({e.u, x});
    edges.push_back({x, e.v});
  }

  if (joins_adjacent_edges(kind)) {
    // Two distinct edges of a simple graph share at most one endpoint, so each
    // adjacent pair is emitted exactly once.
    for (Vertex w = 0; w < n; ++w) {
      const auto incident = g.incident_edges(w);
      for (std::size_t a = 0; a < incident.size(); ++a) {
        for (std::size_t b = a + 1; b < incident.size(); ++b) {
          edges.push_back({inserted_vertex(g, incident[a]), inserted_vertex(g, incident[b])});
        }
      }
    }
  }

  Graph out(n + m, std::move(edges));
  check_degree_contract(g, out, kind);
  return out;
}

}  // namespace findex
