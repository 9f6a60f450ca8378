#include "findex/graph.hpp"

#include "findex/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace findex {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), neighbors_(vertex_count), incident_(vertex_count) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      Vertex bad = e.u >= vertex_count ? e.u : e.v;
      throw Error(ErrorKind::index_out_of_range,
                  "vertex " + std::to_string(bad) + " out of range for " +
                      std::to_string(vertex_count) + " vertices",
                  i);
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(e.u), i);
    }
    incident_[e.u].push_back(EdgeId{i});
    incident_[e.v].push_back(EdgeId{i});
  }

  // Duplicates show up as repeated neighbors once each incidence list is
  // ordered by (neighbor, edge id). Report the earliest repeat in input order.
  std::optional<std::size_t> first_duplicate;
  std::vector<std::pair<Vertex, std::size_t>> scratch;
  for (Vertex v = 0; v < vertex_count; ++v) {
    scratch.clear();
    for (EdgeId id : incident_[v]) {
      const Edge& e = edges_[id.index];
      scratch.emplace_back(e.u == v ? e.v : e.u, id.index);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t k = 1; k < scratch.size(); ++k) {
      if (scratch[k].first == scratch[k - 1].first) {
        if (!first_duplicate || scratch[k].second < *first_duplicate) {
          first_duplicate = scratch[k].second;
        }
      }
    }
    auto& nb = neighbors_[v];
    nb.reserve(scratch.size());
    for (const auto& [w, id] : scratch) nb.push_back(w);
  }
  if (first_duplicate) {
    throw Error(ErrorKind::duplicate_edge,
                "duplicate edge " + edge_text(edges_[*first_duplicate].normalized()),
                *first_duplicate);
  }
}

const Edge& Graph::edge(EdgeId id) const {
  if (id.index >= edges_.size()) {
    throw Error(ErrorKind::index_out_of_range, "edge id " + std::to_string(id.index) + " out of range");
  }
  return edges_[id.index];
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorKind::index_out_of_range,
                "vertex " + std::to_string(v) + " out of range for " +
                    std::to_string(vertex_count()) + " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return neighbors_[v];
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return neighbors_[v].size();
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = neighbors_[v].size();
  return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = neighbors_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::canonical_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.normalized());
  std::sort(out.begin(), out.end());
  return out;
}

bool same_edge_set(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.canonical_edges() == b.canonical_edges();
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_pairs) {
  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (const auto& [u, v] : edge_pairs) edges.push_back(Edge{u, v});
  return Graph(vertex_count, std::move(edges));
}

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs) {
  return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(
                                       edge_pairs.begin(), edge_pairs.size()));
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::string_view to_string(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star,
                   Family::complete_bipartite}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Graph gen_family(Family family, std::size_t a, std::size_t b) {
  auto invalid = [&](const std::string& bound) {
    return Error(ErrorKind::invalid_family_params,
                 std::string(to_string(family)) + " requires " + bound);
  };
  std::vector<Edge> edges;
  switch (family) {
    case Family::path:
      if (a < 1) throw invalid("n >= 1");
      for (Vertex i = 0; i + 1 < a; ++i) edges.push_back({i, i + 1});
      return Graph(a, std::move(edges));
    case Family::cycle:
      if (a < 3) throw invalid("n >= 3");
      for (Vertex i = 0; i < a; ++i) edges.push_back({i, (i + 1) % a});
      return Graph(a, std::move(edges));
    case Family::complete:
      if (a < 1) throw invalid("n >= 1");
      for (Vertex i = 0; i < a; ++i)
        for (Vertex j = i + 1; j < a; ++j) edges.push_back({i, j});
      return Graph(a, std::move(edges));
    case Family::star:
      if (a < 2) throw invalid("n >= 2");
      for (Vertex i = 1; i < a; ++i) edges.push_back({0, i});
      return Graph(a, std::move(edges));
    case Family::complete_bipartite:
      if (a < 1 || b < 1) throw invalid("a >= 1 and b >= 1");
      for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j});
      return Graph(a + b, std::move(edges));
  }
  throw invalid("a known family");
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace findex
