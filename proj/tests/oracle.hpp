#pragma once

// Brute-force reference constructions for tests. Everything here works from
// the raw edge list and dense adjacency matrices, never from the library's
// derive/f_product/report code paths.

#include "findex/derived.hpp"
#include "findex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline bool shares_endpoint(const findex::Edge& a, const findex::Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

inline bool in_edge_list(const findex::Graph& g, findex::Vertex a, findex::Vertex b) {
  for (const auto& e : g.edges()) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  }
  return false;
}

// Elements 0..n-1 are vertices of g, n..n+m-1 its edges in list order.
inline Matrix derived_matrix(const findex::Graph& g, findex::DerivedKind kind) {
  using findex::DerivedKind;
  const std::size_t n = g.vertex_count();
  const std::size_t total = n + g.edge_count();
  Matrix adj(total, std::vector<char>(total, 0));
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      if (a == b) continue;
      bool linked = false;
      if (a < n && b < n) {
        linked = (kind == DerivedKind::R || kind == DerivedKind::T) && in_edge_list(g, a, b);
      } else if (a < n || b < n) {
        const std::size_t v = a < n ? a : b;
        const auto& e = g.edges()[(a < n ? b : a) - n];
        linked = e.u == v || e.v == v;
      } else {
        linked = (kind == DerivedKind::Q || kind == DerivedKind::T) &&
                 shares_endpoint(g.edges()[a - n], g.edges()[b - n]);
      }
      adj[a][b] = linked;
    }
  }
  return adj;
}

inline Matrix matrix_of(const findex::Graph& g) {
  Matrix adj(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

// Adjacency of G1[G2]_F straight from the pair rule, over flat index
// rank * n2 + right.
inline Matrix f_product_matrix(const findex::Graph& g1, const findex::Graph& g2,
                               findex::DerivedKind kind) {
  const Matrix left = derived_matrix(g1, kind);
  const Matrix right = matrix_of(g2);
  const std::size_t n1 = g1.vertex_count();
  const std::size_t ranks = left.size();
  const std::size_t n2 = g2.vertex_count();
  Matrix adj(ranks * n2, std::vector<char>(ranks * n2, 0));
  for (std::size_t a = 0; a < ranks * n2; ++a) {
    for (std::size_t b = 0; b < ranks * n2; ++b) {
      const std::size_t u1 = a / n2, v1 = a % n2, u2 = b / n2, v2 = b % n2;
      adj[a][b] = (u1 == u2 && u1 < n1 && right[v1][v2]) || left[u1][u2];
    }
  }
  return adj;
}

inline Matrix lexicographic_matrix(const findex::Graph& g1, const findex::Graph& g2) {
  const Matrix left = matrix_of(g1);
  const Matrix right = matrix_of(g2);
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  Matrix adj(n1 * n2, std::vector<char>(n1 * n2, 0));
  for (std::size_t a = 0; a < n1 * n2; ++a)
    for (std::size_t b = 0; b < n1 * n2; ++b)
      adj[a][b] = left[a / n2][b / n2] || (a / n2 == b / n2 && right[a % n2][b % n2]);
  return adj;
}

inline std::vector<std::int64_t> degrees(const Matrix& adj) {
  std::vector<std::int64_t> d(adj.size(), 0);
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = 0; b < adj.size(); ++b) d[a] += adj[a][b];
  return d;
}

inline std::int64_t edge_count(const Matrix& adj) {
  std::int64_t twice = 0;
  for (auto d : degrees(adj)) twice += d;
  return twice / 2;
}

inline std::int64_t power_sum(const Matrix& adj, int k) {
  std::int64_t s = 0;
  for (auto d : degrees(adj)) {
    std::int64_t t = 1;
    for (int i = 0; i < k; ++i) t *= d;
    s += t;
  }
  return s;
}

struct EdgeSums {
  std::int64_t m2 = 0, hm = 0, rezm = 0, f_edge = 0;
};

inline EdgeSums edge_sums(const Matrix& adj) {
  const auto d = degrees(adj);
  EdgeSums s;
  for (std::size_t a = 0; a < adj.size(); ++a) {
    for (std::size_t b = a + 1; b < adj.size(); ++b) {
      if (!adj[a][b]) continue;
      s.m2 += d[a] * d[b];
      s.hm += (d[a] + d[b]) * (d[a] + d[b]);
      s.rezm += d[a] * d[b] * (d[a] + d[b]);
      s.f_edge += d[a] * d[a] + d[b] * d[b];
    }
  }
  return s;
}

// Arbitrary simple graph (possibly disconnected or edgeless) with edges in
// shuffled order.
inline findex::Graph random_graph(std::mt19937& rng, std::size_t max_n, double p = 0.4) {
  std::uniform_int_distribution<std::size_t> order(1, max_n);
  std::bernoulli_distribution keep(p);
  const std::size_t n = order(rng);
  std::vector<findex::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) edges.push_back(rng() % 2 ? findex::Edge{i, j} : findex::Edge{j, i});
  std::shuffle(edges.begin(), edges.end(), rng);
  return findex::Graph(n, std::move(edges));
}

}  // namespace oracle
