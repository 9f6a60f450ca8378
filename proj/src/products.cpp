#include "findex/products.hpp"

#include "findex/error.hpp"

#include <stdexcept>
#include <string>

namespace findex {

std::size_t ProductLayout::flat_index(const ProductVertex& v) const {
  std::size_t rank = 0;
  if (const auto* o = std::get_if<OriginalVertex>(&v.left)) {
    if (o->u >= n1_) throw Error(ErrorKind::index_out_of_range, "left vertex out of range");
    rank = o->u;
  } else {
    const auto& ins = std::get<InsertedVertex>(v.left);
    if (ins.e.index >= m1_) throw Error(ErrorKind::index_out_of_range, "left edge out of range");
    rank = n1_ + ins.e.index;
  }
  if (v.right >= n2_) throw Error(ErrorKind::index_out_of_range, "right vertex out of range");
  return rank * n2_ + v.right;
}

ProductVertex ProductLayout::vertex(std::size_t flat) const {
  if (flat >= vertex_count()) {
    throw Error(ErrorKind::index_out_of_range, "product vertex " + std::to_string(flat) + " out of range");
  }
  const std::size_t rank = flat / n2_;
  const Vertex right = flat % n2_;
  if (rank < n1_) return ProductVertex{OriginalVertex{rank}, right};
  return ProductVertex{InsertedVertex{EdgeId{rank - n1_}}, right};
}

namespace {

void require_nonempty(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0) {
    throw Error(ErrorKind::empty_graph, std::string("product factor ") +
                                            (g1.vertex_count() == 0 ? "g1" : "g2") +
                                            " has no vertices");
  }
}

// Fibre edges (u, v1)(u, v2) for every u in [0, ranks) and v1v2 in E(G2),
// followed by the full n2 x n2 blocks over each edge of `left`.
std::vector<Edge> product_edges(const Graph& left, std::size_t fibred_ranks, const Graph& g2) {
  const std::size_t n2 = g2.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(fibred_ranks * g2.edge_count() + left.edge_count() * n2 * n2);
  for (std::size_t u = 0; u < fibred_ranks; ++u) {
    for (const Edge& e : g2.edges()) edges.push_back({u * n2 + e.u, u * n2 + e.v});
  }
  for (const Edge& e : left.edges()) {
    for (Vertex v1 = 0; v1 < n2; ++v1) {
      for (Vertex v2 = 0; v2 < n2; ++v2) edges.push_back({e.u * n2 + v1, e.v * n2 + v2});
    }
  }
  return edges;
}

void check_product_contracts(const Graph& left, std::size_t fibred_ranks, const Graph& g2,
                             const Graph& product, std::string_view what) {
  const std::size_t n2 = g2.vertex_count();
  const std::size_t expected_edges = fibred_ranks * g2.edge_count() + left.edge_count() * n2 * n2;
  if (product.vertex_count() != left.vertex_count() * n2 || product.edge_count() != expected_edges) {
    throw std::logic_error(std::string(what) + ": size contract broken");
  }
  for (Vertex rank = 0; rank < left.vertex_count(); ++rank) {
    for (Vertex v = 0; v < n2; ++v) {
      std::size_t expected = n2 * left.degree(rank) + (rank < fibred_ranks ? g2.degree(v) : 0);
      if (product.degree(rank * n2 + v) != expected) {
        throw std::logic_error(std::string(what) + ": degree contract broken at vertex " +
                               std::to_string(rank * n2 + v));
      }
    }
  }
}

}  // namespace

Graph lexicographic(const Graph& g1, const Graph& g2) {
  require_nonempty(g1, g2);
  Graph out(g1.vertex_count() * g2.vertex_count(), product_edges(g1, g1.vertex_count(), g2));
  check_product_contracts(g1, g1.vertex_count(), g2, out, "lexicographic");
  return out;
}

Graph f_product(const Graph& g1, const Graph& g2, DerivedKind kind) {
  require_nonempty(g1, g2);
  const Graph left = derive(g1, kind);
  Graph out(left.vertex_count() * g2.vertex_count(), product_edges(left, g1.vertex_count(), g2));
  check_product_contracts(left, g1.vertex_count(), g2, out, "f_product");
  return out;
}

Graph f_product_subtractive(const Graph& g1, const Graph& g2, DerivedKind kind) {
  require_nonempty(g1, g2);
  const Graph full = lexicographic(derive(g1, kind), g2);
  const ProductLayout layout(g1.vertex_count(), g1.edge_count(), g2.vertex_count());

  std::vector<Edge> kept;
  kept.reserve(full.edge_count());
  for (const Edge& e : full.edges()) {
    const ProductVertex a = layout.vertex(e.u);
    const ProductVertex b = layout.vertex(e.v);
    const bool in_removed_set = std::holds_alternative<InsertedVertex>(a.left) &&
                                a.left == b.left && g2.adjacent(a.right, b.right);
    if (!in_removed_set) kept.push_back(e);
  }
  return Graph(full.vertex_count(), std::move(kept));
}

}  // namespace findex
